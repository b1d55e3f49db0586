#include "windcurve/bounds.hpp"

#include "windcurve/polarity.hpp"

#include <cmath>
#include <numbers>

namespace windcurve {

namespace {
constexpr double pi = std::numbers::pi;

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}
}  // namespace

double cnk_product(int n, int k) {
  if (k < 1 || n <= 2 * k)
    throw curve_error(errc::bad_parameters, "require k >= 1 and n >= 2k+1");
  const double s = n * std::sin(k * pi / n);
  return s * s;
}

double prop10_bound(int n, int k) {
  if (k < 1 || n <= 2 * k || n > 4 * k)
    throw curve_error(errc::bad_parameters, "require 2k+1 <= n <= 4k");
  return cnk_product(n, k);
}

const char* to_string(EqualityCase e) {
  switch (e) {
    case EqualityCase::CnkDilate: return "CnkDilate";
    case EqualityCase::RhombTraversed: return "RhombTraversed";
    case EqualityCase::None: return "None";
  }
  return "unknown";
}

EqualityCase classify_equality(int n, int k, const Eigen::ArrayXd& rhos) {
  if (rhos.size() != n || n < 2 * k + 1 || (rhos <= 0.0).any())
    throw curve_error(errc::bad_parameters, "need n positive radii with n >= 2k+1");
  constexpr double rel = 1e-9;
  const double r0 = rhos[0];
  if (((rhos - r0).abs() <= rel * r0).all()) return EqualityCase::CnkDilate;
  if (n == 4 * k) {
    bool alternating = true;
    for (int i = 0; i < n && alternating; ++i)
      alternating = std::abs(rhos[i] - rhos[i % 2]) <= rel * rhos[i % 2];
    if (alternating) return EqualityCase::RhombTraversed;
  }
  return EqualityCase::None;
}

Lemma11Report lemma11_check(int grid_points) {
  if (grid_points < 10)
    throw curve_error(errc::bad_parameters, "need at least 10 grid points");
  const double lo = 0.01, hi = pi - 0.01;
  const double dt = (hi - lo) / (grid_points - 1);
  const auto inv_cos = [](double t) { return 1.0 / (1.0 - std::cos(t)); };
  const auto t_sin = [](double t) { return t / std::sin(t); };
  Lemma11Report rep;
  rep.min_second_diff_inv_cos = std::numeric_limits<double>::infinity();
  rep.min_second_diff_t_sin = std::numeric_limits<double>::infinity();
  for (int i = 1; i + 1 < grid_points; ++i) {
    const double t = lo + i * dt;
    rep.min_second_diff_inv_cos = std::min(
        rep.min_second_diff_inv_cos, inv_cos(t - dt) - 2.0 * inv_cos(t) + inv_cos(t + dt));
    rep.min_second_diff_t_sin = std::min(
        rep.min_second_diff_t_sin, t_sin(t - dt) - 2.0 * t_sin(t) + t_sin(t + dt));
  }
  rep.convex = rep.min_second_diff_inv_cos > 0.0 && rep.min_second_diff_t_sin > 0.0;
  return rep;
}

double Prop12Constants::obj(double c) {
  return 4.0 * c / (pi * pi * std::sin(c)) + 2.0 / (1.0 - std::cos(c));
}

double Prop12Constants::obj_deriv(double c) {
  const double s = std::sin(c), co = std::cos(c);
  return 4.0 / (pi * pi) * (s - c * co) / (s * s) - 2.0 * s / ((1.0 - co) * (1.0 - co));
}

Prop12Constants prop12_constants() {
  double lo = 1.5, hi = 2.5;
  if (!(Prop12Constants::obj_deriv(lo) < 0.0 && Prop12Constants::obj_deriv(hi) > 0.0))
    throw curve_error(errc::no_convergence, "derivative does not bracket a root on [1.5, 2.5]");
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (Prop12Constants::obj_deriv(mid) < 0.0 ? lo : hi) = mid;
  }
  Prop12Constants out;
  out.c0 = 0.5 * (lo + hi);
  out.r_min = Prop12Constants::obj(out.c0);
  out.coefficient = 4.0 / out.r_min;
  return out;
}

double prop12_bound(int k) {
  if (k < 2) throw curve_error(errc::bad_parameters, "require k >= 2");
  return k * k * prop12_constants().coefficient;
}

double prop12_k1(double c, int k) {
  if (k < 2 || !(c > 0.0 && c < pi))
    throw curve_error(errc::bad_parameters, "require k >= 2 and c in (0, pi)");
  const double a = (pi * pi / 4.0) * std::sin(c) / c;
  const double b = (1.0 - std::cos(c)) / 2.0;
  return 2.0 * k * b / (a + b);
}

Remark13Report remark13_compare(int k) {
  if (k < 2) throw curve_error(errc::bad_parameters, "require k >= 2");
  Remark13Report rep;
  const double s = (2 * k + 1) * std::sin(k * pi / (2 * k + 1));
  rep.prism = (4.0 / 3.0) * s * s;
  rep.simplex = (64.0 / 9.0) * k * k;
  rep.prism_smaller = rep.prism < rep.simplex;
  return rep;
}

Eigen::ArrayXd random_angle_partition(int n, int k, std::mt19937_64& rng) {
  if (k < 1 || n < 2 * k + 1)
    throw curve_error(errc::bad_parameters, "require k >= 1 and n >= 2k+1");
  const double full = 2.0 * pi * k;
  // A fifth of the mean sector: tiny sectors make the local-convexity radius
  // windows collapse, while the cap keeps single sectors off the pi boundary.
  const double floor_angle = 0.2 * full / n;
  const double cap = pi * (1.0 - 1e-3);
  Eigen::ArrayXd theta(n);
  double remaining = full;
  for (int j = 0; j < n; ++j) {
    const int slots_left = n - 1 - j;
    if (slots_left == 0) {
      theta[j] = remaining;
      break;
    }
    const double lo = std::max(floor_angle, remaining - slots_left * cap);
    const double hi = std::min(cap, remaining - slots_left * floor_angle);
    std::uniform_real_distribution<double> u(lo, hi);
    theta[j] = u(rng);
    remaining -= theta[j];
  }
  return theta;
}

WoundPolygon random_curve(int n, int k, std::mt19937_64& rng) {
  constexpr double rho_lo = 0.2, rho_hi = 5.0;
  constexpr double margin = 0.99;  // keep turns away from flat
  const double lo_log = std::log(rho_lo);
  const double hi_log = std::log(rho_hi);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  // Reflected log-space walk: steps are uniform, so the stationary law over
  // [rho_lo, rho_hi] stays log-uniform, while consecutive radii remain
  // correlated enough for the cyclic convexity windows to stay open.
  const double sigma = 0.5 * (hi_log - lo_log);
  const auto walk = [&](double prev, double lo, double hi) {
    if (!(hi > lo)) return std::exp(0.5 * (lo + hi));
    const double span = hi - lo;
    // A mild pull toward the window center keeps long chains from drifting
    // into ever-tighter windows.
    const double center = 0.75 * std::log(prev) + 0.25 * 0.5 * (lo + hi);
    double t = std::fmod(center + sigma * (2.0 * u01(rng) - 1.0) - lo, 2.0 * span);
    if (t < 0.0) t += 2.0 * span;
    return std::exp(lo + (t <= span ? t : 2.0 * span - t));
  };
  for (int attempt = 0; attempt < 50000; ++attempt) {
    const Eigen::ArrayXd theta = random_angle_partition(n, k, rng);
    Eigen::ArrayXd rho(n);
    rho[0] = log_uniform(rng, rho_lo, rho_hi);
    rho[1] = walk(rho[0], lo_log, hi_log);
    bool ok = true;
    for (int j = 2; j < n && ok; ++j) {
      // Left turn at vertex j-1: sin(t1)/rho[j-2] + sin(t0)/rho[j]
      // > sin(t0 + t1)/rho[j-1], with t0 = theta[j-2], t1 = theta[j-1].
      const double t0 = theta[j - 2], t1 = theta[j - 1];
      const double rhs = std::sin(t0 + t1) / rho[j - 1] - std::sin(t1) / rho[j - 2];
      double cap = rho_hi;
      if (rhs > 0.0) cap = std::min(cap, margin * std::sin(t0) / rhs);
      double floor_rho = rho_lo;
      if (j == n - 1) {
        // The last radius also has to close both wrap-around turns: the turn
        // at vertex n-1 bounds it from below, the turn at vertex 0 from above.
        floor_rho = std::max(
            floor_rho, std::sin(theta[n - 2] + theta[n - 1]) /
                           (margin * (std::sin(theta[n - 1]) / rho[n - 2] +
                                      std::sin(theta[n - 2]) / rho[0])));
        const double rhs0 =
            std::sin(theta[n - 1] + theta[0]) / rho[0] - std::sin(theta[n - 1]) / rho[1];
        if (rhs0 > 0.0) cap = std::min(cap, margin * std::sin(theta[0]) / rhs0);
      }
      if (cap < floor_rho) {
        ok = false;
        break;
      }
      rho[j] = walk(rho[j - 1], std::log(floor_rho), std::log(cap));
    }
    if (!ok) continue;
    try {
      return from_sectors(k, theta, rho);
    } catch (const curve_error&) {
      continue;
    }
  }
  throw curve_error(errc::no_convergence, "random_curve failed to produce a valid sample");
}

BoundReport run_prop10_trials(int n, int k, std::uint64_t trials, std::uint64_t seed) {
  const double bound = prop10_bound(n, k);
  const Eigen::ArrayXd theta =
      Eigen::ArrayXd::Constant(n, 2.0 * pi * k / static_cast<double>(n));
  std::mt19937_64 rng(seed);
  BoundReport rep;
  rep.n = n;
  rep.k = k;
  rep.bound = bound;
  rep.trials = trials;
  rep.achieved = std::numeric_limits<double>::infinity();
  Eigen::ArrayXd best_rho;
  for (std::uint64_t t = 0; t < trials; ++t) {
    Eigen::ArrayXd rho(n);
    for (int i = 0; i < n; ++i) rho[i] = log_uniform(rng, 0.2, 5.0);
    const double vp = volume_product(from_sectors(k, theta, rho));
    if (vp < rep.achieved) {
      rep.achieved = vp;
      best_rho = rho;
    }
  }
  rep.gap = rep.achieved - rep.bound;
  rep.equality_case = classify_equality(n, k, best_rho);
  return rep;
}

BoundReport run_prop12_trials(int k, std::uint64_t trials, std::uint64_t seed) {
  const double bound = prop12_bound(k);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_n(2 * k + 1, 6 * k);
  BoundReport rep;
  rep.n = 0;  // varies per trial
  rep.k = k;
  rep.bound = bound;
  rep.trials = trials;
  rep.achieved = std::numeric_limits<double>::infinity();
  for (std::uint64_t t = 0; t < trials; ++t) {
    const int n = pick_n(rng);
    const Eigen::ArrayXd theta = random_angle_partition(n, k, rng);
    const double vp = volume_product(from_sectors(k, theta, Eigen::ArrayXd::Ones(n)));
    if (vp < rep.achieved) {
      rep.achieved = vp;
      rep.n = n;
    }
  }
  rep.gap = rep.achieved - rep.bound;
  rep.equality_case = EqualityCase::None;
  return rep;
}

}  // namespace windcurve
