#include "windcurve/search.hpp"

#include "windcurve/santalo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace windcurve {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double reject_value = std::numeric_limits<double>::infinity();

WoundPolygon with_coord(const WoundPolygon& c, Eigen::Index j, bool is_rho, double value) {
  WoundPolygon out = c;
  (is_rho ? out.rho[j] : out.phi[j]) = value;
  return out;
}

// Gauge-fixed coordinate chart around a reference curve.
struct Chart {
  int k = 1;
  Eigen::Index n = 0;
  Eigen::Index half = 0;  // shared block length in half-period mode, else 0
  double phi0 = 0.0;
  double rho0 = 1.0;

  Eigen::Index dim() const { return half > 0 ? 2 * (half - 1) : 2 * (n - 1); }

  Eigen::VectorXd encode(const WoundPolygon& c) const {
    const Eigen::Index m = half > 0 ? half : n;
    Eigen::VectorXd x(dim());
    for (Eigen::Index i = 1; i < m; ++i) {
      x[i - 1] = c.phi[i];
      x[m - 1 + i - 1] = c.rho[i];
    }
    return x;
  }

  WoundPolygon decode(const Eigen::VectorXd& x) const {
    WoundPolygon c;
    c.k = k;
    c.phi.resize(n);
    c.rho.resize(n);
    c.phi[0] = phi0;
    c.rho[0] = rho0;
    const Eigen::Index m = half > 0 ? half : n;
    for (Eigen::Index i = 1; i < m; ++i) {
      c.phi[i] = x[i - 1];
      c.rho[i] = x[m - 1 + i - 1];
    }
    if (half > 0)
      for (Eigen::Index i = 0; i < half; ++i) {
        c.phi[half + i] = c.phi[i] + pi * k;
        c.rho[half + i] = c.rho[i];
      }
    return validate(c);
  }
};

Chart make_chart(const WoundPolygon& c, SearchMode mode) {
  Chart chart;
  chart.k = c.k;
  chart.n = c.size();
  chart.phi0 = c.phi[0];
  chart.rho0 = c.rho[0];
  if (mode == SearchMode::HalfPeriodSymmetric) {
    if (chart.n % 2 != 0)
      throw curve_error(errc::bad_parameters,
                        "half-period symmetry needs an even vertex count");
    chart.half = chart.n / 2;
    // The start must already have the symmetry for the shared chart to
    // reproduce it.
    const Eigen::VectorXd x = chart.encode(c);
    const WoundPolygon back = chart.decode(x);
    for (Eigen::Index i = 0; i < chart.n; ++i)
      if (std::abs(back.phi[i] - c.phi[i]) > 1e-9 ||
          std::abs(back.rho[i] - c.rho[i]) > 1e-9 * chart.rho0)
        throw curve_error(errc::bad_parameters,
                          "start curve is not half-period symmetric");
  }
  return chart;
}

struct NelderMead {
  const Chart& chart;
  int iteration_cap;
  std::uint64_t accepted = 0;
  std::uint64_t rejected = 0;

  double eval(const Eigen::VectorXd& x) {
    try {
      return santalo_product(chart.decode(x));
    } catch (const curve_error&) {
      return reject_value;
    }
  }

  // Returns (best value, best point, iterations, per-iteration best values).
  std::tuple<double, Eigen::VectorXd, int, std::vector<double>> run(
      const Eigen::VectorXd& x0, double step) {
    const Eigen::Index d = x0.size();
    std::vector<Eigen::VectorXd> pts(d + 1, x0);
    std::vector<double> val(d + 1);
    for (Eigen::Index i = 0; i < d; ++i) pts[i + 1][i] += step;
    for (Eigen::Index i = 0; i <= d; ++i) val[i] = eval(pts[i]);

    std::vector<double> history;
    int it = 0;
    for (; it < iteration_cap; ++it) {
      std::vector<size_t> order(d + 1);
      for (size_t i = 0; i <= static_cast<size_t>(d); ++i) order[i] = i;
      std::sort(order.begin(), order.end(),
                [&](size_t a, size_t b) { return val[a] < val[b]; });
      const size_t best = order[0], worst = order[d], second = order[d - 1];
      history.push_back(val[best]);
      if (std::isfinite(val[worst]) &&
          val[worst] - val[best] <= 1e-10 * (1.0 + std::abs(val[best])))
        break;

      Eigen::VectorXd centroid = Eigen::VectorXd::Zero(d);
      for (size_t i = 0; i <= static_cast<size_t>(d); ++i)
        if (i != worst) centroid += pts[i];
      centroid /= static_cast<double>(d);

      const Eigen::VectorXd xr = centroid + (centroid - pts[worst]);
      const double fr = eval(xr);
      if (fr < val[order[0]]) {
        const Eigen::VectorXd xe = centroid + 2.0 * (centroid - pts[worst]);
        const double fe = eval(xe);
        if (fe < fr) {
          pts[worst] = xe;
          val[worst] = fe;
        } else {
          pts[worst] = xr;
          val[worst] = fr;
        }
        ++accepted;
        continue;
      }
      if (fr < val[second]) {
        pts[worst] = xr;
        val[worst] = fr;
        ++accepted;
        continue;
      }
      const Eigen::VectorXd xc =
          fr < val[worst] ? Eigen::VectorXd(centroid + 0.5 * (xr - centroid))
                          : Eigen::VectorXd(centroid + 0.5 * (pts[worst] - centroid));
      const double fc = eval(xc);
      if (fc < std::min(fr, val[worst])) {
        pts[worst] = xc;
        val[worst] = fc;
        ++accepted;
        continue;
      }
      // Shrink toward the best vertex.
      ++rejected;
      for (size_t i = 0; i <= static_cast<size_t>(d); ++i) {
        if (i == best) continue;
        pts[i] = pts[best] + 0.5 * (pts[i] - pts[best]);
        val[i] = eval(pts[i]);
      }
    }
    size_t best = 0;
    for (size_t i = 1; i <= static_cast<size_t>(d); ++i)
      if (val[i] < val[best]) best = i;
    return {val[best], pts[best], it, std::move(history)};
  }
};

}  // namespace

double criticality_residual(const WoundPolygon& c, double h) {
  if (!(h > 0.0)) throw curve_error(errc::bad_parameters, "need h > 0");
  const WoundPolygon cc = validate(c);
  const Eigen::Index n = cc.size();
  const auto probe = [&](Eigen::Index j, bool is_rho, double delta) {
    const double base = is_rho ? cc.rho[j] : cc.phi[j];
    WoundPolygon p = with_coord(cc, j, is_rho, base + delta);
    try {
      p = validate(p);
    } catch (const curve_error& e) {
      throw curve_error(errc::invalid_probe,
                        std::string("probe leaves the class: ") + e.what());
    }
    return santalo_product(p);
  };
  double sq = 0.0;
  for (Eigen::Index j = 1; j < n; ++j) {
    const double g = (probe(j, false, h) - probe(j, false, -h)) / (2.0 * h);
    sq += g * g;
  }
  const double hr = h * cc.rho[0];
  for (Eigen::Index j = 1; j < n; ++j) {
    const double g = (probe(j, true, hr) - probe(j, true, -hr)) / (2.0 * h);
    sq += g * g;
  }
  return std::sqrt(sq);
}

SearchTrace local_search(const WoundPolygon& c0, const SearchConfig& config) {
  if (config.restarts < 1 || config.iteration_cap < 1 ||
      config.initial_step <= 0.0 || config.perturbation < 0.0)
    throw curve_error(errc::bad_parameters, "invalid search configuration");
  const WoundPolygon start = validate(c0);
  const Chart chart = make_chart(start, config.mode);
  const Eigen::VectorXd x0 = chart.encode(start);
  const Eigen::Index d = x0.size();

  SearchTrace trace;
  trace.best_value = reject_value;
  NelderMead nm{chart, config.iteration_cap};

  for (int r = 0; r < config.restarts; ++r) {
    std::mt19937_64 rng(config.seed ^ (0x9e3779b97f4a7c15ULL * (r + 1)));
    Eigen::VectorXd xs = x0;
    if (config.perturbation > 0.0) {
      std::normal_distribution<double> gauss;
      std::uniform_real_distribution<double> unif(0.0, 1.0);
      bool found = false;
      for (int tries = 0; tries < 1000 && !found; ++tries) {
        Eigen::VectorXd dir(d);
        for (Eigen::Index i = 0; i < d; ++i) dir[i] = gauss(rng);
        dir.normalize();
        const double radius =
            config.perturbation * std::pow(unif(rng), 1.0 / static_cast<double>(d));
        xs = x0 + radius * dir;
        try {
          chart.decode(xs);
          found = true;
        } catch (const curve_error&) {
        }
      }
      if (!found)
        throw curve_error(errc::no_convergence,
                          "could not find a valid perturbed start");
    }
    auto [value, xbest, iters, history] = nm.run(xs, config.initial_step);
    trace.iterations += iters;
    trace.restart_values.push_back(value);
    if (value < trace.best_value) {
      trace.best_value = value;
      trace.best_curve = chart.decode(xbest);
      trace.history = std::move(history);
    }
  }
  trace.accepted = nm.accepted;
  trace.rejected = nm.rejected;
  return trace;
}

SweepReport unboundedness_sweep(int k, const std::vector<double>& eps_list, int m) {
  if (eps_list.empty())
    throw curve_error(errc::bad_parameters, "need at least one eps value");
  SweepReport rep;
  rep.floors_met = true;
  rep.monotone = true;
  for (const double eps : eps_list) {
    SweepRow row;
    row.eps = eps;
    row.floor = 0.9 * pi * pi / (eps * eps);
    row.product = santalo_product(guggenheimer_example(k, eps, m));
    if (row.product < row.floor) rep.floors_met = false;
    rep.rows.push_back(row);
  }
  for (size_t i = 1; i < rep.rows.size(); ++i) {
    const auto &a = rep.rows[i - 1], &b = rep.rows[i];
    if ((b.eps < a.eps && !(b.product > a.product)) ||
        (b.eps > a.eps && !(b.product < a.product)))
      rep.monotone = false;
  }
  return rep;
}

}  // namespace windcurve
