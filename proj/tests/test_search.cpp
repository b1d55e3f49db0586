#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "windcurve/bounds.hpp"
#include "windcurve/curve.hpp"
#include "windcurve/santalo.hpp"
#include "windcurve/search.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace windcurve;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("regular stars have vanishing criticality residual") {
  for (const auto& [n, k] : {std::pair{5, 2}, {8, 3}}) {
    const auto c = construct_cnk(n, k);
    const double rel = criticality_residual(c, 1e-5) / santalo_product(c);
    CHECK(rel < 1e-5);
  }
}

TEST_CASE("a perturbed star is detectably non critical") {
  auto c = construct_cnk(5, 2);
  c.rho[2] = 1.2;
  c = validate(c);
  const double rel = criticality_residual(c, 1e-5) / santalo_product(c);
  CHECK(rel > 1e-2);
}

TEST_CASE("criticality residual is rotation and dilation invariant") {
  auto base = construct_cnk(5, 2);
  base.rho[2] = 1.2;
  base = validate(base);
  const double r0 = criticality_residual(base, 1e-5);

  Mat2 rot;
  rot << std::cos(0.7), -std::sin(0.7), std::sin(0.7), std::cos(0.7);
  CHECK(criticality_residual(apply_linear(base, rot), 1e-5) ==
        doctest::Approx(r0).epsilon(1e-8));

  auto scaled = base;
  scaled.rho *= 3.0;
  CHECK(criticality_residual(scaled, 1e-5) == doctest::Approx(r0).epsilon(1e-8));
}

TEST_CASE("oversized probes are rejected") {
  const auto c = construct_cnk(5, 2);
  CHECK_THROWS_AS(criticality_residual(c, pi), curve_error);
  try {
    criticality_residual(c, pi);
  } catch (const curve_error& e) {
    CHECK(e.code() == errc::invalid_probe);
  }
}

TEST_CASE("local search relocates perturbed stars onto the floor") {
  SearchConfig cfg;
  cfg.restarts = 5;
  cfg.perturbation = 0.05;
  cfg.seed = 42;
  const auto trace = local_search(construct_cnk(5, 2), cfg);
  CHECK(trace.restart_values.size() == 5);
  for (const double v : trace.restart_values) CHECK(v >= cnk_product(5, 2) - 1e-6);
  CHECK(trace.best_value >= cnk_product(5, 2) - 1e-6);
  CHECK(trace.best_value == doctest::Approx(cnk_product(5, 2)).epsilon(1e-7));
  CHECK_NOTHROW(validate(trace.best_curve));
  for (size_t i = 1; i < trace.history.size(); ++i)
    CHECK(trace.history[i] <= trace.history[i - 1] + 1e-15);
  CHECK(trace.iterations > 0);
  CHECK(trace.accepted + trace.rejected > 0);
}

TEST_CASE("half period symmetry is exact on emitted curves") {
  SearchConfig cfg;
  cfg.mode = SearchMode::HalfPeriodSymmetric;
  cfg.restarts = 3;
  cfg.perturbation = 0.05;
  cfg.seed = 7;
  const auto c83 = construct_cnk(8, 3);
  const auto trace = local_search(c83, cfg);
  const auto& b = trace.best_curve;
  for (int i = 0; i < 4; ++i) {
    CHECK(b.phi[i + 4] == b.phi[i] + 3 * pi);
    CHECK(b.rho[i + 4] == b.rho[i]);
  }
  for (const double v : trace.restart_values) CHECK(v >= cnk_product(8, 3) - 1e-6);
}

TEST_CASE("search is deterministic in the seed") {
  SearchConfig cfg;
  cfg.restarts = 3;
  cfg.perturbation = 0.08;
  cfg.seed = 99;
  const auto a = local_search(construct_cnk(5, 2), cfg);
  const auto b = local_search(construct_cnk(5, 2), cfg);
  CHECK(a.best_value == b.best_value);
  CHECK(a.iterations == b.iterations);
  CHECK((a.best_curve.rho == b.best_curve.rho).all());
  cfg.seed = 100;
  const auto c = local_search(construct_cnk(5, 2), cfg);
  CHECK(a.best_value != c.best_value);
}

TEST_CASE("descent in place from a non critical start decreases the product") {
  auto start = construct_cnk(7, 2);
  start.rho[3] = 1.3;
  start = validate(start);
  SearchConfig cfg;
  cfg.restarts = 1;
  cfg.perturbation = 0.0;
  const auto trace = local_search(start, cfg);
  CHECK(trace.best_value < santalo_product(start));
  // The floor value for a descent from a generic start is informational.
  WARN(trace.best_value >= cnk_product(7, 2) - 1e-6);
}

TEST_CASE("half period mode rejects unusable starts") {
  SearchConfig cfg;
  cfg.mode = SearchMode::HalfPeriodSymmetric;
  CHECK_THROWS_AS(local_search(construct_cnk(5, 2), cfg), curve_error);
  auto skew = construct_cnk(8, 3);
  skew.rho[1] = 1.4;
  skew = validate(skew);
  CHECK_THROWS_AS(local_search(skew, cfg), curve_error);
}

TEST_CASE("unboundedness sweep meets floors on a small instance") {
  const auto rep = unboundedness_sweep(2, {0.5, 0.2}, 64);
  CHECK(rep.rows.size() == 2);
  CHECK(rep.floors_met);
  CHECK(rep.monotone);
  for (const auto& row : rep.rows) CHECK(row.product >= row.floor);
  CHECK_THROWS_AS(unboundedness_sweep(2, {0.5}, 8), curve_error);

  // The floor does not depend on the winding number.
  const auto rep3 = unboundedness_sweep(3, {0.5, 0.2}, 64);
  CHECK(rep3.floors_met);
  for (size_t i = 0; i < rep3.rows.size(); ++i)
    CHECK(rep3.rows[i].floor == rep.rows[i].floor);
}

TEST_CASE("finer sampling of the eccentric example increases the product") {
  double prev = 0.0;
  for (const int m : {64, 256, 1024}) {
    const double prod = santalo_product(guggenheimer_example(2, 0.5, m));
    CHECK(prod > prev);
    prev = prod;
  }
}
