#pragma once

#include "windcurve/curve.hpp"

#include <cstdint>
#include <vector>

namespace windcurve {

enum class SearchMode { General, HalfPeriodSymmetric };
enum class Gauge { FixFirstAngleAndScale };

struct SearchConfig {
  SearchMode mode = SearchMode::General;
  Gauge gauge = Gauge::FixFirstAngleAndScale;
  double initial_step = 0.02;   // initial simplex edge in gauge coordinates
  double perturbation = 0.05;   // restart ball radius (0 = descend in place)
  int restarts = 1;
  int iteration_cap = 2000;
  std::uint64_t seed = 1;
};

struct SearchTrace {
  int iterations = 0;  // total across restarts
  double best_value = 0.0;
  WoundPolygon best_curve;
  std::vector<double> history;         // best-so-far per iteration, best restart
  std::vector<double> restart_values;  // final value of each restart
  std::uint64_t accepted = 0;
  std::uint64_t rejected = 0;
};

// Norm of the central-difference gradient of the santalo product over the
// gauge-fixed coordinates (phi[1..n-1], rho[1..n-1]); phi[0] and rho[0] are
// held. Radius probes step by h*rho[0] and angle probes by h, which makes
// the residual invariant under rotating or dilating the input. Throws
// invalid_probe if a probe at this h leaves the curve class.
double criticality_residual(const WoundPolygon& c, double h);

// Seeded derivative-free descent (Nelder-Mead over gauge-fixed coordinates)
// of the santalo product. Proposals that decode to invalid curves are
// rejected. In HalfPeriodSymmetric mode (n even) vertices i and i + n/2
// share coordinates, so rho(phi + k*pi) = rho(phi) holds exactly on every
// emitted curve. Each restart perturbs the start uniformly in a ball of
// radius config.perturbation and descends; deterministic given the seed.
SearchTrace local_search(const WoundPolygon& c0, const SearchConfig& config);

struct SweepRow {
  double eps = 0.0;
  double floor = 0.0;    // 0.9 * pi^2 / eps^2
  double product = 0.0;  // santalo product of the example curve
};

struct SweepReport {
  std::vector<SweepRow> rows;
  bool floors_met = false;
  bool monotone = false;  // product strictly increases as eps decreases
};

// Builds guggenheimer_example(k, eps, m) for each eps and records the
// santalo product against the 0.9*pi^2/eps^2 floor.
SweepReport unboundedness_sweep(int k, const std::vector<double>& eps_list, int m);

}  // namespace windcurve
