#pragma once

#include "windcurve/curve.hpp"

#include <cstdint>
#include <random>

namespace windcurve {

// n^2 sin^2(k pi / n): the volume product of C_{n,k}, strictly increasing
// in n at fixed k.
double cnk_product(int n, int k);

// Lower bound for the volume product of equal-angle curves with
// 2k+1 <= n <= 4k; numerically equal to cnk_product on that range.
double prop10_bound(int n, int k);

enum class EqualityCase { CnkDilate, RhombTraversed, None };
const char* to_string(EqualityCase e);

// Equality cases of the equal-angle bound: all radii equal (a dilated
// C_{n,k}), or for n = 4k two alternating radii (a k times traversed rhomb).
EqualityCase classify_equality(int n, int k, const Eigen::ArrayXd& rhos);

struct Lemma11Report {
  double min_second_diff_inv_cos = 0.0;  // t -> 1/(1 - cos t)
  double min_second_diff_t_sin = 0.0;    // t -> t / sin t
  bool convex = false;
};

// Discrete convexity check of the two scalar functions on a uniform grid
// over [0.01, pi - 0.01]: reports the minimum second central difference.
Lemma11Report lemma11_check(int grid_points);

struct Prop12Constants {
  double c0 = 0.0;           // minimizer of obj below, radians
  double r_min = 0.0;        // obj(c0)
  double coefficient = 0.0;  // 4 / r_min

  // obj(c) = 4c/(pi^2 sin c) + 2/(1 - cos c), strictly convex on (0, pi).
  static double obj(double c);
  // Derivative of obj; its unique root on (0, pi) is c0.
  static double obj_deriv(double c);
};

// Finds c0 by bisection on obj_deriv over [1.5, 2.5] to 1e-12.
Prop12Constants prop12_constants();

// k^2 * coefficient: general lower bound for the volume product at winding k.
double prop12_bound(int k);

// Optimal first-part winding weight k(1-cos c) / ((pi^2/4)(sin c / c)
// + (1-cos c)/2); lies in (0, 2k).
double prop12_k1(double c, int k);

struct Remark13Report {
  double prism = 0.0;    // (4/3)(2k+1)^2 sin^2(k pi/(2k+1))
  double simplex = 0.0;  // (64/9) k^2
  bool prism_smaller = false;
};
Remark13Report remark13_compare(int k);

struct BoundReport {
  int n = 0;
  int k = 0;
  double bound = 0.0;
  double achieved = 0.0;  // smallest observed volume product
  double gap = 0.0;       // achieved - bound
  EqualityCase equality_case = EqualityCase::None;
  std::uint64_t trials = 0;
};

// Random sector-angle partition of 2*k*pi into n parts, each inside (0, pi),
// drawn sequentially within the feasible window for each slot.
Eigen::ArrayXd random_angle_partition(int n, int k, std::mt19937_64& rng);

// Random valid curve: random angle partition plus log-uniform radii in
// [0.2, 5], drawn sequentially inside the local-convexity window (whole-curve
// resample when the wrap-around constraints fail).
WoundPolygon random_curve(int n, int k, std::mt19937_64& rng);

// Equal-angle trials with log-uniform radii against prop10_bound(n, k).
BoundReport run_prop10_trials(int n, int k, std::uint64_t trials, std::uint64_t seed);

// Unit-radius trials with random angle partitions (n drawn per trial from
// [2k+1, 6k]) against prop12_bound(k).
BoundReport run_prop12_trials(int k, std::uint64_t trials, std::uint64_t seed);

}  // namespace windcurve
