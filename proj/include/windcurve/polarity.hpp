#pragma once

#include "windcurve/curve.hpp"

namespace windcurve {

// Vertex of the polar curve for the chord from a to b: the unique u with
// <u, a> = <u, b> = 1. Requires cross(a, b) != 0.
Vec2 chord_dual(const Vec2& a, const Vec2& b);

// Polar curve C*: one vertex per side of c, winding number unchanged.
// Note on enumeration: vertex i of polar(c) is dual to side [v_i, v_{i+1}],
// so applying polar twice reproduces the curve with the start vertex
// advanced by one, i.e. polar(polar(c)) == rotate_start(c, 1).
WoundPolygon polar(const WoundPolygon& c);

// area(c) * area(polar(c)); invariant under positive-determinant linear maps.
double volume_product(const WoundPolygon& c);

// Per-side coefficients of the quadrangle decomposition of the polar area
// for curves whose sectors share one angle theta.
struct SectorTerm {
  double theta = 0.0;
  double rho_lo = 0.0;
  double rho_hi = 0.0;
  double F = 0.0;
  double G = 0.0;
};

// F(theta) = -cos^2(theta/2) cot(theta/2) + sin^2(theta/2) tan(theta/2);
// zero at theta = pi/2, negative below, positive above.
double coeff_F(double theta);

// G(theta) = cos^2(theta/2) cot(theta/2) + sin^2(theta/2) tan(theta/2) + sin(theta).
double coeff_G(double theta);

SectorTerm make_sector_term(double theta, double rho_lo, double rho_hi);

// Polar area of the equal-angle curve with the given radii and winding k,
// via the quadrangle decomposition:
//   sum over sides of (1/rho_i^2 + 1/rho_{i+1}^2) F/4 + (2/(rho_i rho_{i+1})) G/4
// with theta = 2*k*pi/n. Independent of the general polar pipeline; used to
// cross-check it.
double equal_angle_polar_area(const Eigen::ArrayXd& rhos, int k);

}  // namespace windcurve
