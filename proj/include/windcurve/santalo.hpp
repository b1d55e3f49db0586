#pragma once

#include "windcurve/curve.hpp"

#include <vector>

namespace windcurve {

// Counterclockwise convex polygon; used for the kernel of a wound polygon.
struct ConvexPolygon {
  std::vector<Vec2> vertices;

  double area() const;
  Vec2 centroid() const;
  bool contains(const Vec2& x) const;  // strict interior
};

// Intersection of the n half planes {x : cross(v_{i+1} - v_i, x - v_i) >= 0},
// clipped out of a bounding box. Always contains the origin.
ConvexPolygon kernel(const WoundPolygon& c);

struct SantaloResult {
  Vec2 point = Vec2::Zero();
  double value = 0.0;          // polar area of the curve recentered at point
  double gradient_norm = 0.0;
  int iterations = 0;
  double tolerance = 0.0;      // effective gradient tolerance that was met
};

// Polar area of the curve with the origin moved to x: f(x) in the Santalo
// minimization. x must lie strictly inside the kernel.
double translated_polar_area(const WoundPolygon& c, const Vec2& x);

// Minimizes f over the kernel interior by damped Newton descent with
// central-difference derivatives (step 1e-6 times the kernel inradius
// estimate), starting at the kernel centroid. tol <= 0 selects the default
// 1e-9 * initial gradient scale. The requested tolerance is clamped from
// below by the finite-difference noise floor 64*eps*f0/h, the resolution
// limit of the gradient probe; the tolerance actually enforced is reported
// in the result. Throws no_convergence after 500 iterations.
SantaloResult santalo_point(const WoundPolygon& c, double tol = 0.0);

// area(c) * santalo_point(c).value: the translation- and linear-invariant
// volume product taken at the Santalo point.
double santalo_product(const WoundPolygon& c);

}  // namespace windcurve
