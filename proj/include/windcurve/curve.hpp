#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace windcurve {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

enum class errc {
  angle_order,
  sector_too_wide,
  closure_mismatch,
  non_positive_radius,
  reflex_vertex,
  bad_parameters,
  out_of_domain,
  orientation_reversing,
  singular,
  outside_kernel,
  no_convergence,
  invalid_probe,
};

const char* to_string(errc code);

class curve_error : public std::runtime_error {
 public:
  curve_error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  errc code() const { return code_; }

 private:
  errc code_;
};

// Closed polygonal curve winding k times around the origin, stored in lifted
// polar coordinates: phi strictly increasing, and the closing vertex
// (phi[0] + 2*k*pi, rho[0]) is implicit. Vertex i sits at
// rho[i] * (cos phi[i], sin phi[i]).
struct WoundPolygon {
  int k = 1;
  Eigen::ArrayXd phi;
  Eigen::ArrayXd rho;

  Eigen::Index size() const { return phi.size(); }
};

struct ValidateOptions {
  double closure_tol = 1e-9;
  // Accept vertices with zero turn (three collinear points). Off by default:
  // a flat vertex means the polygon has effectively fewer corners.
  bool allow_flat = false;
};

// Checks all class invariants and returns a normalized copy. An input whose
// last vertex duplicates the start (lifted angle within closure_tol of
// phi[0] + 2*k*pi and matching radius) is folded into the implicit closure,
// and the sector angles are rescaled proportionally so they sum to exactly
// 2*k*pi. Throws curve_error on any violation.
WoundPolygon validate(const WoundPolygon& c, const ValidateOptions& opts = {});

// Builds a curve from sector angles (each in (0,pi), summing to 2*k*pi
// within 1e-9; renormalized proportionally) and vertex radii.
WoundPolygon from_sectors(int k, const Eigen::ArrayXd& theta,
                          const Eigen::ArrayXd& rho, double phi0 = 0.0);

// Regular star C_{n,k}: unit-radius vertices advancing by 2*pi*k/n per side.
WoundPolygon construct_cnk(int n, int k);

// Polygonal version of the two-ellipse winding example: one loop sampled on
// x^2 + (y/eps)^2 = 1, then k-1 loops on x^2 + (y*eps)^2 = 1, with m
// uniform-parameter samples per loop.
WoundPolygon guggenheimer_example(int k, double eps, int m);

Eigen::ArrayXd sector_angles(const WoundPolygon& c);
Eigen::Matrix2Xd to_cartesian(const WoundPolygon& c);

// Index-weighted enclosed area: (1/2) * sum of cross(v_i, v_{i+1}) over the
// closed vertex cycle.
double area(const WoundPolygon& c);

// Radius of the curve point at lifted angle phi in [phi[0], phi[0] + 2*k*pi).
double radial_function(const WoundPolygon& c, double phi);

// Applies a positive-determinant linear map to the vertices and re-lifts the
// angles on the same branch.
WoundPolygon apply_linear(const WoundPolygon& c, const Mat2& m);

// Moves the origin to x, which must lie strictly inside the kernel.
WoundPolygon translate(const WoundPolygon& c, const Vec2& x);

// Same curve enumerated from vertex (steps mod n), lifts shifted by the
// appropriate multiple of 2*k*pi.
WoundPolygon rotate_start(const WoundPolygon& c, Eigen::Index steps);

// Smallest signed distance from x to the n side lines, positive inside the
// kernel (the intersection of the sides' origin-side half planes).
double side_clearance(const WoundPolygon& c, const Vec2& x);

bool kernel_contains(const WoundPolygon& c, const Vec2& x);

}  // namespace windcurve
