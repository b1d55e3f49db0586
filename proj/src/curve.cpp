#include "windcurve/curve.hpp"

#include <cmath>
#include <numbers>

namespace windcurve {

namespace {

constexpr double pi = std::numbers::pi;

double cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

// Turn angle from direction a to direction b, in (-pi, pi].
double turn(const Vec2& a, const Vec2& b) {
  return std::atan2(cross(a, b), a.dot(b));
}

// Re-lifts cartesian vertices into strictly increasing angles, keeping the
// first angle on the branch closest to anchor.
WoundPolygon lift(int k, const Eigen::Matrix2Xd& v, double anchor) {
  const Eigen::Index n = v.cols();
  WoundPolygon out;
  out.k = k;
  out.phi.resize(n);
  out.rho.resize(n);
  double a0 = std::atan2(v(1, 0), v(0, 0));
  out.phi[0] = anchor + std::remainder(a0 - anchor, 2 * pi);
  out.rho[0] = v.col(0).norm();
  for (Eigen::Index i = 1; i < n; ++i) {
    out.phi[i] = out.phi[i - 1] + turn(v.col(i - 1), v.col(i));
    out.rho[i] = v.col(i).norm();
  }
  return out;
}

}  // namespace

const char* to_string(errc code) {
  switch (code) {
    case errc::angle_order: return "angle_order";
    case errc::sector_too_wide: return "sector_too_wide";
    case errc::closure_mismatch: return "closure_mismatch";
    case errc::non_positive_radius: return "non_positive_radius";
    case errc::reflex_vertex: return "reflex_vertex";
    case errc::bad_parameters: return "bad_parameters";
    case errc::out_of_domain: return "out_of_domain";
    case errc::orientation_reversing: return "orientation_reversing";
    case errc::singular: return "singular";
    case errc::outside_kernel: return "outside_kernel";
    case errc::no_convergence: return "no_convergence";
    case errc::invalid_probe: return "invalid_probe";
  }
  return "unknown";
}

WoundPolygon validate(const WoundPolygon& c, const ValidateOptions& opts) {
  if (c.k < 1) throw curve_error(errc::bad_parameters, "winding number must be positive");
  if (c.phi.size() != c.rho.size())
    throw curve_error(errc::bad_parameters, "phi and rho lengths differ");
  if (c.phi.size() < 3)
    throw curve_error(errc::bad_parameters, "need at least three vertices");
  if ((c.rho <= 0.0).any())
    throw curve_error(errc::non_positive_radius, "all radii must be positive");
  const Eigen::Index nin = c.phi.size();
  for (Eigen::Index i = 1; i < nin; ++i)
    if (!(c.phi[i] > c.phi[i - 1]))
      throw curve_error(errc::angle_order, "lifted angles must be strictly increasing");

  WoundPolygon out;
  out.k = c.k;
  const double full = 2.0 * pi * c.k;
  const double span = c.phi[nin - 1] - c.phi[0];
  if (span >= full - opts.closure_tol) {
    // Last vertex is an explicit copy of the start; fold it away and
    // renormalize the total turn onto exactly 2*k*pi.
    if (std::abs(span - full) > opts.closure_tol)
      throw curve_error(errc::closure_mismatch, "total turn differs from 2*k*pi");
    if (std::abs(c.rho[nin - 1] - c.rho[0]) > opts.closure_tol * std::max(1.0, c.rho[0]))
      throw curve_error(errc::closure_mismatch, "closing vertex radius differs from start");
    const Eigen::Index n = nin - 1;
    const double scale = full / span;
    out.phi.resize(n);
    out.rho.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      out.phi[i] = c.phi[0] + (c.phi[i] - c.phi[0]) * scale;
      out.rho[i] = c.rho[i];
    }
  } else {
    out.phi = c.phi;
    out.rho = c.rho;
  }

  const Eigen::ArrayXd theta = sector_angles(out);
  if ((theta >= pi).any())
    throw curve_error(errc::sector_too_wide, "every sector must span less than pi");

  const Eigen::Matrix2Xd v = to_cartesian(out);
  const Eigen::Index n = v.cols();
  for (Eigen::Index i = 0; i < n; ++i) {
    const Vec2 e0 = v.col((i + 1) % n) - v.col(i);
    const Vec2 e1 = v.col((i + 2) % n) - v.col((i + 1) % n);
    const double turn_sign = cross(e0, e1);
    if (turn_sign < 0.0 || (turn_sign == 0.0 && !opts.allow_flat))
      throw curve_error(errc::reflex_vertex, "left-turn condition fails at a vertex");
  }
  return out;
}

WoundPolygon from_sectors(int k, const Eigen::ArrayXd& theta,
                          const Eigen::ArrayXd& rho, double phi0) {
  if (theta.size() != rho.size() || theta.size() < 3)
    throw curve_error(errc::bad_parameters, "need matching theta/rho lists of length >= 3");
  if ((theta <= 0.0).any() || (theta >= pi).any())
    throw curve_error(errc::sector_too_wide, "sector angles must lie in (0, pi)");
  const double full = 2.0 * pi * k;
  const double total = theta.sum();
  if (std::abs(total - full) > 1e-9)
    throw curve_error(errc::closure_mismatch, "sector angles must sum to 2*k*pi");
  const double scale = full / total;
  WoundPolygon c;
  c.k = k;
  const Eigen::Index n = theta.size();
  c.phi.resize(n);
  c.rho = rho;
  double acc = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    c.phi[i] = phi0 + acc * scale;
    acc += theta[i];
  }
  return validate(c);
}

WoundPolygon construct_cnk(int n, int k) {
  if (k < 1 || n <= 2 * k)
    throw curve_error(errc::bad_parameters, "require k >= 1 and n >= 2k+1");
  WoundPolygon c;
  c.k = k;
  c.phi.resize(n);
  c.rho = Eigen::ArrayXd::Ones(n);
  for (int i = 0; i < n; ++i) c.phi[i] = 2.0 * pi * k * i / n;
  return c;
}

WoundPolygon guggenheimer_example(int k, double eps, int m) {
  if (k < 2 || !(eps > 0.0 && eps < 1.0) || m < 16)
    throw curve_error(errc::bad_parameters, "require k >= 2, eps in (0,1), m >= 16");
  Eigen::Matrix2Xd v(2, static_cast<Eigen::Index>(k) * m);
  Eigen::Index col = 0;
  for (int j = 0; j < m; ++j) {
    const double t = 2.0 * pi * j / m;
    v.col(col++) = Vec2(std::cos(t), eps * std::sin(t));
  }
  for (int loop = 1; loop < k; ++loop)
    for (int j = 0; j < m; ++j) {
      const double t = 2.0 * pi * j / m;
      v.col(col++) = Vec2(std::cos(t), std::sin(t) / eps);
    }
  return validate(lift(k, v, 0.0));
}

Eigen::ArrayXd sector_angles(const WoundPolygon& c) {
  const Eigen::Index n = c.size();
  Eigen::ArrayXd theta(n);
  for (Eigen::Index i = 0; i + 1 < n; ++i) theta[i] = c.phi[i + 1] - c.phi[i];
  theta[n - 1] = c.phi[0] + 2.0 * pi * c.k - c.phi[n - 1];
  return theta;
}

Eigen::Matrix2Xd to_cartesian(const WoundPolygon& c) {
  const Eigen::Index n = c.size();
  Eigen::Matrix2Xd v(2, n);
  v.row(0) = (c.rho * c.phi.cos()).transpose();
  v.row(1) = (c.rho * c.phi.sin()).transpose();
  return v;
}

double area(const WoundPolygon& c) {
  const Eigen::Matrix2Xd v = to_cartesian(c);
  const Eigen::Index n = v.cols();
  double s = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) s += cross(v.col(i), v.col((i + 1) % n));
  return 0.5 * s;
}

double radial_function(const WoundPolygon& c, double phi) {
  const Eigen::Index n = c.size();
  const double full = 2.0 * pi * c.k;
  if (!(phi >= c.phi[0] && phi < c.phi[0] + full))
    throw curve_error(errc::out_of_domain, "phi outside [phi0, phi0 + 2*k*pi)");
  // Last side with phi[i] <= phi.
  Eigen::Index lo = 0, hi = n;
  while (hi - lo > 1) {
    const Eigen::Index mid = (lo + hi) / 2;
    (c.phi[mid] <= phi ? lo : hi) = mid;
  }
  const Eigen::Matrix2Xd v = to_cartesian(c);
  const Vec2 a = v.col(lo), b = v.col((lo + 1) % n);
  const Vec2 d(std::cos(phi), std::sin(phi));
  return cross(a, b) / cross(d, b - a);
}

WoundPolygon apply_linear(const WoundPolygon& c, const Mat2& m) {
  const double det = m.determinant();
  if (det == 0.0) throw curve_error(errc::singular, "singular linear map");
  if (det < 0.0)
    throw curve_error(errc::orientation_reversing, "linear map must preserve orientation");
  const Eigen::Matrix2Xd v = m * to_cartesian(c);
  return validate(lift(c.k, v, c.phi[0]));
}

WoundPolygon translate(const WoundPolygon& c, const Vec2& x) {
  if (!(side_clearance(c, x) > 0.0))
    throw curve_error(errc::outside_kernel, "translation point must lie inside the kernel");
  Eigen::Matrix2Xd v = to_cartesian(c);
  v.colwise() -= x;
  return validate(lift(c.k, v, c.phi[0]));
}

WoundPolygon rotate_start(const WoundPolygon& c, Eigen::Index steps) {
  const Eigen::Index n = c.size();
  const double full = 2.0 * pi * c.k;
  WoundPolygon out;
  out.k = c.k;
  out.phi.resize(n);
  out.rho.resize(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::Index j = (i + steps) % n;
    Eigen::Index wraps = (i + steps - j) / n;
    if (j < 0) {
      j += n;
      wraps -= 1;
    }
    out.phi[i] = c.phi[j] + full * static_cast<double>(wraps);
    out.rho[i] = c.rho[j];
  }
  return out;
}

double side_clearance(const WoundPolygon& c, const Vec2& x) {
  const Eigen::Matrix2Xd v = to_cartesian(c);
  const Eigen::Index n = v.cols();
  double d = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < n; ++i) {
    const Vec2 e = v.col((i + 1) % n) - v.col(i);
    d = std::min(d, cross(e, Vec2(x - v.col(i))) / e.norm());
  }
  return d;
}

bool kernel_contains(const WoundPolygon& c, const Vec2& x) {
  return side_clearance(c, x) > 0.0;
}

}  // namespace windcurve
