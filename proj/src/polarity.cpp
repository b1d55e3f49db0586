#include "windcurve/polarity.hpp"

#include <cmath>
#include <numbers>

namespace windcurve {

namespace {
constexpr double pi = std::numbers::pi;
double cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }
}  // namespace

Vec2 chord_dual(const Vec2& a, const Vec2& b) {
  const double d = cross(a, b);
  if (d == 0.0) throw curve_error(errc::singular, "chord endpoints are collinear with the origin");
  return Vec2((b.y() - a.y()) / d, (a.x() - b.x()) / d);
}

WoundPolygon polar(const WoundPolygon& c) {
  const Eigen::Matrix2Xd v = to_cartesian(c);
  const Eigen::Index n = v.cols();
  Eigen::Matrix2Xd u(2, n);
  for (Eigen::Index i = 0; i < n; ++i)
    u.col(i) = chord_dual(v.col(i), v.col((i + 1) % n));

  WoundPolygon out;
  out.k = c.k;
  out.phi.resize(n);
  out.rho.resize(n);
  // The dual of side 0 points into that side's angular neighborhood:
  // its lifted angle differs from phi[0] by less than pi/2.
  double a0 = std::atan2(u(1, 0), u(0, 0));
  out.phi[0] = c.phi[0] + std::remainder(a0 - c.phi[0], 2 * pi);
  out.rho[0] = u.col(0).norm();
  for (Eigen::Index i = 1; i < n; ++i) {
    const Vec2 p = u.col(i - 1), q = u.col(i);
    out.phi[i] = out.phi[i - 1] + std::atan2(cross(p, q), p.dot(q));
    out.rho[i] = u.col(i).norm();
  }
  return out;
}

double volume_product(const WoundPolygon& c) { return area(c) * area(polar(c)); }

double coeff_F(double theta) {
  const double h = 0.5 * theta;
  const double ch = std::cos(h), sh = std::sin(h);
  return -ch * ch * (ch / sh) + sh * sh * (sh / ch);
}

double coeff_G(double theta) {
  const double h = 0.5 * theta;
  const double ch = std::cos(h), sh = std::sin(h);
  return ch * ch * (ch / sh) + sh * sh * (sh / ch) + std::sin(theta);
}

SectorTerm make_sector_term(double theta, double rho_lo, double rho_hi) {
  if (!(theta > 0.0 && theta < pi) || !(rho_lo > 0.0) || !(rho_hi > 0.0))
    throw curve_error(errc::bad_parameters, "sector term needs theta in (0,pi) and positive radii");
  return SectorTerm{theta, rho_lo, rho_hi, coeff_F(theta), coeff_G(theta)};
}

double equal_angle_polar_area(const Eigen::ArrayXd& rhos, int k) {
  const Eigen::Index n = rhos.size();
  if (k < 1 || n < 2 * k + 1)
    throw curve_error(errc::bad_parameters, "require k >= 1 and n >= 2k+1");
  if ((rhos <= 0.0).any())
    throw curve_error(errc::non_positive_radius, "all radii must be positive");
  const double theta = 2.0 * pi * k / static_cast<double>(n);
  const double f = coeff_F(theta), g = coeff_G(theta);
  double s = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double a = rhos[i], b = rhos[(i + 1) % n];
    s += (1.0 / (a * a) + 1.0 / (b * b)) * f / 4.0 + (2.0 / (a * b)) * g / 4.0;
  }
  return s;
}

}  // namespace windcurve
