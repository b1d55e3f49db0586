#include "windcurve/santalo.hpp"

#include "windcurve/polarity.hpp"

#include <cmath>
#include <limits>

namespace windcurve {

namespace {

double cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

// Polar area of the curve whose cartesian vertices are v - x, without
// rebuilding lifted coordinates. Matches area(polar(translate(c, x))) up to
// rounding and is the hot path of the Santalo solve.
double polar_area_shifted(const Eigen::Matrix2Xd& v, const Vec2& x) {
  const Eigen::Index n = v.cols();
  double s = 0.0;
  Vec2 first, prev;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Vec2 u = chord_dual(Vec2(v.col(i) - x), Vec2(v.col((i + 1) % n) - x));
    if (i == 0)
      first = u;
    else
      s += cross(prev, u);
    prev = u;
  }
  s += cross(prev, first);
  return 0.5 * s;
}

double clearance(const Eigen::Matrix2Xd& v, const Vec2& x) {
  const Eigen::Index n = v.cols();
  double d = std::numeric_limits<double>::infinity();
  for (Eigen::Index i = 0; i < n; ++i) {
    const Vec2 e = v.col((i + 1) % n) - v.col(i);
    d = std::min(d, cross(e, Vec2(x - v.col(i))) / e.norm());
  }
  return d;
}

Vec2 fd_grad(const Eigen::Matrix2Xd& v, const Vec2& x, double h) {
  Vec2 g;
  for (int j = 0; j < 2; ++j) {
    Vec2 e = Vec2::Zero();
    e[j] = h;
    g[j] = (polar_area_shifted(v, x + e) - polar_area_shifted(v, x - e)) / (2.0 * h);
  }
  return g;
}

Mat2 fd_hess(const Eigen::Matrix2Xd& v, const Vec2& x, double h) {
  Mat2 hess;
  const double f0 = polar_area_shifted(v, x);
  for (int j = 0; j < 2; ++j) {
    Vec2 e = Vec2::Zero();
    e[j] = h;
    hess(j, j) =
        (polar_area_shifted(v, x + e) - 2.0 * f0 + polar_area_shifted(v, x - e)) / (h * h);
  }
  const Vec2 e1(h, 0.0), e2(0.0, h);
  const double mixed =
      (polar_area_shifted(v, x + e1 + e2) - polar_area_shifted(v, x + e1 - e2) -
       polar_area_shifted(v, x - e1 + e2) + polar_area_shifted(v, x - e1 - e2)) /
      (4.0 * h * h);
  hess(0, 1) = hess(1, 0) = mixed;
  return hess;
}

}  // namespace

double ConvexPolygon::area() const {
  const size_t n = vertices.size();
  double s = 0.0;
  for (size_t i = 0; i < n; ++i) s += cross(vertices[i], vertices[(i + 1) % n]);
  return 0.5 * s;
}

Vec2 ConvexPolygon::centroid() const {
  const size_t n = vertices.size();
  double a = 0.0;
  Vec2 c = Vec2::Zero();
  for (size_t i = 0; i < n; ++i) {
    const Vec2 &p = vertices[i], &q = vertices[(i + 1) % n];
    const double w = cross(p, q);
    a += w;
    c += (p + q) * w;
  }
  return c / (3.0 * a);
}

bool ConvexPolygon::contains(const Vec2& x) const {
  const size_t n = vertices.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec2 &p = vertices[i], &q = vertices[(i + 1) % n];
    if (!(cross(Vec2(q - p), Vec2(x - p)) > 0.0)) return false;
  }
  return true;
}

ConvexPolygon kernel(const WoundPolygon& c) {
  const Eigen::Matrix2Xd v = to_cartesian(c);
  const Eigen::Index n = v.cols();
  const double r = 2.0 * v.colwise().norm().maxCoeff();
  std::vector<Vec2> poly{Vec2(-r, -r), Vec2(r, -r), Vec2(r, r), Vec2(-r, r)};
  for (Eigen::Index i = 0; i < n; ++i) {
    const Vec2 a = v.col(i);
    const Vec2 e = v.col((i + 1) % n) - a;
    std::vector<Vec2> out;
    const size_t m = poly.size();
    for (size_t j = 0; j < m; ++j) {
      const Vec2 &p = poly[j], &q = poly[(j + 1) % m];
      const double sp = cross(e, Vec2(p - a)), sq = cross(e, Vec2(q - a));
      if (sp >= 0.0) out.push_back(p);
      if ((sp > 0.0) != (sq > 0.0) && sp != sq)
        out.push_back(p + (sp / (sp - sq)) * (q - p));
    }
    poly = std::move(out);
  }
  return ConvexPolygon{std::move(poly)};
}

double translated_polar_area(const WoundPolygon& c, const Vec2& x) {
  return area(polar(translate(c, x)));
}

SantaloResult santalo_point(const WoundPolygon& c, double tol) {
  const WoundPolygon cc = validate(c);
  const Eigen::Matrix2Xd v = to_cartesian(cc);
  const Vec2 x0 = kernel(cc).centroid();
  const double r0 = clearance(v, x0);
  if (!(r0 > 0.0))
    throw curve_error(errc::no_convergence, "kernel centroid has no clearance");

  double h = 1e-6 * r0;
  const double f0 = polar_area_shifted(v, x0);
  {
    // One-time step-size consistency check against h/10.
    const Vec2 g = fd_grad(v, x0, h);
    const Vec2 g10 = fd_grad(v, x0, h / 10.0);
    const double scale = std::max(g.norm(), f0 / r0);
    if ((g - g10).norm() > 1e-4 * scale) h /= 10.0;
  }
  const Vec2 g0 = fd_grad(v, x0, h);
  if (tol <= 0.0) tol = 1e-9 * std::max(g0.norm(), f0 / r0);
  const double noise_floor =
      64.0 * std::numeric_limits<double>::epsilon() * f0 / h;
  const double tol_eff = std::max(tol, noise_floor);

  Vec2 x = x0;
  for (int it = 0; it <= 500; ++it) {
    const double cl = clearance(v, x);
    const double hx = std::min(h, 0.49 * cl);
    const Vec2 g = fd_grad(v, x, hx);
    const double gn = g.norm();
    if (gn <= tol_eff)
      return SantaloResult{x, polar_area_shifted(v, x), gn, it, tol_eff};

    const double hh = std::min(std::max(h, 1e-4 * r0), 0.3 * cl);
    const Mat2 hess = fd_hess(v, x, hh);
    Vec2 d;
    bool have_newton = false;
    if (hess(0, 0) > 0.0 && hess.determinant() > 0.0) {
      d = hess.llt().solve(-g);
      have_newton = d.dot(g) < 0.0;
    }
    if (!have_newton) d = -g * std::min(1.0, r0 / gn);

    const double fx = polar_area_shifted(v, x);
    const double slope = g.dot(d);
    double t = 1.0;
    while (t > 1e-18) {
      const Vec2 xn = x + t * d;
      if (clearance(v, xn) > 0.0 &&
          polar_area_shifted(v, xn) <= fx + 1e-4 * t * slope)
        break;
      t *= 0.5;
    }
    if (t <= 1e-18)
      throw curve_error(errc::no_convergence, "line search stalled in santalo_point");
    x += t * d;
  }
  throw curve_error(errc::no_convergence, "santalo_point hit the iteration cap");
}

double santalo_product(const WoundPolygon& c) {
  return area(c) * santalo_point(c).value;
}

}  // namespace windcurve
