#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "windcurve/bounds.hpp"
#include "windcurve/curve.hpp"
#include "windcurve/polarity.hpp"
#include "windcurve/santalo.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace windcurve;

namespace {

constexpr double pi = std::numbers::pi;

WoundPolygon scalene_triangle() {
  // (1,0), (-0.2,1.1), (-0.7,-0.9) in increasing polar angle.
  WoundPolygon c;
  c.k = 1;
  c.phi.resize(3);
  c.rho.resize(3);
  const Vec2 v[3] = {Vec2(1, 0), Vec2(-0.2, 1.1), Vec2(-0.7, -0.9)};
  for (int i = 0; i < 3; ++i) {
    double a = std::atan2(v[i].y(), v[i].x());
    if (a < 0) a += 2 * pi;
    c.phi[i] = a;
    c.rho[i] = v[i].norm();
  }
  return validate(c);
}

}  // namespace

TEST_CASE("kernel of the axis square is the square itself") {
  const auto ker = kernel(construct_cnk(4, 1));
  CHECK(ker.vertices.size() == 4);
  CHECK(ker.area() == doctest::Approx(2.0).epsilon(1e-12));
  for (const auto& v : ker.vertices) CHECK(v.lpNorm<1>() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("kernel of the regular star is the inner pentagon") {
  const auto c = construct_cnk(5, 2);
  const auto ker = kernel(c);
  CHECK(ker.vertices.size() == 5);
  // Inradius cos(2*pi/5), circumradius cos(2*pi/5)/cos(pi/5).
  const double r_in = std::cos(2 * pi / 5);
  const double r_out = r_in / std::cos(pi / 5);
  for (const auto& v : ker.vertices) CHECK(v.norm() == doctest::Approx(r_out).epsilon(1e-10));
  CHECK(ker.area() == doctest::Approx(5 * r_out * r_out * 0.5 * std::sin(2 * pi / 5))
                          .epsilon(1e-10));
  CHECK(ker.contains(Vec2(0, 0)));
  CHECK(!ker.contains(Vec2(0.9, 0)));
}

TEST_CASE("kernel agrees with a clearance grid oracle") {
  std::mt19937_64 rng(3);
  const auto c = random_curve(7, 2, rng);
  const auto ker = kernel(c);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double ext = 1.2 * c.rho.maxCoeff();
  for (int t = 0; t < 2000; ++t) {
    const Vec2 p(ext * u(rng), ext * u(rng));
    const double cl = side_clearance(c, p);
    if (std::abs(cl) < 1e-9) continue;
    CHECK(ker.contains(p) == (cl > 0.0));
  }
}

TEST_CASE("kernel translation equivariance") {
  const auto c = construct_cnk(5, 2);
  const Vec2 x(0.12, -0.07);
  const auto moved = kernel(translate(c, x));
  const auto base = kernel(c);
  CHECK(moved.area() == doctest::Approx(base.area()).epsilon(1e-12));
  CHECK((moved.centroid() - (base.centroid() - x)).norm() < 1e-12);
}

TEST_CASE("santalo point of a symmetric star is the origin") {
  const auto res = santalo_point(construct_cnk(5, 2));
  CHECK(res.point.norm() < 1e-8);
  CHECK(res.gradient_norm <= res.tolerance);
  CHECK(res.iterations <= 500);
  CHECK(santalo_product(construct_cnk(5, 2)) ==
        doctest::Approx(22.612712429686844).epsilon(1e-9));
}

TEST_CASE("santalo point follows translations") {
  const auto c = construct_cnk(5, 2);
  const Vec2 x(0.1, 0.05);
  const auto res = santalo_point(translate(c, x));
  CHECK((res.point + x).norm() < 1e-7);
  CHECK(santalo_product(translate(c, x)) ==
        doctest::Approx(santalo_product(c)).epsilon(1e-7));
}

TEST_CASE("triangle santalo product is 27/4 at the centroid") {
  const auto tri = scalene_triangle();
  const auto res = santalo_point(tri);
  CHECK(santalo_product(tri) == doctest::Approx(6.75).epsilon(1e-9));
  const Vec2 centroid((1 - 0.2 - 0.7) / 3.0, (0 + 1.1 - 0.9) / 3.0);
  CHECK((res.point - centroid).norm() < 1e-7);
  CHECK(kernel(tri).contains(res.point));
}

TEST_CASE("translated polar area is convex along kernel chords") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const auto& c : {construct_cnk(5, 2), random_curve(8, 3, rng)}) {
    const auto ker = kernel(c);
    const Vec2 inner = ker.centroid();
    for (int t = 0; t < 100; ++t) {
      // Random chord through points pulled toward the centroid to stay inside.
      auto sample = [&] {
        const double ang = 2 * pi * u(rng);
        Vec2 dir(std::cos(ang), std::sin(ang));
        double lo = 0.0, hi = 4.0 * c.rho.maxCoeff();
        while (hi - lo > 1e-12)
          (ker.contains(inner + dir * (lo + hi) / 2) ? lo : hi) = (lo + hi) / 2;
        return Vec2(inner + dir * lo * 0.9 * u(rng));
      };
      const Vec2 a = sample(), b = sample();
      const double fa = translated_polar_area(c, a);
      const double fb = translated_polar_area(c, b);
      const double fm = translated_polar_area(c, (a + b) / 2);
      CHECK(fm <= 0.5 * (fa + fb) + 1e-9 * (std::abs(fa) + std::abs(fb)));
    }
  }
}

TEST_CASE("translated polar area blows up toward the kernel boundary") {
  const auto c = construct_cnk(5, 2);
  const auto ker = kernel(c);
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 10; ++t) {
    const double ang = 2 * pi * u(rng);
    const Vec2 dir(std::cos(ang), std::sin(ang));
    double lo = 0.0, hi = 2.0;
    while (hi - lo > 1e-13) (ker.contains(dir * (lo + hi) / 2) ? lo : hi) = (lo + hi) / 2;
    double prev = -1.0;
    for (const double f : {0.5, 0.9, 0.99, 0.999, 0.9999}) {
      const double val = translated_polar_area(c, dir * (lo * f));
      CHECK(val > prev);
      prev = val;
    }
    CHECK(prev > 1e3 * translated_polar_area(c, Vec2(0, 0)));
  }
}

TEST_CASE("santalo product is affine invariant") {
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (const auto& c : {construct_cnk(5, 2), random_curve(7, 2, rng)}) {
    const double base = santalo_product(c);
    int done = 0;
    while (done < 20) {
      Mat2 m;
      m << u(rng), u(rng), u(rng), u(rng);
      if (m.determinant() < 0.1) continue;
      ++done;
      Vec2 x(u(rng), u(rng));
      x *= 0.3 * side_clearance(c, Vec2(0, 0)) / std::max(x.norm(), 1e-300);
      CHECK(santalo_product(apply_linear(translate(c, x), m)) ==
            doctest::Approx(base).epsilon(1e-6));
    }
  }
}

TEST_CASE("santalo point stays strictly inside the kernel") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 50; ++t) {
    std::uniform_int_distribution<int> pick_k(1, 4);
    const int k = pick_k(rng);
    std::uniform_int_distribution<int> pick_n(2 * k + 1, 5 * k);
    const auto c = random_curve(pick_n(rng), k, rng);
    const auto res = santalo_point(c);
    CHECK(side_clearance(c, res.point) > 0.0);
    CHECK(res.gradient_norm <= res.tolerance);
  }
}

TEST_CASE("eccentric winding curves keep a computable santalo point") {
  const auto g = guggenheimer_example(2, 0.2, 64);
  const auto res = santalo_point(g);
  // By symmetry the minimizer sits at the origin.
  CHECK(res.point.norm() < 1e-6 * g.rho.maxCoeff());
  CHECK(santalo_product(g) >= 0.9 * pi * pi / (0.2 * 0.2));
}
