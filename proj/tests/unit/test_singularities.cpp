#include <doctest.h>

#include <cmath>
#include <random>

#include "octo/canonical.hpp"
#include "octo/singularities.hpp"

using namespace octo;

namespace {

CanonicalSystem make(double al, double be, double a10, double a01, double b10, double b01) {
  CanonicalSystem c;
  c.alpha = al;
  c.beta = be;
  c.a10 = a10;
  c.a01 = a01;
  c.b10 = b10;
  c.b01 = b01;
  return c;
}

// Central finite differences of the field.
Mat2 fd_jacobian(const CanonicalSystem& c, Vec2 p) {
  const double h = 1e-6;
  const Vec2 fxp = c.field({p.x + h, p.y}), fxm = c.field({p.x - h, p.y});
  const Vec2 fyp = c.field({p.x, p.y + h}), fym = c.field({p.x, p.y - h});
  return {(fxp.x - fxm.x) / (2 * h), (fyp.x - fym.x) / (2 * h), (fxp.y - fxm.y) / (2 * h),
          (fyp.y - fym.y) / (2 * h)};
}

double max_diff(const Mat2& a, const Mat2& b) {
  return std::max({std::fabs(a.a11 - b.a11), std::fabs(a.a12 - b.a12), std::fabs(a.a21 - b.a21),
                   std::fabs(a.a22 - b.a22)});
}

}  // namespace

TEST_CASE("linear classification") {
  CHECK(classify_linear({-1, 0, 0, 2}) == LocalType::saddle);
  CHECK(classify_linear({-1, 0, 0, -2}) == LocalType::stable_node);
  CHECK(classify_linear({1, 0, 0, 2}) == LocalType::unstable_node);
  CHECK(classify_linear({-1, 2, -2, -1}) == LocalType::stable_focus);
  CHECK(classify_linear({1, 2, -2, 1}) == LocalType::unstable_focus);
  CHECK(classify_linear({0, 1, -1, 0}) == LocalType::non_hyperbolic);
  CHECK(classify_linear({0, 0, 0, 1}) == LocalType::non_hyperbolic);
  CHECK(reversed(LocalType::stable_focus) == LocalType::unstable_focus);
  CHECK(reversed(LocalType::saddle) == LocalType::saddle);
}

TEST_CASE("corner points") {
  const CanonicalSystem c = make(0.5, 0.5, 1, 3, -1, -0.5);
  const auto p = p_singularities(c);
  CHECK(p[0].location.x == -0.5);
  CHECK(p[0].location.y == -0.5);
  CHECK(p[0].jacobian.a11 == doctest::Approx(2.0));
  CHECK(p[0].jacobian.a22 == doctest::Approx(-0.75));
  CHECK(p[0].jacobian.a12 == 0.0);
  CHECK(p[0].type == LocalType::saddle);
  for (int i = 0; i < 4; ++i) CHECK(max_diff(p[i].jacobian, fd_jacobian(c, p[i].location)) < 1e-7);
}

TEST_CASE("edge points") {
  const CanonicalSystem c = make(0.5, 0.5, 1, 5, 1, -0.5);
  const auto q = q_singularities(c);
  CHECK(q[0].location.x == doctest::Approx(2.5));
  CHECK(q[0].location.y == doctest::Approx(-0.5));
  CHECK(q[1].location.x == doctest::Approx(0.5));
  CHECK(q[1].location.y == doctest::Approx(1.0));
  CHECK(q[2].location.x == doctest::Approx(-2.5));
  CHECK(q[2].location.y == doctest::Approx(0.5));
  CHECK(q[3].location.x == doctest::Approx(-0.5));
  CHECK(q[3].location.y == doctest::Approx(-1.0));
  for (const auto& s : q) {
    const Vec2 f = c.field(s.location);
    CHECK(std::hypot(f.x, f.y) < 1e-12);
    CHECK(max_diff(s.jacobian, fd_jacobian(c, s.location)) < 1e-6);
  }
  const auto u = q_singularities(make(0.5, 0.5, 0, 1, 1, 1));
  CHECK_FALSE(u[0].defined);
  CHECK_FALSE(u[2].defined);
  CHECK(u[1].defined);
}

TEST_CASE("origin") {
  SUBCASE("nodes, foci and saddles") {
    // Jacobian at the origin is -(1/4) A for alpha = beta = 1/2.
    CHECK(classify_origin(make(0.5, 0.5, 1, 0.1, 0.1, 1)).type == LocalType::stable_node);
    CHECK(classify_origin(make(0.5, 0.5, -1, 0.1, 0.1, -1)).type == LocalType::unstable_node);
    CHECK(classify_origin(make(0.5, 0.5, 1, 2, 2, 1)).type == LocalType::saddle);
    CHECK(classify_origin(make(0.5, 0.5, 1, 3, -3, 1)).type == LocalType::stable_focus);
  }
  SUBCASE("zero trace") {
    const SingularityReport centre = classify_origin(make(0.5, 0.5, 1, 3, -3, -1));
    CHECK(centre.type == LocalType::center);
    CHECK(classify_origin(make(0.5, 0.5, 1, 3, -1, -1)).type == LocalType::weak_unstable_focus);
    CHECK(classify_origin(make(0.5, 0.5, 1, 1, -3, -1)).type == LocalType::weak_stable_focus);
  }
  SUBCASE("agrees with finite differences") {
    const CanonicalSystem c = make(0.3, 0.8, 1.5, -0.7, 2.0, -1.1);
    CHECK(max_diff(classify_origin(c).jacobian, fd_jacobian(c, {0, 0})) < 1e-7);
  }
}

TEST_CASE("relative positions agree with coordinates") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ab(0.02, 0.98), k(-3.0, 3.0);
  for (int n = 0; n < 1000; ++n) {
    const CanonicalSystem c = make(ab(rng), ab(rng), k(rng), k(rng), k(rng), k(rng));
    if (std::fabs(c.a10) < 1e-3 || std::fabs(c.b01) < 1e-3) continue;
    const RelativePositions rp = relative_positions(c);
    const auto q = q_singularities(c);
    auto by = [](double a, double b) { return a < b ? Cmp::less : Cmp::greater; };
    const Vec2 p1 = p_point(c, 0), p2 = p_point(c, 1), p3 = p_point(c, 2), p4 = p_point(c, 3);
    CHECK(rp.q1_p1() == by(q[0].location.x, p1.x));
    CHECK(rp.q1_p2() == by(q[0].location.x, p2.x));
    CHECK(rp.q2_p2() == by(q[1].location.y, p2.y));
    CHECK(rp.q2_p3() == by(q[1].location.y, p3.y));
    CHECK(rp.q3_p3() == by(q[2].location.x, p3.x));
    CHECK(rp.q3_p4() == by(q[2].location.x, p4.x));
    CHECK(rp.q4_p4() == by(q[3].location.y, p4.y));
    CHECK(rp.q4_p1() == by(q[3].location.y, p1.y));
  }
}

TEST_CASE("an edge point on a corner is reported as equal") {
  // q1 = (a01 beta / a10, -beta) lands on p2 = (1 - alpha, -beta) when a01 = 1.
  const RelativePositions rp = relative_positions(make(0.5, 0.5, 1, 1, 1, -1));
  CHECK(rp.q1_p2() == Cmp::equal);
  CHECK(rp.any_equal());
}
