#include <doctest.h>

#include <cmath>
#include <random>

#include "octo/errors.hpp"
#include "octo/replicator.hpp"

using namespace octo;

namespace {

std::vector<std::vector<double>> random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (auto& row : a) {
    for (auto& v : row) v = u(rng);
  }
  return a;
}

std::vector<double> random_simplex(std::mt19937_64& rng, std::size_t n) {
  std::exponential_distribution<double> e(1.0);
  std::vector<double> x(n);
  double s = 0.0;
  for (auto& v : x) s += v = e(rng);
  for (auto& v : x) v /= s;
  // Absorb the rounding of the division into the last entry.
  double rest = 1.0;
  for (std::size_t i = 0; i + 1 < n; ++i) rest -= x[i];
  x.back() = rest;
  return x;
}

}  // namespace

TEST_CASE("payoffs of the identity game") {
  const PayoffMatrixN I({{1, 0}, {0, 1}});
  CHECK(payoff(0, SimplexPoint({1.0, 0.0}), I) == 1.0);
  CHECK(average_payoff(SimplexPoint({0.5, 0.5}), I) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("payoffs match a double sum") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_matrix(rng, 3);
    const auto x = random_simplex(rng, 3);
    const PayoffMatrixN A(a);
    const SimplexPoint p(x);
    double avg = 0.0;
    for (std::size_t i = 0; i < 3; ++i) {
      double pi = 0.0;
      for (std::size_t j = 0; j < 3; ++j) pi += a[i][j] * x[j];
      CHECK(std::fabs(payoff(i, p, A) - pi) < 1e-14);
      avg += x[i] * pi;
    }
    CHECK(std::fabs(average_payoff(p, A) - avg) < 1e-14);
  }
}

TEST_CASE("invalid games and mixes are rejected") {
  CHECK_THROWS_AS(PayoffMatrixN(std::vector<std::vector<double>>{{1.0}}), Error);
  CHECK_THROWS_AS(PayoffMatrixN({{1, 2}, {3}}), Error);
  CHECK_THROWS_AS(SimplexPoint({0.6, 0.6}), Error);
  CHECK_THROWS_AS(SimplexPoint({1.2, -0.2}), Error);
  const PayoffMatrixN I({{1, 0}, {0, 1}});
  CHECK_THROWS_AS(payoff(2, SimplexPoint({0.5, 0.5}), I), Error);
}

TEST_CASE("replicator field") {
  std::mt19937_64 rng(11);
  SUBCASE("vertices are fixed points") {
    const PayoffMatrixN A(random_matrix(rng, 4));
    for (std::size_t k = 0; k < 4; ++k) {
      std::vector<double> v(4, 0.0);
      v[k] = 1.0;
      for (double d : replicator_rhs(SimplexPoint(v), A)) CHECK(d == 0.0);
    }
  }
  SUBCASE("equal rows give a zero field") {
    const PayoffMatrixN A({{1, 2, 3}, {1, 2, 3}, {1, 2, 3}});
    for (double d : replicator_rhs(SimplexPoint(random_simplex(rng, 3)), A)) CHECK(std::fabs(d) < 1e-15);
  }
  SUBCASE("direct formula and zero sum") {
    for (int trial = 0; trial < 50; ++trial) {
      const auto a = random_matrix(rng, 4);
      const auto x = random_simplex(rng, 4);
      const auto f = replicator_rhs(SimplexPoint(x), PayoffMatrixN(a));
      double avg = 0.0;
      std::vector<double> pi(4, 0.0);
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) pi[i] += a[i][j] * x[j];
        avg += x[i] * pi[i];
      }
      double sum = 0.0;
      for (int i = 0; i < 4; ++i) {
        CHECK(std::fabs(f[i] - x[i] * (pi[i] - avg)) < 1e-14);
        sum += f[i];
      }
      CHECK(std::fabs(sum) < 1e-12);
    }
  }
}

TEST_CASE("RK4 keeps the simplex") {
  std::mt19937_64 rng(3);
  const PayoffMatrixN A(random_matrix(rng, 4));
  const auto traj = simulate_replicator(SimplexPoint(random_simplex(rng, 4)), A, 0.01, 1000);
  REQUIRE(traj.size() == 1001);
  for (const auto& x : traj) {
    double s = 0.0;
    for (double v : x) {
      CHECK(v >= 0.0);
      s += v;
    }
    CHECK(std::fabs(s - 1.0) < 1e-9);
  }
}

TEST_CASE("two-player reduction") {
  SUBCASE("zero game") {
    const RawSystem s = reduce_two_player({{0, 0, 0, 0}, {0, 0, 0, 0}});
    CHECK(s.a00 == 0.0);
    CHECK(s.a10 == 0.0);
    CHECK(s.a01 == 0.0);
    CHECK(s.b00 == 0.0);
    CHECK(s.b10 == 0.0);
    CHECK(s.b01 == 0.0);
  }
  SUBCASE("corruption coefficients") {
    CorruptionPayoffs p;
    p.W = 1.3;
    p.M = 2.9;
    p.Mc = 0.7;
    p.Mg = 0.4;
    p.Mg_prime = 1.6;
    p.e = 9.0;
    p.VGc = 2.2;
    p.VGnc = 3.1;
    p.K = 12.0;
    p.P = 0.25;
    const RawSystem s = reduce_two_player(corruption_game(p));
    CHECK(s.a00 == doctest::Approx(p.M - p.Mc));
    CHECK(s.a01 == doctest::Approx(p.Mg - p.Mg_prime - p.M));
    CHECK(s.b00 == doctest::Approx(p.K * p.P + p.VGnc - p.VGc - p.Mg_prime));
    CHECK(s.b10 == doctest::Approx(p.M + p.Mg_prime - p.Mg - p.e));
    CHECK(s.a10 == 0.0);
    CHECK(s.b01 == 0.0);
  }
  SUBCASE("agrees with the four-dimensional system") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-2.0, 2.0), w(0.0, 1.0);
    for (int game = 0; game < 100; ++game) {
      const Mat2 A{u(rng), u(rng), u(rng), u(rng)};
      const Mat2 B{u(rng), u(rng), u(rng), u(rng)};
      const RawSystem s = reduce_two_player({A, B});
      for (int k = 0; k < 10; ++k) {
        const double x = w(rng), y = w(rng);
        // x1' = x1 ((A y)_1 - x.A y) with x = (x, 1-x), y = (y, 1-y).
        const double Ay1 = A.a11 * y + A.a12 * (1 - y), Ay2 = A.a21 * y + A.a22 * (1 - y);
        const double Bx1 = B.a11 * x + B.a12 * (1 - x), Bx2 = B.a21 * x + B.a22 * (1 - x);
        const double fx = x * (Ay1 - (x * Ay1 + (1 - x) * Ay2));
        const double fy = y * (Bx1 - (y * Bx1 + (1 - y) * Bx2));
        const Vec2 f = s.field({x, y});
        CHECK(std::fabs(f.x - fx) < 1e-12);
        CHECK(std::fabs(f.y - fy) < 1e-12);
      }
    }
  }
}
