#pragma once

#include <cstddef>
#include <vector>

#include "octo/linalg.hpp"

namespace octo {

// Square payoff matrix of a single population game, stored row-major.
class PayoffMatrixN {
 public:
  explicit PayoffMatrixN(const std::vector<std::vector<double>>& rows);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

 private:
  std::size_t n_ = 0;
  std::vector<double> a_;
};

// Mixed strategy on the simplex; construction rejects off-simplex input
// instead of renormalizing it.
class SimplexPoint {
 public:
  explicit SimplexPoint(std::vector<double> x, double tol = 1e-12);

  std::size_t size() const { return x_.size(); }
  double operator[](std::size_t i) const { return x_[i]; }
  const std::vector<double>& values() const { return x_; }

 private:
  std::vector<double> x_;
};

// <e_i, A x> with a zero-based pure strategy index.
double payoff(std::size_t pure_index, const SimplexPoint& mix, const PayoffMatrixN& A);

// <x, A x>
double average_payoff(const SimplexPoint& x, const PayoffMatrixN& A);

// x_i (<e_i, A x> - <x, A x>)
std::vector<double> replicator_rhs(const SimplexPoint& x, const PayoffMatrixN& A);

// Same right-hand side without the simplex check, for use inside integrators
// whose intermediate stages may leave the simplex by rounding.
std::vector<double> replicator_rhs_unchecked(const std::vector<double>& x, const PayoffMatrixN& A);

// Fixed-step RK4 trajectory of the n-strategy replicator equation.
std::vector<std::vector<double>> simulate_replicator(const SimplexPoint& x0, const PayoffMatrixN& A,
                                                     double dt, std::size_t steps);

struct TwoPlayerGame {
  Mat2 A_star;  // payoffs of player one, rows indexed by own strategy
  Mat2 B_star;  // payoffs of player two, rows indexed by own strategy
};

// Coefficients of x' = x(x-1)(a00 + a10 x + a01 y), y' = y(y-1)(b00 + b10 x + b01 y).
struct RawSystem {
  double a00 = 0.0, a10 = 0.0, a01 = 0.0;
  double b00 = 0.0, b10 = 0.0, b01 = 0.0;

  Vec2 field(Vec2 p) const;
  double detA() const { return a10 * b01 - a01 * b10; }
};

RawSystem reduce_two_player(const TwoPlayerGame& g);

// Payoff parameters of the officials/government corruption game.
struct CorruptionPayoffs {
  double W = 1.0;       // officials' wage
  double M = 3.0;       // fine an honest government imposes on a corrupt official
  double Mc = 1.0;      // bribe taken by a corrupt official
  double Mg = 0.5;      // share of the bribe passed to a corrupt government member
  double Mg_prime = 2.0;  // payment of an honest official to a corrupt government member
  double e = 12.0;      // cost of capturing a corrupt official
  double VGc = 2.0;     // re-election value of a corrupt government
  double VGnc = 3.0;    // re-election value of a non-corrupt government
  double K = 10.0;      // number of citizens paid for votes
  double P = 0.3;       // unit vote price
};

TwoPlayerGame corruption_game(const CorruptionPayoffs& p);

}  // namespace octo
