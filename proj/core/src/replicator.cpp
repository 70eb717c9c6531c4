#include "octo/replicator.hpp"

#include <cmath>
#include <string>

#include "octo/errors.hpp"

namespace octo {

PayoffMatrixN::PayoffMatrixN(const std::vector<std::vector<double>>& rows) : n_(rows.size()) {
  if (n_ < 2) throw Error(ErrorKind::invalid_input, "payoff matrix needs at least two strategies");
  a_.reserve(n_ * n_);
  for (const auto& r : rows) {
    if (r.size() != n_) throw Error(ErrorKind::invalid_input, "payoff matrix must be square");
    for (double v : r) {
      if (!std::isfinite(v)) throw Error(ErrorKind::invalid_input, "payoff entries must be finite");
      a_.push_back(v);
    }
  }
}

SimplexPoint::SimplexPoint(std::vector<double> x, double tol) : x_(std::move(x)) {
  if (x_.size() < 2) throw Error(ErrorKind::invalid_input, "simplex point needs at least two entries");
  double sum = 0.0;
  for (double v : x_) {
    if (!std::isfinite(v) || v < -tol) throw Error(ErrorKind::invalid_input, "simplex entries must be non-negative");
    sum += v;
  }
  if (std::fabs(sum - 1.0) > tol) {
    throw Error(ErrorKind::invalid_input, "simplex entries must sum to one (sum = " + std::to_string(sum) + ")");
  }
}

namespace {

void check_sizes(std::size_t x, const PayoffMatrixN& A) {
  if (x != A.size()) throw Error(ErrorKind::invalid_input, "mix and payoff matrix sizes differ");
}

double row_dot(std::size_t i, const std::vector<double>& x, const PayoffMatrixN& A) {
  double s = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) s += A(i, j) * x[j];
  return s;
}

}  // namespace

double payoff(std::size_t pure_index, const SimplexPoint& mix, const PayoffMatrixN& A) {
  check_sizes(mix.size(), A);
  if (pure_index >= A.size()) throw Error(ErrorKind::invalid_input, "pure strategy index out of range");
  return row_dot(pure_index, mix.values(), A);
}

double average_payoff(const SimplexPoint& x, const PayoffMatrixN& A) {
  check_sizes(x.size(), A);
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * row_dot(i, x.values(), A);
  return s;
}

std::vector<double> replicator_rhs_unchecked(const std::vector<double>& x, const PayoffMatrixN& A) {
  check_sizes(x.size(), A);
  std::vector<double> fit(x.size());
  double avg = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    fit[i] = row_dot(i, x, A);
    avg += x[i] * fit[i];
  }
  std::vector<double> dx(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) dx[i] = x[i] * (fit[i] - avg);
  return dx;
}

std::vector<double> replicator_rhs(const SimplexPoint& x, const PayoffMatrixN& A) {
  return replicator_rhs_unchecked(x.values(), A);
}

std::vector<std::vector<double>> simulate_replicator(const SimplexPoint& x0, const PayoffMatrixN& A,
                                                     double dt, std::size_t steps) {
  check_sizes(x0.size(), A);
  std::vector<std::vector<double>> out;
  out.reserve(steps + 1);
  std::vector<double> x = x0.values();
  out.push_back(x);
  const std::size_t n = x.size();
  std::vector<double> tmp(n);
  auto axpy = [&](const std::vector<double>& k, double h) {
    for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + h * k[i];
    return tmp;
  };
  for (std::size_t s = 0; s < steps; ++s) {
    const auto k1 = replicator_rhs_unchecked(x, A);
    const auto k2 = replicator_rhs_unchecked(axpy(k1, 0.5 * dt), A);
    const auto k3 = replicator_rhs_unchecked(axpy(k2, 0.5 * dt), A);
    const auto k4 = replicator_rhs_unchecked(axpy(k3, dt), A);
    for (std::size_t i = 0; i < n; ++i) x[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    out.push_back(x);
  }
  return out;
}

Vec2 RawSystem::field(Vec2 p) const {
  return {p.x * (p.x - 1.0) * (a00 + a10 * p.x + a01 * p.y),
          p.y * (p.y - 1.0) * (b00 + b10 * p.x + b01 * p.y)};
}

RawSystem reduce_two_player(const TwoPlayerGame& g) {
  const Mat2& A = g.A_star;
  const Mat2& B = g.B_star;
  RawSystem s;
  s.a00 = A.a22 - A.a12;
  s.a01 = A.a12 + A.a21 - A.a11 - A.a22;
  s.a10 = 0.0;
  s.b00 = B.a22 - B.a12;
  s.b10 = B.a12 + B.a21 - B.a11 - B.a22;
  s.b01 = 0.0;
  return s;
}

TwoPlayerGame corruption_game(const CorruptionPayoffs& p) {
  TwoPlayerGame g;
  // Officials: rows (corrupt, honest), columns (corrupt government, honest government).
  g.A_star = {p.W + p.Mc - p.Mg, p.W + p.Mc - p.M, p.W - p.Mg_prime, p.W};
  // Government: rows (corrupt, honest), columns (corrupt official, honest official).
  const double kp = p.K * p.P;
  g.B_star = {p.Mg - p.W + p.VGc - kp, p.Mg_prime - p.W + p.VGc - kp, p.M - p.W - p.e + p.VGnc, -p.W + p.VGnc};
  return g;
}

}  // namespace octo
