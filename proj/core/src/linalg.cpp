#include "octo/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace octo {

double norm(Vec2 a) { return std::hypot(a.x, a.y); }

double Mat2::frobenius() const {
  return std::sqrt(a11 * a11 + a12 * a12 + a21 * a21 + a22 * a22);
}

EigenPair eigenvalues(const Mat2& m) {
  const double tr = m.trace();
  const double det = m.det();
  const double half = 0.5 * tr;
  const double disc = half * half - det;
  if (disc >= 0.0) {
    const double r = std::sqrt(disc);
    // Avoid cancellation: compute the larger-magnitude root first.
    const double big = half >= 0.0 ? half + r : half - r;
    const double small = big != 0.0 ? det / big : 0.0;
    const double lo = std::min(big, small);
    const double hi = std::max(big, small);
    return {{lo, 0.0}, {hi, 0.0}};
  }
  const double im = std::sqrt(-disc);
  return {{half, -im}, {half, im}};
}

Vec2 eigenvector(const Mat2& m, double lambda) {
  // Rows of (M - lambda I) are orthogonal to the eigenvector; use the larger one.
  const Vec2 r1{m.a11 - lambda, m.a12};
  const Vec2 r2{m.a21, m.a22 - lambda};
  const Vec2 r = norm(r1) >= norm(r2) ? r1 : r2;
  Vec2 v{-r.y, r.x};
  double n = norm(v);
  if (n == 0.0) return {1.0, 0.0};
  return (1.0 / n) * v;
}

}  // namespace octo
