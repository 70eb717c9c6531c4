#pragma once

#include <array>
#include <complex>

namespace octo {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
double norm(Vec2 a);

// Row-major 2x2 matrix [[a11, a12], [a21, a22]].
struct Mat2 {
  double a11 = 0.0, a12 = 0.0, a21 = 0.0, a22 = 0.0;

  double det() const { return a11 * a22 - a12 * a21; }
  double trace() const { return a11 + a22; }
  double frobenius() const;
  Vec2 apply(Vec2 v) const { return {a11 * v.x + a12 * v.y, a21 * v.x + a22 * v.y}; }
};

struct EigenPair {
  std::complex<double> l1;
  std::complex<double> l2;
  bool real() const { return l1.imag() == 0.0 && l2.imag() == 0.0; }
};

// Eigenvalues ordered so that real pairs satisfy l1 <= l2.
EigenPair eigenvalues(const Mat2& m);

// Unit eigenvector for a real eigenvalue.
Vec2 eigenvector(const Mat2& m, double lambda);

}  // namespace octo
