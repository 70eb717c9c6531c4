#include "octo/compactification.hpp"

#include <algorithm>
#include <cmath>

#include "octo/errors.hpp"

namespace octo {

namespace {

// Forward-mode derivative pair used for exact chart Jacobians.
struct Dual {
  double v = 0.0;
  double d = 0.0;
};
Dual operator+(Dual a, Dual b) { return {a.v + b.v, a.d + b.d}; }
Dual operator-(Dual a, Dual b) { return {a.v - b.v, a.d - b.d}; }
Dual operator*(Dual a, Dual b) { return {a.v * b.v, a.v * b.d + a.d * b.v}; }
Dual operator*(double s, Dual a) { return {s * a.v, s * a.d}; }
Dual operator-(Dual a) { return {-a.v, -a.d}; }
Dual constant(double x) { return {x, 0.0}; }

template <class T>
struct Pair {
  T u, v;
};

// Homogenized field components at (y1, y2, y3):
// Ph = (y1 + a y3)(y1 + (a-1) y3)(a10 y1 + a01 y2), Qh likewise.
template <class T>
T homog_P(const CanonicalSystem& c, T y1, T y2, T y3) {
  return (y1 + c.alpha * y3) * (y1 + (c.alpha - 1.0) * y3) * (c.a10 * y1 + c.a01 * y2);
}

template <class T>
T homog_Q(const CanonicalSystem& c, T y1, T y2, T y3) {
  return (y2 + c.beta * y3) * (y2 + (c.beta - 1.0) * y3) * (c.b10 * y1 + c.b01 * y2);
}

template <class T>
Pair<T> eval(const CanonicalSystem& c, Chart chart, T u, T v, T one) {
  switch (chart) {
    case Chart::plane:
      return {homog_P(c, u, v, one), homog_Q(c, u, v, one)};
    case Chart::U1:
    case Chart::V1: {
      const T P = homog_P(c, one, u, v);
      const T Q = homog_Q(c, one, u, v);
      return {Q - u * P, -(v * P)};
    }
    case Chart::U2:
    case Chart::V2: {
      const T P = homog_P(c, u, one, v);
      const T Q = homog_Q(c, u, one, v);
      return {P - u * Q, -(v * Q)};
    }
  }
  return {u, v};
}

}  // namespace

Vec2 chart_rhs(const CanonicalSystem& c, Chart chart, double u, double v) {
  const Pair<double> r = eval<double>(c, chart, u, v, 1.0);
  return {r.u, r.v};
}

Mat2 chart_jacobian(const CanonicalSystem& c, Chart chart, double u, double v) {
  const Pair<Dual> du = eval<Dual>(c, chart, Dual{u, 1.0}, constant(v), constant(1.0));
  const Pair<Dual> dv = eval<Dual>(c, chart, constant(u), Dual{v, 1.0}, constant(1.0));
  return {du.u.d, dv.u.d, du.v.d, dv.v.d};
}

Vec2 chart_to_plane(Chart chart, double u, double v) {
  switch (chart) {
    case Chart::plane: return {u, v};
    case Chart::U1: case Chart::V1: return {1.0 / v, u / v};
    case Chart::U2: case Chart::V2: return {u / v, 1.0 / v};
  }
  return {u, v};
}

Vec2 plane_to_chart(Chart chart, Vec2 p) {
  switch (chart) {
    case Chart::plane: return p;
    case Chart::U1: case Chart::V1: return {p.y / p.x, 1.0 / p.x};
    case Chart::U2: case Chart::V2: return {p.x / p.y, 1.0 / p.y};
  }
  return p;
}

double g_infinity(const CanonicalSystem& c, double u) {
  return (c.b01 * u + (c.b10 - c.a01)) * u - c.a10;
}

RootDiagonal root_diagonal(const CanonicalSystem& c, double u0) {
  return {2.0 * c.a10 + (c.a01 - c.b10) * u0, -(c.a01 * u0 + c.a10)};
}

InfinitySet infinite_singularities(const CanonicalSystem& c, const Tolerances& tol) {
  InfinitySet s;
  const double b = c.b10 - c.a01;
  s.Delta = b * b + 4.0 * c.a10 * c.b01;
  s.pole_U1 = SingularityReport{};
  s.pole_U1.id = "pole_x+";
  s.pole_U1.chart = Chart::U1;
  s.pole_U1.direction = {1.0, 0.0};
  s.pole_U1.jacobian = chart_jacobian(c, Chart::U1, 0.0, 0.0);
  s.pole_U1.eigen = eigenvalues(s.pole_U1.jacobian);
  s.pole_U1.type = classify_linear(s.pole_U1.jacobian, tol);
  s.pole_U2 = SingularityReport{};
  s.pole_U2.id = "pole_y+";
  s.pole_U2.chart = Chart::U2;
  s.pole_U2.direction = {0.0, 1.0};
  s.pole_U2.jacobian = chart_jacobian(c, Chart::U2, 0.0, 0.0);
  s.pole_U2.eigen = eigenvalues(s.pole_U2.jacobian);
  s.pole_U2.type = classify_linear(s.pole_U2.jacobian, tol);

  if (c.b01 == 0.0) return s;
  s.double_root = std::fabs(s.Delta) <= tol.double_root * std::max(1.0, b * b);
  if (s.Delta < 0.0 && !s.double_root) return s;
  s.real_roots = true;
  const double r = s.Delta > 0.0 ? std::sqrt(s.Delta) : 0.0;
  // Stable quadratic formula: take the root without cancellation first.
  const double num = -b + (b <= 0.0 ? r : -r);  // = (a01 - b10) +- sqrt(Delta)
  double x1 = num / (2.0 * c.b01);
  double x2 = num != 0.0 ? -2.0 * c.a10 / num : x1;
  if (s.double_root) x1 = x2 = -b / (2.0 * c.b01);
  // u0_plus carries +sqrt(Delta) in the numerator.
  const double plus = (-b + r) / (2.0 * c.b01);
  if (std::fabs(x1 - plus) <= std::fabs(x2 - plus)) {
    s.u0_plus = x1;
    s.u0_minus = x2;
  } else {
    s.u0_plus = x2;
    s.u0_minus = x1;
  }
  return s;
}

std::vector<SingularityReport> classify_infinite(const CanonicalSystem& c, const Tolerances& tol) {
  const InfinitySet s = infinite_singularities(c, tol);
  std::vector<SingularityReport> out;
  auto add = [&](std::string id, Chart chart, double u) {
    SingularityReport r;
    r.id = std::move(id);
    r.chart = chart;
    r.location = {u, 0.0};
    const bool first = chart == Chart::U1 || chart == Chart::V1;
    const double sgn = (chart == Chart::U1 || chart == Chart::U2) ? 1.0 : -1.0;
    const Vec2 d = first ? Vec2{1.0, u} : Vec2{u, 1.0};
    r.direction = (sgn / norm(d)) * d;
    r.jacobian = chart_jacobian(c, chart, u, 0.0);
    r.eigen = eigenvalues(r.jacobian);
    r.type = classify_linear(r.jacobian, tol);
    if (r.type == LocalType::non_hyperbolic) {
      if (chart == Chart::U1 || chart == Chart::V1) {
        if (u == 0.0) r.note = "a10 = 0";
        else r.note = s.double_root ? "double root of g" : "u0 = 0";
      } else {
        r.note = "b01 = 0";
      }
    }
    out.push_back(std::move(r));
  };
  add("pole_x+", Chart::U1, 0.0);
  add("pole_y+", Chart::U2, 0.0);
  add("pole_x-", Chart::V1, 0.0);
  add("pole_y-", Chart::V2, 0.0);
  if (s.real_roots) {
    if (s.double_root) {
      add("u0@U1", Chart::U1, s.u0_plus);
      add("u0@V1", Chart::V1, s.u0_plus);
    } else {
      add("u0+@U1", Chart::U1, s.u0_plus);
      add("u0-@U1", Chart::U1, s.u0_minus);
      add("u0+@V1", Chart::V1, s.u0_plus);
      add("u0-@V1", Chart::V1, s.u0_minus);
    }
  }
  std::sort(out.begin(), out.end(), [](const SingularityReport& a, const SingularityReport& b) {
    return std::atan2(a.direction.y, a.direction.x) < std::atan2(b.direction.y, b.direction.x);
  });
  return out;
}

}  // namespace octo
