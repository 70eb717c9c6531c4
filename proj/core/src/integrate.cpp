#include "octo/integrate.hpp"

#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <sstream>

#include "octo/errors.hpp"

namespace octo {

namespace odeint = boost::numeric::odeint;

Vec3 sphere_of_plane(Vec2 p) {
  const double n = std::sqrt(p.x * p.x + p.y * p.y + 1.0);
  return {p.x / n, p.y / n, 1.0 / n};
}

Vec3 sphere_of_chart(Chart chart, double u, double v) {
  Vec3 y{};
  switch (chart) {
    case Chart::plane: return sphere_of_plane({u, v});
    case Chart::U1: y = {1.0, u, v}; break;
    case Chart::V1: y = {-1.0, -u, -v}; break;
    case Chart::U2: y = {u, 1.0, v}; break;
    case Chart::V2: y = {-u, -1.0, -v}; break;
  }
  const double n = std::sqrt(y[0] * y[0] + y[1] * y[1] + y[2] * y[2]);
  return {y[0] / n, y[1] / n, y[2] / n};
}

Vec2 plane_of_sphere(const Vec3& y) { return {y[0] / y[2], y[1] / y[2]}; }

Vec2 disk_of_sphere(const Vec3& y) { return {y[0], y[1]}; }

double sphere_distance(const Vec3& a, const Vec3& b) {
  return std::sqrt((a[0] - b[0]) * (a[0] - b[0]) + (a[1] - b[1]) * (a[1] - b[1]) + (a[2] - b[2]) * (a[2] - b[2]));
}

Vec3 sphere_rhs(const CanonicalSystem& c, const Vec3& y) {
  const double y1 = y[0], y2 = y[1], y3 = y[2];
  const double P = (y1 + c.alpha * y3) * (y1 + (c.alpha - 1.0) * y3) * (c.a10 * y1 + c.a01 * y2);
  const double Q = (y2 + c.beta * y3) * (y2 + (c.beta - 1.0) * y3) * (c.b10 * y1 + c.b01 * y2);
  const double S = y1 * P + y2 * Q;
  return {P - y1 * S, Q - y2 * S, -y3 * S};
}

const char* to_string(Termination t) {
  switch (t) {
    case Termination::stopped: return "stopped";
    case Termination::max_time: return "max_time";
    case Termination::max_steps: return "max_steps";
  }
  return "max_time";
}

namespace {

template <std::size_t N>
double magnitude(const std::array<double, N>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// Shared adaptive loop: Dormand-Prince 5(4) with error control, plus a cap on
// the displacement per step.
template <std::size_t N, class Rhs, class Accept, class Where>
Termination run(const Rhs& rhs, std::array<double, N>& x, double direction, const Controls& ctl, Accept&& accept,
                Where&& where) {
  using State = std::array<double, N>;
  auto stepper = odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(ctl.abs_tol, ctl.rel_tol);
  auto sys = [&](const State& s, State& ds, double) {
    ds = rhs(s);
    if (direction < 0.0) {
      for (auto& v : ds) v = -v;
    }
  };
  double t = 0.0;
  double dt = 1e-3;
  for (long step = 0; step < ctl.max_steps; ++step) {
    if (t >= ctl.max_time) return Termination::max_time;
    State v;
    sys(x, v, t);
    const double speed = magnitude(v);
    if (speed > 0.0) dt = std::min(dt, ctl.max_step / speed);
    dt = std::min(dt, ctl.max_time - t);
    int fails = 0;
    while (stepper.try_step(sys, x, t, dt) == odeint::fail) {
      if (dt < 1e-14 * std::max(1.0, t) || ++fails > 200) {
        std::ostringstream os;
        os << "step size underflow at " << where(x);
        throw Error(ErrorKind::step_underflow, os.str());
      }
    }
    if (accept(direction * t, x)) return Termination::stopped;
  }
  return Termination::max_steps;
}

}  // namespace

PlaneTrajectory integrate_plane(const PlaneField& f, Vec2 start, double direction, const Controls& ctl,
                                const PlaneStop& stop) {
  PlaneTrajectory tr;
  tr.t.push_back(0.0);
  tr.points.push_back(start);
  std::array<double, 2> x{start.x, start.y};
  auto rhs = [&](const std::array<double, 2>& s) {
    const Vec2 v = f({s[0], s[1]});
    return std::array<double, 2>{v.x, v.y};
  };
  auto accept = [&](double t, const std::array<double, 2>& s) {
    const Vec2 p{s[0], s[1]};
    tr.t.push_back(t);
    tr.points.push_back(p);
    return stop && stop(t, p);
  };
  auto where = [](const std::array<double, 2>& s) {
    std::ostringstream os;
    os << "(" << s[0] << ", " << s[1] << ")";
    return os.str();
  };
  tr.reason = run<2>(rhs, x, direction, ctl, accept, where);
  return tr;
}

SphereTrajectory integrate_sphere(const CanonicalSystem& c, const Vec3& start, double direction,
                                  const Controls& ctl, const SphereStop& stop) {
  SphereTrajectory tr;
  tr.t.push_back(0.0);
  tr.points.push_back(start);
  Vec3 x = start;
  auto rhs = [&](const Vec3& s) { return sphere_rhs(c, s); };
  auto accept = [&](double t, Vec3& s) {
    const double n = magnitude(s);
    if (std::fabs(n - 1.0) > 1e-12) {
      for (auto& v : s) v /= n;
    }
    tr.t.push_back(t);
    tr.points.push_back(s);
    return stop && stop(t, s);
  };
  auto where = [](const Vec3& s) {
    std::ostringstream os;
    os << "sphere (" << s[0] << ", " << s[1] << ", " << s[2] << ")";
    return os.str();
  };
  tr.reason = run<3>(rhs, x, direction, ctl, accept, where);
  return tr;
}

PlaneTrajectory integrate(const CanonicalSystem& c, Vec2 start, double direction, const Controls& ctl,
                          const PlaneStop& stop) {
  return integrate_plane([&c](Vec2 p) { return c.field(p); }, start, direction, ctl, stop);
}

}  // namespace octo
