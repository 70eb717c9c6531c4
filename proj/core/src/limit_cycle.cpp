#include "octo/limit_cycle.hpp"

#include <algorithm>
#include <boost/numeric/odeint.hpp>
#include <boost/numeric/ublas/matrix.hpp>
#include <boost/numeric/ublas/vector.hpp>
#include <cmath>
#include <boost/math/constants/constants.hpp>

#include "octo/errors.hpp"

namespace octo {

namespace odeint = boost::numeric::odeint;
namespace ublas = boost::numeric::ublas;

namespace {

using State = ublas::vector<double>;
using Matrix = ublas::matrix<double>;

constexpr double kTwoPi = 2.0 * boost::math::constants::pi<double>();

double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }


double logistic(double u) {
  if (u >= 0.0) return 1.0 / (1.0 + std::exp(-u));
  const double e = std::exp(u);
  return e / (1.0 + e);
}

// Derivative of the logistic function, exp(-|u|) / (1 + exp(-|u|))^2.
double logistic_slope(double u) {
  const double e = std::exp(-std::fabs(u));
  return e / ((1.0 + e) * (1.0 + e));
}

// Log-odds coordinate of a point at offset lo from the lower line and hi from
// the upper line of one strip.
double log_odds(double lo, double hi) { return std::log(lo) - std::log(hi); }

}  // namespace

// Inside the central square the map runs in log-odds coordinates
// u = log((x+alpha)/(1-alpha-x)), v = log((y+beta)/(1-beta-y)), where the
// field becomes u' = -f1, v' = -f2. Orbits hugging the sides of the square
// keep full precision there, and an implicit Rosenbrock stepper copes with
// strongly unbalanced coefficients.
ReturnSample return_map(const CanonicalSystem& c, double s, const Tolerances& tol) {
  ReturnSample out;
  out.s = s;
  const Vec2 p3{1.0 - c.alpha, 1.0 - c.beta};
  const double len = norm(p3);
  const Vec2 dir = (1.0 / len) * p3;
  auto plane = [&](const State& z) { return Vec2{logistic(z[0]) - c.alpha, logistic(z[1]) - c.beta}; };
  auto rhs = [&](const State& z, State& dz, double) {
    const Vec2 p = plane(z);
    dz[0] = -c.f1(p);
    dz[1] = -c.f2(p);
  };
  auto jac = [&](const State& z, Matrix& J, double, State& dfdt) {
    const double su = logistic_slope(z[0]);
    const double sv = logistic_slope(z[1]);
    J(0, 0) = -c.a10 * su;
    J(0, 1) = -c.a01 * sv;
    J(1, 0) = -c.b10 * su;
    J(1, 1) = -c.b01 * sv;
    dfdt[0] = 0.0;
    dfdt[1] = 0.0;
  };
  auto stepper = odeint::make_dense_output<odeint::rosenbrock4<double>>(1e-12, 1e-11);
  State z(2);
  z[0] = log_odds(c.alpha + s * (1.0 - c.alpha), (1.0 - s) * (1.0 - c.alpha));
  z[1] = log_odds(c.beta + s * (1.0 - c.beta), (1.0 - s) * (1.0 - c.beta));
  stepper.initialize(z, 0.0, 1e-4);
  auto system = std::make_pair(rhs, jac);
  double theta = 0.0;  // winding angle swept from the section
  Vec2 prev = plane(z);
  const double max_time = 1e5;
  const double shrink = 1e-9;
  State mid(2);
  for (long k = 0; k < 400000; ++k) {
    const auto span = stepper.do_step(system);
    const Vec2 p = plane(stepper.current_state());
    if (norm(p) < shrink) {
      out.settled = true;
      out.displacement = -s;
      return out;
    }
    const double dth = std::atan2(cross(prev, p), prev.x * p.x + prev.y * p.y);
    if (std::fabs(theta + dth) >= kTwoPi) {
      // Bisect in time for the exact return to the section.
      double lo = span.first, hi = span.second;
      for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
        const double tm = 0.5 * (lo + hi);
        stepper.calc_state(tm, mid);
        const Vec2 q = plane(mid);
        const double a = theta + std::atan2(cross(prev, q), prev.x * q.x + prev.y * q.y);
        if (std::fabs(a) < kTwoPi) lo = tm;
        else hi = tm;
      }
      stepper.calc_state(hi, mid);
      const Vec2 q = plane(mid);
      out.returned = true;
      out.image = (q.x * dir.x + q.y * dir.y) / len;
      out.displacement = out.image - s;
      return out;
    }
    theta += dth;
    prev = p;
    if (span.second > max_time) break;
  }
  (void)tol;
  return out;
}

CycleResult detect_limit_cycle(const CanonicalSystem& c, const Tolerances& tol, int scan_points) {
  const OctothorpePosition pos = position_of_origin(c, tol);
  if (pos.index != 1 || pos.boundary) {
    throw Error(ErrorKind::hypotheses_not_met, "return map needs the origin inside the central square");
  }
  CycleResult res;
  // Uniform points plus a geometric cluster toward the square boundary, where
  // cycles born from the polycycle live.
  std::vector<double> ss;
  for (int k = 1; k <= scan_points; ++k) ss.push_back(static_cast<double>(k) / (scan_points + 1));
  for (int j = 2; j <= 7; ++j) ss.push_back(1.0 - std::pow(10.0, -j));
  std::sort(ss.begin(), ss.end());
  double max_abs = 0.0;
  std::vector<ReturnSample> valid;
  for (double s : ss) {
    res.scan.push_back(return_map(c, s, tol));
    const ReturnSample& r = res.scan.back();
    if (!r.returned && !r.settled) continue;
    valid.push_back(r);
    max_abs = std::max(max_abs, std::fabs(r.displacement));
  }
  if (valid.size() == ss.size() && max_abs < 1e-8) {
    res.center_like = true;
    return res;
  }
  // Bisection on each sign change of the displacement.
  for (std::size_t i = 0; i + 1 < valid.size(); ++i) {
    const ReturnSample& a = valid[i];
    const ReturnSample& b = valid[i + 1];
    if ((a.displacement < 0.0) == (b.displacement < 0.0)) continue;
    double lo = a.s, hi = b.s;
    const bool lo_neg = a.displacement < 0.0;
    while (hi - lo > tol.bisection) {
      const double mid = 0.5 * (lo + hi);
      const ReturnSample m = return_map(c, mid, tol);
      if (!m.returned && !m.settled) break;
      if ((m.displacement < 0.0) == lo_neg) lo = mid;
      else hi = mid;
    }
    ++res.fixed_points;
    res.found = true;
    res.s = 0.5 * (lo + hi);
    const double h = std::min({1e-6, 0.5 * res.s, 0.5 * (1.0 - res.s)});
    const ReturnSample up = return_map(c, res.s + h, tol);
    const ReturnSample dn = return_map(c, res.s - h, tol);
    res.multiplier = 1.0 + (up.displacement - dn.displacement) / (2.0 * h);
    res.stability = res.multiplier > 1.0 ? CycleStability::unstable : CycleStability::stable;
  }
  return res;
}

}  // namespace octo
