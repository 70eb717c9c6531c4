#include "octo/genericity.hpp"

#include <algorithm>
#include <cmath>

#include "octo/errors.hpp"

namespace octo {

namespace {

GenericityCheck check(double a10, double b01, double detA, const Tolerances& tol) {
  GenericityCheck g;
  g.product = a10 * b01 * detA;
  if (std::fabs(a10) <= tol.generic) g.witnesses.push_back("a10");
  if (std::fabs(b01) <= tol.generic) g.witnesses.push_back("b01");
  if (std::fabs(detA) <= tol.generic) g.witnesses.push_back("detA");
  g.pass = g.witnesses.empty() && std::fabs(g.product) > tol.generic;
  if (!g.pass && g.witnesses.empty()) {
    // The product is tiny without a single tiny factor; name the smallest.
    const double m = std::min({std::fabs(a10), std::fabs(b01), std::fabs(detA)});
    g.witnesses.push_back(m == std::fabs(a10) ? "a10" : (m == std::fabs(b01) ? "b01" : "detA"));
  }
  return g;
}

}  // namespace

GenericityCheck necessary_condition(const RawSystem& s, const Tolerances& tol) {
  return check(s.a10, s.b01, s.detA(), tol);
}

GenericityCheck necessary_condition(const CanonicalSystem& c, const Tolerances& tol) {
  return check(c.a10, c.b01, c.detA(), tol);
}

Discriminants discriminants(const CanonicalSystem& c) {
  Discriminants d;
  d.detA = c.detA();
  const double b = c.b10 - c.a01;
  d.Delta = b * b + 4.0 * c.a10 * c.b01;
  d.sign_b10_minus_a01 = b > 0.0 ? 1 : (b < 0.0 ? -1 : 0);
  const double ga = (c.alpha - 1.0) * c.alpha;
  const double gb = (c.beta - 1.0) * c.beta;
  d.T = c.a10 * ga + c.b01 * gb;
  d.K = c.a01 * c.b01 * gb - c.a10 * c.b10 * ga;
  if (c.a01 != 0.0) d.delta = 2.0 * std::fabs(c.b01) / c.a01 + b;
  return d;
}

const char* to_string(CycleStability s) {
  switch (s) {
    case CycleStability::stable: return "stable";
    case CycleStability::unstable: return "unstable";
    case CycleStability::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

PolycycleReport polycycle_report(const CanonicalSystem& c, const Tolerances& tol) {
  PolycycleReport rep;
  const auto ps = p_singularities(c, tol);
  for (const auto& p : ps) {
    if (p.type != LocalType::saddle) return rep;
  }
  const auto qs = q_singularities(c, tol);
  for (const auto& q : qs) {
    if (!q.defined) return rep;
  }
  // A q point on a side of the square interrupts the polycycle.
  const Vec2 q1 = qs[0].location, q2 = qs[1].location, q3 = qs[2].location, q4 = qs[3].location;
  const double x0 = -c.alpha, x1 = 1.0 - c.alpha, y0 = -c.beta, y1 = 1.0 - c.beta;
  auto inside = [](double v, double lo, double hi) { return v > lo && v < hi; };
  if (inside(q1.x, x0, x1) || inside(q3.x, x0, x1) || inside(q2.y, y0, y1) || inside(q4.y, y0, y1)) {
    return rep;
  }
  rep.exists = true;
  double log_r = 0.0;
  for (int i = 0; i < 4; ++i) {
    const double l1 = ps[i].eigen.l1.real();
    const double l2 = ps[i].eigen.l2.real();
    rep.ratios[i] = std::fabs(l1) / l2;
    log_r += std::log(rep.ratios[i]);
  }
  rep.r_gamma = std::exp(log_r);
  if (std::fabs(log_r) <= tol.polycycle_log) rep.stability = CycleStability::inconclusive;
  else rep.stability = log_r > 0.0 ? CycleStability::stable : CycleStability::unstable;
  return rep;
}

bool limit_cycle_exists(const CanonicalSystem& c, const Tolerances& tol) {
  const OctothorpePosition pos = position_of_origin(c, tol);
  if (pos.index != 1 || pos.boundary) {
    throw Error(ErrorKind::hypotheses_not_met, "origin is not inside the central square");
  }
  const SingularityReport o = classify_origin(c, tol);
  if (o.type == LocalType::saddle || o.type == LocalType::non_hyperbolic) {
    throw Error(ErrorKind::hypotheses_not_met, "origin is not a node or focus");
  }
  const PolycycleReport poly = polycycle_report(c, tol);
  if (!poly.exists) throw Error(ErrorKind::hypotheses_not_met, "no polycycle surrounds the origin");
  if (poly.stability == CycleStability::inconclusive) {
    throw Error(ErrorKind::hypotheses_not_met, "polycycle ratio equals one");
  }
  // Weak foci and centers cannot be surrounded by a limit cycle in this class.
  if (o.type == LocalType::center || o.type == LocalType::weak_stable_focus ||
      o.type == LocalType::weak_unstable_focus) {
    return false;
  }
  const bool origin_stable = is_attractor(o.type);
  const bool poly_stable = poly.stability == CycleStability::stable;
  // A single cycle between them repels when both attract and attracts when
  // both repel.
  return origin_stable == poly_stable;
}

}  // namespace octo
