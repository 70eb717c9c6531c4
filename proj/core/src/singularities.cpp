#include "octo/singularities.hpp"

#include <cmath>
#include <sstream>

#include "octo/errors.hpp"

namespace octo {

const char* to_string(LocalType t) {
  switch (t) {
    case LocalType::saddle: return "saddle";
    case LocalType::stable_node: return "stable_node";
    case LocalType::unstable_node: return "unstable_node";
    case LocalType::stable_focus: return "stable_focus";
    case LocalType::unstable_focus: return "unstable_focus";
    case LocalType::weak_stable_focus: return "weak_stable_focus";
    case LocalType::weak_unstable_focus: return "weak_unstable_focus";
    case LocalType::center: return "center";
    case LocalType::non_hyperbolic: return "non_hyperbolic";
    case LocalType::undefined: return "undefined";
  }
  return "undefined";
}

bool is_attractor(LocalType t) {
  return t == LocalType::stable_node || t == LocalType::stable_focus || t == LocalType::weak_stable_focus;
}

bool is_repeller(LocalType t) {
  return t == LocalType::unstable_node || t == LocalType::unstable_focus || t == LocalType::weak_unstable_focus;
}

LocalType reversed(LocalType t) {
  switch (t) {
    case LocalType::stable_node: return LocalType::unstable_node;
    case LocalType::unstable_node: return LocalType::stable_node;
    case LocalType::stable_focus: return LocalType::unstable_focus;
    case LocalType::unstable_focus: return LocalType::stable_focus;
    case LocalType::weak_stable_focus: return LocalType::weak_unstable_focus;
    case LocalType::weak_unstable_focus: return LocalType::weak_stable_focus;
    default: return t;
  }
}

const char* to_string(Chart c) {
  switch (c) {
    case Chart::plane: return "plane";
    case Chart::U1: return "U1";
    case Chart::V1: return "V1";
    case Chart::U2: return "U2";
    case Chart::V2: return "V2";
  }
  return "plane";
}

const char* to_string(Cmp c) {
  switch (c) {
    case Cmp::less: return "<";
    case Cmp::equal: return "=";
    case Cmp::greater: return ">";
  }
  return "?";
}

LocalType classify_linear(const Mat2& J, const Tolerances& tol) {
  const EigenPair e = eigenvalues(J);
  const double thr = tol.hyperbolic * J.frobenius();
  if (J.frobenius() == 0.0 || std::fabs(e.l1.real()) <= thr || std::fabs(e.l2.real()) <= thr) {
    return LocalType::non_hyperbolic;
  }
  if (e.real()) {
    const double lo = e.l1.real();
    const double hi = e.l2.real();
    if (lo < 0.0 && hi > 0.0) return LocalType::saddle;
    return hi < 0.0 ? LocalType::stable_node : LocalType::unstable_node;
  }
  return e.l1.real() < 0.0 ? LocalType::stable_focus : LocalType::unstable_focus;
}

Vec2 p_point(const CanonicalSystem& c, int i) {
  switch (i) {
    case 0: return {-c.alpha, -c.beta};
    case 1: return {1.0 - c.alpha, -c.beta};
    case 2: return {1.0 - c.alpha, 1.0 - c.beta};
    default: return {-c.alpha, 1.0 - c.beta};
  }
}

namespace {

SingularityReport make_report(std::string id, Vec2 at, const Mat2& J, const Tolerances& tol) {
  SingularityReport r;
  r.id = std::move(id);
  r.location = at;
  r.jacobian = J;
  r.eigen = eigenvalues(J);
  r.type = classify_linear(J, tol);
  return r;
}

}  // namespace

std::array<SingularityReport, 4> p_singularities(const CanonicalSystem& c, const Tolerances& tol) {
  const Vec2 p1 = p_point(c, 0), p2 = p_point(c, 1), p3 = p_point(c, 2), p4 = p_point(c, 3);
  // Diagonal linearizations at the line intersections.
  const Mat2 J1{-c.f1(p1), 0.0, 0.0, -c.f2(p1)};
  const Mat2 J2{c.f1(p2), 0.0, 0.0, -c.f2(p2)};
  const Mat2 J3{c.f1(p3), 0.0, 0.0, c.f2(p3)};
  const Mat2 J4{-c.f1(p4), 0.0, 0.0, c.f2(p4)};
  return {make_report("p1", p1, J1, tol), make_report("p2", p2, J2, tol), make_report("p3", p3, J3, tol),
          make_report("p4", p4, J4, tol)};
}

std::array<SingularityReport, 4> q_singularities(const CanonicalSystem& c, const Tolerances& tol) {
  std::array<SingularityReport, 4> out;
  const bool hx = c.a10 != 0.0;
  const bool hy = c.b01 != 0.0;
  const Vec2 loc[4] = {
      {hx ? c.a01 * c.beta / c.a10 : 0.0, -c.beta},
      {1.0 - c.alpha, hy ? c.b10 * (c.alpha - 1.0) / c.b01 : 0.0},
      {hx ? c.a01 * (c.beta - 1.0) / c.a10 : 0.0, 1.0 - c.beta},
      {-c.alpha, hy ? c.b10 * c.alpha / c.b01 : 0.0},
  };
  const bool def[4] = {hx, hy, hx, hy};
  for (int i = 0; i < 4; ++i) {
    const std::string id = "q" + std::to_string(i + 1);
    if (!def[i]) {
      out[i].id = id;
      out[i].defined = false;
      out[i].type = LocalType::undefined;
      out[i].note = i % 2 == 0 ? "a10 = 0" : "b01 = 0";
      continue;
    }
    out[i] = make_report(id, loc[i], c.jacobian(loc[i]), tol);
  }
  return out;
}

SingularityReport classify_origin(const CanonicalSystem& c, const Tolerances& tol) {
  SingularityReport r;
  r.id = "origin";
  r.location = {0.0, 0.0};
  const double ga = (c.alpha - 1.0) * c.alpha;
  const double gb = (c.beta - 1.0) * c.beta;
  r.jacobian = {c.a10 * ga, c.a01 * ga, c.b10 * gb, c.b01 * gb};
  r.eigen = eigenvalues(r.jacobian);
  const double D = ga * gb * c.detA();
  const double T0 = c.a10 * ga + c.b01 * gb;
  const double scale = r.jacobian.frobenius();
  if (scale == 0.0 || std::fabs(D) <= tol.hyperbolic * scale * scale) {
    r.type = LocalType::non_hyperbolic;
    return r;
  }
  if (D < 0.0) {
    r.type = LocalType::saddle;
    return r;
  }
  if (std::fabs(T0) > tol.trace_zero) {
    const bool node = T0 * T0 - 4.0 * D >= 0.0;
    if (T0 < 0.0) r.type = node ? LocalType::stable_node : LocalType::stable_focus;
    else r.type = node ? LocalType::unstable_node : LocalType::unstable_focus;
    if (classify_linear(r.jacobian, tol) == LocalType::non_hyperbolic) r.type = LocalType::non_hyperbolic;
    return r;
  }
  // Purely imaginary eigenvalues: the first focal value decides.
  if (c.b10 == 0.0) {
    throw Error(ErrorKind::invalid_input, "monodromic origin with b10 = 0 contradicts det > 0 and zero trace");
  }
  const double w = c.b01 * (c.a01 + c.b10);
  std::ostringstream os;
  os << "V1 = " << w / (8.0 * c.b10);
  r.note = os.str();
  if (std::fabs(w) <= tol.equality * std::max(1.0, std::fabs(c.b01))) {
    r.type = LocalType::center;
  } else if (c.b10 * w > 0.0) {
    r.type = LocalType::weak_unstable_focus;
  } else {
    r.type = LocalType::weak_stable_focus;
    r.note += "; stable weak equilibrium with nonzero first focal value, reported as a weak focus";
  }
  return r;
}

bool RelativePositions::any_equal() const {
  for (Cmp s : sign) {
    if (s == Cmp::equal) return true;
  }
  return false;
}

RelativePositions relative_positions(const CanonicalSystem& c, const Tolerances& tol) {
  RelativePositions rp;
  // q < p exactly when lead * f(p) > 0, with lead = a10 (q1, q3) or b01 (q2, q4).
  auto cmp = [&](double lead, double fp) {
    if (std::fabs(fp) <= tol.equality) return Cmp::equal;
    return lead * fp > 0.0 ? Cmp::less : Cmp::greater;
  };
  const Vec2 p1 = p_point(c, 0), p2 = p_point(c, 1), p3 = p_point(c, 2), p4 = p_point(c, 3);
  rp.sign = {cmp(c.a10, c.f1(p1)), cmp(c.a10, c.f1(p2)), cmp(c.b01, c.f2(p2)), cmp(c.b01, c.f2(p3)),
             cmp(c.a10, c.f1(p3)), cmp(c.a10, c.f1(p4)), cmp(c.b01, c.f2(p4)), cmp(c.b01, c.f2(p1))};
  return rp;
}

}  // namespace octo
