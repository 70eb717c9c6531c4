#include "octo/canonical.hpp"

#include <cmath>
#include <sstream>

#include "octo/errors.hpp"
#include "octo/genericity.hpp"

namespace octo {

const char* to_string(MapId id) {
  switch (id) {
    case MapId::phi1: return "phi1";
    case MapId::phi2: return "phi2";
    case MapId::phi3: return "phi3";
    case MapId::phi4: return "phi4";
    case MapId::phi5: return "phi5";
    case MapId::time_reversal: return "time_reversal";
    case MapId::time_scale: return "time_scale";
  }
  return "unknown";
}

Vec2 CanonicalSystem::field(Vec2 p) const {
  const double u = p.x + alpha;
  const double v = p.y + beta;
  return {u * (u - 1.0) * f1(p), v * (v - 1.0) * f2(p)};
}

Mat2 CanonicalSystem::jacobian(Vec2 p) const {
  const double u = p.x + alpha;
  const double v = p.y + beta;
  const double gu = u * (u - 1.0);
  const double gv = v * (v - 1.0);
  return {(2.0 * u - 1.0) * f1(p) + gu * a10, gu * a01,
          gv * b10, (2.0 * v - 1.0) * f2(p) + gv * b01};
}

bool CanonicalSystem::time_reversed() const {
  bool flipped = false;
  for (const auto& s : log) {
    if (s.id == MapId::time_reversal) flipped = !flipped;
  }
  return flipped;
}

InteriorPoint interior_equilibrium(const RawSystem& s, const Tolerances& tol) {
  const double det = s.detA();
  if (std::fabs(det) <= tol.singular_det) {
    throw Error(ErrorKind::singular_payoff_matrix, "det A vanishes; the lines f1 = 0 and f2 = 0 do not meet",
                {"detA"});
  }
  // Cramer's rule for A p = (-a00, -b00).
  const double det1 = -s.a00 * s.b01 + s.a01 * s.b00;
  const double det2 = -s.a10 * s.b00 + s.a00 * s.b10;
  return {det1 / det, det2 / det};
}

CanonicalSystem to_canonical(const RawSystem& s, const Tolerances& tol) {
  const InteriorPoint p = interior_equilibrium(s, tol);
  CanonicalSystem c;
  c.alpha = p.p1;
  c.beta = p.p2;
  c.a10 = s.a10;
  c.a01 = s.a01;
  c.b10 = s.b10;
  c.b01 = s.b01;
  return c;
}

OctothorpePosition position_of_origin(const CanonicalSystem& c, const Tolerances& tol) {
  auto near = [&](double v, double target) { return std::fabs(v - target) <= tol.boundary; };
  OctothorpePosition pos;
  pos.boundary = near(c.alpha, 0.0) || near(c.alpha, 1.0) || near(c.beta, 0.0) || near(c.beta, 1.0);
  // -1: below 0, 0: inside [0,1], 1: above 1
  auto band = [](double v) { return v < 0.0 ? -1 : (v > 1.0 ? 1 : 0); };
  const int a = band(c.alpha);
  const int b = band(c.beta);
  if (a == 0 && b == 0) pos.index = 1;
  else if (a == 1 && b == 0) pos.index = 2;
  else if (a == 1 && b == 1) pos.index = 3;
  else if (a == 0 && b == 1) pos.index = 4;
  else if (a == -1 && b == 1) pos.index = 5;
  else if (a == -1 && b == 0) pos.index = 6;
  else if (a == -1 && b == -1) pos.index = 7;
  else if (a == 0 && b == -1) pos.index = 8;
  else pos.index = 9;
  return pos;
}

CanonicalSystem apply_symmetry(const CanonicalSystem& c, TransformStep step) {
  CanonicalSystem r = c;
  switch (step.id) {
    case MapId::phi1:
      r.alpha = c.beta; r.beta = c.alpha;
      r.a10 = c.b01; r.a01 = c.b10; r.b10 = c.a01; r.b01 = c.a10;
      break;
    case MapId::phi2:
      r.alpha = 1.0 - c.beta; r.beta = 1.0 - c.alpha;
      r.a10 = c.b01; r.a01 = c.b10; r.b10 = c.a01; r.b01 = c.a10;
      break;
    case MapId::phi3:
      r.alpha = 1.0 - c.alpha;
      r.a01 = -c.a01; r.b10 = -c.b10;
      break;
    case MapId::phi4:
      r.beta = 1.0 - c.beta;
      r.a01 = -c.a01; r.b10 = -c.b10;
      break;
    case MapId::phi5:
      r.alpha = 1.0 - c.alpha; r.beta = 1.0 - c.beta;
      break;
    case MapId::time_reversal:
      r.a10 = -c.a10; r.a01 = -c.a01; r.b10 = -c.b10; r.b01 = -c.b01;
      break;
    case MapId::time_scale:
      if (!(step.factor > 0.0) || !std::isfinite(step.factor)) {
        throw Error(ErrorKind::invalid_input, "time_scale needs a positive finite factor");
      }
      r.a10 *= step.factor; r.a01 *= step.factor; r.b10 *= step.factor; r.b01 *= step.factor;
      break;
  }
  r.log.push_back(step);
  return r;
}

CanonicalSystem apply_symmetry(const CanonicalSystem& c, MapId id) {
  return apply_symmetry(c, TransformStep{id, 1.0});
}

Vec2 map_point(MapId id, Vec2 p) {
  switch (id) {
    case MapId::phi1: return {p.y, p.x};
    case MapId::phi2: return {-p.y, -p.x};
    case MapId::phi3: return {-p.x, p.y};
    case MapId::phi4: return {p.x, -p.y};
    case MapId::phi5: return {-p.x, -p.y};
    default: return p;
  }
}

Mat2 map_linear(MapId id) {
  const Vec2 ex = map_point(id, {1.0, 0.0});
  const Vec2 ey = map_point(id, {0.0, 1.0});
  return {ex.x, ey.x, ex.y, ey.y};
}

namespace {

int family_of(const CanonicalSystem& c, int position) {
  if (position == 3 && c.a10 < 0.0) {
    if (c.a01 < 0.0) return 0;
    if (c.b10 >= 0.0 && c.b01 < 0.0) return 5;
    if (c.b10 <= 0.0 && c.b01 > 0.0) return 6;
    return 0;
  }
  if (c.a10 <= 0.0 || c.a01 < 0.0) return 0;
  if (c.b10 >= 0.0) return c.b01 > 0.0 ? 1 : 2;
  return c.b01 > 0.0 ? 3 : 4;
}

}  // namespace

NormalizedSystem normalize_to_family(const CanonicalSystem& c, const Tolerances& tol) {
  const OctothorpePosition pos = position_of_origin(c, tol);
  if (pos.boundary) {
    std::vector<std::string> w;
    if (std::fabs(c.alpha) <= tol.boundary || std::fabs(c.alpha - 1.0) <= tol.boundary) w.push_back("alpha");
    if (std::fabs(c.beta) <= tol.boundary || std::fabs(c.beta - 1.0) <= tol.boundary) w.push_back("beta");
    throw Error(ErrorKind::non_generic, "origin lies on an invariant line of the octothorpe", w);
  }
  const GenericityCheck gc = necessary_condition(c, tol);
  if (!gc.pass) throw Error(ErrorKind::non_generic, "a10 * b01 * det A vanishes", gc.witnesses);

  NormalizedSystem out;
  out.input_log_size = c.log.size();
  CanonicalSystem s = c;
  switch (pos.index) {
    case 4: s = apply_symmetry(s, MapId::phi1); break;
    case 5: case 6: s = apply_symmetry(s, MapId::phi3); break;
    case 7: case 8: s = apply_symmetry(s, MapId::phi2); break;
    case 9: s = apply_symmetry(s, MapId::phi4); break;
    default: break;
  }
  const int p = position_of_origin(s, tol).index;

  if (p == 1) {
    if (s.a10 < 0.0) s = apply_symmetry(s, MapId::time_reversal);
    if (s.a01 < 0.0) s = apply_symmetry(s, s.beta >= 0.5 ? MapId::phi3 : MapId::phi4);
    if (s.beta < 0.5) s = apply_symmetry(s, MapId::phi5);
  } else if (p == 2) {
    if (s.a10 < 0.0) s = apply_symmetry(s, MapId::time_reversal);
    if (s.a01 < 0.0) s = apply_symmetry(s, MapId::phi4);
  } else {
    // Position 3 is invariant under phi1 and time reversal only; take the
    // shortest sequence, phi1 before time reversal, that reaches a table row.
    const std::vector<std::vector<MapId>> candidates = {
        {}, {MapId::phi1}, {MapId::time_reversal}, {MapId::phi1, MapId::time_reversal}};
    bool found = false;
    for (const auto& seq : candidates) {
      CanonicalSystem t = s;
      for (MapId m : seq) t = apply_symmetry(t, m);
      if (family_of(t, 3) != 0) {
        s = t;
        found = true;
        break;
      }
    }
    if (!found) throw Error(ErrorKind::non_generic, "no family row reached for position 3");
  }
  if (s.a10 > 0.0) s = apply_symmetry(s, TransformStep{MapId::time_scale, 1.0 / s.a10});

  out.position = p;
  out.family = family_of(s, p);
  if (out.family == 0) throw Error(ErrorKind::non_generic, "normalized system matches no family row");
  out.system = s;
  return out;
}

CanonicalSystem replay_inverse(const CanonicalSystem& c, std::size_t keep) {
  CanonicalSystem r = c;
  while (r.log.size() > keep) {
    const TransformStep last = r.log.back();
    TransformStep inv = last;
    if (last.id == MapId::time_scale) inv.factor = 1.0 / last.factor;
    r = apply_symmetry(r, inv);
    r.log.pop_back();
    r.log.pop_back();
  }
  return r;
}

Vec2 pull_back_point(const CanonicalSystem& c, Vec2 p, std::size_t keep) {
  for (std::size_t i = c.log.size(); i > keep; --i) p = map_point(c.log[i - 1].id, p);
  return p;
}

std::string describe_log(const std::vector<TransformStep>& log) {
  std::ostringstream os;
  for (std::size_t i = 0; i < log.size(); ++i) {
    if (i) os << ", ";
    os << to_string(log[i].id);
    if (log[i].id == MapId::time_scale) os << "(" << log[i].factor << ")";
  }
  return os.str();
}

}  // namespace octo
