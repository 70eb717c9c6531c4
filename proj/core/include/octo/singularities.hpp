#pragma once

#include <array>
#include <string>

#include "octo/canonical.hpp"
#include "octo/linalg.hpp"
#include "octo/tolerances.hpp"

namespace octo {

enum class LocalType {
  saddle,
  stable_node,
  unstable_node,
  stable_focus,
  unstable_focus,
  weak_stable_focus,
  weak_unstable_focus,
  center,
  non_hyperbolic,
  undefined,
};

const char* to_string(LocalType t);
bool is_attractor(LocalType t);
bool is_repeller(LocalType t);
LocalType reversed(LocalType t);

enum class Chart { plane, U1, V1, U2, V2 };

const char* to_string(Chart c);

struct SingularityReport {
  std::string id;
  Chart chart = Chart::plane;
  Vec2 location;         // planar point, or chart coordinates (u, v) at infinity
  Vec2 direction;        // unit direction of the point at infinity (unused for finite points)
  bool defined = true;
  Mat2 jacobian;
  EigenPair eigen;
  LocalType type = LocalType::undefined;
  std::string note;

  bool at_infinity() const { return chart != Chart::plane; }
};

// Hyperbolic type of a linearization; non_hyperbolic when some |Re lambda|
// falls below tol.hyperbolic * ||J||.
LocalType classify_linear(const Mat2& J, const Tolerances& tol = {});

std::array<SingularityReport, 4> p_singularities(const CanonicalSystem& c, const Tolerances& tol = {});
std::array<SingularityReport, 4> q_singularities(const CanonicalSystem& c, const Tolerances& tol = {});
SingularityReport classify_origin(const CanonicalSystem& c, const Tolerances& tol = {});

// Points p1..p4 of the octothorpe (index 0..3).
Vec2 p_point(const CanonicalSystem& c, int i);

enum class Cmp { less, equal, greater };

const char* to_string(Cmp c);

// Order is: q1 vs p1, q1 vs p2, q2 vs p2, q2 vs p3, q3 vs p3, q3 vs p4,
// q4 vs p4, q4 vs p1. Points on horizontal lines compare by x, points on
// vertical lines by y.
struct RelativePositions {
  std::array<Cmp, 8> sign{};

  Cmp q1_p1() const { return sign[0]; }
  Cmp q1_p2() const { return sign[1]; }
  Cmp q2_p2() const { return sign[2]; }
  Cmp q2_p3() const { return sign[3]; }
  Cmp q3_p3() const { return sign[4]; }
  Cmp q3_p4() const { return sign[5]; }
  Cmp q4_p4() const { return sign[6]; }
  Cmp q4_p1() const { return sign[7]; }
  bool any_equal() const;
};

RelativePositions relative_positions(const CanonicalSystem& c, const Tolerances& tol = {});

}  // namespace octo
