#pragma once

#include <optional>
#include <vector>

#include "octo/canonical.hpp"
#include "octo/singularities.hpp"
#include "octo/tolerances.hpp"

namespace octo {

// Right-hand side of the compactified field in a chart near infinity.
// U1: x = 1/v, y = u/v (x > 0). U2: x = u/v, y = 1/v (y > 0).
// V1 and V2 use the same polynomial as U1 and U2 on the half-plane v < 0,
// which covers x < 0 and y < 0 respectively. The plane chart returns the
// canonical field itself.
Vec2 chart_rhs(const CanonicalSystem& c, Chart chart, double u, double v);
Mat2 chart_jacobian(const CanonicalSystem& c, Chart chart, double u, double v);

// Planar point represented by chart coordinates (v != 0).
Vec2 chart_to_plane(Chart chart, double u, double v);
// Chart coordinates of a planar point; requires the point to lie in the chart.
Vec2 plane_to_chart(Chart chart, Vec2 p);

// g(u) = b01 u^2 + (b10 - a01) u - a10; its real roots are the
// singularities on the equator inside U1 (and antipodally in V1).
struct InfinitySet {
  double Delta = 0.0;
  bool double_root = false;
  bool real_roots = false;
  double u0_plus = 0.0;
  double u0_minus = 0.0;
  SingularityReport pole_U1;  // origin of U1
  SingularityReport pole_U2;  // origin of U2
};

double g_infinity(const CanonicalSystem& c, double u);
InfinitySet infinite_singularities(const CanonicalSystem& c, const Tolerances& tol = {});

// Every singularity on the circle at infinity: the poles of U1, V1, U2, V2
// and the roots of g in U1 and V1, in counterclockwise order of direction.
std::vector<SingularityReport> classify_infinite(const CanonicalSystem& c, const Tolerances& tol = {});

// Diagonal entries of the U1 Jacobian at a root of g.
struct RootDiagonal {
  double e1 = 0.0;  // along the equator
  double e2 = 0.0;  // transverse to the equator
};
RootDiagonal root_diagonal(const CanonicalSystem& c, double u0);

}  // namespace octo
