#pragma once

#include <array>
#include <functional>
#include <vector>

#include "octo/canonical.hpp"
#include "octo/singularities.hpp"
#include "octo/tolerances.hpp"

namespace octo {

using Vec3 = std::array<double, 3>;

// Poincare sphere: a planar point (x, y) sits at (x, y, 1) / |(x, y, 1)|; the
// closed upper hemisphere is the Poincare disk and the equator is infinity.
Vec3 sphere_of_plane(Vec2 p);
Vec3 sphere_of_chart(Chart chart, double u, double v);
Vec2 plane_of_sphere(const Vec3& y);
Vec2 disk_of_sphere(const Vec3& y);  // orthogonal projection onto the disk
double sphere_distance(const Vec3& a, const Vec3& b);

// Compactified field on the sphere: (P~ - y1 S, Q~ - y2 S, -y3 S) with P~, Q~
// the homogenized cubic components and S = y1 P~ + y2 Q~.
Vec3 sphere_rhs(const CanonicalSystem& c, const Vec3& y);

struct Controls {
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  double max_step = 1e-2;  // bound on the displacement of one step
  double max_time = 1e4;
  long max_steps = 400000;

  static Controls from(const Tolerances& tol) {
    Controls c;
    c.abs_tol = tol.abs_tol;
    c.rel_tol = tol.rel_tol;
    c.max_step = tol.max_step;
    return c;
  }
};

enum class Termination { stopped, max_time, max_steps };

const char* to_string(Termination t);

struct PlaneTrajectory {
  std::vector<double> t;
  std::vector<Vec2> points;
  Termination reason = Termination::max_time;
};

struct SphereTrajectory {
  std::vector<double> t;
  std::vector<Vec3> points;
  Termination reason = Termination::max_time;
};

using PlaneField = std::function<Vec2(Vec2)>;
// Returns true to stop after accepting the point.
using PlaneStop = std::function<bool(double, Vec2)>;
using SphereStop = std::function<bool(double, const Vec3&)>;

// Adaptive Dormand-Prince integration; direction -1 integrates backward in
// time (t then decreases). Throws step_underflow when the step collapses.
PlaneTrajectory integrate_plane(const PlaneField& f, Vec2 start, double direction, const Controls& ctl,
                                const PlaneStop& stop = {});
SphereTrajectory integrate_sphere(const CanonicalSystem& c, const Vec3& start, double direction,
                                  const Controls& ctl, const SphereStop& stop = {});

// Integration of the canonical planar field.
PlaneTrajectory integrate(const CanonicalSystem& c, Vec2 start, double direction, const Controls& ctl,
                          const PlaneStop& stop = {});

}  // namespace octo
