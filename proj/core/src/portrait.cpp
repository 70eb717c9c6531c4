#include "octo/portrait.hpp"

#include <cmath>

#include "octo/compactification.hpp"
#include "octo/errors.hpp"

namespace octo {

const char* to_string(EndpointKind k) {
  switch (k) {
    case EndpointKind::singularity: return "singularity";
    case EndpointKind::cycle: return "cycle";
    case EndpointKind::unresolved: return "unresolved";
  }
  return "unresolved";
}

bool SeparatrixSkeleton::ambiguous() const {
  for (const auto& s : separatrices) {
    if (s.ambiguous || s.kind == EndpointKind::unresolved) return true;
  }
  return false;
}

const SingularPoint* SeparatrixSkeleton::find(const std::string& id) const {
  for (const auto& s : singularities) {
    if (s.report.id == id) return &s;
  }
  return nullptr;
}

std::vector<SingularPoint> all_singularities(const CanonicalSystem& c, const Tolerances& tol) {
  std::vector<SingularPoint> out;
  auto finite = [&](const SingularityReport& r) { out.push_back({r, sphere_of_plane(r.location)}); };
  finite(classify_origin(c, tol));
  for (const auto& p : p_singularities(c, tol)) finite(p);
  for (const auto& q : q_singularities(c, tol)) {
    if (q.defined) finite(q);
  }
  for (const auto& r : classify_infinite(c, tol)) out.push_back({r, Vec3{r.direction.x, r.direction.y, 0.0}});
  return out;
}

namespace {

Vec3 normalized(Vec3 y) {
  const double n = std::sqrt(y[0] * y[0] + y[1] * y[1] + y[2] * y[2]);
  return {y[0] / n, y[1] / n, y[2] / n};
}

// Linear forms vanishing on the invariant great circles: the four lines and
// the equator.
std::array<double, 5> line_forms(const CanonicalSystem& c, const Vec3& y) {
  return {y[0] + c.alpha * y[2], y[0] + (c.alpha - 1.0) * y[2], y[1] + c.beta * y[2], y[1] + (c.beta - 1.0) * y[2],
          y[2]};
}

// True when the saddles a and b lie on a common invariant circle that also
// carries the orbit launched at y.
bool share_invariant_circle(const CanonicalSystem& c, const Vec3& a, const Vec3& b, const Vec3& y) {
  const auto la = line_forms(c, a);
  const auto lb = line_forms(c, b);
  const auto ly = line_forms(c, y);
  for (int i = 0; i < 5; ++i) {
    if (std::fabs(la[i]) < 1e-12 && std::fabs(lb[i]) < 1e-12 && std::fabs(ly[i]) < 1e-9) return true;
  }
  return false;
}

// Sphere point displaced from a singularity by offset along a chart or
// plane direction e.
Vec3 launch_point(const SingularPoint& s, Vec2 e, double offset) {
  const Vec3 y0 = s.sphere;
  Vec3 y1;
  if (!s.report.at_infinity()) {
    const double h = 1e-7 * std::max(1.0, norm(s.report.location));
    y1 = sphere_of_plane(s.report.location + h * e);
  } else {
    const Vec2 uv = s.report.location + 1e-7 * e;
    y1 = sphere_of_chart(s.report.chart, uv.x, uv.y);
  }
  Vec3 w{y1[0] - y0[0], y1[1] - y0[1], y1[2] - y0[2]};
  const double n = std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2]);
  return normalized({y0[0] + offset * w[0] / n, y0[1] + offset * w[1] / n, y0[2] + offset * w[2] / n});
}

}  // namespace

double singularity_gap(const std::vector<SingularPoint>& sing) {
  double gap = 1.0;
  for (std::size_t i = 0; i < sing.size(); ++i) {
    for (std::size_t j = i + 1; j < sing.size(); ++j) gap = std::min(gap, sphere_distance(sing[i].sphere, sing[j].sphere));
  }
  return gap;
}

namespace {

bool attracts(LocalType t, int direction) { return direction > 0 ? is_attractor(t) : is_repeller(t); }

}  // namespace

Separatrix follow_orbit(const CanonicalSystem& c, const std::vector<SingularPoint>& sing, const Vec3& start,
                        int direction, const std::string& source, const SkeletonOptions& opt,
                        const Tolerances& tol) {
  Separatrix sep;
  sep.saddle = source;
  sep.direction = direction;
  sep.launch = start;
  const SingularPoint* src = nullptr;
  for (const auto& s : sing) {
    if (s.report.id == source) src = &s;
  }
  bool left_source = src == nullptr;
  // Radii shrink when two singularities are close to each other.
  const double gap = singularity_gap(sing);
  const double radius = std::min(tol.endpoint_radius, 0.1 * gap);
  const double ball = std::min(tol.singular_ball, 0.05 * gap);
  Controls ctl = opt.controls;
  ctl.max_time = opt.max_time;
  // Weak nodes need time proportional to the inverse of their slow rate.
  double slow = 1e300;
  for (const auto& s : sing) {
    const double w = 1.0 / (1.0 + s.report.location.x * s.report.location.x +
                            s.report.location.y * s.report.location.y);
    const double rate = std::min(std::fabs(s.report.eigen.l1.real()), std::fabs(s.report.eigen.l2.real())) * w;
    if (rate > 0.0) slow = std::min(slow, rate);
  }
  ctl.max_time = std::min(opt.max_time + 20.0 / slow, 1e6);
  ctl.max_steps = std::max(ctl.max_steps, 2000000L);
  auto stop = [&](double, const Vec3& y) {
    if (!left_source && sphere_distance(y, src->sphere) > 2.0 * ball) left_source = true;
    for (const auto& s : sing) {
      if (&s == src && !left_source) continue;
      const double d = sphere_distance(y, s.sphere);
      if (attracts(s.report.type, direction) && d < radius) {
        sep.kind = EndpointKind::singularity;
        sep.endpoint = s.report.id;
        return true;
      }
      if (s.report.type == LocalType::saddle && d < ball) {
        if (src && share_invariant_circle(c, src->sphere, s.sphere, start)) {
          sep.kind = EndpointKind::singularity;
          sep.endpoint = s.report.id;
          return true;
        }
        if (sep.near_miss.empty()) sep.near_miss = s.report.id;
      }
    }
    return false;
  };
  sep.path = integrate_sphere(c, start, direction, ctl, stop);
  if (sep.kind != EndpointKind::singularity) {
    // The orbit keeps winding: it accumulates on a closed orbit or on the
    // boundary of the central square.
    const Vec3& y = sep.path.points.back();
    double min_d = 1e9;
    for (const auto& s : sing) min_d = std::min(min_d, sphere_distance(y, s.sphere));
    const auto forms = line_forms(c, y);
    double min_line = 1e9;
    for (int i = 0; i < 4; ++i) min_line = std::min(min_line, std::fabs(forms[i]));
    if (min_d < 1e-2) {
      // Still creeping toward a singularity along a weak direction.
    } else if (min_line < 1e-3) {
      sep.kind = EndpointKind::cycle;
      sep.endpoint = "polycycle";
    } else {
      sep.kind = EndpointKind::cycle;
      sep.endpoint = "limit_cycle";
    }
  }
  sep.ambiguous = !sep.near_miss.empty();
  if (!opt.keep_paths) {
    SphereTrajectory thin;
    thin.reason = sep.path.reason;
    thin.t = {sep.path.t.front(), sep.path.t.back()};
    thin.points = {sep.path.points.front(), sep.path.points.back()};
    sep.path = std::move(thin);
  }
  return sep;
}

SeparatrixSkeleton trace_separatrices(const CanonicalSystem& c, const SkeletonOptions& opt, const Tolerances& tol) {
  SeparatrixSkeleton sk;
  sk.singularities = all_singularities(c, tol);
  for (const auto& s : sk.singularities) {
    if (s.report.type == LocalType::non_hyperbolic) {
      throw Error(ErrorKind::non_generic, "non-hyperbolic singularity " + s.report.id, {s.report.id});
    }
  }
  const double offset = std::min(tol.launch_offset, 0.01 * singularity_gap(sk.singularities));
  for (const auto& s : sk.singularities) {
    if (s.report.type != LocalType::saddle) continue;
    const Mat2& J = s.report.jacobian;
    const double ls = s.report.eigen.l1.real();
    const double lu = s.report.eigen.l2.real();
    struct Launch {
      Vec2 e;
      int dir;
      bool along;
    };
    std::vector<Launch> launches;
    if (!s.report.at_infinity()) {
      for (double lam : {lu, ls}) {
        const Vec2 e = eigenvector(J, lam);
        const int dir = lam > 0.0 ? 1 : -1;
        launches.push_back({e, dir, false});
        launches.push_back({-1.0 * e, dir, false});
      }
    } else {
      // The Jacobian at infinity is upper triangular: (1, 0) spans the
      // equator and the other eigenvector points into the disk.
      const bool upper = s.report.chart == Chart::U1 || s.report.chart == Chart::U2;
      const double l_eq = J.a11;
      const double l_tr = J.a22;
      if (opt.include_infinity_arcs) {
        launches.push_back({{1.0, 0.0}, l_eq > 0.0 ? 1 : -1, true});
        launches.push_back({{-1.0, 0.0}, l_eq > 0.0 ? 1 : -1, true});
      }
      Vec2 e{J.a12, l_tr - l_eq};
      const double n = norm(e);
      e = (1.0 / n) * e;
      if ((e.y > 0.0) != upper) e = -1.0 * e;
      launches.push_back({e, l_tr > 0.0 ? 1 : -1, false});
    }
    for (const auto& l : launches) {
      const Vec3 y = launch_point(s, l.e, offset);
      Separatrix sep = follow_orbit(c, sk.singularities, y, l.dir, s.report.id, opt, tol);
      sep.along_infinity = l.along;
      sk.separatrices.push_back(std::move(sep));
    }
  }
  return sk;
}

}  // namespace octo
