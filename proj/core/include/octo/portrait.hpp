#pragma once

#include <optional>
#include <string>
#include <vector>

#include "octo/canonical.hpp"
#include "octo/integrate.hpp"
#include "octo/singularities.hpp"
#include "octo/tolerances.hpp"

namespace octo {

struct SingularPoint {
  SingularityReport report;
  Vec3 sphere{};
};

// Origin, p1..p4, the defined q points and the points at infinity.
std::vector<SingularPoint> all_singularities(const CanonicalSystem& c, const Tolerances& tol = {});

enum class EndpointKind { singularity, cycle, unresolved };

const char* to_string(EndpointKind k);

struct Separatrix {
  std::string saddle;   // id of the saddle it belongs to
  int direction = 1;    // +1 unstable (forward in time), -1 stable (backward)
  bool along_infinity = false;
  Vec3 launch{};
  EndpointKind kind = EndpointKind::unresolved;
  std::string endpoint;  // singularity id when kind == singularity
  bool ambiguous = false;
  std::string near_miss;  // saddle passed within the connection tolerance
  SphereTrajectory path;
};

struct SeparatrixSkeleton {
  std::vector<SingularPoint> singularities;
  std::vector<Separatrix> separatrices;
  bool ambiguous() const;
  const SingularPoint* find(const std::string& id) const;
};

struct SkeletonOptions {
  Controls controls;
  double max_time = 400.0;
  bool keep_paths = true;
  bool include_infinity_arcs = true;  // separatrices lying on the equator
};

SeparatrixSkeleton trace_separatrices(const CanonicalSystem& c, const SkeletonOptions& opt = {},
                                      const Tolerances& tol = {});

// Smallest sphere distance between two singularities (capped at 1).
double singularity_gap(const std::vector<SingularPoint>& sing);

// Follows one orbit on the sphere until it settles on an attractor (forward)
// or repeller (backward) of the singularity list.
Separatrix follow_orbit(const CanonicalSystem& c, const std::vector<SingularPoint>& sing, const Vec3& start,
                        int direction, const std::string& source, const SkeletonOptions& opt,
                        const Tolerances& tol = {});

}  // namespace octo
