#pragma once

#include <string>
#include <vector>

#include "octo/linalg.hpp"
#include "octo/replicator.hpp"
#include "octo/tolerances.hpp"

namespace octo {

enum class MapId { phi1, phi2, phi3, phi4, phi5, time_reversal, time_scale };

const char* to_string(MapId id);

struct TransformStep {
  MapId id = MapId::phi1;
  double factor = 1.0;  // only used by time_scale: the field is multiplied by factor
};

// x' = (x+alpha)(x+alpha-1)(a10 x + a01 y), y' = (y+beta)(y+beta-1)(b10 x + b01 y).
struct CanonicalSystem {
  double alpha = 0.0, beta = 0.0;
  double a10 = 0.0, a01 = 0.0, b10 = 0.0, b01 = 0.0;
  std::vector<TransformStep> log;

  Vec2 field(Vec2 p) const;
  Mat2 jacobian(Vec2 p) const;
  double detA() const { return a10 * b01 - a01 * b10; }
  double f1(Vec2 p) const { return a10 * p.x + a01 * p.y; }
  double f2(Vec2 p) const { return b10 * p.x + b01 * p.y; }
  bool time_reversed() const;
};

struct InteriorPoint {
  double p1 = 0.0, p2 = 0.0;
};

InteriorPoint interior_equilibrium(const RawSystem& s, const Tolerances& tol = {});
CanonicalSystem to_canonical(const RawSystem& s, const Tolerances& tol = {});

struct OctothorpePosition {
  int index = 1;
  bool boundary = false;
};

OctothorpePosition position_of_origin(const CanonicalSystem& c, const Tolerances& tol = {});

// Applies a symmetry to the parameters and appends it to the log.
CanonicalSystem apply_symmetry(const CanonicalSystem& c, TransformStep step);
CanonicalSystem apply_symmetry(const CanonicalSystem& c, MapId id);

// Coordinate part of a symmetry; time reversal and scaling act as identity.
Vec2 map_point(MapId id, Vec2 p);
// Linear part of map_point (the maps are linear in x, y).
Mat2 map_linear(MapId id);

struct NormalizedSystem {
  CanonicalSystem system;  // normalized parameters, log extended by the applied steps
  int position = 1;        // 1, 2 or 3
  int family = 0;          // 1..4 for positions 1 and 2, 1..6 for position 3
  std::size_t input_log_size = 0;
};

NormalizedSystem normalize_to_family(const CanonicalSystem& c, const Tolerances& tol = {});

// Undoes every log entry past keep, newest first.
CanonicalSystem replay_inverse(const CanonicalSystem& c, std::size_t keep = 0);

// Maps a point of the normalized system back to the coordinates of the
// system before the steps past keep were applied.
Vec2 pull_back_point(const CanonicalSystem& c, Vec2 p, std::size_t keep = 0);

std::string describe_log(const std::vector<TransformStep>& log);

}  // namespace octo
