#pragma once

#include <string>

#include "octo/canonical.hpp"
#include "octo/portrait.hpp"

namespace octo {

enum class View { disk, square };

struct RenderOptions {
  View view = View::disk;
  int size = 600;             // pixels per side
  int sample_grid = 5;        // sample orbits start on a grid of sample_grid^2 points
  double sample_time = 40.0;  // integration time of each sample orbit, both directions
  double cycle_s = 0.0;       // section parameter of a limit cycle to draw, 0 for none
};

// Deterministic SVG of the portrait: the boundary circle (disk view) or the
// unit square of the game (square view), the invariant lines, the
// singularities coded by type, the separatrices of the skeleton (traced with
// keep_paths) and a grid of sample orbits.
std::string render_svg(const CanonicalSystem& c, const SeparatrixSkeleton& sk, const RenderOptions& opt = {});

// {"singularities": [...], "separatrices": [{"from", "to", "points"}], "cycles": [...]}
// Points are in disk coordinates (x, y) / sqrt(1 + x^2 + y^2); the cycles list
// names the cycles that some separatrix accumulates on.
std::string skeleton_json(const CanonicalSystem& c, const SeparatrixSkeleton& sk, int indent = 2);

}  // namespace octo
