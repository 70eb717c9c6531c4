#pragma once

#include <string>
#include <vector>

#include "octo/linalg.hpp"
#include "octo/replicator.hpp"

namespace octo {

// Equilibrium of a two-player system in the closed unit square.
struct SquareEquilibrium {
  std::string id;  // "(0,0)", "(1,1)", "edge:y=0", "interior", ...
  Vec2 location;
};

// Corners, the zeros of the linear factors on the four sides and the
// interior point, whichever exist in the closed square.
std::vector<SquareEquilibrium> square_equilibria(const RawSystem& s);

struct OmegaEstimate {
  Vec2 start;
  Vec2 end;
  std::string limit;  // id of the equilibrium reached, empty when none was reached
};

// Integrates forward from the centers of an n x n grid of cells in the open
// square and names the equilibrium each orbit ends within radius of.
std::vector<OmegaEstimate> omega_grid(const RawSystem& s, int n, double max_time = 500.0, double radius = 1e-6);

}  // namespace octo
