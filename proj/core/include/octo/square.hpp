#pragma once

#include <string>
#include <vector>

#include "octo/canonical.hpp"
#include "octo/portrait.hpp"
#include "octo/tolerances.hpp"

namespace octo {

// Singular point of the closed central square with its role there: A or R
// for attracting or repelling points, H for a corner saddle (one hyperbolic
// sector inside) and S for a saddle whose fourth separatrix enters the
// interior.
struct SquarePoint {
  std::string id;
  char role = '?';
  double angle = 0.0;  // around the center of the square, counterclockwise
};

struct SquareSkeleton {
  std::vector<SquarePoint> boundary;  // counterclockwise order
  char origin_role = '?';
  char cycle_role = '-';  // A or R when a limit cycle surrounds the origin
  // Interior separatrices as (saddle index or -1 for the origin, direction,
  // endpoint index, -1 for the origin, -2 for a cycle or the boundary polycycle).
  struct Link {
    int from;
    int direction;
    int to;
  };
  std::vector<Link> links;
};

SquareSkeleton square_skeleton(const CanonicalSystem& c, const SeparatrixSkeleton& sk, const Tolerances& tol = {});

// String that is equal for two square skeletons exactly when some rotation or
// reflection of the square, possibly combined with time reversal, maps one
// onto the other.
std::string square_signature(const SquareSkeleton& s);

// Traces the skeleton of c (central position) and returns its square signature.
std::string square_signature(const CanonicalSystem& c, const Tolerances& tol = {});

}  // namespace octo
