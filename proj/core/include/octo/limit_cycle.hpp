#pragma once

#include <vector>

#include "octo/canonical.hpp"
#include "octo/genericity.hpp"
#include "octo/tolerances.hpp"

namespace octo {

// One evaluation of the return map on the section {s * p3 : 0 < s < 1}.
struct ReturnSample {
  double s = 0.0;
  double image = 0.0;         // s' of the first return
  double displacement = 0.0;  // image - s, or -s when the orbit settles at the origin
  bool returned = false;
  bool settled = false;  // reached the origin without winding once
};

struct CycleResult {
  bool found = false;
  bool center_like = false;
  double s = 0.0;           // section parameter of the cycle
  double multiplier = 0.0;  // derivative of the return map at the fixed point
  CycleStability stability = CycleStability::inconclusive;
  std::vector<ReturnSample> scan;
  int fixed_points = 0;  // sign changes found along the scan
};

ReturnSample return_map(const CanonicalSystem& c, double s, const Tolerances& tol = {});

// Scans the section, bisects each sign change of the displacement and reports
// the outermost fixed point. Samples whose orbit neither returns nor settles
// within the time budget are left out of the sign analysis. Requires the origin inside the central square.
CycleResult detect_limit_cycle(const CanonicalSystem& c, const Tolerances& tol = {}, int scan_points = 40);

}  // namespace octo
