#pragma once

#include <string>
#include <vector>

#include "octo/canonical.hpp"
#include "octo/case_tables.hpp"
#include "octo/tolerances.hpp"

namespace octo {

struct CaseLabel {
  int position = 1;
  int family = 0;
  std::string row;       // table row, empty outside the central position
  std::string portrait;  // row plus subcase suffix once resolved; equals row when unsplit
  bool resolved = false;
  std::vector<std::string> candidates;  // portraits still possible when unresolved
};

// Selects the table row of a normalized system. Outside the central position
// only the family tag is filled in.
CaseLabel classify_case(const NormalizedSystem& n, const Tolerances& tol = {});

struct PortraitClass {
  std::string family_class;
  std::string disk_class;
  std::string square_class;
  bool stability_flipped = false;
  std::vector<std::string> chain;
};

// Requires a resolved label in the central position.
PortraitClass portrait_class(const CaseLabel& label, bool time_reversed = false);

}  // namespace octo
