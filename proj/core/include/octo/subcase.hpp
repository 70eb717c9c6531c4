#pragma once

#include <string>
#include <vector>

#include "octo/classifier.hpp"
#include "octo/portrait.hpp"

namespace octo {

// Orientation-free summary of a separatrix skeleton: for every saddle, the
// classes of the endpoints of its unstable and stable separatrices, plus the
// cyclic sequence of singularity types on the circle at infinity. Point
// classes only record finite/infinite and the local type, so the signature
// is unchanged by homeomorphisms of the disk; the smaller of the signature
// and its time reversal is returned.
std::string skeleton_signature(const SeparatrixSkeleton& sk);

// Connection counts that separate the subcases of a split row.
struct SubcaseFeatures {
  int infinite_saddles = 0;
  int transverse_to_finite = 0;  // transverse separatrices of infinite saddles ending at finite points
  bool u1_to_finite = false;     // that separatrix is finite for the infinite saddle in chart U1
  bool v1_to_finite = false;     // same for chart V1
  int closed_saddles = 0;        // finite saddles whose four separatrices all end at finite points
};

SubcaseFeatures subcase_features(const SeparatrixSkeleton& sk);

// Chooses the subcase of a split row from the connection counts. A skeleton
// whose pattern fits none of the row's subcases comes back unresolved with
// every portrait of the row as a candidate. Throws ambiguous_skeleton when a
// separatrix endpoint cannot be decided.
CaseLabel resolve_subcase(const CaseLabel& label, const SeparatrixSkeleton& sk);

// Normalizes, selects the row, traces the skeleton when the row is split and
// resolves the subcase. The skeleton is returned through out when given.
CaseLabel classify_full(const CanonicalSystem& c, const SkeletonOptions& opt = {}, const Tolerances& tol = {},
                        SeparatrixSkeleton* out = nullptr);

}  // namespace octo
