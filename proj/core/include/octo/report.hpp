#pragma once

#include <optional>
#include <string>
#include <vector>

#include "octo/canonical.hpp"
#include "octo/classifier.hpp"
#include "octo/genericity.hpp"
#include "octo/limit_cycle.hpp"
#include "octo/portrait.hpp"
#include "octo/singularities.hpp"
#include "octo/tolerances.hpp"

namespace octo {

struct ReportOptions {
  bool numerics = true;  // skeleton tracing, return map and the numerical audit items
  SkeletonOptions skeleton;
};

struct LimitCycleReport {
  bool applicable = false;  // origin node or focus inside a polycycle
  std::string reason;       // why the criterion does not apply
  bool criterion = false;   // verdict from the origin and polycycle stabilities
  std::optional<CycleResult> numerical;
};

// Everything the classify command prints about one system.
struct ClassificationReport {
  CanonicalSystem input;
  NormalizedSystem normalized;
  OctothorpePosition position;
  CaseLabel label;
  std::optional<PortraitClass> classes;
  std::vector<SingularityReport> singularities;  // of the input system
  Discriminants discriminants;
  PolycycleReport polycycle;
  LimitCycleReport limit_cycle;
  AuditReport audit;
  std::vector<std::string> notes;
};

// Full pipeline: genericity gate, normalization, row selection, subcase
// resolution, equivalence classes, limit-cycle analysis and the audit.
// Throws non_generic and unrealizable_position like the stages it runs.
ClassificationReport classify_system(const CanonicalSystem& c, const ReportOptions& opt = {},
                                     const Tolerances& tol = {});

std::string to_json(const ClassificationReport& r, int indent = 2);
std::string to_text(const ClassificationReport& r);

// {"kind": ..., "message": ..., "witnesses": [...]}
std::string error_json(const std::string& kind, const std::string& message,
                       const std::vector<std::string>& witnesses = {});

}  // namespace octo
