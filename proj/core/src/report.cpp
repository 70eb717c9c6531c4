#include "octo/report.hpp"

#include "octo/errors.hpp"
#include "octo/subcase.hpp"

namespace octo {

namespace {

LimitCycleReport analyze_cycle(const CanonicalSystem& c, const ClassificationReport& r, bool numerics,
                               const Tolerances& tol) {
  LimitCycleReport out;
  if (r.position.index != 1) {
    out.reason = "origin outside the central square";
    return out;
  }
  try {
    out.criterion = limit_cycle_exists(c, tol);
    out.applicable = true;
  } catch (const Error& e) {
    out.reason = e.what();
    return out;
  }
  if (numerics) out.numerical = detect_limit_cycle(c, tol);
  return out;
}

}  // namespace

ClassificationReport classify_system(const CanonicalSystem& c, const ReportOptions& opt, const Tolerances& tol) {
  ClassificationReport r;
  r.input = c;
  r.position = position_of_origin(c, tol);
  r.normalized = normalize_to_family(c, tol);
  if (opt.numerics) {
    r.label = classify_full(c, opt.skeleton, tol);
  } else {
    r.label = classify_case(r.normalized, tol);
  }
  if (r.label.position == 1 && r.label.resolved) {
    const bool flipped = r.normalized.system.time_reversed() != c.time_reversed();
    r.classes = portrait_class(r.label, flipped);
  } else if (r.label.position == 1) {
    r.notes.push_back("subcase unresolved; candidates listed");
  } else {
    r.notes.push_back("origin outside the central square: family tag only");
  }
  for (const auto& s : all_singularities(c, tol)) r.singularities.push_back(s.report);
  r.discriminants = discriminants(c);
  r.polycycle = polycycle_report(c, tol);
  r.limit_cycle = analyze_cycle(c, r, opt.numerics, tol);
  r.audit = genericity_audit(c, opt.numerics, tol);
  return r;
}

}  // namespace octo
