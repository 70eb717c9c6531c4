#include <cmath>

#include "octo/errors.hpp"
#include "octo/genericity.hpp"
#include "octo/portrait.hpp"

namespace octo {

namespace {

bool hyperbolic(LocalType t) {
  switch (t) {
    case LocalType::saddle:
    case LocalType::stable_node:
    case LocalType::unstable_node:
    case LocalType::stable_focus:
    case LocalType::unstable_focus:
      return true;
    default:
      return false;
  }
}

bool on_boundary(double v, double tol) { return std::fabs(v) <= tol || std::fabs(v - 1.0) <= tol; }

AuditItem hyperbolicity_item(const CanonicalSystem& c, const Tolerances& tol) {
  AuditItem item;
  item.name = "hyperbolic_singularities";
  if (on_boundary(c.alpha, tol.boundary)) item.witnesses.push_back("alpha");
  if (on_boundary(c.beta, tol.boundary)) item.witnesses.push_back("beta");
  const GenericityCheck g = necessary_condition(c, tol);
  for (const auto& w : g.witnesses) item.witnesses.push_back(w);
  if (item.witnesses.empty()) {
    for (const auto& s : all_singularities(c, tol)) {
      if (!hyperbolic(s.report.type)) item.witnesses.push_back(s.report.id + ":" + to_string(s.report.type));
    }
  }
  item.pass = item.witnesses.empty();
  item.detail = item.pass ? "all singularities hyperbolic" : "non-hyperbolic or degenerate singularity";
  return item;
}

AuditItem cycle_item() {
  AuditItem item;
  item.name = "hyperbolic_cycles";
  item.detail = "at most one limit cycle, hyperbolic when present (known result for this class)";
  return item;
}

AuditItem connection_item(const CanonicalSystem& c, bool run, const Tolerances& tol) {
  AuditItem item;
  item.name = "saddle_connections";
  item.numerical = true;
  if (!run) {
    item.pass = false;
    item.detail = "skipped: singularities not all hyperbolic";
    return item;
  }
  SkeletonOptions opt;
  opt.keep_paths = false;
  opt.include_infinity_arcs = false;
  try {
    const SeparatrixSkeleton sk = trace_separatrices(c, opt, tol);
    for (const auto& s : sk.separatrices) {
      if (!s.near_miss.empty()) item.witnesses.push_back(s.saddle + ">" + s.near_miss);
      else if (s.kind == EndpointKind::unresolved) item.witnesses.push_back(s.saddle + ">?");
    }
  } catch (const Error& e) {
    item.witnesses.push_back(to_string(e.kind()));
  }
  item.pass = item.witnesses.empty();
  item.detail = item.pass ? "no connection found at tolerance" : "separatrix passes within tolerance of a saddle";
  return item;
}

AuditItem polycycle_item(const CanonicalSystem& c, bool run, const Tolerances& tol) {
  AuditItem item;
  item.name = "polycycle_ratio";
  if (!run) {
    item.detail = "no polycycle";
    return item;
  }
  const PolycycleReport p = polycycle_report(c, tol);
  if (!p.exists) {
    item.detail = "no polycycle";
    return item;
  }
  item.pass = std::fabs(std::log(p.r_gamma)) > tol.polycycle_log;
  if (!item.pass) item.witnesses.push_back("r_gamma");
  item.detail = "r_gamma = " + std::to_string(p.r_gamma);
  return item;
}

}  // namespace

AuditReport genericity_audit(const CanonicalSystem& c, bool numerical, const Tolerances& tol) {
  AuditReport r;
  r.items.push_back(hyperbolicity_item(c, tol));
  const bool hyper = r.items.front().pass;
  r.items.push_back(cycle_item());
  if (numerical) r.items.push_back(connection_item(c, hyper, tol));
  r.items.push_back(polycycle_item(c, hyper, tol));
  for (const auto& i : r.items) r.pass = r.pass && i.pass;
  return r;
}

}  // namespace octo
