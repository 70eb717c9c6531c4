#include <cmath>
#include <sstream>

#include <json.hpp>

#include "octo/errors.hpp"
#include "octo/report.hpp"

namespace octo {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::invalid_input: return "InvalidInput";
    case ErrorKind::singular_payoff_matrix: return "SingularPayoffMatrix";
    case ErrorKind::non_generic: return "NonGeneric";
    case ErrorKind::unrealizable_position: return "UnrealizablePosition";
    case ErrorKind::hypotheses_not_met: return "HypothesesNotMet";
    case ErrorKind::ambiguous_skeleton: return "AmbiguousSkeleton";
    case ErrorKind::step_underflow: return "StepUnderflow";
  }
  return "Unknown";
}

namespace {

using json = nlohmann::ordered_json;

// Non-finite numbers become null rather than invalid JSON.
json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json system_json(const CanonicalSystem& c) {
  return {{"alpha", c.alpha}, {"beta", c.beta}, {"a10", c.a10}, {"a01", c.a01}, {"b10", c.b10}, {"b01", c.b01}};
}

json eigen_json(const EigenPair& e) {
  return json::array({{number(e.l1.real()), number(e.l1.imag())}, {number(e.l2.real()), number(e.l2.imag())}});
}

json singularity_json(const SingularityReport& s) {
  json j = {{"id", s.id}, {"chart", to_string(s.chart)}, {"type", to_string(s.type)}};
  if (s.at_infinity()) {
    j["chart_coords"] = {number(s.location.x), number(s.location.y)};
    j["direction"] = {number(s.direction.x), number(s.direction.y)};
  } else {
    j["location"] = {number(s.location.x), number(s.location.y)};
  }
  j["jacobian"] = {{number(s.jacobian.a11), number(s.jacobian.a12)}, {number(s.jacobian.a21), number(s.jacobian.a22)}};
  j["eigenvalues"] = eigen_json(s.eigen);
  if (!s.note.empty()) j["note"] = s.note;
  return j;
}

json cycle_json(const LimitCycleReport& l) {
  json j = {{"applicable", l.applicable}};
  if (!l.applicable) {
    j["reason"] = l.reason;
    return j;
  }
  j["criterion"] = l.criterion;
  if (l.numerical) {
    const CycleResult& n = *l.numerical;
    j["numerical"] = {{"found", n.found},
                      {"center_like", n.center_like},
                      {"fixed_points", n.fixed_points},
                      {"s", number(n.s)},
                      {"multiplier", number(n.multiplier)},
                      {"stability", to_string(n.stability)}};
  }
  return j;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

}  // namespace

std::string to_json(const ClassificationReport& r, int indent) {
  json j;
  j["input"] = system_json(r.input);
  j["position"] = r.position.index;
  j["normalized"] = system_json(r.normalized.system);
  j["normalization"] = describe_log(
      std::vector<TransformStep>(r.normalized.system.log.begin() + r.normalized.input_log_size,
                                 r.normalized.system.log.end()));
  j["family"] = r.label.family;
  j["case"] = r.label.row;
  j["portrait"] = r.label.portrait;
  j["resolved"] = r.label.resolved;
  if (!r.label.candidates.empty() && !r.label.resolved) j["candidates"] = r.label.candidates;
  if (r.classes) {
    j["class"] = {{"family", r.classes->family_class},
                  {"disk", r.classes->disk_class},
                  {"square", r.classes->square_class},
                  {"time_reversed", r.classes->stability_flipped},
                  {"chain", r.classes->chain}};
  }
  json sing = json::array();
  for (const auto& s : r.singularities) sing.push_back(singularity_json(s));
  j["singularities"] = sing;
  const Discriminants& d = r.discriminants;
  j["discriminants"] = {{"detA", number(d.detA)},    {"Delta", number(d.Delta)}, {"T", number(d.T)},
                        {"K", number(d.K)},          {"delta", number(d.delta)},
                        {"sign_b10_minus_a01", d.sign_b10_minus_a01}};
  json poly = {{"exists", r.polycycle.exists}};
  if (r.polycycle.exists) {
    poly["ratios"] = r.polycycle.ratios;
    poly["r_gamma"] = number(r.polycycle.r_gamma);
    poly["stability"] = to_string(r.polycycle.stability);
  }
  j["polycycle"] = poly;
  j["limit_cycle"] = cycle_json(r.limit_cycle);
  json items = json::array();
  for (const auto& i : r.audit.items) {
    items.push_back({{"name", i.name},
                     {"pass", i.pass},
                     {"numerical", i.numerical},
                     {"witnesses", i.witnesses},
                     {"detail", i.detail}});
  }
  j["audit"] = {{"pass", r.audit.pass}, {"items", items}};
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j.dump(indent);
}

std::string to_text(const ClassificationReport& r) {
  std::ostringstream os;
  os.precision(10);
  const CanonicalSystem& c = r.input;
  os << "system     alpha=" << c.alpha << " beta=" << c.beta << " a10=" << c.a10 << " a01=" << c.a01
     << " b10=" << c.b10 << " b01=" << c.b01 << "\n";
  os << "position   " << r.position.index << "\n";
  os << "family     " << r.label.family << "\n";
  if (!r.label.row.empty()) os << "case       " << r.label.row << "\n";
  if (r.label.resolved) os << "portrait   " << r.label.portrait << "\n";
  else if (!r.label.candidates.empty()) os << "candidates " << join(r.label.candidates, ", ") << "\n";
  if (r.classes) {
    os << "class      family " << r.classes->family_class << ", disk " << r.classes->disk_class << ", square "
       << r.classes->square_class << (r.classes->stability_flipped ? " (time reversed)" : "") << "\n";
  }
  for (const auto& s : r.singularities) {
    os << "  " << s.id << "  " << to_string(s.type);
    if (!s.at_infinity()) os << "  (" << s.location.x << ", " << s.location.y << ")";
    else os << "  " << to_string(s.chart);
    os << "\n";
  }
  os << "limit cycle ";
  if (!r.limit_cycle.applicable) {
    os << "n/a (" << r.limit_cycle.reason << ")\n";
  } else {
    os << (r.limit_cycle.criterion ? "yes" : "no");
    if (r.limit_cycle.numerical) {
      const CycleResult& n = *r.limit_cycle.numerical;
      os << ", return map: " << (n.found ? "cycle at s=" : (n.center_like ? "center-like" : "none"));
      if (n.found) os << n.s << " multiplier " << n.multiplier;
    }
    os << "\n";
  }
  os << "audit      " << (r.audit.pass ? "pass" : "fail") << "\n";
  for (const auto& i : r.audit.items) {
    os << "  " << (i.pass ? "ok   " : "FAIL ") << i.name;
    if (!i.witnesses.empty()) os << " [" << join(i.witnesses, ", ") << "]";
    os << "\n";
  }
  for (const auto& n : r.notes) os << "note       " << n << "\n";
  return os.str();
}

std::string error_json(const std::string& kind, const std::string& message,
                       const std::vector<std::string>& witnesses) {
  json j = {{"error", {{"kind", kind}, {"message", message}, {"witnesses", witnesses}}}};
  return j.dump();
}

}  // namespace octo
