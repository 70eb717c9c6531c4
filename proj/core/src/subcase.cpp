#include "octo/subcase.hpp"

#include <algorithm>
#include <sstream>

#include "octo/case_tables.hpp"
#include "octo/errors.hpp"

namespace octo {

namespace {

// Nodes and foci are topologically alike, so only the role of a point is kept.
std::string point_class(const SingularPoint& p, bool reverse) {
  const LocalType t = reverse ? reversed(p.report.type) : p.report.type;
  const char* role = is_attractor(t) ? "A" : is_repeller(t) ? "R" : t == LocalType::saddle ? "S" : "N";
  return std::string(p.report.at_infinity() ? "I" : "F") + role;
}

std::string endpoint_class(const SeparatrixSkeleton& sk, const Separatrix& s, bool reverse) {
  if (s.kind == EndpointKind::cycle) return s.endpoint;
  if (s.kind == EndpointKind::unresolved) return "?";
  const SingularPoint* p = sk.find(s.endpoint);
  return p ? point_class(*p, reverse) : "?";
}

std::string signature_one(const SeparatrixSkeleton& sk, bool reverse) {
  std::vector<std::string> saddles;
  for (const auto& p : sk.singularities) {
    if (p.report.type != LocalType::saddle) continue;
    std::vector<std::string> un, st;
    for (const auto& s : sk.separatrices) {
      if (s.saddle != p.report.id) continue;
      const bool unstable = (s.direction > 0) != reverse;
      (unstable ? un : st).push_back(endpoint_class(sk, s, reverse));
    }
    std::sort(un.begin(), un.end());
    std::sort(st.begin(), st.end());
    std::ostringstream os;
    os << (p.report.at_infinity() ? "IS" : "FS") << "{u:";
    for (const auto& e : un) os << e << ",";
    os << "s:";
    for (const auto& e : st) os << e << ",";
    os << "}";
    saddles.push_back(os.str());
  }
  std::sort(saddles.begin(), saddles.end());
  // Cyclic sequence at infinity, minimized over rotations and reflections.
  std::vector<std::string> ring;
  for (const auto& p : sk.singularities) {
    if (p.report.at_infinity()) ring.push_back(point_class(p, reverse));
  }
  std::string best;
  const std::size_t n = ring.size();
  for (int refl = 0; refl < 2; ++refl) {
    for (std::size_t r = 0; r < n; ++r) {
      std::string s;
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t idx = refl ? (r + n - k) % n : (r + k) % n;
        s += ring[idx] + " ";
      }
      if (best.empty() || s < best) best = s;
    }
  }
  std::string out = "ring[" + best + "]";
  for (const auto& s : saddles) out += s;
  return out;
}

}  // namespace

std::string skeleton_signature(const SeparatrixSkeleton& sk) {
  return std::min(signature_one(sk, false), signature_one(sk, true));
}

SubcaseFeatures subcase_features(const SeparatrixSkeleton& sk) {
  SubcaseFeatures f;
  for (const auto& p : sk.singularities) {
    if (p.report.type != LocalType::saddle) continue;
    if (p.report.at_infinity()) {
      ++f.infinite_saddles;
      for (const auto& s : sk.separatrices) {
        if (s.saddle != p.report.id || s.along_infinity || s.kind != EndpointKind::singularity) continue;
        const SingularPoint* e = sk.find(s.endpoint);
        if (!e || e->report.at_infinity()) continue;
        ++f.transverse_to_finite;
        if (p.report.chart == Chart::U1) f.u1_to_finite = true;
        if (p.report.chart == Chart::V1) f.v1_to_finite = true;
      }
      continue;
    }
    int finite = 0;
    for (const auto& s : sk.separatrices) {
      if (s.saddle != p.report.id || s.kind != EndpointKind::singularity) continue;
      const SingularPoint* e = sk.find(s.endpoint);
      if (e && !e->report.at_infinity()) ++finite;
    }
    if (finite == 4) ++f.closed_saddles;
  }
  return f;
}

namespace {

bool crosswise_row(const std::string& row) {
  return row == "4.6a.i" || row == "4.6a.ii" || row == "4.9a.i" || row == "4.9a.ii";
}

// Subcase index, or 0 when the pattern fits none of the row's subcases.
int subcase_index(const CaseRow& row, const SubcaseFeatures& f) {
  const std::string label(row.label);
  if (crosswise_row(label)) {
    if (f.closed_saddles != 1 && f.closed_saddles != 2) return 0;
    const bool first_pattern = f.closed_saddles == 2;
    const bool first_row = label.back() == 'i' && label[label.size() - 2] == '.';
    return first_pattern == first_row ? 1 : 2;
  }
  if (f.infinite_saddles != 2) return 0;
  if (row.subcases == 4) {
    if (f.transverse_to_finite == 2) return 1;
    if (f.transverse_to_finite == 0) return 4;
    return f.u1_to_finite ? 3 : 2;
  }
  if (f.transverse_to_finite == 1) return 1;
  if (f.transverse_to_finite == 0) return 2;
  return 0;
}

}  // namespace

CaseLabel resolve_subcase(const CaseLabel& label, const SeparatrixSkeleton& sk) {
  if (label.resolved) return label;
  const CaseRow* row = find_row(label.row);
  if (!row) throw Error(ErrorKind::hypotheses_not_met, "subcase resolution needs a table row");
  CaseLabel out = label;
  out.candidates = portrait_labels(*row);
  if (sk.ambiguous()) {
    std::vector<std::string> witnesses;
    for (const auto& s : sk.separatrices) {
      if (s.ambiguous || s.kind == EndpointKind::unresolved) {
        witnesses.push_back(s.saddle + (s.direction > 0 ? "+" : "-") + ">" +
                            (s.near_miss.empty() ? std::string("?") : s.near_miss));
      }
    }
    throw Error(ErrorKind::ambiguous_skeleton, "separatrix endpoint undecided in case " + label.row, witnesses);
  }
  const int k = subcase_index(*row, subcase_features(sk));
  if (k == 0) return out;
  out.portrait = portrait_label(*row, k);
  out.resolved = true;
  out.candidates = {out.portrait};
  return out;
}

CaseLabel classify_full(const CanonicalSystem& c, const SkeletonOptions& opt, const Tolerances& tol,
                        SeparatrixSkeleton* out) {
  const NormalizedSystem n = normalize_to_family(c, tol);
  CaseLabel label = classify_case(n, tol);
  if (label.position != 1 || label.resolved) return label;
  SkeletonOptions local = opt;
  local.include_infinity_arcs = false;
  SeparatrixSkeleton sk = trace_separatrices(n.system, local, tol);
  label = resolve_subcase(label, sk);
  if (out) *out = std::move(sk);
  return label;
}

}  // namespace octo
