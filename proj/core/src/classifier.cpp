#include "octo/classifier.hpp"

#include <cmath>

#include "octo/equivalence.hpp"
#include "octo/errors.hpp"
#include "octo/genericity.hpp"
#include "octo/singularities.hpp"

namespace octo {

namespace {

const char* kPairNames[8] = {"q1-p1", "q1-p2", "q2-p2", "q2-p3", "q3-p3", "q3-p4", "q4-p4", "q4-p1"};

int sign_of(double v, double tol) { return std::fabs(v) <= tol ? 0 : (v > 0.0 ? 1 : -1); }

}  // namespace

CaseLabel classify_case(const NormalizedSystem& n, const Tolerances& tol) {
  CaseLabel label;
  label.position = n.position;
  label.family = n.family;
  if (n.position != 1) return label;

  const CanonicalSystem& c = n.system;
  const RelativePositions rp = relative_positions(c, tol);
  if (rp.any_equal()) {
    std::vector<std::string> w;
    for (int i = 0; i < 8; ++i) {
      if (rp.sign[i] == Cmp::equal) w.emplace_back(kPairNames[i]);
    }
    throw Error(ErrorKind::non_generic, "a q-singularity coincides with a p-singularity", w);
  }
  const auto cols = position_columns(rp, n.family);
  const Discriminants d = discriminants(c);
  const double dt = tol.discriminant;
  struct Feature {
    const char* name;
    int sign;
  };
  const Feature feats[6] = {{"detA", sign_of(d.detA, dt)},
                            {"T", sign_of(d.T, dt)},
                            {"K", sign_of(d.K, dt)},
                            {"Delta", sign_of(d.Delta, dt)},
                            {"b10-a01", d.sign_b10_minus_a01},
                            {"delta", std::isinf(d.delta) ? 1 : sign_of(d.delta, dt)}};

  std::vector<const CaseRow*> matches;
  bool position_seen = false;
  for (const CaseRow* r : rows_of_family(n.family)) {
    if (r->positions != cols) continue;
    position_seen = true;
    const int want[6] = {r->detA, r->T, r->K, r->Delta, r->b10_minus_a01, r->delta};
    bool ok = true;
    for (int i = 0; i < 6 && ok; ++i) {
      if (want[i] == 0) continue;
      if (feats[i].sign == 0) {
        throw Error(ErrorKind::non_generic, std::string("discriminant vanishes: ") + feats[i].name,
                    {feats[i].name});
      }
      ok = feats[i].sign == want[i];
    }
    if (ok) matches.push_back(r);
  }
  if (!position_seen) {
    throw Error(ErrorKind::unrealizable_position, "relative position of p and q singularities matches no table row");
  }
  if (matches.size() != 1) {
    throw Error(ErrorKind::unrealizable_position,
                matches.empty() ? "no table row matches the sign conditions" : "several table rows match");
  }
  const CaseRow& row = *matches.front();
  label.row = row.label;
  if (row.subcases == 1) {
    label.portrait = row.label;
    label.resolved = true;
  } else {
    label.candidates = portrait_labels(row);
  }
  return label;
}

PortraitClass portrait_class(const CaseLabel& label, bool time_reversed) {
  if (label.position != 1 || !label.resolved) {
    throw Error(ErrorKind::hypotheses_not_met, "portrait class needs a resolved label in the central position");
  }
  PortraitClass pc;
  pc.family_class = family_class(label.portrait);
  pc.disk_class = disk_class(label.portrait);
  pc.square_class = square_class(label.portrait);
  pc.stability_flipped = time_reversed;
  pc.chain = equivalence_chain(label.portrait);
  return pc;
}

}  // namespace octo
