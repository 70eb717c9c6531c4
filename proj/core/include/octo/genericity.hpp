#pragma once

#include <array>
#include <limits>
#include <string>
#include <vector>

#include "octo/canonical.hpp"
#include "octo/replicator.hpp"
#include "octo/singularities.hpp"
#include "octo/tolerances.hpp"

namespace octo {

struct GenericityCheck {
  bool pass = true;
  std::vector<std::string> witnesses;  // vanishing factors among "a10", "b01", "detA"
  double product = 0.0;                // a10 * b01 * det A
};

GenericityCheck necessary_condition(const RawSystem& s, const Tolerances& tol = {});
GenericityCheck necessary_condition(const CanonicalSystem& c, const Tolerances& tol = {});

struct Discriminants {
  double detA = 0.0;
  double Delta = 0.0;
  int sign_b10_minus_a01 = 0;
  double T = 0.0;
  double K = 0.0;
  double delta = std::numeric_limits<double>::infinity();
};

Discriminants discriminants(const CanonicalSystem& c);

enum class CycleStability { stable, unstable, inconclusive };

const char* to_string(CycleStability s);

// Polycycle formed by the four sides of the central square.
struct PolycycleReport {
  bool exists = false;
  std::array<std::string, 4> saddles{"p1", "p2", "p3", "p4"};
  std::array<double, 4> ratios{};  // |stable eigenvalue| / unstable eigenvalue
  double r_gamma = 0.0;
  CycleStability stability = CycleStability::inconclusive;
};

PolycycleReport polycycle_report(const CanonicalSystem& c, const Tolerances& tol = {});

// Requires the origin in the central square, an attracting or repelling
// origin and a polycycle around it; throws hypotheses_not_met otherwise.
// A cycle exists exactly when the origin and the polycycle have the same
// stability. On the family where the polycycle ratio and K agree in sign
// this is T * K < 0.
bool limit_cycle_exists(const CanonicalSystem& c, const Tolerances& tol = {});

struct AuditItem {
  std::string name;
  bool pass = true;
  bool numerical = false;
  std::vector<std::string> witnesses;
  std::string detail;
};

struct AuditReport {
  bool pass = true;
  std::vector<AuditItem> items;
};

// Checks hyperbolicity of every singularity, the limit-cycle hyperbolicity
// guaranteed for this class of fields, the absence of saddle connections
// outside the invariant lines (numerically, when numerical is set) and the
// polycycle ratio away from one.
AuditReport genericity_audit(const CanonicalSystem& c, bool numerical = true, const Tolerances& tol = {});

}  // namespace octo
