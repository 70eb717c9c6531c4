// Acceptance run: one PASS/FAIL line per criterion. The exit status is zero
// unless a criterion fails that is not listed as a known failure.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "octo/case_tables.hpp"
#include "octo/classifier.hpp"
#include "octo/compactification.hpp"
#include "octo/equivalence.hpp"
#include "octo/errors.hpp"
#include "octo/genericity.hpp"
#include "octo/integrate.hpp"
#include "octo/limit_cycle.hpp"
#include "octo/omega.hpp"
#include "octo/sampling.hpp"
#include "octo/subcase.hpp"

using namespace octo;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
  bool known_failure = false;
};

CanonicalSystem make(double al, double be, double a10, double a01, double b10, double b01) {
  CanonicalSystem c;
  c.alpha = al;
  c.beta = be;
  c.a10 = a10;
  c.a01 = a01;
  c.b10 = b10;
  c.b01 = b01;
  return c;
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

int sgn(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

// ---------------------------------------------------------------------------

Outcome genericity_gate() {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  const auto t0 = Clock::now();
  int rejected = 0, total = 0;
  for (int k = 0; k < 10000; ++k) {
    RawSystem s{u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)};
    std::string forced;
    switch (k % 3) {
      case 0: s.a10 = 0.0; forced = "a10"; break;
      case 1: s.b01 = 0.0; forced = "b01"; break;
      default:
        // Second row proportional to the first.
        s.b10 = 0.7 * s.a10;
        s.b01 = 0.7 * s.a01;
        forced = "detA";
        break;
    }
    ++total;
    const GenericityCheck g = necessary_condition(s);
    const bool named = std::find(g.witnesses.begin(), g.witnesses.end(), forced) != g.witnesses.end();
    if (!g.pass && named) ++rejected;
  }
  const double t = seconds_since(t0);
  return {rejected == total && t < 5.0,
          std::to_string(rejected) + "/" + std::to_string(total) + " rejected with the forced witness in " +
              fmt("%.3f s", t)};
}

// Rows whose inequalities hold, from the q and p coordinates and the
// discriminant formulas written out here.
std::vector<std::string> oracle_rows(const CanonicalSystem& c, int family) {
  const double al = c.alpha, be = c.beta;
  const double q1x = c.a01 * be / c.a10, q3x = c.a01 * (be - 1.0) / c.a10;
  const double q2y = c.b10 * (al - 1.0) / c.b01, q4y = c.b10 * al / c.b01;
  auto cmp = [](double q, double p) { return q < p ? Cmp::less : Cmp::greater; };
  std::array<Cmp, 4> cols;
  if (family == 1 || family == 4) cols = {cmp(q1x, 1 - al), cmp(q2y, -be), cmp(q3x, -al), cmp(q4y, 1 - be)};
  else cols = {cmp(q1x, 1 - al), cmp(q2y, 1 - be), cmp(q3x, -al), cmp(q4y, -be)};
  const double ga = al * (al - 1.0), gb = be * (be - 1.0);
  const int feats[6] = {sgn(c.a10 * c.b01 - c.a01 * c.b10),
                        sgn(c.a10 * ga + c.b01 * gb),
                        sgn(c.a01 * c.b01 * gb - c.a10 * c.b10 * ga),
                        sgn((c.b10 - c.a01) * (c.b10 - c.a01) + 4 * c.a10 * c.b01),
                        sgn(c.b10 - c.a01),
                        c.a01 == 0.0 ? 1 : sgn(2 * std::fabs(c.b01) / c.a01 + c.b10 - c.a01)};
  std::vector<std::string> out;
  for (const CaseRow& r : case_rows()) {
    if (r.family != family || r.positions != cols) continue;
    const int want[6] = {r.detA, r.T, r.K, r.Delta, r.b10_minus_a01, r.delta};
    bool ok = true;
    for (int i = 0; i < 6; ++i) ok = ok && (want[i] == 0 || want[i] == feats[i]);
    if (ok) out.push_back(r.label);
  }
  return out;
}

Outcome table_fidelity() {
  const auto t0 = Clock::now();
  const RowSearch rs = search_rows(42, 1);
  int ok = 0;
  std::vector<std::string> bad;
  for (const CaseRow& row : case_rows()) {
    const auto it = rs.samples.find(row.label);
    if (it == rs.samples.end() || it->second.empty()) {
      bad.push_back(std::string(row.label) + ":missing");
      continue;
    }
    const CanonicalSystem& s = it->second.front();
    try {
      const NormalizedSystem n = normalize_to_family(s);
      const CaseLabel l = classify_case(n);
      const auto oracle = oracle_rows(n.system, n.family);
      if (l.row == row.label && oracle.size() == 1 && oracle.front() == row.label) ++ok;
      else bad.push_back(row.label);
    } catch (const Error& e) {
      bad.push_back(std::string(row.label) + ":" + e.what());
    }
  }
  const double t = seconds_since(t0);
  const int rows = static_cast<int>(case_rows().size());
  std::string detail = std::to_string(ok) + "/" + std::to_string(rows) + " rows constructed and confirmed (" +
                       std::to_string(rs.draws) + " draws, " + fmt("%.1f s", t) + ")";
  if (!bad.empty()) detail += ", first mismatch " + bad.front();
  return {ok == rows && rows == 125 && t < 120.0, detail};
}

Outcome class_counts() {
  const std::size_t f1 = family_partition(1).sets().size(), f2 = family_partition(2).sets().size();
  const std::size_t f3 = family_partition(3).sets().size(), f4 = family_partition(4).sets().size();
  const std::size_t disk = disk_partition().sets().size();
  std::set<std::string> square;
  for (const auto& [portrait, cls] : square_class_table()) square.insert(cls);
  char buf[160];
  std::snprintf(buf, sizeof buf, "families %zu/%zu/%zu/%zu, disk %zu, square %zu", f1, f2, f3, f4, disk,
                square.size());
  return {f1 == 8 && f2 == 4 && f3 == 6 && f4 == 14 && disk == 25 && square.size() == 20, buf};
}

Outcome cycle_criterion() {
  int agree = 0, total = 0, skipped = 0;
  std::string first;
  for (double b01 : {-0.5, -2.0}) {
    for (int i = 0; i < 10; ++i) {
      for (int j = 0; j < 10; ++j) {
        const double a01 = 1.0 + std::pow(10.0, -1.0 + 2.5 * i / 9.0);
        const double r = -1.0 - std::pow(10.0, -1.0 + 2.5 * j / 9.0);
        const CanonicalSystem c = make(0.5, 0.5, 1.0, a01, -r * b01, b01);
        // alpha = beta = 1/2: T = -(a10 + b01) / 4, K = (a10 b10 - a01 b01) / 4.
        const double T = -(c.a10 + c.b01) / 4.0;
        const double K = (c.a10 * c.b10 - c.a01 * c.b01) / 4.0;
        if (std::fabs(T * K) < 1e-4) {
          ++skipped;
          continue;
        }
        ++total;
        const bool predicted = T * K < 0.0;
        bool detected = false;
        try {
          detected = detect_limit_cycle(c).found;
        } catch (const Error&) {
          detected = !predicted;
        }
        if (detected == predicted) ++agree;
        else if (first.empty()) first = fmt(" first mismatch a01=%g", a01) + fmt(" r=%g", r);
      }
    }
  }
  return {agree == total && total > 0, std::to_string(agree) + "/" + std::to_string(total) +
                                           " cells agree (" + std::to_string(skipped) + " near |T K| = 0 skipped)" +
                                           first};
}

Outcome realizability() {
  auto family = [](double l) { return make(0.5, 0.5, l, 5.0, 1.0, -0.5); };
  auto portrait = [](const CanonicalSystem& c) {
    try {
      const CaseLabel l = classify_full(c);
      return l.resolved ? l.portrait : l.row + "?";
    } catch (const Error& e) {
      return std::string(to_string(e.kind()));
    }
  };
  const std::string lo = portrait(family(0.05));
  const std::string hi = portrait(family(4.95));
  const std::string hi2 = portrait(family(4.995));
  const std::string beta = portrait(make(0.5, 0.99, 0.099995, 5.0, 1.0, -0.5));

  // Where the upper subcase starts along the family.
  double a = 4.95, b = 4.995;
  if (hi2 == "2.1a4" && hi != "2.1a4") {
    for (int k = 0; k < 30; ++k) {
      const double m = 0.5 * (a + b);
      (portrait(family(m)) == "2.1a4" ? b : a) = m;
    }
  }
  Outcome o;
  o.pass = lo == "2.1a1" && hi == "2.1a4" && beta == "2.1a3";
  o.detail = "lambda=0.05 -> " + lo + ", lambda=4.95 -> " + hi + ", beta variant -> " + beta +
             "; lambda=4.995 -> " + hi2 + fmt(", 2.1a4 begins near lambda=%.5f", b);
  // The window where 2.1a4 appears is narrower than 4.95..5 for this family.
  o.known_failure = !o.pass && lo == "2.1a1" && beta == "2.1a3" && hi2 == "2.1a4";
  return o;
}

Outcome corruption() {
  const RawSystem s = reduce_two_player(corruption_game({}));
  const auto eq = square_equilibria(s);
  // Attractors among the equilibria, from finite-difference Jacobians.
  std::vector<std::string> attractors;
  for (const auto& e : eq) {
    const double h = 1e-6;
    const Vec2 p = e.location;
    const Vec2 fxp = s.field({p.x + h, p.y}), fxm = s.field({p.x - h, p.y});
    const Vec2 fyp = s.field({p.x, p.y + h}), fym = s.field({p.x, p.y - h});
    const Mat2 J{(fxp.x - fxm.x) / (2 * h), (fyp.x - fym.x) / (2 * h), (fxp.y - fxm.y) / (2 * h),
                 (fyp.y - fym.y) / (2 * h)};
    const EigenPair ev = eigenvalues(J);
    if (ev.l1.real() < 0.0 && ev.l2.real() < 0.0) attractors.push_back(e.id);
  }
  std::map<std::string, int> counts;
  for (const auto& o : omega_grid(s, 20)) counts[o.limit]++;
  const int c00 = counts["(0,0)"], c11 = counts["(1,1)"];
  const bool two = attractors == std::vector<std::string>{"(0,0)", "(1,1)"} ||
                   attractors == std::vector<std::string>{"(1,1)", "(0,0)"};
  std::string detail = "attractors";
  for (const auto& a : attractors) detail += " " + a;
  detail += "; omega-limits (0,0)=" + std::to_string(c00) + " (1,1)=" + std::to_string(c11) + ", " +
            std::to_string(c00 + c11) + "/400";
  return {two && c00 + c11 == 400 && c00 > 0 && c11 > 0, detail};
}

Outcome cherkas() {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ab(0.02, 0.98), mag(-2.0, 2.0);
  int n = 0, mismatches = 0, draws = 0;
  while (n < 500 && draws < 1000000) {
    ++draws;
    const double a10 = std::pow(10.0, mag(rng)), a01 = std::pow(10.0, mag(rng));
    const double b10 = -std::pow(10.0, mag(rng)), b01 = -std::pow(10.0, mag(rng));
    const CanonicalSystem c = make(ab(rng), ab(rng), a10, a01, b10, b01);
    const PolycycleReport p = polycycle_report(c);
    if (!p.exists) continue;
    const double ga = c.alpha * (c.alpha - 1.0), gb = c.beta * (c.beta - 1.0);
    const double K = a01 * b01 * gb - a10 * b10 * ga;
    if (std::fabs(K) < 1e-10) continue;
    ++n;
    if ((p.r_gamma > 1.0) != (K > 0.0)) ++mismatches;
  }
  return {n == 500 && mismatches == 0,
          std::to_string(n) + " polycycle configurations, " + std::to_string(mismatches) + " mismatches"};
}

// Field of the canonical system written out directly.
Vec2 cubic(const CanonicalSystem& c, Vec2 p) {
  return {(p.x + c.alpha) * (p.x + c.alpha - 1.0) * (c.a10 * p.x + c.a01 * p.y),
          (p.y + c.beta) * (p.y + c.beta - 1.0) * (c.b10 * p.x + c.b01 * p.y)};
}

Outcome symmetry() {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  long evals = 0, failures = 0;
  for (int k = 0; k < 1000; ++k) {
    const CanonicalSystem c = make(u(rng), u(rng), u(rng), u(rng), u(rng), u(rng));
    for (MapId id : {MapId::phi1, MapId::phi2, MapId::phi3, MapId::phi4, MapId::phi5}) {
      const CanonicalSystem m = apply_symmetry(c, id);
      for (int j = 0; j < 20; ++j) {
        // X_phi(phi(z)) = D phi X(z) with phi linear and an involution.
        const Vec2 z{u(rng), u(rng)};
        const Vec2 w = map_point(id, z);
        const Vec2 lhs = cubic(m, w);
        const Vec2 rhs = map_point(id, cubic(c, z));
        ++evals;
        const double scale = 1.0 + std::hypot(rhs.x, rhs.y);
        if (std::hypot(lhs.x - rhs.x, lhs.y - rhs.y) > 1e-12 * scale) ++failures;
      }
    }
  }
  return {evals == 100000 && failures == 0,
          std::to_string(evals) + " evaluations, " + std::to_string(failures) + " failures"};
}

double segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a, ap = p - a;
  const double L = ab.x * ab.x + ab.y * ab.y;
  const double t = L > 0.0 ? std::clamp((ap.x * ab.x + ap.y * ab.y) / L, 0.0, 1.0) : 0.0;
  const Vec2 q = a + t * ab;
  return std::hypot(p.x - q.x, p.y - q.y);
}

double directed(const std::vector<Vec2>& from, const std::vector<Vec2>& to) {
  double worst = 0.0;
  for (const Vec2& p : from) {
    double best = INFINITY;
    for (std::size_t i = 1; i < to.size(); ++i) best = std::min(best, segment_distance(p, to[i - 1], to[i]));
    worst = std::max(worst, best);
  }
  return worst;
}

Vec2 disk(Vec2 p) {
  const double s = std::sqrt(1.0 + p.x * p.x + p.y * p.y);
  return {p.x / s, p.y / s};
}

// Chart orbit by classical RK4 in chart time with planar time carried along
// (dt/dtau = v^2), stopped when planar time reaches T.
std::vector<Vec2> chart_orbit(const CanonicalSystem& c, Chart chart, Vec2 p, double T) {
  std::array<double, 3> y{0, 0, 0};
  const Vec2 uv = plane_to_chart(chart, p);
  y = {uv.x, uv.y, 0.0};
  auto f = [&](const std::array<double, 3>& s) {
    const Vec2 r = chart_rhs(c, chart, s[0], s[1]);
    return std::array<double, 3>{r.x, r.y, s[1] * s[1]};
  };
  std::vector<Vec2> out{disk(chart_to_plane(chart, y[0], y[1]))};
  const double h = 1e-4;
  for (int n = 0; n < 10000000 && y[2] < T; ++n) {
    auto add = [](const std::array<double, 3>& a, const std::array<double, 3>& k, double s) {
      return std::array<double, 3>{a[0] + s * k[0], a[1] + s * k[1], a[2] + s * k[2]};
    };
    const auto k1 = f(y), k2 = f(add(y, k1, h / 2)), k3 = f(add(y, k2, h / 2)), k4 = f(add(y, k3, h));
    std::array<double, 3> next;
    for (int i = 0; i < 3; ++i) next[i] = y[i] + h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    if (next[2] > T) {
      // Last partial step, by linear interpolation in planar time.
      const double w = (T - y[2]) / (next[2] - y[2]);
      for (int i = 0; i < 3; ++i) next[i] = y[i] + w * (next[i] - y[i]);
    }
    y = next;
    out.push_back(disk(chart_to_plane(chart, y[0], y[1])));
  }
  return out;
}

Outcome chart_consistency() {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> ab(0.1, 0.9), k(-2.0, 2.0), r(3.0, 10.0), ang(0.0, 2.0 * M_PI);
  double worst = 0.0;
  int done = 0;
  while (done < 50) {
    const CanonicalSystem c = make(ab(rng), ab(rng), k(rng), k(rng), k(rng), k(rng));
    const double rad = r(rng), th = ang(rng);
    const Vec2 p{rad * std::cos(th), rad * std::sin(th)};
    // Chart by the dominant coordinate; the invariant lines keep the orbit in it.
    Chart chart;
    if (std::fabs(p.x) >= std::fabs(p.y)) {
      chart = p.x > 0 ? Chart::U1 : Chart::V1;
      if (p.x + c.alpha > 0.0 && p.x + c.alpha < 1.0) continue;
    } else {
      chart = p.y > 0 ? Chart::U2 : Chart::V2;
      if (p.y + c.beta > 0.0 && p.y + c.beta < 1.0) continue;
    }
    const double T = 0.5 / (1.0 + rad * rad);
    Controls ctl;
    ctl.abs_tol = 1e-12;
    ctl.rel_tol = 1e-12;
    ctl.max_step = 1e-3;
    ctl.max_time = T;
    PlaneTrajectory pt;
    try {
      pt = integrate(c, p, 1.0, ctl);
    } catch (const Error&) {
      continue;
    }
    if (pt.reason != Termination::max_time) continue;
    const Vec2 end = pt.points.back();
    if (std::hypot(end.x, end.y) > 1e3) continue;  // close to blow-up; the plane cannot follow
    std::vector<Vec2> plane;
    for (const Vec2& q : pt.points) plane.push_back(disk(q));
    const std::vector<Vec2> ch = chart_orbit(c, chart, p, T);
    worst = std::max({worst, directed(plane, ch), directed(ch, plane)});
    ++done;
  }
  return {worst < 1e-6, "50 trajectories, worst Hausdorff distance " + fmt("%.2e", worst)};
}

Outcome focal_branch() {
  int centres = 0, outward = 0;
  const double ks[] = {1.5, 3.0, 5.0};
  for (double k : ks) {
    // T = 0 at alpha = beta = 1/2 needs b01 = -a10; a01 = -b10 kills the focal value.
    const CycleResult r = detect_limit_cycle(make(0.5, 0.5, 1.0, k, -k, -1.0));
    if (r.center_like && !r.found) ++centres;
  }
  const std::array<std::array<double, 2>, 3> weak = {{{3.0, -1.0}, {4.0, -2.0}, {2.0, -1.5}}};
  for (const auto& w : weak) {
    // b10 b01 (a01 + b10) > 0 with b01 = -1.
    const CanonicalSystem c = make(0.5, 0.5, 1.0, w[0], w[1], -1.0);
    const ReturnSample s = return_map(c, 0.05);
    if (s.returned && s.displacement > 0.0) ++outward;
  }
  return {centres == 3 && outward == 3, std::to_string(centres) + "/3 centers detected, " +
                                            std::to_string(outward) + "/3 weak foci repel near the origin"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"genericity gate", genericity_gate},
      {"table fidelity", table_fidelity},
      {"class counts", class_counts},
      {"limit-cycle criterion vs return map", cycle_criterion},
      {"realizability sweep", realizability},
      {"corruption example", corruption},
      {"polycycle ratio sign vs K", cherkas},
      {"symmetry pushforward", symmetry},
      {"chart consistency", chart_consistency},
      {"focal-value branch", focal_branch},
  };
  int unexpected = 0, passed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %zu %s: %s [%.1f s]%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str(),
                seconds_since(t0), !o.pass && o.known_failure ? " (known)" : "");
    std::fflush(stdout);
    if (o.pass) ++passed;
    else if (!o.known_failure) ++unexpected;
  }
  std::printf("%d/%zu criteria passed, %d unexpected failures\n", passed, criteria.size(), unexpected);
  return unexpected == 0 ? 0 : 1;
}
