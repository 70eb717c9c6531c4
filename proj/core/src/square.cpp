#include "octo/square.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "octo/case_tables.hpp"
#include "octo/equivalence.hpp"
#include "octo/errors.hpp"
#include "octo/genericity.hpp"
#include "octo/limit_cycle.hpp"

namespace octo {

namespace {

char role_of(LocalType t) {
  if (is_attractor(t)) return 'A';
  if (is_repeller(t)) return 'R';
  if (t == LocalType::saddle) return 'S';
  return '?';
}

char flip(char r) { return r == 'A' ? 'R' : r == 'R' ? 'A' : r; }

}  // namespace

SquareSkeleton square_skeleton(const CanonicalSystem& c, const SeparatrixSkeleton& sk, const Tolerances& tol) {
  SquareSkeleton out;
  const double x0 = -c.alpha, x1 = 1.0 - c.alpha, y0 = -c.beta, y1 = 1.0 - c.beta;
  const double cx = 0.5 - c.alpha, cy = 0.5 - c.beta;
  const double eps = 1e-12;
  auto inside = [&](Vec2 p, double margin) {
    return p.x > x0 + margin && p.x < x1 - margin && p.y > y0 + margin && p.y < y1 - margin;
  };
  auto closed = [&](Vec2 p) { return p.x >= x0 - eps && p.x <= x1 + eps && p.y >= y0 - eps && p.y <= y1 + eps; };
  std::map<std::string, int> index;
  for (const auto& s : sk.singularities) {
    if (s.report.at_infinity() || !closed(s.report.location)) continue;
    const Vec2 p = s.report.location;
    if (s.report.id == "origin") {
      out.origin_role = role_of(s.report.type);
      continue;
    }
    const bool corner = (std::fabs(p.x - x0) < eps || std::fabs(p.x - x1) < eps) &&
                        (std::fabs(p.y - y0) < eps || std::fabs(p.y - y1) < eps);
    SquarePoint q{s.report.id, role_of(s.report.type), std::atan2(p.y - cy, p.x - cx)};
    if (corner && q.role == 'S') q.role = 'H';
    out.boundary.push_back(q);
  }
  std::sort(out.boundary.begin(), out.boundary.end(),
            [](const SquarePoint& a, const SquarePoint& b) { return a.angle < b.angle; });
  for (std::size_t i = 0; i < out.boundary.size(); ++i) index[out.boundary[i].id] = static_cast<int>(i);
  index["origin"] = -1;

  const PolycycleReport poly = polycycle_report(c, tol);
  if (out.origin_role != 'S' && poly.exists) {
    const CycleResult cyc = detect_limit_cycle(c, tol);
    if (cyc.found) out.cycle_role = cyc.stability == CycleStability::stable ? 'A' : 'R';
  }
  for (const auto& s : sk.separatrices) {
    auto from = index.find(s.saddle);
    if (from == index.end()) continue;
    const Vec2 launch = plane_of_sphere(s.launch);
    if (!inside(launch, 1e-10)) continue;  // skips separatrices along the edges
    int to = -2;
    if (s.kind == EndpointKind::singularity) {
      auto it = index.find(s.endpoint);
      if (it == index.end()) throw Error(ErrorKind::ambiguous_skeleton, "separatrix leaves the square: " + s.saddle);
      to = it->second;
    } else if (s.kind == EndpointKind::unresolved) {
      throw Error(ErrorKind::ambiguous_skeleton, "separatrix endpoint undecided: " + s.saddle, {s.saddle});
    }
    out.links.push_back({from->second, s.direction, to});
  }
  return out;
}

std::string square_signature(const SquareSkeleton& s) {
  const int n = static_cast<int>(s.boundary.size());
  std::string best;
  for (int rev = 0; rev < 2; ++rev) {
    for (int refl = 0; refl < 2; ++refl) {
      for (int r = 0; r < std::max(n, 1); ++r) {
        // Position k of the transformed sequence holds original point perm(k).
        auto image = [&](int i) {
          if (i < 0) return i;
          return refl ? ((r - i) % n + n) % n : ((i - r) % n + n) % n;
        };
        std::vector<char> roles(n);
        for (int i = 0; i < n; ++i) {
          const char role = rev ? flip(s.boundary[i].role) : s.boundary[i].role;
          roles[image(i)] = role;
        }
        std::vector<std::string> links;
        for (const auto& l : s.links) {
          std::ostringstream os;
          os << image(l.from) << (((l.direction > 0) != (rev == 1)) ? "u" : "s") << image(l.to);
          links.push_back(os.str());
        }
        std::sort(links.begin(), links.end());
        std::string str(roles.begin(), roles.end());
        str += "|O";
        str += rev ? flip(s.origin_role) : s.origin_role;
        str += "|C";
        str += rev ? flip(s.cycle_role) : s.cycle_role;
        for (const auto& l : links) str += "|" + l;
        if (best.empty() || str < best) best = str;
      }
    }
  }
  return best;
}

std::string square_signature(const CanonicalSystem& c, const Tolerances& tol) {
  SkeletonOptions opt;
  opt.keep_paths = false;
  opt.include_infinity_arcs = false;
  return square_signature(square_skeleton(c, trace_separatrices(c, opt, tol), tol));
}

namespace {

// Square classes by row; an entry that is not a row label names a single
// portrait. Rows sharing a square signature are grouped together. Three
// signatures carry two names each, separated by family (1.4a from the family
// 2/4 rows, 1.6a from the family 2 rows) or by the crosswise subcase pairing
// of the 4.6a and 4.9a rows.
const std::vector<std::pair<std::string, std::vector<std::string>>> kSquareGroups = {
    {"1.1", {"1.1", "2.1a", "2.1b", "2.1c"}},
    {"1.2", {"1.2", "1.3", "1.5", "1.8", "2.2a", "2.2b", "2.2c", "2.3a", "2.3b", "2.3c", "2.5a", "2.5b", "2.5c",
             "2.8a", "2.8b", "2.8c"}},
    {"1.4a", {"1.4a", "1.11a"}},
    {"1.4b", {"1.4b", "1.11b", "3.4", "3.12", "4.4a.ii", "4.11a.i"}},
    {"1.6a", {"1.6a", "1.9a"}},
    {"1.6b", {"1.6b", "1.9b"}},
    {"1.7", {"1.7", "1.10", "1.12", "1.13", "3.7", "3.11", "3.13", "3.14"}},
    {"1.14", {"1.14", "3.15"}},
    {"2.6a1", {"2.6a", "2.6b", "2.6c", "2.9a", "2.9b", "2.9c", "2.10a", "2.10b", "2.10c"}},
    {"2.7a", {"2.7a", "2.7b", "2.7c", "2.11a", "2.11b", "2.11c", "2.13a", "2.13b", "2.13c", "2.14a", "2.14b",
              "2.14c", "4.7a", "4.7b", "4.7c", "4.10a", "4.10b", "4.10c", "4.12a", "4.12b", "4.12c", "4.13a",
              "4.13b", "4.13c"}},
    {"2.15a", {"2.15a", "2.15b", "2.15c", "4.14a", "4.14b", "4.14c"}},
    {"3.1", {"3.1", "4.1a.i", "4.1b.ii"}},
    {"3.2", {"3.2", "3.3", "3.5", "3.8", "4.2b", "4.3b", "4.5a", "4.8a"}},
    {"3.6", {"3.6", "3.9", "3.10"}},
    {"4.1b.i", {"4.1a.ii", "4.1b.i"}},
    {"4.2a", {"4.2a", "4.3a", "4.5b", "4.8b"}},
    {"4.4a.i", {"4.4a.i", "4.11a.ii"}},
    {"4.6a.i.1", {"4.6a.i.1", "4.6a.ii.2", "4.9a.i.1", "4.9a.ii.2"}},
    {"4.6a.ii.1", {"4.6a.i.2", "4.6a.ii.1", "4.9a.i.2", "4.9a.ii.1"}},
    {"4.6b.i.1", {"2.4a", "2.4b", "2.4c", "2.12a", "2.12b", "2.12c", "4.4b.i", "4.4b.ii", "4.4b.iii", "4.6b.i",
                  "4.6b.ii", "4.6b.iii", "4.9b.i", "4.9b.ii", "4.9b.iii", "4.11b.i", "4.11b.ii", "4.11b.iii"}},
};

}  // namespace

const std::map<std::string, std::string>& square_class_table() {
  static const std::map<std::string, std::string> table = [] {
    std::map<std::string, std::string> t;
    for (const auto& [name, members] : kSquareGroups) {
      for (const auto& m : members) {
        if (const CaseRow* r = find_row(m)) {
          for (const auto& p : portrait_labels(*r)) t[p] = name;
        } else {
          t[m] = name;
        }
      }
    }
    return t;
  }();
  return table;
}

}  // namespace octo
