#include "octo/case_tables.hpp"

#include <stdexcept>

namespace octo {

namespace {

constexpr Cmp L = Cmp::less;
constexpr Cmp G = Cmp::greater;

// label, family, positions, det A, T, K, Delta, b10 - a01, delta, portraits
constexpr CaseRow kRows[] = {
    {"1.1", 1, {G, L, L, G}, -1, 0, 0, 0, 0, 0, 1},
    {"1.2", 1, {L, L, L, G}, -1, 0, 0, 0, 0, 0, 1},
    {"1.3", 1, {G, L, G, G}, -1, 0, 0, 0, 0, 0, 1},
    {"1.4a", 1, {L, L, G, G}, -1, 0, 0, 0, 0, 0, 1},
    {"1.4b", 1, {L, L, G, G}, 1, 0, 0, 0, 0, 0, 1},
    {"1.5", 1, {G, G, L, G}, -1, 0, 0, 0, 0, 0, 1},
    {"1.6a", 1, {G, G, G, G}, -1, 0, 0, 0, 0, 0, 1},
    {"1.6b", 1, {G, G, G, G}, 1, 0, 0, 0, 0, 0, 1},
    {"1.7", 1, {L, G, G, G}, 1, 0, 0, 0, 0, 0, 1},
    {"1.8", 1, {G, L, L, L}, -1, 0, 0, 0, 0, 0, 1},
    {"1.9a", 1, {L, L, L, L}, -1, 0, 0, 0, 0, 0, 1},
    {"1.9b", 1, {L, L, L, L}, 1, 0, 0, 0, 0, 0, 1},
    {"1.10", 1, {L, L, G, L}, 1, 0, 0, 0, 0, 0, 1},
    {"1.11a", 1, {G, G, L, L}, -1, 0, 0, 0, 0, 0, 1},
    {"1.11b", 1, {G, G, L, L}, 1, 0, 0, 0, 0, 0, 1},
    {"1.12", 1, {L, G, L, L}, 1, 0, 0, 0, 0, 0, 1},
    {"1.13", 1, {G, G, G, L}, 1, 0, 0, 0, 0, 0, 1},
    {"1.14", 1, {L, G, G, L}, 1, 0, 0, 0, 0, 0, 1},
    {"2.1a", 2, {G, G, L, L}, 0, 0, 0, 1, -1, 0, 4},
    {"2.1b", 2, {G, G, L, L}, 0, 0, 0, 1, 1, 0, 4},
    {"2.1c", 2, {G, G, L, L}, 0, 0, 0, -1, 0, 0, 1},
    {"2.2a", 2, {L, G, L, L}, 0, 0, 0, 1, -1, 0, 2},
    {"2.2b", 2, {L, G, L, L}, 0, 0, 0, 1, 1, 0, 4},
    {"2.2c", 2, {L, G, L, L}, 0, 0, 0, -1, 0, 0, 1},
    {"2.3a", 2, {G, G, G, L}, 0, 0, 0, 1, -1, 0, 2},
    {"2.3b", 2, {G, G, G, L}, 0, 0, 0, 1, 1, 0, 4},
    {"2.3c", 2, {G, G, G, L}, 0, 0, 0, -1, 0, 0, 1},
    {"2.4a", 2, {L, G, G, L}, 0, 0, 0, 1, -1, 0, 1},
    {"2.4b", 2, {L, G, G, L}, 0, 0, 0, 1, 1, 0, 4},
    {"2.4c", 2, {L, G, G, L}, 0, 0, 0, -1, 0, 0, 1},
    {"2.5a", 2, {G, L, L, L}, 0, 0, 0, 1, -1, 0, 4},
    {"2.5b", 2, {G, L, L, L}, 0, 0, 0, 1, 1, 0, 2},
    {"2.5c", 2, {G, L, L, L}, 0, 0, 0, -1, 0, 0, 1},
    {"2.6a", 2, {G, L, G, L}, 0, 0, 0, 1, -1, 0, 2},
    {"2.6b", 2, {G, L, G, L}, 0, 0, 0, 1, 1, 0, 2},
    {"2.6c", 2, {G, L, G, L}, 0, 0, 0, -1, 0, 0, 1},
    {"2.7a", 2, {L, L, G, L}, 0, 0, 0, 1, -1, 0, 1},
    {"2.7b", 2, {L, L, G, L}, 0, 0, 0, 1, 1, 0, 2},
    {"2.7c", 2, {L, L, G, L}, 0, 0, 0, -1, 0, 0, 1},
    {"2.8a", 2, {G, G, L, G}, 0, 0, 0, 1, -1, 0, 4},
    {"2.8b", 2, {G, G, L, G}, 0, 0, 0, 1, 1, 0, 2},
    {"2.8c", 2, {G, G, L, G}, 0, 0, 0, -1, 0, 0, 1},
    {"2.9a", 2, {L, G, L, G}, 0, 0, 0, 1, -1, 0, 2},
    {"2.9b", 2, {L, G, L, G}, 0, 0, 0, 1, 1, 0, 2},
    {"2.9c", 2, {L, G, L, G}, 0, 0, 0, -1, 0, 0, 1},
    {"2.10a", 2, {G, G, G, G}, 0, 0, 0, 1, -1, 0, 2},
    {"2.10b", 2, {G, G, G, G}, 0, 0, 0, 1, 1, 0, 2},
    {"2.10c", 2, {G, G, G, G}, 0, 0, 0, -1, 0, 0, 1},
    {"2.11a", 2, {L, G, G, G}, 0, 0, 0, 1, -1, 0, 1},
    {"2.11b", 2, {L, G, G, G}, 0, 0, 0, 1, 1, 0, 2},
    {"2.11c", 2, {L, G, G, G}, 0, 0, 0, -1, 0, 0, 1},
    {"2.12a", 2, {G, L, L, G}, 0, 0, 0, 1, -1, 0, 4},
    {"2.12b", 2, {G, L, L, G}, 0, 0, 0, 1, 1, 0, 1},
    {"2.12c", 2, {G, L, L, G}, 0, 0, 0, -1, 0, 0, 1},
    {"2.13a", 2, {L, L, L, G}, 0, 0, 0, 1, -1, 0, 2},
    {"2.13b", 2, {L, L, L, G}, 0, 0, 0, 1, 1, 0, 1},
    {"2.13c", 2, {L, L, L, G}, 0, 0, 0, -1, 0, 0, 1},
    {"2.14a", 2, {G, L, G, G}, 0, 0, 0, 1, -1, 0, 2},
    {"2.14b", 2, {G, L, G, G}, 0, 0, 0, 1, 1, 0, 1},
    {"2.14c", 2, {G, L, G, G}, 0, 0, 0, -1, 0, 0, 1},
    {"2.15a", 2, {L, L, G, G}, 0, 0, 0, 1, -1, 0, 1},
    {"2.15b", 2, {L, L, G, G}, 0, 0, 0, 1, 1, 0, 1},
    {"2.15c", 2, {L, L, G, G}, 0, 0, 0, -1, 0, 0, 1},
    {"3.1", 3, {G, G, L, L}, 0, 0, 0, 0, 0, 0, 1},
    {"3.2", 3, {L, G, L, L}, 0, 0, 0, 0, 0, 0, 1},
    {"3.3", 3, {G, G, G, L}, 0, 0, 0, 0, 0, 0, 1},
    {"3.4", 3, {L, G, G, L}, 0, 0, 0, 0, 0, 0, 1},
    {"3.5", 3, {G, L, L, L}, 0, 0, 0, 0, 0, 0, 1},
    {"3.6", 3, {G, L, G, L}, 0, 0, 0, 0, 0, 0, 1},
    {"3.7", 3, {L, L, G, L}, 0, 0, 0, 0, 0, 0, 1},
    {"3.8", 3, {G, G, L, G}, 0, 0, 0, 0, 0, 0, 1},
    {"3.9", 3, {L, G, L, G}, 0, 0, 0, 0, 0, 0, 1},
    {"3.10", 3, {G, G, G, G}, 0, 0, 0, 0, 0, 0, 1},
    {"3.11", 3, {L, G, G, G}, 0, 0, 0, 0, 0, 0, 1},
    {"3.12", 3, {G, L, L, G}, 0, 0, 0, 0, 0, 0, 1},
    {"3.13", 3, {L, L, L, G}, 0, 0, 0, 0, 0, 0, 1},
    {"3.14", 3, {G, L, G, G}, 0, 0, 0, 0, 0, 0, 1},
    {"3.15", 3, {L, L, G, G}, 0, 0, 0, 0, 0, 0, 1},
    {"4.1a.i", 4, {G, L, L, G}, 1, 1, 1, 0, 0, 0, 1},
    {"4.1a.ii", 4, {G, L, L, G}, 1, 1, -1, 0, 0, 0, 1},
    {"4.1b.i", 4, {G, L, L, G}, 1, -1, 1, 0, 0, 0, 1},
    {"4.1b.ii", 4, {G, L, L, G}, 1, -1, -1, 0, 0, 0, 1},
    {"4.2a", 4, {L, L, L, G}, 1, 1, 0, 0, 0, 0, 1},
    {"4.2b", 4, {L, L, L, G}, 1, -1, 0, 0, 0, 0, 1},
    {"4.3a", 4, {G, L, G, G}, 1, 1, 0, 0, 0, 0, 1},
    {"4.3b", 4, {G, L, G, G}, 1, -1, 0, 0, 0, 0, 1},
    {"4.5a", 4, {G, G, L, G}, 1, 1, 0, 0, 0, 0, 1},
    {"4.5b", 4, {G, G, L, G}, 1, -1, 0, 0, 0, 0, 1},
    {"4.8a", 4, {G, L, L, L}, 1, 1, 0, 0, 0, 0, 1},
    {"4.8b", 4, {G, L, L, L}, 1, -1, 0, 0, 0, 0, 1},
    {"4.4a.i", 4, {L, L, G, G}, 1, 1, 0, 0, 0, 0, 1},
    {"4.4a.ii", 4, {L, L, G, G}, 1, -1, 0, 0, 0, 0, 1},
    {"4.4b.i", 4, {L, L, G, G}, -1, 0, 0, 1, 0, 1, 4},
    {"4.4b.ii", 4, {L, L, G, G}, -1, 0, 0, 1, 0, -1, 1},
    {"4.4b.iii", 4, {L, L, G, G}, -1, 0, 0, -1, 0, 0, 1},
    {"4.6a.i", 4, {G, G, G, G}, 1, 1, 0, 0, 0, 0, 2},
    {"4.6a.ii", 4, {G, G, G, G}, 1, -1, 0, 0, 0, 0, 2},
    {"4.6b.i", 4, {G, G, G, G}, -1, 0, 0, 1, 0, 1, 2},
    {"4.6b.ii", 4, {G, G, G, G}, -1, 0, 0, 1, 0, -1, 2},
    {"4.6b.iii", 4, {G, G, G, G}, -1, 0, 0, -1, 0, 0, 1},
    {"4.9a.i", 4, {L, L, L, L}, 1, 1, 0, 0, 0, 0, 2},
    {"4.9a.ii", 4, {L, L, L, L}, 1, -1, 0, 0, 0, 0, 2},
    {"4.9b.i", 4, {L, L, L, L}, -1, 0, 0, 1, 0, 1, 2},
    {"4.9b.ii", 4, {L, L, L, L}, -1, 0, 0, 1, 0, -1, 2},
    {"4.9b.iii", 4, {L, L, L, L}, -1, 0, 0, -1, 0, 0, 1},
    {"4.11a.i", 4, {G, G, L, L}, 1, 1, 0, 0, 0, 0, 1},
    {"4.11a.ii", 4, {G, G, L, L}, 1, -1, 0, 0, 0, 0, 1},
    {"4.11b.i", 4, {G, G, L, L}, -1, 0, 0, 1, 0, 1, 1},
    {"4.11b.ii", 4, {G, G, L, L}, -1, 0, 0, 1, 0, -1, 4},
    {"4.11b.iii", 4, {G, G, L, L}, -1, 0, 0, -1, 0, 0, 1},
    {"4.7a", 4, {L, G, G, G}, -1, 0, 0, 1, 0, 1, 2},
    {"4.7b", 4, {L, G, G, G}, -1, 0, 0, 1, 0, -1, 1},
    {"4.7c", 4, {L, G, G, G}, -1, 0, 0, -1, 0, 0, 1},
    {"4.10a", 4, {L, L, G, L}, -1, 0, 0, 1, 0, 1, 2},
    {"4.10b", 4, {L, L, G, L}, -1, 0, 0, 1, 0, -1, 1},
    {"4.10c", 4, {L, L, G, L}, -1, 0, 0, -1, 0, 0, 1},
    {"4.12a", 4, {L, G, L, L}, -1, 0, 0, 1, 0, 1, 1},
    {"4.12b", 4, {L, G, L, L}, -1, 0, 0, 1, 0, -1, 2},
    {"4.12c", 4, {L, G, L, L}, -1, 0, 0, -1, 0, 0, 1},
    {"4.13a", 4, {G, G, G, L}, -1, 0, 0, 1, 0, 1, 1},
    {"4.13b", 4, {G, G, G, L}, -1, 0, 0, 1, 0, -1, 2},
    {"4.13c", 4, {G, G, G, L}, -1, 0, 0, -1, 0, 0, 1},
    {"4.14a", 4, {L, G, G, L}, -1, 0, 0, 1, 0, 1, 1},
    {"4.14b", 4, {L, G, G, L}, -1, 0, 0, 1, 0, -1, 1},
    {"4.14c", 4, {L, G, G, L}, -1, 0, 0, -1, 0, 0, 1},
};

}  // namespace

std::span<const CaseRow> case_rows() { return kRows; }

std::vector<const CaseRow*> rows_of_family(int family) {
  std::vector<const CaseRow*> out;
  for (const auto& r : kRows) {
    if (r.family == family) out.push_back(&r);
  }
  return out;
}

const CaseRow* find_row(const std::string& label) {
  for (const auto& r : kRows) {
    if (label == r.label) return &r;
  }
  return nullptr;
}

std::string portrait_label(const CaseRow& row, int index) {
  if (row.subcases == 1) return row.label;
  if (index < 1 || index > row.subcases) throw std::out_of_range("subcase index out of range");
  std::string s = row.label;
  if (row.family == 4) s += ".";
  return s + std::to_string(index);
}

std::vector<std::string> portrait_labels(const CaseRow& row) {
  std::vector<std::string> out;
  for (int i = 1; i <= row.subcases; ++i) out.push_back(portrait_label(row, i));
  return out;
}

std::vector<std::string> all_portrait_labels() {
  std::vector<std::string> out;
  for (const auto& r : kRows) {
    for (auto& s : portrait_labels(r)) out.push_back(std::move(s));
  }
  return out;
}

std::string row_of_portrait(const std::string& portrait) {
  if (find_row(portrait)) return portrait;
  for (const auto& r : kRows) {
    if (r.subcases == 1) continue;
    for (int i = 1; i <= r.subcases; ++i) {
      if (portrait_label(r, i) == portrait) return r.label;
    }
  }
  throw std::invalid_argument("unknown portrait label: " + portrait);
}

std::array<Cmp, 4> position_columns(const RelativePositions& rp, int family) {
  if (family == 1 || family == 4) return {rp.q1_p2(), rp.q2_p2(), rp.q3_p4(), rp.q4_p4()};
  return {rp.q1_p2(), rp.q2_p3(), rp.q3_p4(), rp.q4_p1()};
}

}  // namespace octo
