#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "octo/singularities.hpp"

namespace octo {

// One row of the realizable-case tables for the central position.
// Position columns: families 1 and 4 compare (q1, p2), (q2, p2), (q3, p4),
// (q4, p4); families 2 and 3 compare (q1, p2), (q2, p3), (q3, p4), (q4, p1).
// Sign columns hold +1, -1 or 0 (no condition).
struct CaseRow {
  const char* label;
  int family;
  std::array<Cmp, 4> positions;
  int detA, T, K, Delta, b10_minus_a01, delta;
  int subcases;  // number of phase portraits drawn for the row
};

std::span<const CaseRow> case_rows();
std::vector<const CaseRow*> rows_of_family(int family);
const CaseRow* find_row(const std::string& label);

// Portrait labels of a row: the row label itself when it has one portrait,
// otherwise "2.1a1".."2.1a4" in family 2 and "4.4b.i.1".."4.4b.i.4" in family 4.
std::vector<std::string> portrait_labels(const CaseRow& row);
std::string portrait_label(const CaseRow& row, int index);  // index is 1-based
std::vector<std::string> all_portrait_labels();

// Row label of a portrait label ("2.1a3" -> "2.1a", "4.6a.i.2" -> "4.6a.i").
std::string row_of_portrait(const std::string& portrait);

// The four position predicates a row compares, in column order.
std::array<Cmp, 4> position_columns(const RelativePositions& rp, int family);

}  // namespace octo
