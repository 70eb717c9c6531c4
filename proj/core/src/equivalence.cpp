#include "octo/equivalence.hpp"

#include <algorithm>
#include <stdexcept>

#include "octo/case_tables.hpp"

namespace octo {

void LabelPartition::add(const std::string& label) {
  if (!parent_.count(label)) parent_[label] = label;
}

std::string LabelPartition::find(const std::string& label) const {
  auto it = parent_.find(label);
  if (it == parent_.end()) throw std::invalid_argument("unknown label: " + label);
  std::string root = label;
  while (parent_[root] != root) root = parent_[root];
  std::string cur = label;
  while (parent_[cur] != root) {
    std::string next = parent_[cur];
    parent_[cur] = root;
    cur = next;
  }
  return root;
}

void LabelPartition::unite(const std::string& a, const std::string& b) {
  const std::string ra = find(a);
  const std::string rb = find(b);
  if (ra == rb) return;
  if (ra < rb) parent_[rb] = ra;
  else parent_[ra] = rb;
}

std::string LabelPartition::name_of(const std::string& label, const std::vector<std::string>& names) const {
  const std::string root = find(label);
  for (const auto& n : names) {
    if (parent_.count(n) && find(n) == root) return n;
  }
  return root;
}

std::vector<std::vector<std::string>> LabelPartition::sets() const {
  std::map<std::string, std::vector<std::string>> groups;
  for (const auto& [k, v] : parent_) groups[find(k)].push_back(k);
  std::vector<std::vector<std::string>> out;
  for (auto& [k, v] : groups) out.push_back(std::move(v));
  return out;
}

namespace {

using Group = std::vector<std::string>;

// Equivalences between whole rows; portraits correspond by subcase index.
const std::vector<Group> kRowGroups[5] = {
    {},
    {
        {"1.2", "1.3", "1.5", "1.8"},
        {"1.4a", "1.11a"},
        {"1.4b", "1.11b"},
        {"1.6a", "1.9a"},
        {"1.6b", "1.9b"},
        {"1.7", "1.10", "1.12", "1.13"},
    },
    {
        {"2.1a", "2.1b"},
        {"2.2a", "2.3a", "2.5b", "2.8b"},
        {"2.2b", "2.3b", "2.5a", "2.8a"},
        {"2.4a", "2.12b"},
        {"2.4b", "2.12a"},
        {"2.4c", "2.12c"},
        {"2.6a", "2.9a", "2.10b"},
        {"2.6b", "2.9b", "2.10a"},
        {"2.6c", "2.9c", "2.10c"},
        {"2.7a", "2.11a", "2.13b", "2.14b"},
        {"2.7b", "2.11b", "2.13a", "2.14a"},
        {"2.7c", "2.11c", "2.13c", "2.14c"},
        {"2.15a", "2.15b"},
        {"2.2c", "2.3c", "2.5c", "2.8c"},
        // Representatives of the groups above.
        {"2.1a", "2.2b", "2.4b"},
        {"2.1c", "2.2c", "2.4c", "2.6c", "2.7c", "2.15c"},
        {"2.2a", "2.6a", "2.6b", "2.7b"},
        {"2.4a", "2.7a", "2.15a"},
    },
    {
        {"3.2", "3.3", "3.5", "3.8"},
        {"3.4", "3.12"},
        {"3.6", "3.9", "3.10"},
        {"3.7", "3.11", "3.13", "3.14"},
    },
    {
        {"4.2a", "4.3a", "4.5b", "4.8b"},
        {"4.2b", "4.3b", "4.5a", "4.8a"},
        {"4.4a.i", "4.11a.ii"},
        {"4.4a.ii", "4.11a.i"},
        {"4.4b.i", "4.11b.ii"},
        {"4.4b.ii", "4.7b", "4.10b", "4.11b.i", "4.12a", "4.13a", "4.14a", "4.14b"},
        {"4.4b.iii", "4.6b.iii", "4.7c", "4.9b.iii", "4.10c", "4.11b.iii", "4.12c", "4.13c", "4.14c"},
        {"4.6b.i", "4.6b.ii", "4.7a", "4.9b.i", "4.9b.ii", "4.10a", "4.12b", "4.13b"},
    },
};

// Equivalences between individual portraits.
const std::vector<Group> kPortraitGroups[5] = {
    {},
    {},
    {
        {"2.1a2", "2.1a3", "2.2a1"},
        {"2.1a4", "2.2a2", "2.4a"},
    },
    {},
    {
        // The time-reversed rows of this group pair subcases crosswise.
        {"4.6a.i.1", "4.6a.ii.2", "4.9a.i.1", "4.9a.ii.2"},
        {"4.6a.i.2", "4.6a.ii.1", "4.9a.i.2", "4.9a.ii.1"},
        {"4.4b.i.2", "4.4b.i.3", "4.6b.i.1"},
        {"4.4b.i.4", "4.4b.ii", "4.6b.i.2"},
    },
};

const std::vector<Group> kCrossFamily = {
    {"1.4b", "3.4"},
    {"1.7", "3.7"},
    {"1.14", "3.15"},
    {"2.1a1", "4.4b.i.1"},
    {"2.1a3", "4.4b.i.3"},
    {"2.1a4", "4.4b.i.4"},
    {"2.1c", "4.4b.iii"},
};

void add_family(LabelPartition& p, int family) {
  for (const CaseRow* r : rows_of_family(family)) {
    for (const auto& s : portrait_labels(*r)) p.add(s);
  }
  for (const Group& g : kRowGroups[family]) {
    const CaseRow* first = find_row(g.front());
    for (const auto& other : g) {
      const CaseRow* r = find_row(other);
      if (!first || !r || r->subcases != first->subcases) {
        throw std::logic_error("row group with mismatched portraits: " + other);
      }
      for (int i = 1; i <= r->subcases; ++i) p.unite(portrait_label(*first, i), portrait_label(*r, i));
    }
  }
  for (const Group& g : kPortraitGroups[family]) {
    for (const auto& s : g) p.unite(g.front(), s);
  }
}

}  // namespace

LabelPartition family_partition(int family) {
  if (family < 1 || family > 4) throw std::invalid_argument("family must be 1..4");
  LabelPartition p;
  add_family(p, family);
  return p;
}

LabelPartition disk_partition() {
  LabelPartition p;
  for (int f = 1; f <= 4; ++f) add_family(p, f);
  for (const Group& g : kCrossFamily) {
    for (const auto& s : g) p.unite(g.front(), s);
  }
  return p;
}

const std::vector<std::string>& family_class_names(int family) {
  static const std::vector<std::string> names[5] = {
      {},
      {"1.1", "1.2", "1.4a", "1.4b", "1.6a", "1.6b", "1.7", "1.14"},
      {"2.1a1", "2.1a3", "2.1a4", "2.1c"},
      {"3.1", "3.2", "3.4", "3.6", "3.7", "3.15"},
      {"4.1a.i", "4.1a.ii", "4.1b.i", "4.1b.ii", "4.2a", "4.2b", "4.4a.i", "4.4a.ii", "4.4b.i.1", "4.4b.i.3",
       "4.4b.i.4", "4.4b.iii", "4.6a.i.1", "4.6a.ii.1"},
  };
  if (family < 1 || family > 4) throw std::invalid_argument("family must be 1..4");
  return names[family];
}

const std::vector<std::string>& disk_class_names() {
  static const std::vector<std::string> names = {
      "1.1",    "1.2",    "1.4a",    "1.4b",    "1.6a", "1.6b", "1.7",    "1.14",    "2.1a1",
      "2.1a3",  "2.1a4",  "2.1c",    "3.1",     "3.2",  "3.6",  "4.1a.i", "4.1a.ii", "4.1b.i",
      "4.1b.ii", "4.2a",  "4.2b",    "4.4a.i",  "4.4a.ii", "4.6a.i.1", "4.6a.ii.1"};
  return names;
}

const std::vector<std::string>& square_class_names() {
  static const std::vector<std::string> names = {
      "1.1",  "1.2",  "1.4a", "1.4b", "1.6a",   "1.6b", "1.7",    "1.14",     "2.6a1",     "2.7a",
      "2.15a", "3.1", "3.2",  "3.6",  "4.1b.i", "4.2a", "4.4a.i", "4.6a.i.1", "4.6a.ii.1", "4.6b.i.1"};
  return names;
}

namespace {

int family_of_label(const std::string& s) {
  if (s.empty() || s[0] < '1' || s[0] > '4') throw std::invalid_argument("bad portrait label: " + s);
  return s[0] - '0';
}

}  // namespace

std::string family_class(const std::string& portrait) {
  const int f = family_of_label(portrait);
  static const LabelPartition parts[5] = {LabelPartition{}, family_partition(1), family_partition(2),
                                          family_partition(3), family_partition(4)};
  return parts[f].name_of(portrait, family_class_names(f));
}

std::string disk_class(const std::string& portrait) {
  static const LabelPartition part = disk_partition();
  return part.name_of(portrait, disk_class_names());
}

std::string square_class(const std::string& portrait) {
  const auto& t = square_class_table();
  auto it = t.find(portrait);
  if (it == t.end()) throw std::invalid_argument("no square class for " + portrait);
  return it->second;
}

std::vector<std::string> equivalence_chain(const std::string& portrait) {
  return {portrait, family_class(portrait), disk_class(portrait)};
}

}  // namespace octo
