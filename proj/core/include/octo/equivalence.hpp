#pragma once

#include <map>
#include <string>
#include <vector>

namespace octo {

// Union-find over string labels; each set is named by a preferred member.
class LabelPartition {
 public:
  void add(const std::string& label);
  void unite(const std::string& a, const std::string& b);
  std::string find(const std::string& label) const;
  bool contains(const std::string& label) const { return parent_.count(label) != 0; }
  // Set name: the member listed in names, or the smallest member otherwise.
  std::string name_of(const std::string& label, const std::vector<std::string>& names) const;
  std::vector<std::vector<std::string>> sets() const;

 private:
  mutable std::map<std::string, std::string> parent_;
};

// Portrait labels of one family grouped by the equivalences stated for it.
LabelPartition family_partition(int family);
// All four families with the cross-family identifications added.
LabelPartition disk_partition();

// Names of the classes, as drawn in the summary figures.
const std::vector<std::string>& family_class_names(int family);
const std::vector<std::string>& disk_class_names();
const std::vector<std::string>& square_class_names();

std::string family_class(const std::string& portrait);
std::string disk_class(const std::string& portrait);
// Class of the closed unit square portrait; see square.hpp for the invariant
// the table was frozen from.
std::string square_class(const std::string& portrait);
const std::map<std::string, std::string>& square_class_table();

// Path from a portrait label to its disk class: portrait, family class, disk class.
std::vector<std::string> equivalence_chain(const std::string& portrait);

}  // namespace octo
