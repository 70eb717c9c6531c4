#include <doctest.h>

#include <set>

#include "octo/case_tables.hpp"
#include "octo/equivalence.hpp"

using namespace octo;

TEST_CASE("label partition") {
  LabelPartition p;
  for (const char* s : {"a", "b", "c", "d"}) p.add(s);
  p.unite("a", "b");
  p.unite("c", "b");
  CHECK(p.find("a") == p.find("c"));
  CHECK(p.find("a") != p.find("d"));
  CHECK(p.sets().size() == 2);
  CHECK(p.name_of("c", {"b"}) == "b");
  CHECK(p.name_of("c", {}) == "a");
  CHECK(p.contains("d"));
  CHECK_FALSE(p.contains("e"));
}

TEST_CASE("class counts") {
  CHECK(family_partition(1).sets().size() == 8);
  CHECK(family_partition(2).sets().size() == 4);
  CHECK(family_partition(3).sets().size() == 6);
  CHECK(family_partition(4).sets().size() == 14);
  CHECK(disk_partition().sets().size() == 25);
  CHECK(disk_class_names().size() == 25);
  std::set<std::string> square;
  for (const auto& [portrait, cls] : square_class_table()) square.insert(cls);
  CHECK(square.size() == 20);
  CHECK(square_class_names().size() == 20);
}

TEST_CASE("within-family equivalences") {
  for (const char* s : {"1.3", "1.5", "1.8"}) CHECK(family_class(s) == family_class("1.2"));
  CHECK(family_class("1.4a") == family_class("1.11a"));
  CHECK(family_class("1.4a") != family_class("1.4b"));
  for (const char* s : {"1.10", "1.12", "1.13"}) CHECK(family_class(s) == family_class("1.7"));
  CHECK(family_class("1.1") == "1.1");
  CHECK(family_class("1.14") == "1.14");
  CHECK(family_class("1.3") == "1.2");
  CHECK(family_class("3.4") == family_class("3.12"));
}

TEST_CASE("cross-family identifications") {
  CHECK(disk_class("1.7") == disk_class("3.7"));
  CHECK(disk_class("3.15") == "1.14");
  CHECK(disk_class("4.4b.i.1") == "2.1a1");
  CHECK(disk_class("4.4b.i.3") == disk_class("2.1a3"));
  CHECK(disk_class("4.4b.i.4") == disk_class("2.1a4"));
  CHECK(disk_class("4.4b.iii") == disk_class("2.1c"));
  CHECK(disk_class("3.4") == disk_class("1.4b"));
  CHECK(disk_class("1.1") != disk_class("1.14"));
}

TEST_CASE("every portrait has a class") {
  const auto labels = all_portrait_labels();
  CHECK(labels.size() == square_class_table().size());
  std::set<std::string> disk_names(disk_class_names().begin(), disk_class_names().end());
  std::set<std::string> square_names(square_class_names().begin(), square_class_names().end());
  for (const auto& l : labels) {
    CHECK(disk_names.count(disk_class(l)) == 1);
    CHECK(square_names.count(square_class(l)) == 1);
    const auto chain = equivalence_chain(l);
    CHECK(chain.front() == l);
    CHECK(chain.back() == disk_class(l));
  }
}

TEST_CASE("square classes") {
  CHECK(square_class("1.1") == "1.1");
  CHECK(square_class("2.1a1") == "1.1");
  CHECK(square_class("3.15") == "1.14");
  CHECK(square_class("1.3") == "1.2");
  CHECK(square_class("3.6") == square_class("3.10"));
}
