#pragma once

#include <string>
#include <vector>

namespace hdiff {

struct CheckItem {
  std::string check;
  std::vector<int> tuple;  // 1-based indices as printed
  bool pass = true;
  std::string detail;
};

struct Report {
  std::string name;
  std::vector<CheckItem> items;

  void add(std::string check, std::vector<int> tuple, bool pass, std::string detail = {});
  void append(const Report& other);
  int passed() const noexcept;
  int total() const noexcept { return static_cast<int>(items.size()); }
  bool ok() const noexcept { return passed() == total(); }
  const CheckItem* first_failure() const noexcept;
  // "729/729 pass"
  std::string summary() const;
};

}  // namespace hdiff
