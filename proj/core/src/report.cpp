#include "hdiff/report.hpp"

#include <algorithm>

namespace hdiff {

void Report::add(std::string check, std::vector<int> tuple, bool pass, std::string detail) {
  items.push_back({std::move(check), std::move(tuple), pass, std::move(detail)});
}

void Report::append(const Report& other) { items.insert(items.end(), other.items.begin(), other.items.end()); }

int Report::passed() const noexcept {
  return static_cast<int>(std::count_if(items.begin(), items.end(), [](const CheckItem& c) { return c.pass; }));
}

const CheckItem* Report::first_failure() const noexcept {
  for (const auto& c : items)
    if (!c.pass) return &c;
  return nullptr;
}

std::string Report::summary() const {
  return std::to_string(passed()) + "/" + std::to_string(total()) + (ok() ? " pass" : " pass, " + std::to_string(total() - passed()) + " fail");
}

}  // namespace hdiff
