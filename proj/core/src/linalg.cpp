#include "hdiff/linalg.hpp"

#include <utility>

namespace hdiff {

std::vector<int> row_reduce(Matrix& a) {
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = a.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
    for (std::size_t q = 0; q < rows; ++q) {
      if (q == r || a[q][c] == 0) continue;
      const Rational f = a[q][c];
      for (std::size_t k = c; k < cols; ++k)
        if (a[r][k] != 0) a[q][k] -= f * a[r][k];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

int rank(Matrix a) { return static_cast<int>(row_reduce(a).size()); }

std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b) {
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  Matrix aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  const auto pivots = row_reduce(aug);
  std::vector<Rational> x(cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const auto c = static_cast<std::size_t>(pivots[r]);
    if (c == cols) return std::nullopt;
    x[c] = aug[r][cols];
  }
  return x;
}

}  // namespace hdiff
