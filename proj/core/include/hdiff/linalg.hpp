#pragma once

#include <optional>
#include <vector>

#include "hdiff/rational.hpp"

namespace hdiff {

using Matrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> row_reduce(Matrix& a);
int rank(Matrix a);

// One solution of a x = b (free variables set to zero), or nullopt.
std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b);

}  // namespace hdiff
