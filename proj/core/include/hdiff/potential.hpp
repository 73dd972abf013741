#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "hdiff/ratfun.hpp"
#include "hdiff/report.hpp"

namespace hdiff {

// Coefficients of a univariate polynomial, lowest degree first.
using UniPoly = std::vector<Rational>;

// pi(h_j) / chi_j (0-based j)
RatFun w_basis(int n, int j, const UniPoly& pi);
RatFun inverse_chi(int n, int j);

// Delta_i Delta_j (h_ij f) = 0 for all i < j.
Report delta_system_report(const RatFun& f, int n);
bool delta_system_check(const RatFun& f, int n);

std::vector<RatFun> sigma_from_potential(const RatFun& f, int n);
bool sigma_system_check(const std::vector<RatFun>& sigma);

// f = sum_{k != pivot} parts[k](h_k)/chi_k + sum_L c_L H_L
struct WDecomposition {
  int pivot = 0;
  std::map<int, UniPoly> parts;
  std::vector<std::pair<int, Rational>> symmetric;  // (L, c_L), L ascending
};

RatFun reassemble(const WDecomposition& d, int n);
WDecomposition w_decompose(const RatFun& f, int n, int pivot);

// Potential sigma normalised to have no H_0 component, with Delta_i sigma = s_i.
RatFun reconstruct_potential(const std::vector<RatFun>& s);

// sum_j h_j^L / chi_j against 0 or H_{L-n+1}
bool verify_chi_identity(int n, int L);

// p as a combination of complete symmetric polynomials, if it is one.
std::optional<std::vector<std::pair<int, Rational>>> h_expansion(const Poly& p, int n);
bool is_polynomial_potential(const RatFun& f, int n);

}  // namespace hdiff
