#pragma once

#include <vector>

#include "hdiff/diffring.hpp"
#include "hdiff/ratfun.hpp"
#include "hdiff/report.hpp"

namespace hdiff {

struct CentralFamily {
  std::vector<NormalElement> c;  // c_1..c_n
  TPoly rho;
};

// rho(t) with Delta_j rho = prod_{m != j}(1 + h_m t) Delta_j f; the H_0
// component of f is dropped.
TPoly rho_for(const RatFun& f, int n);

// c_k = sum_i [t^{k-1}] prod_{m != i}(1 + h_m t) dbar_i x^i - [t^{k-1}] rho
CentralFamily central_family(const DiffRing& ring, const TPoly& rho);
CentralFamily central_family(const DiffRing& ring, const RatFun& potential);

// Delta_j rho(t) against prod_{m != j}(1 + h_m t) sigma_j, coefficientwise.
Report verify_rho(const TPoly& rho, const std::vector<RatFun>& sigma);
// [c_k, g] for g in x^j, dbar_j, h_j.
Report verify_central(const DiffRing& ring, const CentralFamily& fam);

struct CenterRank {
  int symbol_rank = 0;     // rank of [t^{k-1}] prod_{m != i}(1 + lambda_m t)
  int character_rank = 0;  // rank of finite differences of the central character
  int points = 0;
};

CenterRank center_basis_note(const DiffRing& ring, const CentralFamily& fam);

}  // namespace hdiff
