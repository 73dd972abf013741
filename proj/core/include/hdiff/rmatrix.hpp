#pragma once

#include "hdiff/ratfun.hpp"
#include "hdiff/report.hpp"

namespace hdiff {

// All indices 0-based; n is the rank.

// h_i - h_j
RatFun hd(int i, int j);

RatFun psi(int n, int i);        // prod_{k>i} h_ik
RatFun psi_prime(int n, int i);  // prod_{k<i} h_ik
RatFun chi(int n, int i);        // prod_{k!=i} h_ik
RatFun phi(int n, int i);        // psi_i / psi_i[-eps_i]
RatFun q_plus(int n, int i);     // chi_i[eps_i] / chi_i
RatFun q_minus(int n, int i);    // chi_i[-eps_i] / chi_i

// prod_k (1 + h_k t) and the same product with factor i left out.
TPoly e_of_t(int n);
TPoly e_of_t_without(int n, int i);

// Nonzero only for (k,l) in {(i,j),(j,i)}.
inline bool ice_allowed(int i, int j, int k, int l) { return (k == i && l == j) || (k == j && l == i); }

RatFun r_component(int n, int i, int j, int k, int l);
RatFun psi_component(int n, int i, int j, int k, int l);

Report verify_dybe(int n);
Report verify_ice(int n);
Report verify_shift_invariance(int n);
Report verify_rsq(int n);
Report verify_r_properties(int n);
Report verify_skew_inverse(int n);
Report verify_q_identity(int n);

}  // namespace hdiff
