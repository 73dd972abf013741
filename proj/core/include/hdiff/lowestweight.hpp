#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hdiff/central.hpp"
#include "hdiff/diffring.hpp"

namespace hdiff {

using Weight = std::vector<Rational>;

// lambda_i = i (n + 2) / (n + 1), i = 1..n
Weight generic_lambda(int n);
bool is_generic(const Weight& lambda);

// Coordinates in the basis x^b |0> (b as in pbw_word), h_i acting on x^b|0>
// by lambda_i + b_i.
struct LWVector {
  Weight lambda;
  std::map<std::vector<int>, Rational> terms;

  static LWVector vacuum(const Weight& lambda);
  bool is_zero() const noexcept { return terms.empty(); }
  void add(const std::vector<int>& b, const Rational& c);
  friend bool operator==(const LWVector&, const LWVector&) = default;
};

class LowestWeightModule {
public:
  LowestWeightModule(const DiffRing& ring, Weight lambda);

  const Weight& lambda() const noexcept { return lambda_; }
  LWVector vacuum() const { return LWVector::vacuum(lambda_); }
  LWVector act(const NormalElement& e, const LWVector& v);

private:
  const DiffRing& ring_;
  Weight lambda_;
  // dbar_j x^i = sum_{k,l} Psi^{ik}_{jl} x^l dbar_k + zero_[i][j]
  std::vector<std::vector<RatFun>> zero_;
  std::map<std::pair<int, std::vector<int>>, LWVector> dcache_;

  Rational eval_at(const RatFun& f, const std::vector<int>& b) const;
  LWVector act_x(int l, const LWVector& v);
  LWVector act_d(int j, const LWVector& v);
  LWVector act_d_basis(int j, const std::vector<int>& b);
  LWVector act_scalar(const RatFun& f, const LWVector& v) const;
};

struct CharacterCheck {
  std::vector<Rational> action;     // c_k on |0>
  std::vector<Rational> predicted;  // [t^{k-1}] of -rho(t) at h = lambda - 1
  bool agree() const { return action == predicted; }
};

// Throws MismatchError when the two routes differ.
CharacterCheck central_character(const DiffRing& ring, const CentralFamily& fam, const Weight& lambda);

}  // namespace hdiff
