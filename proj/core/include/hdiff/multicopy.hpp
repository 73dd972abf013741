#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hdiff/diffring.hpp"
#include "hdiff/ratfun.hpp"
#include "hdiff/report.hpp"

namespace hdiff {

// sigma_{i alpha beta}: alpha runs over the x copies, beta over the dbar copies.
class SigmaArray {
public:
  SigmaArray(int n, int x_copies, int d_copies);
  // sigma_{i alpha beta} = c delta_{alpha beta}
  static SigmaArray diagonal(int n, int copies, const Rational& c = 1);

  int n() const noexcept { return n_; }
  int x_copies() const noexcept { return nx_; }
  int d_copies() const noexcept { return nd_; }
  const RatFun& at(int i, int alpha, int beta) const;
  void set(int i, int alpha, int beta, RatFun v);
  std::vector<RatFun> slice(int alpha, int beta) const;

private:
  int n_, nx_, nd_;
  std::vector<RatFun> v_;
  std::size_t idx(int i, int alpha, int beta) const;
};

// Normal form of a word in x^{i alpha} only, or in dbar_{i beta} only.
NormalElement vcopy_normal_form(int n, int copies, const Word& w);
// Every word of the given length reduces to one normal form whichever redex
// is taken first.
Report vcopy_confluence(int n, int copies, int length = 3);

Report flatness_check(const SigmaArray& s);

// Double reduction of the x dbar dbar and x x dbar overlaps. With budget > 0
// at most that many words are drawn (seeded) from the full list.
Report ambiguity_oracle(const SigmaArray& s, std::size_t budget = 0, std::uint32_t seed = 1);

struct ConstantProfile {
  std::vector<std::vector<Rational>> matrix;  // sigma_{alpha beta}
  int rank = 0;
  std::vector<Rational> diagonal;  // rank ones, then zeros
};

// Present when every entry is a constant independent of i.
std::optional<ConstantProfile> constant_profile(const SigmaArray& s);

}  // namespace hdiff
