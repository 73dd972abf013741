#pragma once

#include <compare>
#include <span>
#include <utility>
#include <vector>

#include "hdiff/poly.hpp"

namespace hdiff {

// h_i - h_j + a with i < j (0-based indices).
struct LinFactor {
  int i = 0;
  int j = 1;
  long a = 0;

  friend bool operator==(const LinFactor&, const LinFactor&) = default;
  friend auto operator<=>(const LinFactor&, const LinFactor&) = default;

  Poly poly() const { return Poly::linear(i, j, a); }
};

// Factors with positive multiplicities, sorted, no repeats.
using Denominator = std::vector<std::pair<LinFactor, int>>;

Denominator lcm(const Denominator& a, const Denominator& b);
Poly expand(const Denominator& d);

class ShiftVector {
public:
  ShiftVector() = default;
  explicit ShiftVector(int n) : s_(static_cast<std::size_t>(n), 0) {}
  explicit ShiftVector(std::vector<int> s) : s_(std::move(s)) {}
  // sign * eps_j
  static ShiftVector unit(int n, int j, int sign = 1);
  // sign * (eps_0 + ... + eps_{n-1})
  static ShiftVector all(int n, int sign = 1);

  int size() const noexcept { return static_cast<int>(s_.size()); }
  int operator[](int k) const { return s_[static_cast<std::size_t>(k)]; }
  int& operator[](int k) { return s_[static_cast<std::size_t>(k)]; }
  bool is_zero() const noexcept;
  std::span<const int> values() const noexcept { return s_; }

  ShiftVector operator-() const;
  ShiftVector& operator+=(const ShiftVector& o);
  friend ShiftVector operator+(ShiftVector a, const ShiftVector& b) { return a += b; }
  friend ShiftVector operator-(ShiftVector a, const ShiftVector& b) { return a += -b; }
  friend bool operator==(const ShiftVector&, const ShiftVector&) = default;

private:
  std::vector<int> s_;
};

// Element of the localization of Q[h] at the shifted differences.
// Canonical: no denominator factor divides the numerator, zero has empty
// denominator, so structural equality is equality of functions.
class RatFun {
public:
  RatFun() = default;
  RatFun(Poly p) : num_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
  RatFun(const Rational& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  RatFun(int c) : num_(c) {}              // NOLINT(google-explicit-constructor)

  static RatFun make(Poly num, Denominator den);
  static RatFun var(int k) { return RatFun(Poly::var(k)); }
  // h_i - h_j + a for any i != j
  static RatFun linear(int i, int j, long a) { return RatFun(Poly::linear(i, j, a)); }
  // 1 / (h_i - h_j + a) for any i != j
  static RatFun inverse_linear(int i, int j, long a);

  const Poly& num() const noexcept { return num_; }
  const Denominator& den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.empty(); }
  bool is_constant() const noexcept { return den_.empty() && num_.is_constant(); }
  int max_var() const noexcept;
  bool depends_on(int k) const noexcept;

  RatFun operator-() const;
  RatFun& operator+=(const RatFun& o);
  RatFun& operator-=(const RatFun& o);
  RatFun& operator*=(const RatFun& o);
  RatFun& operator/=(const RatFun& o) { return *this *= o.inverse(); }
  friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
  friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
  friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
  friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
  friend bool operator==(const RatFun&, const RatFun&) = default;

  RatFun pow(int e) const;
  // Multiplicative inverse; the numerator must split into shifted
  // differences times a constant. Throws DomainError otherwise.
  RatFun inverse() const;

  RatFun shifted(const ShiftVector& s) const;
  RatFun shifted(int j, int by) const;
  // f - f[-eps_j]
  RatFun delta(int j) const;
  // h_k -> h_perm[k] + offset[k]
  RatFun mapped(std::span<const int> perm, std::span<const int> offset) const;
  // h_k := h_target + c. Throws PoleError if a factor collapses to zero.
  RatFun substitute(int k, int target, long c) const;
  // d/dh_k
  RatFun derivative(int k) const;

  // Numerator over a multiple d of den().
  Poly numerator_over(const Denominator& d) const;

  Rational evaluate(std::span<const Rational> point) const;
  std::size_t hash() const noexcept;

private:
  Poly num_;
  Denominator den_;
  void cancel();
};

// u / (h_j - h_k - a)^nu, indices 0-based.
struct PrincipalTerm {
  int k;
  long a;
  int nu;
  RatFun u;
};

struct PartialFractions {
  std::vector<PrincipalTerm> principal;
  RatFun regular;
};

PartialFractions partial_fractions(const RatFun& f, int j);
RatFun reassemble(const PartialFractions& pf, int j);

// Polynomial in an auxiliary variable t with coefficients in the ring above;
// t never enters a denominator.
class TPoly {
public:
  TPoly() = default;
  explicit TPoly(std::vector<RatFun> c);
  // 1 + h_k t
  static TPoly one_plus_ht(int k);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const RatFun& operator[](int k) const;
  const std::vector<RatFun>& coefficients() const noexcept { return c_; }

  TPoly operator-() const;
  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o) { return *this += -o; }
  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  friend TPoly operator*(TPoly a, const RatFun& f);
  friend bool operator==(const TPoly&, const TPoly&) = default;

  TPoly shifted(const ShiftVector& s) const;
  TPoly delta(int j) const;

private:
  std::vector<RatFun> c_;
  void trim();
};

}  // namespace hdiff
