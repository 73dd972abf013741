#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hdiff/rational.hpp"

namespace hdiff {

inline constexpr int kMaxVars = 8;

// Exponent vector of a monomial in h_1..h_8, packed one byte per variable.
// Variable k occupies bits [8k, 8k+8).
class Monomial {
public:
  constexpr Monomial() = default;
  explicit Monomial(std::span<const int> exponents);

  static Monomial var(int k, int power = 1);

  int operator[](int k) const noexcept { return static_cast<int>((bits_ >> (8 * k)) & 0xffu); }
  int total_degree() const noexcept;
  // Highest variable index with a nonzero exponent, or -1 for the unit.
  int max_var() const noexcept;
  bool is_one() const noexcept { return bits_ == 0; }

  Monomial with(int k, int power) const;
  Monomial operator*(const Monomial& other) const;  // throws DomainError on overflow
  std::vector<int> exponents(int nvars) const;

  std::uint64_t bits() const noexcept { return bits_; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.bits_ <=> b.bits_; }

private:
  std::uint64_t bits_ = 0;
};

// Sparse polynomial with exact rational coefficients in h_1..h_kMaxVars.
// Terms are kept sorted by monomial with no zero coefficients.
class Poly {
public:
  using Term = std::pair<Monomial, Rational>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(int c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly var(int k);
  static Poly monomial(const Monomial& m, const Rational& c);
  // h_i - h_j + a
  static Poly linear(int i, int j, long a);
  // Builds from unsorted terms, combining duplicates.
  static Poly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  int total_degree() const noexcept;  // -1 for zero
  int degree_in(int k) const noexcept;
  int max_var() const noexcept;
  bool depends_on(int k) const noexcept { return degree_in(k) > 0; }

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other) { return *this = *this * other; }
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend bool operator==(const Poly&, const Poly&) = default;

  Poly pow(int e) const;

  // Substitutes h_k := h_target + c (target may equal k).
  Poly substitute_affine(int k, int target, const Rational& c) const;
  // Substitutes h_k := h_k + shift[k] for every k in range.
  Poly shifted(std::span<const int> shift) const;
  // Renames h_k -> h_perm[k] and then adds offset[k].
  Poly mapped(std::span<const int> perm, std::span<const int> offset) const;

  // Coefficients of h_k^0, h_k^1, ... (each free of h_k).
  std::vector<Poly> coefficients_in(int k) const;

  // Exact division by (h_i - h_j + a).
  bool divisible_by_linear(int i, int j, long a) const;
  Poly divide_linear(int i, int j, long a) const;  // precondition: divisible
  std::optional<Poly> try_divide_linear(int i, int j, long a) const;

  Rational evaluate(std::span<const Rational> point) const;

  // Leading term in the (total degree, then lex) order.
  const Term& leading_term() const;
  std::size_t hash() const noexcept;

private:
  std::vector<Term> terms_;
  void normalize();
};

// Elementary and complete symmetric polynomials in h_1..h_n.
Poly elementary_symmetric(int n, int degree);
Poly complete_symmetric(int n, int degree);

}  // namespace hdiff
