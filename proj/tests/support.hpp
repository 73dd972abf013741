#pragma once

#include <random>
#include <string>
#include <vector>

#include "expr.hpp"
#include "hdiff/diffring.hpp"
#include "hdiff/potential.hpp"
#include "hdiff/ratfun.hpp"

namespace hdtest {

using namespace hdiff;

// Oracle values are stored in the hdcalc grammar.
inline RatFun rf(int n, const std::string& s) { return hdcalc::evaluate_scalar(hdcalc::parse(s), n); }
inline NormalElement el(const DiffRing& ring, const std::string& s) { return hdcalc::evaluate(hdcalc::parse(s), ring); }

inline RatFun H(int n, int L) { return RatFun(complete_symmetric(n, L)); }

inline std::vector<RatFun> ones(int n) { return std::vector<RatFun>(static_cast<std::size_t>(n), RatFun(1)); }

// Small random objects; every draw goes through one seeded engine.
class Draw {
public:
  explicit Draw(std::uint32_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }
  Rational rational() { return ratio(uniform(-5, 5), uniform(1, 4)); }

  Poly poly(int n, int max_deg, int terms) {
    std::vector<Poly::Term> t;
    for (int k = 0; k < terms; ++k) {
      std::vector<int> e(static_cast<std::size_t>(n), 0);
      int left = uniform(0, max_deg);
      for (int i = 0; i < n && left > 0; ++i) {
        const int d = uniform(0, left);
        e[static_cast<std::size_t>(i)] = d;
        left -= d;
      }
      t.emplace_back(Monomial(e), rational());
    }
    return Poly::from_terms(std::move(t));
  }

  // Numerator of degree <= 2 over up to two shifted differences.
  RatFun ratfun(int n) {
    RatFun f(poly(n, 2, uniform(1, 3)));
    if (n < 2) return f;
    const int factors = uniform(0, 2);
    for (int k = 0; k < factors; ++k) {
      const int i = uniform(0, n - 1);
      int j = uniform(0, n - 2);
      if (j >= i) ++j;
      f *= RatFun::inverse_linear(i, j, uniform(-2, 2));
    }
    return f;
  }

  ShiftVector shift(int n) {
    ShiftVector s(n);
    for (int k = 0; k < n; ++k) s[k] = uniform(-2, 2);
    return s;
  }

  // A random element of W: pi(h_k)/chi_k parts plus symmetric H_L.
  RatFun potential(int n) {
    RatFun f;
    for (int k = 0; k < n; ++k) {
      if (!coin()) continue;
      UniPoly pi(static_cast<std::size_t>(uniform(1, 4)));
      for (auto& c : pi) c = Rational(uniform(-3, 3));
      f += w_basis(n, k, pi);
    }
    for (int L = 1; L <= 3; ++L)
      if (coin()) f += RatFun(Rational(uniform(-3, 3))) * H(n, L);
    return f;
  }

  // Sum of a few monomials of degree <= max_deg with random coefficients.
  NormalElement element(const DiffRing& ring, int max_deg, int terms) {
    const int n = ring.n();
    NormalElement e;
    for (int t = 0; t < terms; ++t) {
      NormalElement m(RatFun(poly(n, 1, uniform(1, 2))));
      const int deg = uniform(0, max_deg);
      for (int k = 0; k < deg; ++k) {
        const int i = uniform(0, n - 1);
        m = ring.multiply(m, coin() ? ring.x(i) : ring.d(i));
      }
      e += m;
    }
    return e;
  }

  std::mt19937& engine() { return rng_; }

private:
  std::mt19937 rng_;
};

}  // namespace hdtest
