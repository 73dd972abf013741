#include "hdiff/poly.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>

#include "hdiff/errors.hpp"

namespace hdiff {

Rational parse_rational(std::string_view text) {
  Rational q;
  std::string s(text);
  if (s.empty() || q.set_str(s, 10) != 0) throw DomainError("invalid rational literal '" + s + "'");
  if (q.get_den() == 0) throw DomainError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

Monomial::Monomial(std::span<const int> exponents) {
  if (exponents.size() > static_cast<std::size_t>(kMaxVars))
    throw DomainError("too many variables (max " + std::to_string(kMaxVars) + ")");
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    const int e = exponents[k];
    if (e < 0 || e > 255) throw DomainError("exponent out of range");
    bits_ |= static_cast<std::uint64_t>(e) << (8 * k);
  }
}

Monomial Monomial::var(int k, int power) { return Monomial().with(k, power); }

int Monomial::total_degree() const noexcept {
  int d = 0;
  for (int k = 0; k < kMaxVars; ++k) d += (*this)[k];
  return d;
}

int Monomial::max_var() const noexcept {
  for (int k = kMaxVars - 1; k >= 0; --k)
    if ((*this)[k] != 0) return k;
  return -1;
}

Monomial Monomial::with(int k, int power) const {
  if (k < 0 || k >= kMaxVars) throw DomainError("variable index out of range");
  if (power < 0 || power > 255) throw DomainError("exponent out of range");
  Monomial m = *this;
  m.bits_ &= ~(std::uint64_t{0xff} << (8 * k));
  m.bits_ |= static_cast<std::uint64_t>(power) << (8 * k);
  return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (int k = 0; k < kMaxVars; ++k) {
    const int e = (*this)[k] + other[k];
    if (e > 255) throw DomainError("exponent overflow");
    m.bits_ |= static_cast<std::uint64_t>(e) << (8 * k);
  }
  return m;
}

std::vector<int> Monomial::exponents(int nvars) const {
  std::vector<int> out(static_cast<std::size_t>(nvars));
  for (int k = 0; k < nvars; ++k) out[static_cast<std::size_t>(k)] = (*this)[k];
  return out;
}

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace_back(Monomial(), c);
}

Poly Poly::var(int k) { return monomial(Monomial::var(k), Rational(1)); }

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Poly p;
  if (c != 0) p.terms_.emplace_back(m, c);
  return p;
}

Poly Poly::linear(int i, int j, long a) {
  std::vector<Term> t;
  t.emplace_back(Monomial::var(i), Rational(1));
  t.emplace_back(Monomial::var(j), Rational(-1));
  t.emplace_back(Monomial(), Rational(a));
  return from_terms(std::move(t));
}

Poly Poly::from_terms(std::vector<Term> terms) {
  Poly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Poly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  terms_ = std::move(out);
}

bool Poly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().first.is_one());
}

Rational Poly::constant_term() const { return coefficient(Monomial()); }

Rational Poly::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return t.first < key; });
  if (it != terms_.end() && it->first == m) return it->second;
  return Rational(0);
}

int Poly::total_degree() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.first.total_degree());
  return d;
}

int Poly::degree_in(int k) const noexcept {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first[k]);
  return d;
}

int Poly::max_var() const noexcept {
  int v = -1;
  for (const auto& t : terms_) v = std::max(v, t.first.max_var());
  return v;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) return *this = other;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Rational c = a->second + b->second;
      if (c != 0) out.emplace_back(a->first, std::move(c));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) { return *this += -other; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_constant()) return Poly(a) *= b.terms_.front().second;
  if (a.is_constant()) return Poly(b) *= a.terms_.front().second;
  std::vector<Poly::Term> terms;
  terms.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) terms.emplace_back(s.first * t.first, s.second * t.second);
  return Poly::from_terms(std::move(terms));
}

Poly Poly::pow(int e) const {
  if (e < 0) throw DomainError("negative power of a polynomial");
  Poly result(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

namespace {

// Binomial row C(e, 0..e).
std::vector<Integer> binomial_row(int e) {
  std::vector<Integer> row(static_cast<std::size_t>(e) + 1);
  for (int r = 0; r <= e; ++r) mpz_bin_uiui(row[static_cast<std::size_t>(r)].get_mpz_t(), e, r);
  return row;
}

}  // namespace

Poly Poly::substitute_affine(int k, int target, const Rational& c) const {
  if (c == 0 && k == target) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() * 2);
  std::vector<Rational> cpow{Rational(1)};
  for (const auto& [m, coef] : terms_) {
    const int e = m[k];
    if (e == 0) {
      out.emplace_back(m, coef);
      continue;
    }
    while (static_cast<int>(cpow.size()) <= e) cpow.push_back(cpow.back() * c);
    const Monomial base = m.with(k, 0);
    const auto row = binomial_row(e);
    for (int r = 0; r <= e; ++r) {
      const Rational& cp = cpow[static_cast<std::size_t>(e - r)];
      if (cp == 0) continue;
      Rational v = coef * cp * Rational(row[static_cast<std::size_t>(r)]);
      out.emplace_back(base * Monomial::var(target, r), std::move(v));
    }
  }
  return from_terms(std::move(out));
}

Poly Poly::shifted(std::span<const int> shift) const {
  Poly p = *this;
  for (std::size_t k = 0; k < shift.size(); ++k)
    if (shift[k] != 0) p = p.substitute_affine(static_cast<int>(k), static_cast<int>(k), Rational(shift[k]));
  return p;
}

Poly Poly::mapped(std::span<const int> perm, std::span<const int> offset) const {
  const std::size_t n = perm.size();
  std::vector<int> seen(n, 0);
  for (int p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= n || seen[static_cast<std::size_t>(p)]++)
      throw DomainError("variable map is not a permutation");
  }
  if (max_var() >= static_cast<int>(n)) throw DomainError("variable outside permutation range");
  std::vector<Term> renamed;
  renamed.reserve(terms_.size());
  for (const auto& [m, coef] : terms_) {
    Monomial r;
    for (std::size_t k = 0; k < n; ++k) r = r.with(perm[k], m[static_cast<int>(k)]);
    renamed.emplace_back(r, coef);
  }
  std::vector<int> shift(n, 0);
  for (std::size_t k = 0; k < n; ++k) shift[static_cast<std::size_t>(perm[k])] = offset[k];
  return from_terms(std::move(renamed)).shifted(shift);
}

std::vector<Poly> Poly::coefficients_in(int k) const {
  std::vector<std::vector<Term>> parts(static_cast<std::size_t>(degree_in(k)) + 1);
  for (const auto& [m, coef] : terms_) parts[static_cast<std::size_t>(m[k])].emplace_back(m.with(k, 0), coef);
  std::vector<Poly> out;
  out.reserve(parts.size());
  for (auto& p : parts) out.push_back(from_terms(std::move(p)));
  return out;
}

namespace {

constexpr std::uint64_t kPrime = 4294967291u;  // largest prime below 2^32

std::uint64_t mulmod(std::uint64_t x, std::uint64_t y) { return x * y % kPrime; }

std::uint64_t powmod(std::uint64_t x, std::uint64_t e) {
  std::uint64_t r = 1;
  for (; e > 0; e >>= 1, x = mulmod(x, x))
    if (e & 1) r = mulmod(r, x);
  return r;
}

std::uint64_t residue(const Integer& z) { return mpz_fdiv_ui(z.get_mpz_t(), kPrime); }

// True when p is certainly nonzero at a point of h_i = h_j - a; the value is
// reduced mod a prime, so a zero residue proves nothing.
bool nonzero_on_hyperplane(const Poly& p, int i, int j, long a) {
  std::array<std::uint64_t, kMaxVars> pt{};
  for (int k = 0; k < kMaxVars; ++k) pt[static_cast<std::size_t>(k)] = static_cast<std::uint64_t>(37 * k * k + 11 * k + 101);
  const long shifted = static_cast<long>(pt[static_cast<std::size_t>(j)]) - a;
  pt[static_cast<std::size_t>(i)] = static_cast<std::uint64_t>(((shifted % static_cast<long>(kPrime)) + static_cast<long>(kPrime)) % static_cast<long>(kPrime));
  std::uint64_t num = 0, den = 1;
  for (const auto& [m, c] : p.terms()) {
    const std::uint64_t cd = residue(c.get_den());
    if (cd == 0) return false;
    std::uint64_t v = residue(c.get_num());
    for (int k = 0; k < kMaxVars; ++k)
      if (m[k] > 0) v = mulmod(v, powmod(pt[static_cast<std::size_t>(k)], static_cast<std::uint64_t>(m[k])));
    // num/den + v/cd
    num = (mulmod(num, cd) + mulmod(v, den)) % kPrime;
    den = mulmod(den, cd);
  }
  return num != 0;
}

}  // namespace

bool Poly::divisible_by_linear(int i, int j, long a) const { return try_divide_linear(i, j, a).has_value(); }

Poly Poly::divide_linear(int i, int j, long a) const {
  auto q = try_divide_linear(i, j, a);
  if (!q) throw DomainError("polynomial not divisible by linear factor");
  return std::move(*q);
}

std::optional<Poly> Poly::try_divide_linear(int i, int j, long a) const {
  if (is_zero()) return Poly();
  if (!depends_on(i)) return std::nullopt;
  if (nonzero_on_hyperplane(*this, i, j, a)) return std::nullopt;
  // Synthetic division by (h_i - r) with r = h_j - a.
  const auto p = coefficients_in(i);
  const int d = static_cast<int>(p.size()) - 1;
  if (d == 0) return std::nullopt;
  const Poly r = Poly::var(j) - Poly(Rational(a));
  std::vector<Poly> q(static_cast<std::size_t>(d));
  q[static_cast<std::size_t>(d - 1)] = p[static_cast<std::size_t>(d)];
  for (int k = d - 1; k >= 1; --k)
    q[static_cast<std::size_t>(k - 1)] = p[static_cast<std::size_t>(k)] + r * q[static_cast<std::size_t>(k)];
  if (!(p[0] + r * q[0]).is_zero()) return std::nullopt;
  std::vector<Term> out;
  for (int k = 0; k < d; ++k)
    for (const auto& [m, coef] : q[static_cast<std::size_t>(k)].terms_) out.emplace_back(m.with(i, k), coef);
  return from_terms(std::move(out));
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  Rational sum = 0;
  for (const auto& [m, coef] : terms_) {
    Rational v = coef;
    for (int k = 0; k < kMaxVars; ++k) {
      const int e = m[k];
      if (e == 0) continue;
      if (static_cast<std::size_t>(k) >= point.size()) throw DomainError("evaluation point too short");
      Rational pw;
      mpz_pow_ui(pw.get_num_mpz_t(), point[static_cast<std::size_t>(k)].get_num_mpz_t(), static_cast<unsigned long>(e));
      mpz_pow_ui(pw.get_den_mpz_t(), point[static_cast<std::size_t>(k)].get_den_mpz_t(), static_cast<unsigned long>(e));
      v *= pw;
    }
    sum += v;
  }
  return sum;
}

const Poly::Term& Poly::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  const Term* best = &terms_.front();
  for (const auto& t : terms_) {
    const int dt = t.first.total_degree();
    const int db = best->first.total_degree();
    if (dt > db) {
      best = &t;
    } else if (dt == db) {
      for (int k = 0; k < kMaxVars; ++k) {
        if (t.first[k] != best->first[k]) {
          if (t.first[k] > best->first[k]) best = &t;
          break;
        }
      }
    }
  }
  return *best;
}

std::size_t Poly::hash() const noexcept {
  std::size_t h = terms_.size();
  for (const auto& [m, c] : terms_) {
    h = h * 1000003u ^ std::hash<std::uint64_t>{}(m.bits());
    h = h * 1000003u ^ mpz_fdiv_ui(c.get_num_mpz_t(), 1000000007u);
    h = h * 1000003u ^ mpz_fdiv_ui(c.get_den_mpz_t(), 998244353u);
  }
  return h;
}

Poly elementary_symmetric(int n, int degree) {
  if (degree < 0) throw DomainError("negative degree");
  if (degree > n) return {};
  std::vector<Poly::Term> terms;
  // Iterate over all n-bit masks with popcount == degree.
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != degree) continue;
    Monomial m;
    for (int k = 0; k < n; ++k)
      if (mask & (1u << k)) m = m.with(k, 1);
    terms.emplace_back(m, Rational(1));
  }
  return Poly::from_terms(std::move(terms));
}

Poly complete_symmetric(int n, int degree) {
  if (degree < 0) throw DomainError("negative degree");
  if (n == 0) return degree == 0 ? Poly(1) : Poly();
  std::vector<Poly::Term> terms;
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int k, int left) {
    if (k == n - 1) {
      e[static_cast<std::size_t>(k)] = left;
      terms.emplace_back(Monomial(e), Rational(1));
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[static_cast<std::size_t>(k)] = v;
      rec(k + 1, left - v);
    }
  };
  rec(0, degree);
  return Poly::from_terms(std::move(terms));
}

}  // namespace hdiff
