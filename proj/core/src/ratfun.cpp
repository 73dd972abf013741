#include "hdiff/ratfun.hpp"

#include <algorithm>
#include <map>

#include "hdiff/errors.hpp"

namespace hdiff {

namespace {

void merge_sorted(Denominator& d) {
  std::sort(d.begin(), d.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  Denominator out;
  for (auto& f : d) {
    if (!out.empty() && out.back().first == f.first)
      out.back().second += f.second;
    else
      out.push_back(f);
  }
  std::erase_if(out, [](const auto& f) { return f.second <= 0; });
  d = std::move(out);
}

int multiplicity(const Denominator& d, const LinFactor& f) {
  auto it = std::lower_bound(d.begin(), d.end(), f,
                             [](const auto& x, const LinFactor& key) { return x.first < key; });
  return (it != d.end() && it->first == f) ? it->second : 0;
}

// Orients h_i - h_j + a canonically; returns the sign picked up.
int orient(int& i, int& j, long& a) {
  if (i < j) return 1;
  std::swap(i, j);
  a = -a;
  return -1;
}

Poly poly_derivative(const Poly& p, int k) {
  std::vector<Poly::Term> out;
  for (const auto& [m, c] : p.terms()) {
    const int e = m[k];
    if (e > 0) out.emplace_back(m.with(k, e - 1), c * e);
  }
  return Poly::from_terms(std::move(out));
}

}  // namespace

Denominator lcm(const Denominator& a, const Denominator& b) {
  Denominator out;
  auto x = a.begin();
  auto y = b.begin();
  while (x != a.end() || y != b.end()) {
    if (y == b.end() || (x != a.end() && x->first < y->first)) {
      out.push_back(*x++);
    } else if (x == a.end() || y->first < x->first) {
      out.push_back(*y++);
    } else {
      out.emplace_back(x->first, std::max(x->second, y->second));
      ++x;
      ++y;
    }
  }
  return out;
}

Poly expand(const Denominator& d) {
  Poly p(1);
  for (const auto& [f, m] : d) p *= f.poly().pow(m);
  return p;
}

ShiftVector ShiftVector::unit(int n, int j, int sign) {
  ShiftVector s(n);
  s[j] = sign;
  return s;
}

ShiftVector ShiftVector::all(int n, int sign) {
  return ShiftVector(std::vector<int>(static_cast<std::size_t>(n), sign));
}

bool ShiftVector::is_zero() const noexcept {
  return std::all_of(s_.begin(), s_.end(), [](int v) { return v == 0; });
}

ShiftVector ShiftVector::operator-() const {
  ShiftVector r = *this;
  for (auto& v : r.s_) v = -v;
  return r;
}

ShiftVector& ShiftVector::operator+=(const ShiftVector& o) {
  if (o.s_.size() > s_.size()) s_.resize(o.s_.size(), 0);
  for (std::size_t k = 0; k < o.s_.size(); ++k) s_[k] += o.s_[k];
  return *this;
}

RatFun RatFun::make(Poly num, Denominator den) {
  RatFun r;
  r.num_ = std::move(num);
  if (r.num_.is_zero()) return r;
  for (const auto& [f, m] : den)
    if (f.i >= f.j || f.i < 0 || f.j >= kMaxVars) throw DomainError("non-canonical denominator factor");
  merge_sorted(den);
  r.den_ = std::move(den);
  r.cancel();
  return r;
}

RatFun RatFun::inverse_linear(int i, int j, long a) {
  if (i == j) throw DomainError("shifted difference with equal indices");
  const int sign = orient(i, j, a);
  return make(Poly(sign), {{LinFactor{i, j, a}, 1}});
}

void RatFun::cancel() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto& [f, m] : den_) {
    while (m > 0) {
      auto q = num_.try_divide_linear(f.i, f.j, f.a);
      if (!q) break;
      num_ = std::move(*q);
      --m;
    }
  }
  std::erase_if(den_, [](const auto& f) { return f.second == 0; });
}

int RatFun::max_var() const noexcept {
  int v = num_.max_var();
  for (const auto& [f, m] : den_) v = std::max(v, f.j);
  return v;
}

bool RatFun::depends_on(int k) const noexcept {
  if (num_.depends_on(k)) return true;
  return std::any_of(den_.begin(), den_.end(), [k](const auto& f) { return f.first.i == k || f.first.j == k; });
}

RatFun RatFun::operator-() const {
  RatFun r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    cancel();
    return *this;
  }
  Denominator l = lcm(den_, o.den_);
  num_ = numerator_over(l) + o.numerator_over(l);
  den_ = std::move(l);
  cancel();
  return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
  if (is_zero() || o.is_zero()) return *this = RatFun();
  num_ *= o.num_;
  if (!o.den_.empty()) {
    den_.insert(den_.end(), o.den_.begin(), o.den_.end());
    merge_sorted(den_);
  }
  cancel();
  return *this;
}

RatFun RatFun::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatFun r(1);
  for (int k = 0; k < e; ++k) r *= *this;
  return r;
}

RatFun RatFun::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  Poly rest = num_;
  Denominator factors;
  constexpr long kSearch = 64;
  while (!rest.is_constant()) {
    int i = 0;
    while (!rest.depends_on(i)) ++i;
    bool found = false;
    for (int q = 0; q < kMaxVars && !found; ++q) {
      if (q == i || !rest.depends_on(q)) continue;
      for (long a = -kSearch; a <= kSearch && !found; ++a) {
        int p1 = i, p2 = q;
        long b = a;
        orient(p1, p2, b);
        if (rest.divisible_by_linear(p1, p2, b)) {
          rest = rest.divide_linear(p1, p2, b);
          factors.emplace_back(LinFactor{p1, p2, b}, 1);
          found = true;
        }
      }
    }
    if (!found) throw DomainError("denominator is not a product of shifted differences");
  }
  RatFun r = make(expand(den_) * (Rational(1) / rest.constant_term()), std::move(factors));
  return r;
}

RatFun RatFun::shifted(const ShiftVector& s) const {
  if (s.is_zero() || is_zero()) return *this;
  RatFun r;
  r.num_ = num_.shifted(s.values());
  r.den_ = den_;
  auto at = [&s](int k) { return k < s.size() ? s[k] : 0; };
  for (auto& [f, m] : r.den_) f.a += at(f.i) - at(f.j);
  merge_sorted(r.den_);
  return r;
}

RatFun RatFun::shifted(int j, int by) const {
  ShiftVector s(std::max(j + 1, 1));
  s[j] = by;
  return shifted(s);
}

RatFun RatFun::delta(int j) const { return *this - shifted(j, -1); }

RatFun RatFun::mapped(std::span<const int> perm, std::span<const int> offset) const {
  Poly num = num_.mapped(perm, offset);
  Denominator den;
  for (const auto& [f, m] : den_) {
    int i = perm[static_cast<std::size_t>(f.i)];
    int j = perm[static_cast<std::size_t>(f.j)];
    long a = f.a + offset[static_cast<std::size_t>(f.i)] - offset[static_cast<std::size_t>(f.j)];
    if (orient(i, j, a) < 0 && (m % 2) == 1) num = -num;
    den.emplace_back(LinFactor{i, j, a}, m);
  }
  return make(std::move(num), std::move(den));
}

RatFun RatFun::substitute(int k, int target, long c) const {
  Poly num = num_.substitute_affine(k, target, Rational(c));
  Denominator den;
  Rational scale = 1;
  for (const auto& [f, m] : den_) {
    int i = f.i == k ? target : f.i;
    int j = f.j == k ? target : f.j;
    long a = f.a + (f.i == k ? c : 0) - (f.j == k ? c : 0);
    if (i == j) {
      if (a == 0) throw PoleError("substitution hits a pole");
      for (int e = 0; e < m; ++e) scale /= a;
      continue;
    }
    if (orient(i, j, a) < 0 && (m % 2) == 1) scale = -scale;
    den.emplace_back(LinFactor{i, j, a}, m);
  }
  return make(num * scale, std::move(den));
}

RatFun RatFun::derivative(int k) const {
  RatFun r = make(poly_derivative(num_, k), den_);
  for (const auto& [f, m] : den_) {
    int s = f.i == k ? 1 : (f.j == k ? -1 : 0);
    if (s == 0) continue;
    Denominator d = den_;
    for (auto& g : d)
      if (g.first == f) ++g.second;
    r += make(num_ * Rational(-m * s), std::move(d));
  }
  return r;
}

Poly RatFun::numerator_over(const Denominator& d) const {
  Denominator rest;
  for (const auto& [f, m] : d) {
    const int have = multiplicity(den_, f);
    if (have > m) throw DomainError("denominator is not a multiple");
    if (m > have) rest.emplace_back(f, m - have);
  }
  for (const auto& [f, m] : den_)
    if (multiplicity(d, f) < m) throw DomainError("denominator is not a multiple");
  return num_ * expand(rest);
}

Rational RatFun::evaluate(std::span<const Rational> point) const {
  Rational v = num_.evaluate(point);
  for (const auto& [f, m] : den_) {
    if (static_cast<std::size_t>(f.j) >= point.size()) throw DomainError("evaluation point too short");
    const Rational d = point[static_cast<std::size_t>(f.i)] - point[static_cast<std::size_t>(f.j)] + f.a;
    if (d == 0) throw PoleError("denominator vanishes at evaluation point");
    for (int e = 0; e < m; ++e) v /= d;
  }
  return v;
}

std::size_t RatFun::hash() const noexcept {
  std::size_t h = num_.hash();
  for (const auto& [f, m] : den_) {
    h = h * 31u + static_cast<std::size_t>(f.i);
    h = h * 31u + static_cast<std::size_t>(f.j);
    h = h * 131u + static_cast<std::size_t>(f.a + 1024);
    h = h * 31u + static_cast<std::size_t>(m);
  }
  return h;
}

PartialFractions partial_fractions(const RatFun& f, int j) {
  // Poles in h_j keyed by (k, a), meaning h_j - h_k - a.
  std::map<std::pair<int, long>, int> poles;
  for (const auto& [g, m] : f.den()) {
    if (g.i == j) poles[{g.j, -g.a}] += m;
    else if (g.j == j) poles[{g.i, g.a}] += m;
  }
  PartialFractions out;
  RatFun rest = f;
  for (const auto& [key, m] : poles) {
    const auto [k, a] = key;
    RatFun g = f * RatFun::linear(j, k, -a).pow(m);
    Rational fact = 1;
    for (int r = 0; r < m; ++r) {
      if (r > 0) {
        g = g.derivative(j);
        fact *= r;
      }
      RatFun u = g.substitute(j, k, a) * RatFun(Rational(1) / fact);
      if (u.is_zero()) continue;
      const int nu = m - r;
      rest -= u * RatFun::inverse_linear(j, k, -a).pow(nu);
      out.principal.push_back({k, a, nu, std::move(u)});
    }
  }
  std::sort(out.principal.begin(), out.principal.end(), [](const auto& x, const auto& y) {
    if (x.k != y.k) return x.k < y.k;
    if (x.a != y.a) return x.a > y.a;
    return x.nu < y.nu;
  });
  for (const auto& [g, m] : rest.den())
    if (g.i == j || g.j == j) throw MismatchError("partial fraction remainder still has a pole");
  out.regular = std::move(rest);
  return out;
}

RatFun reassemble(const PartialFractions& pf, int j) {
  RatFun r = pf.regular;
  for (const auto& t : pf.principal) r += t.u * RatFun::inverse_linear(j, t.k, -t.a).pow(t.nu);
  return r;
}

TPoly::TPoly(std::vector<RatFun> c) : c_(std::move(c)) { trim(); }

TPoly TPoly::one_plus_ht(int k) { return TPoly({RatFun(1), RatFun::var(k)}); }

void TPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const RatFun& TPoly::operator[](int k) const {
  static const RatFun zero;
  if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
  return c_[static_cast<std::size_t>(k)];
}

TPoly TPoly::operator-() const {
  TPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

TPoly& TPoly::operator+=(const TPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<RatFun> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t x = 0; x < a.c_.size(); ++x)
    for (std::size_t y = 0; y < b.c_.size(); ++y) c[x + y] += a.c_[x] * b.c_[y];
  return TPoly(std::move(c));
}

TPoly operator*(TPoly a, const RatFun& f) {
  for (auto& c : a.c_) c *= f;
  a.trim();
  return a;
}

TPoly TPoly::shifted(const ShiftVector& s) const {
  TPoly r = *this;
  for (auto& c : r.c_) c = c.shifted(s);
  return r;
}

TPoly TPoly::delta(int j) const {
  TPoly r = *this;
  for (auto& c : r.c_) c = c.delta(j);
  r.trim();
  return r;
}

}  // namespace hdiff
