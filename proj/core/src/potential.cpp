#include "hdiff/potential.hpp"

#include <algorithm>

#include "hdiff/diffring.hpp"
#include "hdiff/errors.hpp"
#include "hdiff/linalg.hpp"
#include "hdiff/rmatrix.hpp"

namespace hdiff {

namespace {

RatFun sym(int n, int L) { return RatFun(complete_symmetric(n, L)); }

int num_degree(const RatFun& f) { return std::max(f.num().total_degree(), 0); }

// numerator degree minus denominator degree, clamped at 0
int rational_degree(const RatFun& f) {
  int d = f.num().total_degree();
  for (const auto& [g, m] : f.den()) d -= m;
  return std::max(d, 0);
}

// Finds x with sum_v x_v cols[v][e] = rhs[e] for every equation e by matching
// numerator coefficients over a common denominator.
std::optional<std::vector<Rational>> solve_combination(const std::vector<std::vector<RatFun>>& cols,
                                                       const std::vector<RatFun>& rhs) {
  const std::size_t nv = cols.size();
  Matrix a;
  std::vector<Rational> b;
  for (std::size_t e = 0; e < rhs.size(); ++e) {
    Denominator d = rhs[e].den();
    for (const auto& c : cols) d = lcm(d, c[e].den());
    std::map<Monomial, std::size_t> row_of;
    auto row = [&](const Monomial& m) {
      auto [it, fresh] = row_of.try_emplace(m, a.size());
      if (fresh) {
        a.emplace_back(nv);
        b.emplace_back(0);
      }
      return it->second;
    };
    for (std::size_t v = 0; v < nv; ++v) {
      const Poly p = cols[v][e].numerator_over(d);
      for (const auto& [m, c] : p.terms()) {
        const std::size_t r = row(m);
        a[r][v] = c;
      }
    }
    const Poly p = rhs[e].numerator_over(d);
    for (const auto& [m, c] : p.terms()) {
      const std::size_t r = row(m);
      b[r] = c;
    }
  }
  if (nv == 0) {
    for (const auto& x : b)
      if (x != 0) return std::nullopt;
    return std::vector<Rational>{};
  }
  return solve(a, b);
}

UniPoly trim(UniPoly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

}  // namespace

RatFun inverse_chi(int n, int j) {
  RatFun r(1);
  for (int m = 0; m < n; ++m)
    if (m != j) r *= RatFun::inverse_linear(j, m, 0);
  return r;
}

RatFun w_basis(int n, int j, const UniPoly& pi) {
  Poly p;
  for (std::size_t d = 0; d < pi.size(); ++d) p += Poly::monomial(Monomial::var(j, static_cast<int>(d)), pi[d]);
  return RatFun(p) * inverse_chi(n, j);
}

Report delta_system_report(const RatFun& f, int n) {
  Report rep;
  rep.name = "delta-system";
  if (f.max_var() >= n) throw DomainError("expression mentions a variable beyond the rank");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) rep.add("delta", {i + 1, j + 1}, (hd(i, j) * f).delta(j).delta(i).is_zero());
  if (rep.items.empty()) rep.add("delta", {}, true, "vacuous for rank 1");
  return rep;
}

bool delta_system_check(const RatFun& f, int n) { return delta_system_report(f, n).ok(); }

std::vector<RatFun> sigma_from_potential(const RatFun& f, int n) {
  std::vector<RatFun> s;
  for (int i = 0; i < n; ++i) s.push_back(f.delta(i));
  return s;
}

bool sigma_system_check(const std::vector<RatFun>& sigma) { return sigma_system_report(sigma).ok(); }

RatFun reassemble(const WDecomposition& d, int n) {
  RatFun r;
  for (const auto& [k, pi] : d.parts) r += w_basis(n, k, pi);
  for (const auto& [L, c] : d.symmetric) r += RatFun(c) * sym(n, L);
  return r;
}

WDecomposition w_decompose(const RatFun& f, int n, int pivot) {
  if (pivot < 0 || pivot >= n) throw IndexError("pivot out of range");
  if (!delta_system_check(f, n)) throw NotInW("element does not satisfy the Delta-system");
  int deg = num_degree(f) + n + 1;
  for (int attempt = 0; attempt < 2; ++attempt, deg *= 2) {
    std::vector<std::vector<RatFun>> cols;
    std::vector<std::pair<int, int>> what;  // (k, d) or (-1, L)
    for (int k = 0; k < n; ++k) {
      if (k == pivot) continue;
      for (int d = 0; d <= deg; ++d) {
        UniPoly pi(static_cast<std::size_t>(d) + 1);
        pi.back() = 1;
        cols.push_back({w_basis(n, k, pi)});
        what.emplace_back(k, d);
      }
    }
    for (int L = 0; L <= deg; ++L) {
      cols.push_back({sym(n, L)});
      what.emplace_back(-1, L);
    }
    auto x = solve_combination(cols, {f});
    if (!x) continue;
    WDecomposition out;
    out.pivot = pivot;
    for (std::size_t v = 0; v < what.size(); ++v) {
      const auto [k, d] = what[v];
      const Rational& c = (*x)[v];
      if (c == 0) continue;
      if (k < 0) {
        out.symmetric.emplace_back(d, c);
      } else {
        auto& pi = out.parts[k];
        if (static_cast<int>(pi.size()) <= d) pi.resize(static_cast<std::size_t>(d) + 1);
        pi[static_cast<std::size_t>(d)] = c;
      }
    }
    for (auto& [k, pi] : out.parts) pi = trim(pi);
    if (reassemble(out, n) != f) throw MismatchError("decomposition does not reassemble");
    return out;
  }
  throw NotInW("no decomposition found within the degree bound");
}

RatFun reconstruct_potential(const std::vector<RatFun>& s) {
  const int n = static_cast<int>(s.size());
  if (n < 1) throw DomainError("empty sigma vector");
  const Report sys = sigma_system_report(s);
  if (const auto* bad = sys.first_failure())
    throw NotFlat("sigma vector violates the flatness system at (" + std::to_string(bad->tuple[0]) + "," +
                      std::to_string(bad->tuple[1]) + ")",
                  bad->tuple[0], bad->tuple[1]);
  int deg = 0;
  for (const auto& x : s) deg = std::max(deg, rational_degree(x));
  deg += n;
  for (int attempt = 0; attempt < 2; ++attempt, deg *= 2) {
    std::vector<RatFun> basis;
    for (int k = 1; k < n; ++k)
      for (int d = 0; d <= deg; ++d) {
        UniPoly pi(static_cast<std::size_t>(d) + 1);
        pi.back() = 1;
        basis.push_back(w_basis(n, k, pi));
      }
    for (int L = 1; L <= deg + 1; ++L) basis.push_back(sym(n, L));
    std::vector<std::vector<RatFun>> cols;
    for (const auto& b : basis) cols.push_back(sigma_from_potential(b, n));
    auto x = solve_combination(cols, s);
    if (!x) continue;
    RatFun sigma;
    for (std::size_t v = 0; v < basis.size(); ++v)
      if ((*x)[v] != 0) sigma += RatFun((*x)[v]) * basis[v];
    if (sigma_from_potential(sigma, n) != s) throw MismatchError("reconstructed potential fails verification");
    return sigma;
  }
  throw NotFlat("no potential found within the degree bound", 0, 0);
}

bool verify_chi_identity(int n, int L) {
  RatFun s;
  for (int j = 0; j < n; ++j) s += RatFun::var(j).pow(L) * inverse_chi(n, j);
  return L <= n - 2 ? s.is_zero() : s == sym(n, L - n + 1);
}

std::optional<std::vector<std::pair<int, Rational>>> h_expansion(const Poly& p, int n) {
  if (p.max_var() >= n) return std::nullopt;
  Poly rest = p;
  std::vector<std::pair<int, Rational>> out;
  for (int L = rest.total_degree(); L >= 0 && !rest.is_zero(); --L) {
    const Rational c = rest.coefficient(Monomial::var(0, L));
    if (c == 0) continue;
    rest -= complete_symmetric(n, L) * c;
    out.emplace_back(L, c);
  }
  if (!rest.is_zero()) return std::nullopt;
  std::reverse(out.begin(), out.end());
  return out;
}

bool is_polynomial_potential(const RatFun& f, int n) {
  if (!delta_system_check(f, n)) throw NotInW("element does not satisfy the Delta-system");
  const bool by_basis = f.is_polynomial() && h_expansion(f.num(), n).has_value();
  bool invariant = true;
  std::vector<int> perm(static_cast<std::size_t>(n)), zero(static_cast<std::size_t>(n), 0);
  for (int i = 0; i + 1 < n && invariant; ++i) {
    for (int k = 0; k < n; ++k) perm[static_cast<std::size_t>(k)] = k;
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i + 1)]);
    invariant = f.mapped(perm, zero) == f;
  }
  if (by_basis != invariant) throw MismatchError("symmetric-polynomial test and invariance test disagree");
  return by_basis;
}

}  // namespace hdiff
