#include "hdiff/multicopy.hpp"

#include <algorithm>
#include <future>
#include <random>

#include "hdiff/errors.hpp"
#include "hdiff/linalg.hpp"
#include "hdiff/rmatrix.hpp"

namespace hdiff {

namespace {

ShiftVector eps(int n, int i, int sign = 1) { return ShiftVector::unit(n, i, sign); }

Rewriter::Sigma no_sigma() {
  return [](int, int, int) { return RatFun(); };
}

}  // namespace

SigmaArray::SigmaArray(int n, int x_copies, int d_copies) : n_(n), nx_(x_copies), nd_(d_copies) {
  if (n < 1 || x_copies < 1 || d_copies < 1) throw DomainError("sizes must be positive");
  v_.resize(static_cast<std::size_t>(n * x_copies * d_copies));
}

SigmaArray SigmaArray::diagonal(int n, int copies, const Rational& c) {
  SigmaArray s(n, copies, copies);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < copies; ++a) s.set(i, a, a, RatFun(c));
  return s;
}

std::size_t SigmaArray::idx(int i, int alpha, int beta) const {
  if (i < 0 || i >= n_ || alpha < 0 || alpha >= nx_ || beta < 0 || beta >= nd_)
    throw IndexError("sigma index out of range");
  return static_cast<std::size_t>((i * nx_ + alpha) * nd_ + beta);
}

const RatFun& SigmaArray::at(int i, int alpha, int beta) const { return v_[idx(i, alpha, beta)]; }
void SigmaArray::set(int i, int alpha, int beta, RatFun v) { v_[idx(i, alpha, beta)] = std::move(v); }

std::vector<RatFun> SigmaArray::slice(int alpha, int beta) const {
  std::vector<RatFun> out;
  for (int i = 0; i < n_; ++i) out.push_back(at(i, alpha, beta));
  return out;
}

NormalElement vcopy_normal_form(int n, int copies, const Word& w) {
  if (copies < 1) throw DomainError("need at least one copy");
  const bool xs = std::all_of(w.begin(), w.end(), [](const Gen& g) { return g.is_x(); });
  const bool ds = std::all_of(w.begin(), w.end(), [](const Gen& g) { return g.is_d(); });
  if (!xs && !ds) throw DomainError("word mixes x and dbar generators");
  for (const auto& g : w)
    if (g.index >= n || g.copy >= copies) throw IndexError("generator out of range");
  Rewriter rw(n, copies, copies, no_sigma());
  return rw.normal_form(w);
}

Report vcopy_confluence(int n, int copies, int length) {
  Report rep;
  rep.name = "vcopy";
  const int gens = n * copies;
  for (const bool x_side : {true, false}) {
    Rewriter rw(n, copies, copies, no_sigma());
    std::vector<int> digits(static_cast<std::size_t>(length), 0);
    while (true) {
      Word w;
      for (int d : digits) w.push_back(x_side ? Gen::x(d % n, d / n) : Gen::d(d % n, d / n));
      std::optional<NormalElement> first;
      bool ok = true;
      for (std::size_t p = 0; p + 1 < w.size(); ++p) {
        if (in_order(w[p], w[p + 1])) continue;
        const NormalElement step = rw.rewrite_at(w, p);
        NormalElement r;
        for (const auto& [nw, c] : step.terms()) r += c * rw.normal_form(nw);
        if (!first) first = r;
        else if (r != *first) ok = false;
      }
      if (first) {
        std::vector<int> tuple;
        for (const auto& g : w) tuple.push_back((g.index + 1) * 10 + g.copy + 1);
        rep.add(x_side ? "vcopy-x" : "vcopy-d", tuple, ok);
      }
      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] == gens) digits[k++] = 0;
      if (k == digits.size()) break;
    }
  }
  return rep;
}

Report flatness_check(const SigmaArray& s) {
  const int n = s.n(), nx = s.x_copies(), nd = s.d_copies();
  Report rep;
  rep.name = "flatness";
  for (int a = 0; a < nx; ++a)
    for (int b = 0; b < nd; ++b) {
      Report part = sigma_system_report(s.slice(a, b));
      for (auto& item : part.items)
        if (nx > 1 || nd > 1) item.tuple.insert(item.tuple.end(), {a + 1, b + 1});
      rep.append(part);
    }
  if (nx == 1 && nd == 1) return rep;

  std::vector<std::future<Report>> parts;
  for (int alpha = 0; alpha < nx; ++alpha)
    parts.push_back(std::async(std::launch::async, [&s, n, nx, nd, alpha] {
      Report r;
      for (int beta = 0; beta < nd; ++beta)
        for (int gamma = 0; gamma < nd; ++gamma) {
          if (beta == gamma) continue;
          for (int u = 0; u < n; ++u)
            for (int i = 0; i < n; ++i)
              for (int k = 0; k < n; ++k)
                for (int j = 0; j < n; ++j) {
                  const std::vector<int> t{u + 1, i + 1, k + 1, j + 1, alpha + 1, beta + 1, gamma + 1};
                  const RatFun ys1 = ice_allowed(u, i, k, j)
                                         ? r_component(n, u, i, k, j) *
                                               (s.at(k, alpha, gamma) - s.at(i, alpha, gamma).shifted(eps(n, u, -1)))
                                         : RatFun();
                  r.add("ysy1", t, ys1.is_zero());
                  RatFun rhs;
                  for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                      if (ice_allowed(a, b, k, j) && ice_allowed(u, i, a, b))
                        rhs += r_component(n, a, b, k, j).shifted(eps(n, i, -1)) *
                               r_component(n, u, i, a, b).shifted(eps(n, u)) * s.at(a, alpha, beta).shifted(eps(n, u));
                  const RatFun lhs = (i == j && u == k) ? s.at(i, alpha, beta) : RatFun();
                  r.add("ysy2", t, lhs == rhs);
                }
        }
      for (int alpha2 = 0; alpha2 < nx; ++alpha2) {
        if (alpha2 == alpha) continue;
        for (int beta = 0; beta < nd; ++beta)
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
              for (int u = 0; u < n; ++u)
                for (int k = 0; k < n; ++k) {
                  const std::vector<int> t{i + 1, j + 1, u + 1, k + 1, alpha + 1, alpha2 + 1, beta + 1};
                  const RatFun x1 = ice_allowed(i, j, u, k)
                                        ? r_component(n, i, j, u, k) *
                                              (s.at(i, alpha, beta) - s.at(k, alpha, beta).shifted(eps(n, u, -1)))
                                        : RatFun();
                  r.add("xsx1", t, x1.is_zero());
                  RatFun rhs;
                  for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b)
                      if (ice_allowed(i, j, a, b) && ice_allowed(a, b, u, k))
                        rhs += r_component(n, i, j, a, b) * r_component(n, a, b, u, k) * s.at(a, alpha2, beta);
                  const RatFun lhs = (j == k && u == i) ? s.at(j, alpha2, beta).shifted(eps(n, i, -1)) : RatFun();
                  r.add("xsx2", t, lhs == rhs);
                }
      }
      return r;
    }));
  for (auto& p : parts) rep.append(p.get());
  return rep;
}

Report ambiguity_oracle(const SigmaArray& s, std::size_t budget, std::uint32_t seed) {
  const int n = s.n(), nx = s.x_copies(), nd = s.d_copies();
  std::vector<Word> words;
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < nx; ++a) {
      const Gen x = Gen::x(i, a);
      for (int j = 0; j < n; ++j)
        for (int b = 0; b < nd; ++b)
          for (int k = 0; k < n; ++k)
            for (int c = 0; c < nd; ++c) {
              const Gen d1 = Gen::d(j, b), d2 = Gen::d(k, c);
              if (!in_order(d1, d2)) words.push_back({x, d1, d2});
            }
      for (int j = 0; j < n; ++j)
        for (int a2 = 0; a2 < nx; ++a2) {
          const Gen x2 = Gen::x(j, a2);
          if (in_order(x, x2)) continue;
          for (int k = 0; k < n; ++k)
            for (int b = 0; b < nd; ++b) words.push_back({x, x2, Gen::d(k, b)});
        }
    }
  if (budget > 0 && words.size() > budget) {
    std::mt19937 rng(seed);
    std::shuffle(words.begin(), words.end(), rng);
    words.resize(budget);
    std::sort(words.begin(), words.end());
  }
  Rewriter rw(n, nd, nx, [&s](int i, int xc, int dc) { return s.at(i, xc, dc); });
  Report rep;
  rep.name = "ambiguity";
  for (const auto& w : words) {
    std::vector<int> tuple;
    for (const auto& g : w) tuple.insert(tuple.end(), {g.index + 1, g.copy + 1});
    rep.add(w[1].is_x() ? "xxd" : "xdd", tuple, rw.resolves(w));
  }
  if (rep.items.empty()) rep.add("none", {}, true, "no overlaps");
  return rep;
}

std::optional<ConstantProfile> constant_profile(const SigmaArray& s) {
  ConstantProfile out;
  for (int a = 0; a < s.x_copies(); ++a) {
    out.matrix.emplace_back();
    for (int b = 0; b < s.d_copies(); ++b) {
      const RatFun& v = s.at(0, a, b);
      if (!v.is_constant()) return std::nullopt;
      for (int i = 1; i < s.n(); ++i)
        if (s.at(i, a, b) != v) return std::nullopt;
      out.matrix.back().push_back(v.is_zero() ? Rational(0) : v.num().coefficient(Monomial()));
    }
  }
  out.rank = rank(out.matrix);
  const int m = std::min(s.x_copies(), s.d_copies());
  for (int k = 0; k < m; ++k) out.diagonal.push_back(k < out.rank ? 1 : 0);
  return out;
}

}  // namespace hdiff
