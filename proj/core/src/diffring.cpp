#include "hdiff/diffring.hpp"

#include <algorithm>

#include "hdiff/errors.hpp"
#include "hdiff/rmatrix.hpp"

namespace hdiff {

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = w.size();
  for (const Gen& g : w)
    h = h * 1099511628211ull ^ (static_cast<std::size_t>(g.kind) << 16 | static_cast<std::size_t>(g.copy) << 8 | g.index);
  return h;
}

bool in_order(const Gen& a, const Gen& b) noexcept {
  if (a.kind != b.kind) return a.is_d();
  if (a.copy != b.copy) return a.copy < b.copy;
  return a.index >= b.index;
}

bool is_normal(const Word& w) noexcept {
  for (std::size_t p = 0; p + 1 < w.size(); ++p)
    if (!in_order(w[p], w[p + 1])) return false;
  return true;
}

ShiftVector weight(const Word& w, int n) {
  ShiftVector s(n);
  for (const Gen& g : w) s[g.index] += g.is_x() ? 1 : -1;
  return s;
}

NormalElement::NormalElement(RatFun c) {
  if (!c.is_zero()) terms_.emplace(Word{}, std::move(c));
}

NormalElement NormalElement::monomial(Word w, RatFun c) {
  NormalElement e;
  e.add_term(w, c);
  return e;
}

RatFun NormalElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? RatFun() : it->second;
}

void NormalElement::add_term(const Word& w, const RatFun& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(w, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int NormalElement::degree() const noexcept {
  int d = -1;
  for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
  return d;
}

NormalElement NormalElement::operator-() const {
  NormalElement e = *this;
  for (auto& [w, c] : e.terms_) c = -c;
  return e;
}

NormalElement& NormalElement::operator+=(const NormalElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

NormalElement& NormalElement::operator-=(const NormalElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

NormalElement operator*(const RatFun& f, const NormalElement& e) {
  NormalElement r;
  if (f.is_zero()) return r;
  for (const auto& [w, c] : e.terms_) r.terms_.emplace(w, f * c);
  return r;
}

Rewriter::Rewriter(int n, int d_copies, int x_copies, Sigma sigma)
    : n_(n), nd_(d_copies), nx_(x_copies), sigma_(std::move(sigma)) {
  if (n < 1 || n > kMaxVars) throw DomainError("rank must be between 1 and " + std::to_string(kMaxVars));
  if (d_copies < 1 || x_copies < 1) throw DomainError("copy counts must be positive");
}

NormalElement Rewriter::rule(const Gen& a, const Gen& b) const {
  NormalElement out;
  const int n = n_;
  if (a.is_x() && b.is_x()) {
    const int i = a.index, j = b.index;
    if (a.copy == b.copy) {
      out.add_term({b, a}, RatFun::linear(i, j, 1) * RatFun::inverse_linear(i, j, 0));
    } else {
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (ice_allowed(i, j, k, l))
            out.add_term({Gen::x(k, b.copy), Gen::x(l, a.copy)}, r_component(n, i, j, k, l));
    }
  } else if (a.is_d() && b.is_d()) {
    const int l = a.index, k = b.index;
    if (a.copy == b.copy) {
      out.add_term({b, a}, RatFun::linear(l, k, -1) * RatFun::inverse_linear(l, k, 0));
    } else {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (ice_allowed(i, j, k, l)) {
            ShiftVector s = ShiftVector::unit(n, i) + ShiftVector::unit(n, j);
            out.add_term({Gen::d(j, b.copy), Gen::d(i, a.copy)}, r_component(n, i, j, k, l).shifted(s));
          }
    }
  } else {
    const int i = a.index, j = b.index;
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l)
        if (ice_allowed(k, i, l, j))
          out.add_term({Gen::d(k, b.copy), Gen::x(l, a.copy)},
                       r_component(n, k, i, l, j).shifted(ShiftVector::unit(n, k)));
    if (i == j) out.add_term({}, -sigma_(i, a.copy, b.copy));
  }
  return out;
}

NormalElement Rewriter::rewrite_at(const Word& w, std::size_t pos) const {
  const NormalElement r = rule(w[pos], w[pos + 1]);
  const Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
  const ShiftVector back = -weight(prefix, n_);
  NormalElement out;
  for (const auto& [mid, c] : r.terms()) {
    Word nw = prefix;
    nw.insert(nw.end(), mid.begin(), mid.end());
    nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.end());
    out.add_term(nw, c.shifted(back));
  }
  return out;
}

NormalElement Rewriter::normal_form(const Word& w) {
  std::size_t pos = 0;
  while (pos + 1 < w.size() && in_order(w[pos], w[pos + 1])) ++pos;
  if (pos + 1 >= w.size()) return NormalElement::monomial(w);
  {
    std::lock_guard lock(mu_);
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
  }
  const NormalElement step = rewrite_at(w, pos);
  NormalElement result;
  for (const auto& [nw, c] : step.terms()) result += c * normal_form(nw);
  std::lock_guard lock(mu_);
  memo_.emplace(w, result);
  return result;
}

NormalElement Rewriter::normalize(const std::map<Word, RatFun>& raw) {
  NormalElement result;
  for (const auto& [w, c] : raw) result += c * normal_form(w);
  return result;
}

NormalElement Rewriter::multiply(const NormalElement& a, const NormalElement& b) {
  std::map<Word, RatFun> raw;
  for (const auto& [w1, c1] : a.terms()) {
    const ShiftVector back = -weight(w1, n_);
    for (const auto& [w2, c2] : b.terms()) {
      Word w = w1;
      w.insert(w.end(), w2.begin(), w2.end());
      RatFun c = c1 * c2.shifted(back);
      auto [it, fresh] = raw.try_emplace(std::move(w), c);
      if (!fresh) it->second += c;
    }
  }
  return normalize(raw);
}

bool Rewriter::resolves(const Word& w, NormalElement* first, NormalElement* second) {
  NormalElement a = normalize(rewrite_at(w, 0).terms());
  NormalElement b = normalize(rewrite_at(w, 1).terms());
  const bool same = a == b;
  if (first) *first = std::move(a);
  if (second) *second = std::move(b);
  return same;
}

std::size_t Rewriter::cache_size() const {
  std::lock_guard lock(mu_);
  return memo_.size();
}

void Rewriter::clear_cache() {
  std::lock_guard lock(mu_);
  memo_.clear();
}

DiffRing::DiffRing(RingSpec spec) : spec_(std::move(spec)) {
  if (static_cast<int>(spec_.sigma.size()) != spec_.n)
    throw DomainError("expected " + std::to_string(spec_.n) + " sigma entries, got " + std::to_string(spec_.sigma.size()));
  for (const auto& s : spec_.sigma)
    if (s.max_var() >= spec_.n) throw DomainError("sigma mentions a variable beyond the rank");
  auto sig = spec_.sigma;
  rw_ = std::make_shared<Rewriter>(spec_.n, 1, 1, [sig](int i, int, int) { return sig[static_cast<std::size_t>(i)]; });
}

NormalElement DiffRing::multiply(const NormalElement& a, const NormalElement& b) const { return rw_->multiply(a, b); }

NormalElement DiffRing::normal_form(const std::vector<Factor>& word) const {
  NormalElement acc(1);
  for (const auto& f : word) {
    if (const auto* c = std::get_if<RatFun>(&f))
      acc = multiply(acc, NormalElement(*c));
    else
      acc = multiply(acc, NormalElement::monomial({std::get<Gen>(f)}));
  }
  return acc;
}

NormalElement DiffRing::commutator(const NormalElement& a, const NormalElement& b) const {
  return multiply(a, b) - multiply(b, a);
}

Word pbw_word(const std::vector<int>& a, const std::vector<int>& b) {
  Word w;
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) w.insert(w.end(), static_cast<std::size_t>(a[static_cast<std::size_t>(i)]), Gen::d(i));
  for (int i = static_cast<int>(b.size()) - 1; i >= 0; --i) w.insert(w.end(), static_cast<std::size_t>(b[static_cast<std::size_t>(i)]), Gen::x(i));
  return w;
}

void pbw_exponents(const Word& w, int n, std::vector<int>& a, std::vector<int>& b) {
  a.assign(static_cast<std::size_t>(n), 0);
  b.assign(static_cast<std::size_t>(n), 0);
  for (const Gen& g : w) ++(g.is_x() ? b : a)[g.index];
}

std::vector<Relation> defining_relations(int n, const std::vector<RatFun>& sigma) {
  std::vector<Relation> rels;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      rels.push_back({"xx", {i + 1, j + 1},
                      {{1, {Gen::x(i), Gen::x(j)}},
                       {-1, {RatFun::linear(i, j, 1) * RatFun::inverse_linear(i, j, 0), Gen::x(j), Gen::x(i)}}}});
      rels.push_back({"dd", {i + 1, j + 1},
                      {{1, {Gen::d(i), Gen::d(j)}},
                       {-1, {RatFun::linear(i, j, -1) * RatFun::inverse_linear(i, j, 0), Gen::d(j), Gen::d(i)}}}});
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Relation r{"xd", {i + 1, j + 1}, {{1, {Gen::x(i), Gen::d(j)}}}};
      if (i < j) {
        r.terms.push_back({-1, {Gen::d(j), Gen::x(i)}});
      } else if (i > j) {
        RatFun c = hd(i, j) * RatFun::linear(i, j, -2) * RatFun::inverse_linear(i, j, -1).pow(2);
        r.terms.push_back({-1, {c, Gen::d(j), Gen::x(i)}});
      } else {
        r.terms.push_back({-1, {Gen::d(i), Gen::x(i)}});
        for (int k = 0; k < n; ++k)
          if (k != i) r.terms.push_back({1, {RatFun::inverse_linear(i, k, -1), Gen::d(k), Gen::x(k)}});
        r.terms.push_back({1, {sigma[static_cast<std::size_t>(i)]}});
      }
      rels.push_back(std::move(r));
    }
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      const int dl = k == j ? 1 : 0;
      rels.push_back({"hx", {k + 1, j + 1},
                      {{1, {RatFun::var(k), Gen::x(j)}}, {-1, {Gen::x(j), RatFun::var(k) + RatFun(dl)}}}});
      rels.push_back({"hd", {k + 1, j + 1},
                      {{1, {RatFun::var(k), Gen::d(j)}}, {-1, {Gen::d(j), RatFun::var(k) - RatFun(dl)}}}});
    }
  return rels;
}

namespace {

std::vector<int> iota_vec(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = k;
  return v;
}

}  // namespace

GeneratorAssignment identity_assignment(const DiffRing& ring) {
  GeneratorAssignment m;
  for (int i = 0; i < ring.n(); ++i) {
    m.x_images.push_back(ring.x(i));
    m.d_images.push_back(ring.d(i));
  }
  m.h_perm = iota_vec(ring.n());
  m.h_offset.assign(static_cast<std::size_t>(ring.n()), 0);
  return m;
}

GeneratorAssignment scaling_assignment(const DiffRing& target, const Rational& gamma) {
  GeneratorAssignment m = identity_assignment(target);
  for (auto& d : m.d_images) d = RatFun(gamma) * d;
  return m;
}

GeneratorAssignment zhelobenko_assignment(const DiffRing& ring, int i) {
  const int n = ring.n();
  if (i < 0 || i + 1 >= n) throw IndexError("reflection index " + std::to_string(i + 1) + " outside 1.." + std::to_string(n - 1));
  GeneratorAssignment m = identity_assignment(ring);
  const RatFun h = hd(i, i + 1);
  m.x_images[static_cast<std::size_t>(i)] =
      RatFun(-1) * ring.multiply(ring.x(i + 1), NormalElement(h * RatFun::inverse_linear(i, i + 1, -1)));
  m.x_images[static_cast<std::size_t>(i + 1)] = ring.x(i);
  m.d_images[static_cast<std::size_t>(i)] = -(RatFun::linear(i, i + 1, -1) * RatFun::inverse_linear(i, i + 1, 0)) * ring.d(i + 1);
  m.d_images[static_cast<std::size_t>(i + 1)] = ring.d(i);
  std::swap(m.h_perm[static_cast<std::size_t>(i)], m.h_perm[static_cast<std::size_t>(i + 1)]);
  return m;
}

NormalElement apply_assignment(const DiffRing& target, const GeneratorAssignment& m, const std::vector<Factor>& word) {
  NormalElement acc(1);
  for (const auto& f : word) {
    if (const auto* c = std::get_if<RatFun>(&f)) {
      acc = target.multiply(acc, NormalElement(c->mapped(m.h_perm, m.h_offset)));
    } else {
      const Gen g = std::get<Gen>(f);
      const auto& img = g.is_x() ? m.x_images : m.d_images;
      acc = target.multiply(acc, img.at(g.index));
    }
  }
  return acc;
}

Report check_assignment(const DiffRing& source, const DiffRing& target, const GeneratorAssignment& m) {
  if (source.n() != target.n()) throw DomainError("rank mismatch between source and target rings");
  Report rep;
  rep.name = "assignment";
  for (const auto& rel : defining_relations(source.n(), source.spec().sigma)) {
    NormalElement total;
    for (const auto& [s, word] : rel.terms) total += RatFun(s) * apply_assignment(target, m, word);
    rep.add(rel.name, rel.tuple, total.is_zero());
  }
  return rep;
}

Report sigma_system_report(const std::vector<RatFun>& sigma) {
  Report rep;
  rep.name = "sigma-system";
  const int n = static_cast<int>(sigma.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& si = sigma[static_cast<std::size_t>(i)];
      const auto& sj = sigma[static_cast<std::size_t>(j)];
      rep.add("eqsigib", {i + 1, j + 1}, hd(i, j) * si.delta(j) == si - sj);
    }
  return rep;
}

PbwReport verify_pbw(const DiffRing& ring) {
  PbwReport out;
  out.direct.name = "overlaps";
  Rewriter& rw = ring.rewriter();
  const int n = ring.n();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        out.direct.add("x d d", {i + 1, j + 1, k + 1}, rw.resolves({Gen::x(i), Gen::d(j), Gen::d(k)}));
        out.direct.add("x x d", {j + 1, k + 1, i + 1}, rw.resolves({Gen::x(j), Gen::x(k), Gen::d(i)}));
      }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        out.direct.add("x x x", {i + 1, j + 1, k + 1}, rw.resolves({Gen::x(i), Gen::x(j), Gen::x(k)}));
        out.direct.add("d d d", {i + 1, j + 1, k + 1}, rw.resolves({Gen::d(i), Gen::d(j), Gen::d(k)}));
      }
  if (out.direct.items.empty()) out.direct.add("none", {}, true, "no overlaps for rank 1");
  out.algebraic = sigma_system_report(ring.spec().sigma);
  return out;
}

NormalElement epsilon_antiauto(const DiffRing& ring, const NormalElement& a) {
  const int n = ring.n();
  std::vector<NormalElement> dimg, ximg;
  for (int i = 0; i < n; ++i) {
    const RatFun p = phi(n, i);
    dimg.push_back(NormalElement::monomial({Gen::x(i)}, p));
    ximg.push_back(ring.multiply(ring.d(i), NormalElement(p.inverse())));
  }
  NormalElement out;
  for (const auto& [w, c] : a.terms()) {
    NormalElement prod(1);
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      prod = ring.multiply(prod, it->is_x() ? ximg[it->index] : dimg[it->index]);
    out += ring.multiply(prod, NormalElement(c));
  }
  return out;
}

Report verify_localized_generators(const DiffRing& ring) {
  const int n = ring.n();
  std::vector<NormalElement> xl;
  for (int i = 0; i < n; ++i) xl.push_back(ring.multiply(ring.x(i), NormalElement(psi_prime(n, i))));
  Report rep;
  rep.name = "localized";
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      rep.add("x'x'", {i + 1, j + 1}, ring.commutator(xl[static_cast<std::size_t>(i)], xl[static_cast<std::size_t>(j)]).is_zero());
  if (rep.items.empty()) rep.add("x'x'", {}, true, "single generator");
  return rep;
}

}  // namespace hdiff
