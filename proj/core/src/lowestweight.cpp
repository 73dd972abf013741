#include "hdiff/lowestweight.hpp"

#include <algorithm>

#include "hdiff/errors.hpp"
#include "hdiff/rmatrix.hpp"

namespace hdiff {

Weight generic_lambda(int n) {
  Weight w;
  for (int i = 1; i <= n; ++i) w.push_back(ratio(i * (n + 2), n + 1));
  return w;
}

bool is_generic(const Weight& lambda) {
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (std::size_t j = i + 1; j < lambda.size(); ++j) {
      const Rational d = lambda[i] - lambda[j];
      if (d.get_den() == 1) return false;
    }
  return true;
}

LWVector LWVector::vacuum(const Weight& lambda) {
  LWVector v;
  v.lambda = lambda;
  v.terms.emplace(std::vector<int>(lambda.size(), 0), Rational(1));
  return v;
}

void LWVector::add(const std::vector<int>& b, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = terms.try_emplace(b, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

LowestWeightModule::LowestWeightModule(const DiffRing& ring, Weight lambda) : ring_(ring), lambda_(std::move(lambda)) {
  const int n = ring.n();
  if (static_cast<int>(lambda_.size()) != n) throw DomainError("weight has the wrong length");
  if (!is_generic(lambda_)) throw DomainError("weight is not generic: some lambda_i - lambda_j is an integer");
  zero_.assign(static_cast<std::size_t>(n), std::vector<RatFun>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      RatFun z;
      for (int k = 0; k < n; ++k)
        if (ice_allowed(i, k, j, k)) z += psi_component(n, i, k, j, k) * ring.sigma(k);
      zero_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = z;
    }
}

Rational LowestWeightModule::eval_at(const RatFun& f, const std::vector<int>& b) const {
  std::vector<Rational> point = lambda_;
  for (std::size_t i = 0; i < point.size(); ++i) point[i] += b[i];
  return f.evaluate(point);
}

LWVector LowestWeightModule::act_scalar(const RatFun& f, const LWVector& v) const {
  LWVector out;
  out.lambda = lambda_;
  if (f.is_zero()) return out;
  for (const auto& [b, s] : v.terms) out.add(b, s * eval_at(f, b));
  return out;
}

LWVector LowestWeightModule::act_x(int l, const LWVector& v) {
  const int n = ring_.n();
  LWVector out;
  out.lambda = lambda_;
  const std::vector<int> none(static_cast<std::size_t>(n), 0);
  for (const auto& [b, s] : v.terms) {
    Word w{Gen::x(l)};
    const Word tail = pbw_word(none, b);
    w.insert(w.end(), tail.begin(), tail.end());
    const NormalElement nf = ring_.rewriter().normal_form(w);
    for (const auto& [word, g] : nf.terms()) {
      std::vector<int> a, bb;
      pbw_exponents(word, n, a, bb);
      out.add(bb, s * eval_at(g, bb));
    }
  }
  return out;
}

LWVector LowestWeightModule::act_d_basis(int j, const std::vector<int>& b) {
  const int n = ring_.n();
  LWVector out;
  out.lambda = lambda_;
  int i = n - 1;
  while (i >= 0 && b[static_cast<std::size_t>(i)] == 0) --i;
  if (i < 0) return out;
  const auto key = std::make_pair(j, b);
  if (auto it = dcache_.find(key); it != dcache_.end()) return it->second;
  std::vector<int> rest = b;
  --rest[static_cast<std::size_t>(i)];
  for (int k = 0; k < n; ++k) {
    const LWVector dk = act_d_basis(k, rest);
    if (dk.is_zero()) continue;
    for (int l = 0; l < n; ++l) {
      if (!ice_allowed(i, k, j, l)) continue;
      const LWVector part = act_scalar(psi_component(n, i, k, j, l), act_x(l, dk));
      for (const auto& [bb, s] : part.terms) out.add(bb, s);
    }
  }
  const RatFun& z = zero_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  if (!z.is_zero()) out.add(rest, eval_at(z, rest));
  dcache_.emplace(key, out);
  return out;
}

LWVector LowestWeightModule::act_d(int j, const LWVector& v) {
  LWVector out;
  out.lambda = lambda_;
  for (const auto& [b, s] : v.terms)
    for (const auto& [bb, t] : act_d_basis(j, b).terms) out.add(bb, s * t);
  return out;
}

LWVector LowestWeightModule::act(const NormalElement& e, const LWVector& v) {
  if (v.lambda != lambda_) throw DomainError("vector belongs to a different module");
  LWVector out;
  out.lambda = lambda_;
  for (const auto& [w, c] : e.terms()) {
    LWVector u = v;
    for (auto it = w.rbegin(); it != w.rend() && !u.is_zero(); ++it) {
      if (it->copy != 0) throw DomainError("module is defined for a single copy only");
      u = it->is_x() ? act_x(it->index, u) : act_d(it->index, u);
    }
    for (const auto& [b, s] : act_scalar(c, u).terms) out.add(b, s);
  }
  return out;
}

CharacterCheck central_character(const DiffRing& ring, const CentralFamily& fam, const Weight& lambda) {
  const int n = ring.n();
  LowestWeightModule mod(ring, lambda);
  CharacterCheck out;
  const std::vector<int> zero(static_cast<std::size_t>(n), 0);
  std::vector<Rational> shifted = lambda;
  for (auto& v : shifted) v -= 1;
  for (int k = 0; k < n; ++k) {
    const LWVector v = mod.act(fam.c[static_cast<std::size_t>(k)], mod.vacuum());
    Rational value = 0;
    for (const auto& [b, s] : v.terms) {
      if (b != zero) throw MismatchError("central element does not act by a scalar on the vacuum");
      value = s;
    }
    out.action.push_back(value);
    out.predicted.push_back(-fam.rho[k].evaluate(shifted));
  }
  if (!out.agree()) throw MismatchError("central character routes disagree");
  return out;
}

}  // namespace hdiff
