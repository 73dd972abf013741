#include "hdiff/central.hpp"

#include <random>

#include "hdiff/errors.hpp"
#include "hdiff/linalg.hpp"
#include "hdiff/potential.hpp"
#include "hdiff/rmatrix.hpp"

namespace hdiff {

TPoly rho_for(const RatFun& f, int n) {
  const WDecomposition dec = w_decompose(f, n, 0);
  TPoly rho;
  for (const auto& [k, pi] : dec.parts) rho += e_of_t_without(n, k) * w_basis(n, k, pi);
  for (const auto& [L, c] : dec.symmetric) {
    if (L == 0) continue;
    UniPoly top(static_cast<std::size_t>(L + n), 0);
    top.back() = c;
    for (int j = 0; j < n; ++j) rho += e_of_t_without(n, j) * w_basis(n, j, top);
  }
  if (!verify_rho(rho, sigma_from_potential(f, n)).ok()) throw MismatchError("rho fails its difference equations");
  return rho;
}

Report verify_rho(const TPoly& rho, const std::vector<RatFun>& sigma) {
  Report rep;
  rep.name = "rho";
  const int n = static_cast<int>(sigma.size());
  for (int j = 0; j < n; ++j)
    rep.add("corho", {j + 1}, rho.delta(j) == e_of_t_without(n, j) * sigma[static_cast<std::size_t>(j)]);
  return rep;
}

CentralFamily central_family(const DiffRing& ring, const TPoly& rho) {
  const int n = ring.n();
  if (rho.degree() >= n) throw DomainError("rho has degree at least n");
  CentralFamily fam;
  fam.rho = rho;
  std::vector<TPoly> e;
  for (int i = 0; i < n; ++i) e.push_back(e_of_t_without(n, i));
  for (int k = 0; k < n; ++k) {
    NormalElement c = NormalElement(-rho[k]);
    for (int i = 0; i < n; ++i) c.add_term({Gen::d(i), Gen::x(i)}, e[static_cast<std::size_t>(i)][k]);
    fam.c.push_back(std::move(c));
  }
  return fam;
}

CentralFamily central_family(const DiffRing& ring, const RatFun& potential) {
  return central_family(ring, rho_for(potential, ring.n()));
}

Report verify_central(const DiffRing& ring, const CentralFamily& fam) {
  Report rep;
  rep.name = "central";
  const int n = ring.n();
  for (int k = 0; k < n; ++k) {
    const NormalElement& c = fam.c[static_cast<std::size_t>(k)];
    for (int j = 0; j < n; ++j) {
      rep.add("[c,x]", {k + 1, j + 1}, ring.commutator(c, ring.x(j)).is_zero());
      rep.add("[c,d]", {k + 1, j + 1}, ring.commutator(c, ring.d(j)).is_zero());
      rep.add("[c,h]", {k + 1, j + 1}, ring.commutator(c, NormalElement(RatFun::var(j))).is_zero());
    }
  }
  return rep;
}

CenterRank center_basis_note(const DiffRing& ring, const CentralFamily& fam) {
  const int n = ring.n();
  std::mt19937 gen(20170117u);
  std::uniform_int_distribution<int> num(1, 96);
  CenterRank out;
  out.points = 2 * n;
  auto character = [&](const std::vector<Rational>& lambda) {
    std::vector<Rational> shifted = lambda;
    for (auto& v : shifted) v -= 1;
    std::vector<Rational> vals;
    for (int k = 0; k < n; ++k) vals.push_back(-fam.rho[k].evaluate(shifted));
    return vals;
  };
  for (int p = 0; p < out.points; ++p) {
    std::vector<Rational> lambda;
    for (int i = 0; i < n; ++i) lambda.push_back(Rational(i + 1) + ratio(num(gen), 97));
    Matrix sym(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
      const TPoly e = e_of_t_without(n, i);
      for (int k = 0; k < n; ++k) sym[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = e[k].evaluate(lambda);
    }
    out.symbol_rank = std::max(out.symbol_rank, rank(sym));
    const auto base = character(lambda);
    Matrix jac(static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
      auto moved = lambda;
      moved[static_cast<std::size_t>(i)] += 1;
      const auto v = character(moved);
      for (int k = 0; k < n; ++k)
        jac[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(k)] - base[static_cast<std::size_t>(k)];
    }
    out.character_rank = std::max(out.character_rank, rank(jac));
  }
  return out;
}

}  // namespace hdiff
