#include <benchmark/benchmark.h>

#include "hdiff/central.hpp"
#include "hdiff/diffring.hpp"
#include "hdiff/multicopy.hpp"
#include "hdiff/potential.hpp"
#include "hdiff/rmatrix.hpp"

using namespace hdiff;

namespace {

Poly dense(int n, int deg) {
  std::vector<Poly::Term> t;
  for (int k = 0; k < n; ++k)
    for (int d = 1; d <= deg; ++d) t.emplace_back(Monomial::var(k, d), Rational(d + k + 1));
  t.emplace_back(Monomial(), Rational(3));
  return Poly::from_terms(std::move(t));
}

void BM_PolyMultiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Poly a = dense(n, 4) * dense(n, 3), b = dense(n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_PolyMultiply)->Arg(2)->Arg(3)->Arg(4);

void BM_RatFunSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<RatFun> parts;
  for (int k = 0; k < n; ++k) {
    UniPoly pi{Rational(1), Rational(-2), Rational(0), Rational(1)};
    parts.push_back(w_basis(n, k, pi));
  }
  for (auto _ : state) {
    RatFun s;
    for (const auto& p : parts) s += p;
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_RatFunSum)->Arg(2)->Arg(3)->Arg(4);

// Normal form of dbar_1 ... dbar_n applied after x^1 ... x^n, reversed order.
void BM_NormalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int reps = static_cast<int>(state.range(1));
  std::vector<RatFun> sigma;
  for (int i = 0; i < n; ++i) sigma.push_back((-RatFun(complete_symmetric(n, 2))).delta(i));
  Word w;
  for (int r = 0; r < reps; ++r)
    for (int i = 0; i < n; ++i) w.push_back(Gen::x(i));
  for (int r = 0; r < reps; ++r)
    for (int i = 0; i < n; ++i) w.push_back(Gen::d(i));
  for (auto _ : state) {
    Rewriter rw(n, 1, 1, [&](int i, int, int) { return sigma[static_cast<std::size_t>(i)]; });
    benchmark::DoNotOptimize(rw.normal_form(w));
  }
}
BENCHMARK(BM_NormalForm)->Args({2, 1})->Args({2, 2})->Args({2, 3})->Args({3, 1})->Unit(benchmark::kMillisecond);

void BM_VerifyDybe(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_dybe(n));
}
BENCHMARK(BM_VerifyDybe)->DenseRange(2, 4)->UseRealTime()->Unit(benchmark::kMillisecond);

void BM_VerifyPbw(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RatFun f = RatFun(complete_symmetric(n, 2)) + inverse_chi(n, 0);
  for (auto _ : state) {
    const DiffRing ring({n, sigma_from_potential(f, n)});
    benchmark::DoNotOptimize(verify_pbw(ring));
  }
}
BENCHMARK(BM_VerifyPbw)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_Central(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const RatFun f = -RatFun(complete_symmetric(n, 2));
  const DiffRing ring({n, sigma_from_potential(f, n)});
  for (auto _ : state) benchmark::DoNotOptimize(verify_central(ring, central_family(ring, f)));
}
BENCHMARK(BM_Central)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_Flatness(benchmark::State& state) {
  const SigmaArray s = SigmaArray::diagonal(static_cast<int>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(flatness_check(s));
    benchmark::DoNotOptimize(ambiguity_oracle(s));
  }
}
BENCHMARK(BM_Flatness)->DenseRange(1, 3)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
