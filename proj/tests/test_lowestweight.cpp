#include <gtest/gtest.h>

#include "hdiff/central.hpp"
#include "hdiff/errors.hpp"
#include "hdiff/lowestweight.hpp"
#include "support.hpp"

using namespace hdtest;

namespace {

DiffRing ring_of(int n, const RatFun& f) { return DiffRing({n, sigma_from_potential(f, n)}); }

Weight q(std::initializer_list<const char*> xs) {
  Weight w;
  for (const char* x : xs) w.push_back(parse_rational(x));
  return w;
}

LWVector scaled_vacuum(const Weight& lambda, const Rational& c) {
  LWVector v = LWVector::vacuum(lambda);
  v.terms.begin()->second = c;
  if (c == 0) v.terms.clear();
  return v;
}

struct Case {
  int n;
  RatFun potential;
  std::vector<std::string> rho;  // oracle normalisation
  Weight character;
  Weight djxj;
};

std::vector<Case> oracle_cases() {
  return {
      {1, RatFun(), {"0"}, q({"0"}), q({"0"})},
      {1, H(1, 1), {"h1"}, q({"-1/2"}), q({"1"})},
      {1, -H(1, 2), {"-h1^2"}, q({"1/4"}), q({"-2"})},
      {2, RatFun(), {"0", "0"}, q({"0", "0"}), q({"0", "0"})},
      {2, H(2, 1), {"h1 + h2", "h1*h2"}, q({"-2", "-5/9"}), q({"1/4", "7/4"})},
      {2, -H(2, 2), {"-h1^2 - h1*h2 - h2^2", "-h1^2*h2 - h1*h2^2"}, q({"31/9", "10/9"}), q({"-5/6", "-49/6"})},
      {2, inverse_chi(2, 0), {"1/(h1 - h2)", "h2/(h1 - h2)"}, q({"3/4", "5/4"}), q({"-9/16", "9/16"})},
      {3, RatFun(), {"0", "0", "0"}, q({"0", "0", "0"}), q({"0", "0", "0"})},
      {3, H(3, 1), {"h1 + h2 + h3", "h1*h2 + h1*h3 + h2*h3", "h1*h2*h3"}, q({"-9/2", "-83/16", "-33/32"}),
       q({"3/25", "9/25", "63/25"})},
      {3,
       -H(3, 2),
       {"-h1^2 - h1*h2 - h1*h3 - h2^2 - h2*h3 - h3^2",
        "-h1^2*h2 - h1^2*h3 - h1*h2^2 - 2*h1*h2*h3 - h1*h3^2 - h2^2*h3 - h2*h3^2",
        "-h1^2*h2*h3 - h1*h2^2*h3 - h1*h2*h3^2"},
       q({"241/16", "357/16", "297/64"}),
       q({"-69/100", "-63/25", "-2079/100"})},
      {3,
       inverse_chi(3, 0),
       {"1/((h1 - h2)*(h1 - h3))", "(h2 + h3)/((h1 - h2)*(h1 - h3))", "h2*h3/((h1 - h2)*(h1 - h3))"},
       q({"-8/25", "-34/25", "-33/25"}),
       q({"176/625", "-32/625", "-144/625"})},
  };
}

}  // namespace

TEST(LowestWeight, GenericWeights) {
  EXPECT_EQ(generic_lambda(1), q({"3/2"}));
  EXPECT_EQ(generic_lambda(2), q({"4/3", "8/3"}));
  EXPECT_EQ(generic_lambda(3), q({"5/4", "5/2", "15/4"}));
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(is_generic(generic_lambda(n)));
  EXPECT_FALSE(is_generic(q({"1/2", "5/2"})));
  EXPECT_TRUE(is_generic(q({"1/2", "1/3"})));
}

TEST(LowestWeight, RejectsBadWeights) {
  const DiffRing ring = ring_of(2, H(2, 1));
  EXPECT_THROW(LowestWeightModule(ring, q({"1/2", "3/2"})), DomainError);
  EXPECT_THROW(LowestWeightModule(ring, q({"1/2"})), DomainError);
}

TEST(LowestWeight, OracleDjXj) {
  for (const auto& c : oracle_cases()) {
    const DiffRing ring = ring_of(c.n, c.potential);
    const Weight lambda = generic_lambda(c.n);
    LowestWeightModule mod(ring, lambda);
    for (int j = 0; j < c.n; ++j) {
      const NormalElement e = ring.multiply(ring.d(j), ring.x(j));
      EXPECT_EQ(mod.act(e, mod.vacuum()), scaled_vacuum(lambda, c.djxj[static_cast<std::size_t>(j)])) << c.n << " " << j;
    }
  }
}

TEST(LowestWeight, OracleCharactersUpToRhoConstants) {
  for (const auto& c : oracle_cases()) {
    const DiffRing ring = ring_of(c.n, c.potential);
    const CentralFamily fam = central_family(ring, c.potential);
    const CharacterCheck ch = central_character(ring, fam, generic_lambda(c.n));
    EXPECT_TRUE(ch.agree());
    for (int k = 0; k < c.n; ++k) {
      const RatFun diff = fam.rho[k] - rf(c.n, c.rho[static_cast<std::size_t>(k)]);
      ASSERT_TRUE(diff.is_constant());
      const Rational shift = diff.num().constant_term();
      EXPECT_EQ(ch.action[static_cast<std::size_t>(k)], c.character[static_cast<std::size_t>(k)] - shift) << c.n << " " << k;
    }
  }
}

TEST(LowestWeight, VacuumIsAnnihilatedAndWeightsAreRead) {
  const DiffRing ring = ring_of(3, -H(3, 2));
  const Weight lambda = generic_lambda(3);
  LowestWeightModule mod(ring, lambda);
  for (int j = 0; j < 3; ++j) EXPECT_TRUE(mod.act(ring.d(j), mod.vacuum()).is_zero());
  // h acts on x^b|0> by lambda + b
  const LWVector v = mod.act(el(ring, "x2*x1*x1"), mod.vacuum());
  LWVector expect = LWVector::vacuum(lambda);
  expect.terms.clear();
  expect.add({2, 1, 0}, 1);
  EXPECT_EQ(v, expect);
  for (int i = 0; i < 3; ++i) {
    LWVector hv = mod.act(NormalElement(RatFun::var(i)), v);
    LWVector want = expect;
    want.terms.begin()->second = lambda[static_cast<std::size_t>(i)] + (i == 0 ? 2 : i == 1 ? 1 : 0);
    EXPECT_EQ(hv, want);
  }
}

TEST(LowestWeight, OtherCopiesAreRejected) {
  const DiffRing ring = ring_of(2, H(2, 1));
  LowestWeightModule mod(ring, generic_lambda(2));
  EXPECT_THROW(mod.act(NormalElement::monomial({Gen::x(0, 1)}), mod.vacuum()), DomainError);
}

TEST(LowestWeightProperty, ModuleLaw) {
  Draw g(61);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = g.uniform(1, 3);
    const DiffRing ring = ring_of(n, g.potential(n));
    LowestWeightModule mod(ring, generic_lambda(n));
    const NormalElement a = g.element(ring, 2, 2), b = g.element(ring, 2, 2), w = g.element(ring, 2, 2);
    const LWVector v = mod.act(w, mod.vacuum());
    ASSERT_EQ(mod.act(ring.multiply(a, b), v), mod.act(a, mod.act(b, v)));
  }
}

TEST(LowestWeightProperty, CenterActsByTheCharacterEverywhere) {
  Draw g(62);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = g.uniform(1, 3);
    const RatFun f = g.potential(n);
    const DiffRing ring = ring_of(n, f);
    const CentralFamily fam = central_family(ring, f);
    const Weight lambda = generic_lambda(n);
    const CharacterCheck ch = central_character(ring, fam, lambda);
    LowestWeightModule mod(ring, lambda);
    const LWVector v = mod.act(g.element(ring, 3, 3), mod.vacuum());
    for (int k = 0; k < n; ++k) {
      LWVector want = v;
      for (auto& [b, c] : want.terms) c *= ch.action[static_cast<std::size_t>(k)];
      std::erase_if(want.terms, [](const auto& t) { return t.second == 0; });
      ASSERT_EQ(mod.act(fam.c[static_cast<std::size_t>(k)], v), want);
    }
  }
}
