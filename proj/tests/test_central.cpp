#include <gtest/gtest.h>

#include "hdiff/central.hpp"
#include "hdiff/errors.hpp"
#include "support.hpp"

using namespace hdtest;

namespace {

DiffRing ring_of(int n, const RatFun& f) { return DiffRing({n, sigma_from_potential(f, n)}); }

// rho is fixed by its differences only up to a constant in each t-degree.
void expect_rho_up_to_constants(int n, const RatFun& f, const std::vector<std::string>& oracle) {
  const TPoly rho = rho_for(f, n);
  EXPECT_LT(rho.degree(), n);
  for (int k = 0; k < n; ++k) EXPECT_TRUE((rho[k] - rf(n, oracle[static_cast<std::size_t>(k)])).is_constant()) << k;
}

}  // namespace

TEST(Central, RhoOracle) {
  expect_rho_up_to_constants(1, H(1, 1), {"h1"});
  expect_rho_up_to_constants(1, -H(1, 2), {"-h1^2"});
  expect_rho_up_to_constants(2, H(2, 1), {"h1 + h2", "h1*h2"});
  expect_rho_up_to_constants(2, -H(2, 2), {"-h1^2 - h1*h2 - h2^2", "-h1^2*h2 - h1*h2^2"});
  expect_rho_up_to_constants(2, inverse_chi(2, 0), {"1/(h1 - h2)", "h2/(h1 - h2)"});
  expect_rho_up_to_constants(3, H(3, 1), {"h1 + h2 + h3", "h1*h2 + h1*h3 + h2*h3", "h1*h2*h3"});
  expect_rho_up_to_constants(3, -H(3, 2),
                             {"-h1^2 - h1*h2 - h1*h3 - h2^2 - h2*h3 - h3^2",
                              "-h1^2*h2 - h1^2*h3 - h1*h2^2 - 2*h1*h2*h3 - h1*h3^2 - h2^2*h3 - h2*h3^2",
                              "-h1^2*h2*h3 - h1*h2^2*h3 - h1*h2*h3^2"});
  expect_rho_up_to_constants(3, inverse_chi(3, 0),
                             {"1/((h1 - h2)*(h1 - h3))", "(h2 + h3)/((h1 - h2)*(h1 - h3))", "h2*h3/((h1 - h2)*(h1 - h3))"});
  EXPECT_TRUE(rho_for(RatFun(), 3).is_zero());
}

TEST(Central, FamiliesAreCentral) {
  for (int n = 1; n <= 3; ++n)
    for (const RatFun& f : {RatFun(), H(n, 1), -H(n, 2), inverse_chi(n, 0), rf(n, "h1^3") * inverse_chi(n, 0)}) {
      const DiffRing ring = ring_of(n, f);
      const CentralFamily fam = central_family(ring, f);
      ASSERT_EQ(fam.c.size(), static_cast<std::size_t>(n));
      EXPECT_TRUE(verify_rho(fam.rho, ring.spec().sigma).ok());
      const Report r = verify_central(ring, fam);
      EXPECT_TRUE(r.ok()) << n << " " << r.summary();
      EXPECT_EQ(r.total(), 3 * n * n);
    }
}

TEST(Central, FirstGeneratorRankOne) {
  // n = 1, sigma = 1: c_1 = dbar x - h
  const DiffRing ring = ring_of(1, H(1, 1));
  const CentralFamily fam = central_family(ring, H(1, 1));
  EXPECT_EQ(fam.c[0], el(ring, "d1*x1 - h1"));
}

TEST(Central, WrongRhoIsNotCentral) {
  const int n = 2;
  const DiffRing ring = ring_of(n, H(n, 1));
  TPoly rho = rho_for(H(n, 1), n);
  rho += TPoly({RatFun::var(0)});
  EXPECT_FALSE(verify_rho(rho, ring.spec().sigma).ok());
  EXPECT_FALSE(verify_central(ring, central_family(ring, rho)).ok());
  EXPECT_THROW(central_family(ring, TPoly({RatFun(), RatFun(), RatFun(1)})), DomainError);
}

TEST(Central, Ranks) {
  for (int n = 1; n <= 3; ++n) {
    const DiffRing ring = ring_of(n, H(n, 1));
    const CenterRank r = center_basis_note(ring, central_family(ring, H(n, 1)));
    EXPECT_EQ(r.symbol_rank, n);
    EXPECT_EQ(r.character_rank, n);
  }
}

TEST(CentralProperty, RandomPotentials) {
  Draw g(51);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = g.uniform(1, 3);
    const RatFun f = g.potential(n);
    const DiffRing ring = ring_of(n, f);
    const CentralFamily fam = central_family(ring, f);
    ASSERT_TRUE(verify_central(ring, fam).ok());
    // central elements commute with a random element too
    const NormalElement a = g.element(ring, 2, 2);
    for (const auto& c : fam.c) ASSERT_TRUE(ring.commutator(c, a).is_zero());
  }
}
