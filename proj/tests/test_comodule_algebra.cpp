#include "coquasi/catalog.hpp"
#include "coquasi/comodule_algebra.hpp"

#include <gtest/gtest.h>

using namespace coquasi;

namespace {

// k[C_n] as an algebra with trivial coaction
Algebra group_algebra(const CoquasiHopf& H) { return H.base().as_algebra(); }

}  // namespace

TEST(ComoduleAlgebra, RegularCoactionOverHopfAlgebra) {
  for (int n : {2, 3}) {
    ComoduleAlgebra A = regular_comodule_algebra(Host::of(catalog::cyclic_group(n)));
    Report r = check_comodule_algebra(A);
    EXPECT_TRUE(r.ok()) << r.text();
  }
  // H(2) is associative but omega is not trivial, so H(2) is not an algebra in M^H
  ComoduleAlgebra A2 = regular_comodule_algebra(Host::of(catalog::h2()));
  Report r2 = check_comodule_algebra(A2);
  EXPECT_TRUE(r2.failed("omega-associativity"));
  EXPECT_EQ(r2.count("omega-associativity"), 1u) << r2.text();
}

TEST(ComoduleAlgebra, CorruptedRegularFailsWithWitness) {
  CoquasiHopf H = catalog::cyclic_group(2);
  ComoduleAlgebra A = regular_comodule_algebra(Host::of(H));
  Matrix m = A.mult();
  // x·x = x: rho(x·x) = x⊗x but x0x0⊗x1x1 = x⊗1
  m(0, 1 * 2 + 1) = Scalar(0);
  m(1, 1 * 2 + 1) = Scalar(1);
  ComoduleAlgebra bad(A.space(), m, A.unit(), A.coaction(), A.host());
  Report r = check_comodule_algebra(bad);
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(r.failed("multiplication colinear"));
}

TEST(Coinvariants, RegularAndTrivial) {
  CoquasiHopf H = catalog::h2();
  Coinvariants B = coinvariants(regular_comodule_algebra(Host::of(H)));
  ASSERT_EQ(B.dim(), 1);
  EXPECT_EQ(B.subspace.basis()[0], H.unit());
  CoquasiHopf C3 = catalog::cyclic_group(3);
  ComoduleAlgebra T = trivial_comodule_algebra(group_algebra(C3), Host::of(catalog::h2()));
  EXPECT_TRUE(check_comodule_algebra(T).ok());
  Coinvariants all = coinvariants(T);
  EXPECT_EQ(all.dim(), 3);
  EXPECT_TRUE(check_algebra(all.algebra).ok());
}

TEST(Twist, GroupAlgebraOfC2BecomesComplexNumbers) {
  CoquasiHopf C2 = catalog::cyclic_group(2);
  ComoduleAlgebra A = regular_comodule_algebra(Host::of(C2));
  Functional tau = Functional::counit_power(C2.coalgebra(), 2);
  tau.at({1, 1}) = Scalar(-1);
  Twist t = Twist::make(tau, C2.coalgebra());
  ComoduleAlgebra At = twist_comodule_algebra(A, t);
  EXPECT_EQ(At.mul(1, 1), Vec({Scalar(-1), Scalar(0)}));
  EXPECT_TRUE(check_comodule_algebra(At).ok());
  // trivial twist leaves A alone, and twisting back recovers A
  EXPECT_EQ(twist_comodule_algebra(A, Twist::trivial(C2.coalgebra())), A);
  EXPECT_EQ(twist_comodule_algebra(At, t.inverse()), A);
}

TEST(Twist, CliffordTwistOfC2Cubed) {
  CoquasiHopf G = catalog::elementary_abelian(3);
  Twist t = Twist::make(catalog::clifford_twist(3), G.coalgebra());
  ASSERT_TRUE(check_twist(t, G.base()).ok());
  ComoduleAlgebra A = twist_comodule_algebra(regular_comodule_algebra(Host::of(G)), t);
  Report r = check_comodule_algebra(A);
  EXPECT_TRUE(r.ok()) << r.text();
  // generators square to -1 and anticommute
  for (int i : {1, 2, 4}) EXPECT_EQ(A.mul(i, i), Scalar(-1) * A.basis(0));
  EXPECT_EQ(A.mul(1, 2), Scalar(-1) * A.mul(2, 1));
}

TEST(Galois, RegularIsBijectiveTrivialIsNot) {
  for (const auto& H : {catalog::cyclic_group(2), catalog::cyclic_group(3)}) {
    GaloisResult g = galois_can(regular_comodule_algebra(Host::of(H)));
    EXPECT_TRUE(g.well_defined);
    ASSERT_TRUE(g.bijective) << g.verdict;
    EXPECT_TRUE(g.report.ok()) << g.report.text();
  }
  CoquasiHopf H = catalog::h2();
  GaloisResult g = galois_can(trivial_comodule_algebra(group_algebra(catalog::cyclic_group(2)), Host::of(H)));
  EXPECT_FALSE(g.bijective);
  EXPECT_EQ(g.verdict.rfind("NotBijective", 0), 0u) << g.verdict;
}

TEST(RelativeHopfModule, HomFromAEqualsCoinvariants) {
  for (const auto& H : {catalog::cyclic_group(2), catalog::cyclic_group(3)}) {
    ComoduleAlgebra A = regular_comodule_algebra(Host::of(H));
    RelativeHopfModule M = regular_relative_module(A);
    EXPECT_TRUE(check_relative_hopf_module(M, A).ok());
    int coinv = coinvariant_subspace(M.coaction, M.dim(), A.H()).dim();
    EXPECT_EQ(relative_hom_dimension(A, M), coinv);
  }
}
