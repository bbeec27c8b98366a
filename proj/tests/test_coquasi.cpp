#include "coquasi/catalog.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace coquasi;

namespace {

CoquasiHopf without_f(const CoquasiHopf& H) {
  return CoquasiHopf(H.base(), H.antipode(), H.alpha_functional(), H.beta_functional());
}

// random normalized grouplike-diagonal twist with nonzero rational values
Functional random_twist(std::mt19937& rng, int d) {
  std::uniform_int_distribution<int> num(1, 4), sign(0, 1);
  Functional tau(2, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      if (a == 0 || b == 0) {
        tau.at({a, b}) = Scalar(1);
      } else {
        Scalar v = Scalar::rational(num(rng), num(rng));
        tau.at({a, b}) = sign(rng) ? v : -v;
      }
    }
  return tau;
}

}  // namespace

TEST(Coquasi, BuiltinsPassAxioms) {
  Report h2 = check_coquasi_hopf(catalog::h2());
  EXPECT_TRUE(h2.ok()) << h2.text();
  EXPECT_FALSE(h2.has_flag("ordinary bialgebra"));
  Report h3 = check_coquasi_hopf(catalog::h3());
  EXPECT_TRUE(h3.ok()) << h3.text();
  for (int n : {2, 3}) {
    Report c = check_coquasi_hopf(catalog::cyclic_group(n));
    EXPECT_TRUE(c.ok()) << c.text();
    EXPECT_TRUE(c.has_flag("ordinary bialgebra"));
  }
  // H3 inside a larger cyclotomic field
  EXPECT_TRUE(check_coquasi_hopf(catalog::h3(12)).ok());
  EXPECT_THROW(catalog::h3(4), std::invalid_argument);
}

TEST(Coquasi, ApplyFunctionalOnBuiltins) {
  CoquasiHopf H3 = catalog::h3();
  Scalar q = Scalar::primitive_root(3);
  EXPECT_EQ(H3.base().om(1, 2, 1), q.inverse());
  CoquasiHopf H2 = catalog::h2();
  EXPECT_EQ(H2.alpha(1), Scalar(-1));
  for (int h = 0; h < 2; ++h)
    for (int g = 0; g < 2; ++g) EXPECT_EQ(H2.base().om(h, 0, g), H2.eps(h) * H2.eps(g));
}

TEST(Coquasi, CorruptedOmegaFailsCocycleWithWitness) {
  CoquasiBialgebra h2 = catalog::h2().base();
  Functional w = h2.omega();
  w.at({1, 1, 1}) = Scalar(2);
  CoquasiBialgebra bad(h2.coalgebra(), h2.mult(), h2.unit(), w);
  Report r = check_coquasi_bialgebra(bad);
  ASSERT_TRUE(r.failed("omega 3-cocycle"));
  bool found = false;
  for (const auto& f : r.failures)
    if (f.identity == "omega 3-cocycle" && f.witness == std::vector<std::string>{"x", "x", "x", "x"}) found = true;
  EXPECT_TRUE(found) << r.text();
}

TEST(Coquasi, CorruptedBetaFailsOmegaAntipode) {
  CoquasiHopf H2 = without_f(catalog::h2());
  Functional beta = H2.beta_functional();
  beta.at({1}) = Scalar(2);
  CoquasiHopf bad(H2.base(), H2.antipode(), H2.alpha_functional(), beta);
  Report r = check_coquasi_hopf(bad);
  ASSERT_TRUE(r.failed("omega-antipode identity")) << r.text();
  EXPECT_EQ(r.failures[0].witness, std::vector<std::string>{"x"});
}

TEST(Coquasi, H3NeedsTheGroupAntipode) {
  // with S = id the identity S(h1)alpha(h2)h3 = alpha(h)1 fails at x
  CoquasiHopf H3 = without_f(catalog::h3());
  CoquasiHopf bad(H3.base(), Matrix::identity(3), H3.alpha_functional(), H3.beta_functional());
  Report r = check_coquasi_hopf(bad);
  EXPECT_TRUE(r.failed("antipode-alpha identity"));
}

TEST(Coquasi, StoredOmegaInverseMatchesRecomputed) {
  for (const auto& H : {catalog::h2(), catalog::h3(), catalog::cyclic_group(4)}) {
    auto inv = convolution_inverse(H.base().omega(), H.coalgebra(), Algebra::ground_field());
    ASSERT_TRUE(inv);
    EXPECT_EQ(*inv, H.base().omega_inv());
  }
}

TEST(Twist, TrivialTwistIsIdentity) {
  for (const auto& H : {catalog::h2(), catalog::h3()}) {
    CoquasiHopf T = twist_bialgebra(H, Twist::trivial(H.coalgebra()));
    EXPECT_EQ(T, H);
  }
}

TEST(Twist, SignTwistOfC2IsCoboundary) {
  CoquasiHopf C2 = catalog::cyclic_group(2);
  Functional tau = Functional::counit_power(C2.coalgebra(), 2);
  tau.at({1, 1}) = Scalar(-1);
  Twist t = Twist::make(tau, C2.coalgebra());
  EXPECT_TRUE(check_twist(t, C2.base()).ok());
  CoquasiHopf T = twist_bialgebra(C2, t);
  EXPECT_EQ(T.base().omega(), Functional::counit_power(C2.coalgebra(), 3));
  EXPECT_TRUE(check_coquasi_hopf(T).ok());
}

TEST(Twist, RandomTwistsPreserveAxioms) {
  std::mt19937 rng(2024);
  for (const auto& H : {catalog::h2(), catalog::h3(), catalog::cyclic_group(3)}) {
    for (int trial = 0; trial < 4; ++trial) {
      Twist t = Twist::make(random_twist(rng, H.dim()), H.coalgebra());
      CoquasiHopf T = twist_bialgebra(without_f(H), t);
      Report r = check_coquasi_hopf(T);
      EXPECT_TRUE(r.ok()) << r.text();
      // tau^-1 is a twist on H_tau and twisting back recovers H
      CoquasiHopf U = twist_bialgebra(T, t.inverse());
      EXPECT_EQ(U.base().mult(), H.base().mult());
      EXPECT_EQ(U.base().omega(), H.base().omega());
    }
  }
}

TEST(TwistF, HopfAlgebraGetsTrivialF) {
  CoquasiHopf C3 = catalog::cyclic_group(3);
  auto f = solve_twist_f(without_f(C3));
  ASSERT_TRUE(f) << f.diagnostic;
  EXPECT_EQ(f.value->f, Functional::counit_power(C3.coalgebra(), 2));
}

TEST(TwistF, H2AndH3) {
  auto f2 = solve_twist_f(without_f(catalog::h2()));
  ASSERT_TRUE(f2) << f2.diagnostic;
  // oracle: the beta identity at (x,x) reads f^-1(x,x) = omega^-1(x,x,x) = -1
  EXPECT_EQ(f2.value->f.at({1, 1}), Scalar(-1));
  CoquasiHopf H3 = without_f(catalog::h3());
  auto f3 = solve_twist_f(H3);
  ASSERT_TRUE(f3) << f3.diagnostic;
  Report r = check_twist_f(H3, *f3.value);
  EXPECT_TRUE(r.ok()) << r.text();
}

TEST(Dual, RoundTripThroughQuasiBialgebra) {
  for (const auto& H : {catalog::cyclic_group(2), catalog::h2(), catalog::h3()}) {
    QuasiBialgebra q = to_quasi_dual(H.base());
    CoquasiBialgebra back = dualize(q);
    EXPECT_EQ(back, H.base());
    EXPECT_EQ(back.space(), H.base().space());
    EXPECT_TRUE(check_coquasi_bialgebra(back).ok());
  }
}

TEST(Dual, FunctionAlgebraDualizes) {
  // k^{C_2} as a quasi-bialgebra: idempotents p0, p1, Δ(p_k) = sum_{i+j=k} p_i⊗p_j,
  // Φ = 1 - 2 p1⊗p1⊗p1 (the dual picture of H(2))
  QuasiBialgebra q;
  q.space = Space({"p0", "p1"});
  q.mult = Matrix(2, 4);
  q.mult(0, 0) = 1;
  q.mult(1, 3) = 1;
  q.unit = Vec{Scalar(1), Scalar(1)};
  q.comult = Matrix(4, 2);
  q.comult(0, 0) = 1;
  q.comult(3, 0) = 1;
  q.comult(1, 1) = 1;
  q.comult(2, 1) = 1;
  q.counit = Vec{Scalar(1), Scalar(0)};
  q.phi = Vec(8, Scalar(1));
  q.phi[7] = -1;
  q.phi_inv = q.phi;
  CoquasiBialgebra H = dualize(q);
  Report r = check_coquasi_bialgebra(H);
  EXPECT_TRUE(r.ok()) << r.text();
  EXPECT_EQ(H.om(1, 1, 1), Scalar(-1));
}

TEST(RegularActions, Examples) {
  CoquasiHopf H2 = catalog::h2();
  auto act = regular_actions(H2.base());
  Vec eps = H2.coalgebra().counit();
  Vec x = H2.basis(1), one = H2.basis(0);
  EXPECT_EQ(act.dual_hits(eps, x), x);
  Vec dx = unit_vec(2, 1);
  EXPECT_EQ(act.dual_hits(dx, x), x);
  EXPECT_TRUE(is_zero(act.dual_hits(dx, one)));
  // (h ⇀ h*)(g) = h*(gh)
  EXPECT_EQ(act.hits_dual(x, dx), unit_vec(2, 0));
  CoquasiHopf H3 = catalog::h3();
  auto act3 = regular_actions(H3.base());
  Vec beta = H3.beta_functional().values.row(0);
  EXPECT_EQ(act3.dual_hits(beta, H3.basis(1)), Scalar::primitive_root(3) * H3.basis(1));
  EXPECT_EQ(act3.hit_by_dual(H3.basis(1), beta), Scalar::primitive_root(3) * H3.basis(1));
  auto t = act3.tensors();
  EXPECT_EQ(t.size(), 4u);
}

TEST(Catalog, UnknownName) {
  EXPECT_THROW(catalog::builtin_hopf("H7"), UnknownName);
  EXPECT_EQ(catalog::builtin_hopf("C3").dim(), 3);
  EXPECT_EQ(catalog::builtin_hopf("group_C2").dim(), 2);
}
