#include "coquasi/lowdim.hpp"
#include "coquasi/cleft.hpp"

#include <gtest/gtest.h>

using namespace coquasi;

namespace {

CrossedProduct h2_product() { return build_crossed_product(sigma_inverse(catalog::h2_system(catalog::h2_fixture()))); }
CrossedProduct h3_product() { return build_crossed_product(sigma_inverse(catalog::h3_system(catalog::h3_fixture()))); }

}  // namespace

TEST(Cleft, H2GivenSystem) {
  CrossedProduct P = h2_product();
  const Algebra& R = P.system.R;
  Vec t = R.basis(1);
  Vec x = unit_vec(2, 1), e = unit_vec(2, 0);
  Matrix gamma(4, 2), delta(4, 2);
  gamma.set_column(0, P.algebra.unit());
  gamma.set_column(1, kron(R.unit(), x));
  delta.set_column(0, P.algebra.unit());
  delta.set_column(1, kron(Scalar(-1) * t, x));
  CleavingSystem cs{P.algebra, gamma, delta};
  Report r = check_cleaving(cs);
  EXPECT_TRUE(r.ok()) << r.text();

  CleavingSystem built = crossed_to_cleft(P);
  EXPECT_EQ(built.gamma, gamma);
  EXPECT_EQ(built.delta, delta);

  CleavingSystem bad{P.algebra, gamma, gamma};
  Report rb = check_cleaving(bad);
  EXPECT_FALSE(rb.ok());
  ASSERT_FALSE(rb.failures.empty());
  EXPECT_EQ(rb.failures.front().witness, std::vector<std::string>{"x"});
  EXPECT_THROW(cleft_to_crossed(bad), InvalidCleaving);
  (void)e;
}

TEST(Cleft, H3GivenSystem) {
  CrossedProduct P = h3_product();
  CleavingSystem cs = crossed_to_cleft(P);
  Report r = check_cleaving(cs);
  EXPECT_TRUE(r.ok()) << r.text();
  // γ(x^j) = 1#x^j
  for (int h = 0; h < 3; ++h) EXPECT_EQ(cs.gamma.column(h), kron(P.system.R.unit(), unit_vec(3, h)));
}

TEST(Cleft, RoundTrip) {
  for (auto P : {h2_product(), h3_product()}) {
    CleavingSystem cs = crossed_to_cleft(P);
    CleftToCrossed back = cleft_to_crossed(cs);
    EXPECT_TRUE(back.report.ok()) << back.report.text();
    EXPECT_EQ(back.B.dim(), P.system.dR());
    EquivalenceResult eq = equivalent_crossed_products(back.system, P.system);
    EXPECT_TRUE(eq.witness.has_value()) << eq.verdict;
  }
}

TEST(Cleft, MissingSigmaInverse) {
  CrossedSystem cs = catalog::h2_system(catalog::h2_fixture());
  cs.sigma_inv.reset();
  EXPECT_THROW(crossed_to_cleft(build_crossed_product(cs)), MissingSigmaInverse);
}

TEST(Cleft, NonNormalizedGamma) {
  CrossedProduct P = h2_product();
  CleavingSystem cs = crossed_to_cleft(P);
  // scale γ by the unit t of B and δ by t^-1 = t
  Vec t = kron(P.system.R.basis(1), unit_vec(2, 0));
  CleavingSystem scaled = cs;
  for (int h = 0; h < 2; ++h) {
    scaled.gamma.set_column(h, P.algebra.mul(cs.gamma.column(h), t));
    scaled.delta.set_column(h, P.algebra.mul(t, cs.delta.column(h)));
  }
  Report r = check_cleaving(scaled);
  EXPECT_TRUE(r.ok()) << r.text();
  CleftToCrossed back = cleft_to_crossed(scaled);
  EXPECT_EQ(back.cleaving.gamma.apply(unit_vec(2, 0)), P.algebra.unit());
  EXPECT_TRUE(back.report.ok()) << back.report.text();
}

TEST(Cleft, ChangeOfCleaving) {
  for (auto P : {h2_product(), h3_product()}) {
    CleavingSystem cs = crossed_to_cleft(P);
    Coinvariants B = coinvariants(P.algebra);
    int d = P.system.dH();
    // 𝔞 with 𝔞(1) = 1 and a nontrivial unit value elsewhere
    Matrix a(B.dim(), d);
    a.set_column(0, B.algebra.unit());
    for (int h = 1; h < d; ++h) {
      Vec v = Scalar(2) * B.algebra.unit();
      if (B.dim() > 1) v[1] = Scalar(1);
      a.set_column(h, v);
    }
    CleavingSystem changed = change_cleaving(cs, a);
    Report r = check_cleaving(changed);
    EXPECT_TRUE(r.ok()) << r.text();
    EXPECT_EQ(extract_witness(cs, changed), a);
    // the crossed systems of both are equivalent
    auto s1 = cleft_to_crossed(cs), s2 = cleft_to_crossed(changed);
    EXPECT_TRUE(s2.report.ok()) << s2.report.text();
    Report w = check_equivalence_witness(s1.system, s2.system, EquivalenceWitness::make(a, s1.system));
    EXPECT_TRUE(w.ok()) << w.text();
  }
}
