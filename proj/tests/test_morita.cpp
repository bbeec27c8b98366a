#include "coquasi/lowdim.hpp"
#include "coquasi/morita.hpp"

#include <gtest/gtest.h>

using namespace coquasi;

namespace {

CrossedProduct h2_product() { return build_crossed_product(sigma_inverse(catalog::h2_system(catalog::h2_fixture()))); }
CrossedProduct h3_product() { return build_crossed_product(sigma_inverse(catalog::h3_system(catalog::h3_fixture()))); }

struct Instance {
  std::string name;
  ComoduleAlgebra A;
};

std::vector<Instance> instances() {
  std::vector<Instance> out;
  out.push_back({"H2 fixture", h2_product().algebra});
  out.push_back({"H3 fixture", h3_product().algebra});
  out.push_back({"C2 regular", regular_comodule_algebra(Host::of(catalog::cyclic_group(2)))});
  out.push_back({"C3 regular", regular_comodule_algebra(Host::of(catalog::cyclic_group(3)))});
  out.push_back({"H2 Heisenberg", heisenberg_double(Host::of(catalog::h2())).algebra});
  out.push_back({"H2 trivial", trivial_comodule_algebra(catalog::cyclic_algebra(2), Host::of(catalog::h2()))});
  out.push_back({"C2 trivial", trivial_comodule_algebra(Algebra::ground_field(), Host::of(catalog::cyclic_group(2)))});
  return out;
}

}  // namespace

TEST(Adjoint, CoalgebraInMH) {
  for (const auto& H : {catalog::cyclic_group(2), catalog::h2(), catalog::h3(), catalog::h3(6)}) {
    AdjointCoalgebra c = adjoint_coalgebra(H);
    Report r = check_adjoint_coalgebra(c, H);
    EXPECT_TRUE(r.ok()) << r.text();
  }
}

TEST(Morita, FixturesAreStrictWithCleavingPair) {
  for (auto P : {h2_product(), h3_product()}) {
    MoritaContext m = build_morita(P.algebra);
    EXPECT_TRUE(m.report.ok()) << m.report.text();
    CleavingSystem cs = crossed_to_cleft(P);
    Report c = check_cleaving_in_context(m, cs);
    EXPECT_TRUE(c.ok()) << c.text();
    StrictnessResult s = morita_strictness(m);
    EXPECT_EQ(s.verdict, Strictness::Strict);
    EXPECT_TRUE(s.report.ok()) << s.report.text();
  }
}

TEST(Morita, RingUnitActsTrivially) {
  MoritaContext m = build_morita(h2_product().algebra);
  for (int p = 0; p < m.P.dim(); ++p) EXPECT_EQ(m.P_ring1(unit_vec(m.P.dim(), p), m.unit1), unit_vec(m.P.dim(), p));
}

TEST(Morita, TrivialCoactionIsNeither) {
  ComoduleAlgebra A = trivial_comodule_algebra(catalog::cyclic_algebra(2), Host::of(catalog::h2()));
  MoritaContext m = build_morita(A);
  EXPECT_TRUE(m.report.ok()) << m.report.text();
  // φ(h) ⊗ 1 = φ(h1) ⊗ h2 forces φ = 0 off the unit, and φ(1) = 0 as well
  for (int i = 0; i < m.P.dim(); ++i)
    for (int h = 1; h < 2; ++h) EXPECT_TRUE(is_zero(m.P.map(i).column(h)));
  StrictnessResult s = morita_strictness(m);
  EXPECT_EQ(s.verdict, Strictness::Neither);
}

TEST(Morita, ContextAxiomsOnAllInstances) {
  for (const auto& in : instances()) {
    MoritaContext m = build_morita(in.A);
    EXPECT_TRUE(m.report.ok()) << in.name << "\n" << m.report.text();
  }
}

// [−,−] surjective ⇔ can bijective and the ζ/ξ splitting exists
TEST(Morita, BracketSurjectiveIffGalois) {
  for (const auto& in : instances()) {
    MoritaContext m = build_morita(in.A);
    StrictnessResult s = morita_strictness(m);
    GaloisResult g = galois_can(in.A);
    EXPECT_EQ(s.bracket_surjective, g.bijective) << in.name << " " << g.verdict;
    if (s.bracket_surjective) {
      EXPECT_TRUE(s.report.ok()) << in.name << "\n" << s.report.text();
    }
  }
}

// cleft ⇒ strict ⇒ [−,−] surjective ⇒ can bijective
TEST(Morita, ImplicationChain) {
  for (auto P : {h2_product(), h3_product(), heisenberg_double(Host::of(catalog::h2())),
                 heisenberg_double(Host::of(catalog::h3()))}) {
    if (!P.system.sigma_inv) P = build_crossed_product(sigma_inverse(P.system));
    CleavingSystem cs = crossed_to_cleft(P);
    ASSERT_TRUE(check_cleaving(cs).ok());
    MoritaContext m = build_morita(P.algebra);
    StrictnessResult s = morita_strictness(m);
    EXPECT_EQ(s.verdict, Strictness::Strict);
    EXPECT_TRUE(s.bracket_surjective);
    EXPECT_TRUE(galois_can(P.algebra).bijective);
  }
}
