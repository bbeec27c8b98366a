#include "coquasi/hopf_modules.hpp"
#include "coquasi/lowdim.hpp"

#include <gtest/gtest.h>

using namespace coquasi;

namespace {

CrossedSystem h2_sys() { return sigma_inverse(catalog::h2_system(catalog::h2_fixture())); }
CrossedSystem h3_sys() { return sigma_inverse(catalog::h3_system(catalog::h3_fixture())); }

// t acting by ±1 on a line
RModule sign_module(const Algebra& R, const Scalar& s) {
  Matrix act(1, R.dim());
  act(0, 0) = Scalar(1);
  act(0, 1) = s;
  return RModule{Space({"n"}), act};
}

std::vector<std::pair<std::string, CoquasiHopfModule>> fixtures() {
  std::vector<std::pair<std::string, CoquasiHopfModule>> out;
  CrossedSystem s2 = h2_sys(), s3 = h3_sys();
  out.push_back({"H2 R⊗H", free_hopf_module(free_r_module(s2.R), s2)});
  out.push_back({"H2 R²⊗H", free_hopf_module(free_r_module(s2.R, 2), s2)});
  out.push_back({"H3 R⊗H", free_hopf_module(free_r_module(s3.R), s3)});
  out.push_back({"H2 crossed product", from_relative_hopf(regular_relative_module(build_crossed_product(s2).algebra), s2)});
  out.push_back({"H3 crossed product", from_relative_hopf(regular_relative_module(build_crossed_product(s3).algebra), s3)});
  return out;
}

}  // namespace

TEST(HopfModules, FixturesPass) {
  for (const auto& [name, M] : fixtures()) {
    Report r = check_hopf_module(M);
    EXPECT_TRUE(r.ok()) << name << "\n" << r.text();
    Report x = check_relative_hopf_module(to_relative_hopf(M), build_crossed_product(M.system).algebra);
    EXPECT_TRUE(x.ok()) << name << "\n" << x.text();
  }
}

TEST(HopfModules, SignModule) {
  // N need not be stable under the weak action, only an R-module
  CrossedSystem s = h2_sys();
  CoquasiHopfModule M = free_hopf_module(sign_module(s.R, Scalar(1)), s);
  Report r = check_hopf_module(M);
  EXPECT_TRUE(r.ok()) << r.text();
}

TEST(HopfModules, CorruptCircFails) {
  CrossedSystem s = h2_sys();
  CoquasiHopfModule M = free_hopf_module(free_r_module(s.R), s);
  // swap the value of (1⊗x)∘x for its negative
  int col = 1 * 2 + 1;
  M.h_action.set_column(col, Scalar(-1) * M.h_action.column(col));
  Report r = check_hopf_module(M);
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(r.failed("circ omega-associative")) << r.text();
}

TEST(HopfModules, RoundTripWithRelativeModules) {
  for (const auto& [name, M] : fixtures()) {
    CoquasiHopfModule back = from_relative_hopf(to_relative_hopf(M), M.system);
    EXPECT_EQ(back.r_action, M.r_action) << name;
    EXPECT_EQ(back.h_action, M.h_action) << name;
    EXPECT_EQ(back.coaction, M.coaction) << name;
  }
  CrossedProduct P = build_crossed_product(h2_sys());
  RelativeHopfModule X = regular_relative_module(P.algebra);
  RelativeHopfModule again = to_relative_hopf(from_relative_hopf(X, P.system));
  EXPECT_EQ(again.action, X.action);
  EXPECT_EQ(again.coaction, X.coaction);
}

TEST(HopfModules, Projection) {
  for (const auto& [name, M] : fixtures()) {
    Report r = check_projection(M);
    EXPECT_TRUE(r.ok()) << name << "\n" << r.text();
    Matrix pi = projection_pi(M);
    EXPECT_EQ(pi * pi, pi) << name;
  }
  CrossedSystem s = h2_sys();
  CoquasiHopfModule M = free_hopf_module(free_r_module(s.R), s);
  // Π(1⊗x) = β(x) (1⊗x)∘S(x) = σ(x,x)⊗1 = t⊗1
  Vec p = projection_pi(M).column(1);
  EXPECT_EQ(p, kron(s.R.basis(1), unit_vec(2, 0)));
  EXPECT_EQ(M.coaction.apply(p), kron(p, unit_vec(2, 0)));
}

TEST(HopfModules, EquivalenceMaps) {
  for (const auto& [name, M] : fixtures()) {
    EquivalenceMaps e = equivalence_maps(M);
    EXPECT_TRUE(e.report.ok()) << name << "\n" << e.report.text();
    EXPECT_EQ(M.dim(), e.coinv.dim() * M.system.dH()) << name;
  }
  auto fx = fixtures();
  const CoquasiHopfModule& A = fx[3].second;
  EXPECT_EQ(A.dim(), 4);
  EquivalenceMaps e = equivalence_maps(A);
  EXPECT_EQ(e.kappa * e.eps, Matrix::identity(4));
  EXPECT_EQ(e.eps * e.kappa, Matrix::identity(4));
}

TEST(HopfModules, UnitMaps) {
  CrossedSystem s2 = h2_sys(), s3 = h3_sys();
  for (const auto& [N, s] : {std::pair{free_r_module(s2.R), s2}, std::pair{free_r_module(s2.R, 2), s2},
                             std::pair{sign_module(s2.R, Scalar(-1)), s2}, std::pair{free_r_module(s3.R), s3}}) {
    Report r = check_unit_maps(N, s);
    EXPECT_TRUE(r.ok()) << r.text();
  }
}

TEST(HopfModules, NeedsSigmaInverse) {
  CrossedSystem s = catalog::h2_system(catalog::h2_fixture());
  s.sigma_inv.reset();
  EXPECT_THROW(equivalence_maps(free_hopf_module(free_r_module(s.R), s)), MissingSigmaInverse);
}

// N⊗H through the isomorphism is N ⊗_R (R#σH)
TEST(HopfModules, MatchesInducedModule) {
  for (auto s : {h2_sys(), h3_sys()}) {
    CrossedProduct P = build_crossed_product(s);
    for (const auto& N : {free_r_module(s.R), free_r_module(s.R, 2)}) {
      RelativeHopfModule a = to_relative_hopf(free_hopf_module(N, s));
      RelativeHopfModule b = induced_relative_module(N, P);
      EXPECT_EQ(a.action, b.action);
      EXPECT_EQ(a.coaction, b.coaction);
    }
  }
}
