#include "coquasi/mutation.hpp"

#include <gtest/gtest.h>

using namespace coquasi;

TEST(Mutation, FixturesAreClean) {
  for (const auto& f : standard_mutation_fixtures()) {
    Report r = f.check(f.tensors);
    EXPECT_TRUE(r.ok()) << f.name << "\n" << r.text();
  }
}

// at least 50 random single-entry corruptions per fixture, each caught by a
// named identity with a witness tuple
TEST(Mutation, RandomSingleEntry) {
  unsigned seed = 20240601;
  for (const auto& f : standard_mutation_fixtures()) {
    auto res = run_mutations(f, 60, seed++);
    ASSERT_EQ(res.size(), 60u);
    for (const auto& o : res) {
      EXPECT_TRUE(o.detected) << f.name << ": " << o.where;
      EXPECT_FALSE(o.identity.empty());
      EXPECT_FALSE(o.witness.empty());
      EXPECT_NE(o.identity, "well-formed structure") << f.name << ": " << o.where;
    }
  }
}

// every entry of the H(2) fixtures, shifted by one
TEST(Mutation, ExhaustiveOnH2) {
  for (const auto& f : standard_mutation_fixtures()) {
    if (f.name.find("H(2)") == std::string::npos) continue;
    for (std::size_t k = 0; k < f.tensors.size(); ++k)
      for (int i = 0; i < f.tensors[k].rows(); ++i)
        for (int j = 0; j < f.tensors[k].cols(); ++j) {
          auto t = f.tensors;
          t[k](i, j) += Scalar(1);
          EXPECT_FALSE(f.check(t).ok()) << f.name << " " << f.tensor_names[k] << "[" << i << ", " << j << "]";
        }
  }
}

TEST(Mutation, Deterministic) {
  auto f = standard_mutation_fixtures().front();
  auto a = run_mutations(f, 10, 5), b = run_mutations(f, 10, 5);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].where, b[i].where);
}
