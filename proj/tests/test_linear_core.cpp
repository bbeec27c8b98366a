#include "coquasi/linear_core.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace coquasi;

namespace {

// group algebra k[C_n] as a coalgebra and an algebra
Coalgebra cyclic_coalgebra(int n) {
  std::vector<std::string> l;
  for (int i = 0; i < n; ++i) l.push_back(i == 0 ? "1" : "g" + std::to_string(i));
  return Coalgebra::grouplike(Space(l));
}

Algebra cyclic_algebra(int n) {
  Matrix m(n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m((i + j) % n, i * n + j) = Scalar(1);
  std::vector<std::string> l;
  for (int i = 0; i < n; ++i) l.push_back(i == 0 ? "1" : "g" + std::to_string(i));
  return Algebra(Space(l), m, unit_vec(n, 0));
}

// the function algebra k^{C_2}: a non-grouplike coalgebra on the idempotent
// basis {p0, p1}, Δ(p_k) = sum_{i+j=k} p_i⊗p_j
Coalgebra dual_c2_coalgebra() {
  Matrix c(4, 2);
  c(0 * 2 + 0, 0) = Scalar(1);
  c(1 * 2 + 1, 0) = Scalar(1);
  c(0 * 2 + 1, 1) = Scalar(1);
  c(1 * 2 + 0, 1) = Scalar(1);
  return Coalgebra(Space({"p0", "p1"}), c, Vec{Scalar(1), Scalar(0)});
}

Vec random_vec(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> d(-3, 3);
  Vec v(n);
  for (auto& x : v) x = Scalar(d(rng));
  return v;
}

}  // namespace

TEST(Linalg, RankNullspaceSolve) {
  Matrix m(2, 3);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(0, 2) = 3;
  m(1, 0) = 2;
  m(1, 1) = 4;
  m(1, 2) = 6;
  EXPECT_EQ(rank(m), 1);
  auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& v : ns) EXPECT_TRUE(is_zero(m.apply(v)));
  EXPECT_TRUE(solve(m, Vec{Scalar(1), Scalar(2)}).has_value());
  EXPECT_FALSE(solve(m, Vec{Scalar(1), Scalar(3)}).has_value());
  Matrix q(2, 2);
  q(0, 0) = Scalar::primitive_root(3);
  q(1, 1) = 2;
  q(0, 1) = 1;
  auto inv = inverse(q);
  ASSERT_TRUE(inv);
  EXPECT_EQ(*inv * q, Matrix::identity(2));
}

TEST(Linalg, SubspaceCoordinates) {
  Subspace s(3, {Vec{Scalar(1), Scalar(1), Scalar(0)}, Vec{Scalar(2), Scalar(2), Scalar(0)},
                 Vec{Scalar(0), Scalar(1), Scalar(1)}});
  EXPECT_EQ(s.dim(), 2);
  auto c = s.coordinates(Vec{Scalar(1), Scalar(2), Scalar(1)});
  ASSERT_TRUE(c);
  EXPECT_EQ(s.element(*c), (Vec{Scalar(1), Scalar(2), Scalar(1)}));
  EXPECT_FALSE(s.contains(Vec{Scalar(1), Scalar(0), Scalar(0)}));
}

TEST(Sweedler, GrouplikeLegs) {
  Coalgebra c2 = cyclic_coalgebra(2);
  const auto& t = c2.terms(1, 3);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].legs, (std::vector<int>{1, 1, 1}));
  EXPECT_EQ(c2.sweedler(unit_vec(2, 1), 1), unit_vec(2, 1));
  Coalgebra c3 = cyclic_coalgebra(3);
  EXPECT_EQ(c3.sweedler(unit_vec(3, 2), 2), unit_vec(9, 2 * 3 + 2));
}

TEST(Sweedler, AssociationOrderIrrelevant) {
  std::mt19937 rng(3);
  Coalgebra d = dual_c2_coalgebra();
  Coalgebra big = tensor_power(d, 2);
  for (const Coalgebra* c : {&d, &big}) {
    EXPECT_TRUE(check_coalgebra(*c).ok());
    for (int trial = 0; trial < 5; ++trial) {
      Vec x = random_vec(rng, c->dim());
      for (int k = 1; k <= 5; ++k) EXPECT_EQ(c->sweedler(x, k), c->sweedler_first_leg(x, k));
    }
  }
}

TEST(Convolution, UnitAndPointwise) {
  Coalgebra c = cyclic_coalgebra(2);
  Algebra k = Algebra::ground_field();
  Matrix u = convolution_unit(c, k);
  Matrix psi(1, 2);
  psi(0, 0) = 3;
  psi(0, 1) = -2;
  EXPECT_EQ(convolution_product(u, psi, c, k), psi);
  EXPECT_EQ(convolution_product(psi, u, c, k), psi);
  // delta functionals at grouplikes multiply pointwise
  Matrix dx(1, 2), d1(1, 2);
  dx(0, 1) = 1;
  d1(0, 0) = 1;
  EXPECT_EQ(convolution_product(dx, dx, c, k), dx);
  EXPECT_TRUE(convolution_product(dx, d1, c, k).is_zero());
}

TEST(Convolution, InverseMatchesPointwiseOracle) {
  Coalgebra c = cyclic_coalgebra(2);
  Algebra k = Algebra::ground_field();
  Functional omega = Functional::counit_power(c, 3);
  omega.at({1, 1, 1}) = -1;
  std::string diag;
  auto inv = convolution_inverse(omega, c, k, &diag);
  ASSERT_TRUE(inv) << diag;
  // oracle: on a grouplike basis the inverse is the entrywise reciprocal
  for (int idx = 0; idx < 8; ++idx) EXPECT_EQ(inv->values(0, idx), omega.values(0, idx).inverse());
  EXPECT_EQ(inv->at({1, 1, 1}), Scalar(-1));
  EXPECT_EQ(convolve(omega, *inv, c, k), Functional::counit_power(c, 3));

  Functional unit = Functional::counit_power(c, 2);
  EXPECT_EQ(*convolution_inverse(unit, c, k), unit);
  Functional zero(2, 2);
  EXPECT_FALSE(convolution_inverse(zero, c, k, &diag));
  EXPECT_NE(diag.find("NotInvertible"), std::string::npos);
}

TEST(Convolution, InverseIsTwoSidedOnRandomMaps) {
  std::mt19937 rng(11);
  Coalgebra d = dual_c2_coalgebra();
  Algebra a = cyclic_algebra(3);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix phi(3, 2);
    for (int r = 0; r < 3; ++r)
      for (int h = 0; h < 2; ++h) phi(r, h) = random_vec(rng, 1)[0];
    auto res = convolution_inverse(phi, d, a);
    if (!res) continue;
    Matrix u = convolution_unit(d, a);
    EXPECT_EQ(convolution_product(phi, *res.inverse, d, a), u);
    EXPECT_EQ(convolution_product(*res.inverse, phi, d, a), u);
  }
}

TEST(Convolution, Associative) {
  std::mt19937 rng(5);
  Coalgebra d = tensor_power(dual_c2_coalgebra(), 2);
  Algebra a = cyclic_algebra(3);
  auto rnd = [&] {
    Matrix m(3, 4);
    for (int r = 0; r < 3; ++r)
      for (int h = 0; h < 4; ++h) m(r, h) = random_vec(rng, 1)[0];
    return m;
  };
  for (int trial = 0; trial < 5; ++trial) {
    Matrix x = rnd(), y = rnd(), z = rnd();
    EXPECT_EQ(convolution_product(convolution_product(x, y, d, a), z, d, a),
              convolution_product(x, convolution_product(y, z, d, a), d, a));
  }
}

TEST(Functional, ApplyAndArity) {
  Coalgebra c = cyclic_coalgebra(2);
  Functional alpha(1, 2);
  alpha.at({0}) = 1;
  alpha.at({1}) = -1;
  EXPECT_EQ(apply_functional(alpha, {unit_vec(2, 1)}), Scalar(-1));
  EXPECT_EQ(apply_functional(alpha, {Vec{Scalar(2), Scalar(5)}}), Scalar(-3));
  EXPECT_THROW(apply_functional(alpha, {unit_vec(2, 1), unit_vec(2, 0)}), ArityMismatch);
}

TEST(Algebra, CheckAndInverse) {
  Algebra a = cyclic_algebra(3);
  EXPECT_TRUE(check_algebra(a).ok());
  auto inv = a.inverse(unit_vec(3, 1));
  ASSERT_TRUE(inv);
  EXPECT_EQ(*inv, unit_vec(3, 2));
  // 1 + g + g^2 is a zero divisor
  EXPECT_FALSE(a.inverse(Vec{Scalar(1), Scalar(1), Scalar(1)}));
}
