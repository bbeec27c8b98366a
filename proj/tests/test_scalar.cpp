#include "coquasi/scalar.hpp"

#include <gtest/gtest.h>

#include <random>

using coquasi::Scalar;

namespace {

Scalar random_scalar(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  std::vector<mpq_class> c;
  int len = n == 1 ? 1 : 4;
  for (int k = 0; k < len; ++k) {
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    c.push_back(q);
  }
  return Scalar::from_coeffs(n, c);
}

}  // namespace

TEST(Scalar, CubeRootOfUnity) {
  Scalar q = Scalar::primitive_root(3);
  EXPECT_EQ(q * q * q, Scalar(1));
  EXPECT_NE(q, Scalar(1));
  EXPECT_TRUE((Scalar(1) + q + q * q).is_zero());
}

TEST(Scalar, Rationals) {
  EXPECT_EQ(Scalar::rational(1, 2) + Scalar::rational(1, 3), Scalar::rational(5, 6));
  EXPECT_EQ(Scalar::primitive_root(1), Scalar(1));
  EXPECT_EQ(Scalar::primitive_root(2), Scalar(-1));
}

TEST(Scalar, PrimitiveRootHasExactOrder) {
  for (int n : {3, 4, 5, 6, 8, 12}) {
    Scalar z = Scalar::primitive_root(n);
    Scalar p(1);
    for (int k = 1; k < n; ++k) {
      p *= z;
      EXPECT_NE(p, Scalar(1)) << "n=" << n << " k=" << k;
    }
    EXPECT_EQ(p * z, Scalar(1)) << "n=" << n;
  }
  Scalar i = Scalar::primitive_root(4);
  EXPECT_EQ(i * i, Scalar(-1));
}

TEST(Scalar, MixedOrdersPromote) {
  Scalar q = Scalar::primitive_root(3);
  Scalar i = Scalar::primitive_root(4);
  Scalar z12 = Scalar::primitive_root(12);
  // zeta_12^4 = zeta_3 and zeta_12^3 = i
  EXPECT_EQ(z12.pow(4), q);
  EXPECT_EQ(z12.pow(3), i);
  EXPECT_EQ((q * i).pow(12), Scalar(1));
  EXPECT_EQ((q + i) - i, q);
  EXPECT_TRUE(((q + i) - i - q).is_zero());
}

TEST(Scalar, DivisionAndInverse) {
  Scalar q = Scalar::primitive_root(3);
  EXPECT_EQ(q.inverse(), q * q);
  EXPECT_EQ((Scalar(1) + q).inverse(), -q);  // 1+q = -q^2
  EXPECT_THROW(Scalar(1) / Scalar(0), coquasi::DivisionByZero);
  EXPECT_THROW(Scalar().inverse(), coquasi::DivisionByZero);
}

TEST(Scalar, FieldAxiomsRandomized) {
  std::mt19937 rng(12345);
  for (int n : {1, 3, 4, 5, 12}) {
    for (int trial = 0; trial < 30; ++trial) {
      Scalar a = random_scalar(rng, n), b = random_scalar(rng, n), c = random_scalar(rng, n);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      if (!a.is_zero()) {
        EXPECT_EQ(a * a.inverse(), Scalar(1));
      }
    }
  }
}

TEST(Scalar, CanonicalizationIsIdempotent) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Scalar a = random_scalar(rng, 5);
    Scalar again = Scalar::from_coeffs(a.order(), a.coeffs());
    EXPECT_EQ(a, again);
    EXPECT_EQ(a.coeffs(), again.coeffs());
  }
  // z^3 in Q(zeta_3) reduces to 1 and becomes a rational
  Scalar z3 = Scalar::from_coeffs(3, {0, 0, 0, 1});
  EXPECT_TRUE(z3.is_rational());
  EXPECT_EQ(z3, Scalar(1));
}

TEST(Scalar, TextRoundTrip) {
  Scalar q = Scalar::primitive_root(3);
  EXPECT_EQ(Scalar::parse("z", 3), q);
  EXPECT_EQ(Scalar::parse("-1 - z", 3), q * q);
  EXPECT_EQ(Scalar::parse("z^2", 3), q * q);
  EXPECT_EQ(Scalar::parse("1/2 + 1/3", 1), Scalar::rational(5, 6));
  EXPECT_EQ(Scalar::parse("-3/4*z", 4), Scalar::rational(-3, 4) * Scalar::primitive_root(4));
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    Scalar a = random_scalar(rng, 12);
    EXPECT_EQ(Scalar::parse(a.to_string(12), 12), a) << a.to_string(12);
  }
  EXPECT_THROW(Scalar::parse("1/0", 1), coquasi::DivisionByZero);
  EXPECT_THROW(Scalar::parse("abc", 1), coquasi::ParseError);
  EXPECT_THROW(Scalar::parse("", 1), coquasi::ParseError);
}
