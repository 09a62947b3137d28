#include <gtest/gtest.h>

#include <random>

#include "qschur/errors.hpp"
#include "qschur/linalg.hpp"
#include "qschur/scalar.hpp"

using namespace qschur;

namespace {
GaussianRational gr(long a, long b, long c, long d) { return GaussianRational(mpq_class(a, b), mpq_class(c, d)); }

GaussianRational random_gr(std::mt19937& g) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  return gr(num(g), den(g), num(g), den(g));
}
}  // namespace

TEST(Scalar, EpsSquaresToMinusOne) { EXPECT_EQ(GaussianRational::eps() * GaussianRational::eps(), GaussianRational(-1)); }

TEST(Scalar, CanonicalRationals) {
  GaussianRational x(mpq_class(2, 4));
  EXPECT_EQ(x, gr(1, 2, 0, 1));
  EXPECT_EQ(GaussianRational::rational_string(mpq_class(-6, 4)), "-3/2");
  EXPECT_EQ(GaussianRational::rational_string(mpq_class(5)), "5/1");
}

TEST(Scalar, ParseRoundTrip) {
  auto z = GaussianRational::parse("-3/6", "7");
  EXPECT_EQ(z, gr(-1, 2, 7, 1));
  EXPECT_THROW(GaussianRational::parse("1/0", "0"), Error);
  EXPECT_THROW(GaussianRational::parse("abc", "0"), Error);
}

TEST(Scalar, DivisionByZeroThrows) { EXPECT_THROW(GaussianRational(1) / GaussianRational(0), DivisionByZero); }

TEST(Scalar, FieldAxiomsOnRandomSamples) {
  std::mt19937 g(7);
  for (int t = 0; t < 300; ++t) {
    auto a = random_gr(g), b = random_gr(g), c = random_gr(g);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, GaussianRational(0));
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
  }
}

TEST(Linalg, RankAndSolve) {
  DenseMatrix<mpq_class> m(3, 3);
  int v[9] = {1, 2, 3, 2, 4, 6, 1, 0, 1};
  for (int i = 0; i < 9; ++i) m.a[i] = v[i];
  EXPECT_EQ(rank(m), 2u);
  EXPECT_FALSE(inverse(m).has_value());
  m(1, 2) = 7;
  auto inv = inverse(m);
  ASSERT_TRUE(inv.has_value());
  auto x = solve_unique(m, std::vector<mpq_class>{1, 2, 3});
  ASSERT_TRUE(x.has_value());
  for (size_t i = 0; i < 3; ++i) {
    mpq_class s = 0;
    for (size_t j = 0; j < 3; ++j) s += m(i, j) * (*x)[j];
    EXPECT_EQ(s, mpq_class(int(i) + 1));
  }
}
