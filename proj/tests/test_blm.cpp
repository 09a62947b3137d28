#include <gtest/gtest.h>

#include "qschur/blm.hpp"
#include "qschur/errors.hpp"

using namespace qschur;

namespace {
long binom(int n, int k) {
  long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

std::vector<std::vector<int>> exponent_vectors(int n, int maxe) {
  std::vector<std::vector<int>> out{{}};
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<int>> next;
    for (auto v : out)
      for (int e = 0; e <= maxe; ++e) {
        auto w = v;
        w.push_back(e);
        next.push_back(w);
      }
    out = next;
  }
  return out;
}

SuperMatrix strict_unit(int n, int i, int j, bool odd) {
  NatMatrix z(n);
  return odd ? SuperMatrix(z, unit_matrix(n, i, j)) : SuperMatrix(unit_matrix(n, i, j), z);
}
}  // namespace

TEST(Blm, IdentityFamily) {
  for (int r = 0; r <= 3; ++r) EXPECT_EQ(a_jr(SuperMatrix(2), {0, 0}, r), QElement::identity(2, r));
}

// the closed forms against degreewise products through the composition oracle
TEST(Blm, GeneratorProductsMatchOracle) {
  for (int n = 1; n <= 2; ++n)
    for (int s = 0; s <= 2; ++s)
      for (const auto& a : strict_super_matrices(n, s))
        for (const auto& j : exponent_vectors(n, 1)) {
          ASpec x(a, j);
          for (GenTag g : kAllGenTags)
            for (int h : gen_indices(g, n)) {
              AComb c = gen_mul(g, h, x);
              for (int r = 0; r <= 3; ++r)
                EXPECT_EQ(evaluate(c, n, r), general_product(a_jr(gen_spec(g, h, n), r), a_jr(x, r), Engine::Oracle))
                    << gen_tag_name(g) << h << " * " << x.to_string() << " at r=" << r;
            }
        }
}

TEST(Blm, ReexpressInvertsEvaluation) {
  for (int n = 1; n <= 2; ++n)
    for (int s = 0; s <= 2; ++s)
      for (const auto& a : strict_super_matrices(n, s))
        for (const auto& j : exponent_vectors(n, 2)) {
          int deg = 0;
          for (int e : j) deg += e;
          AComb c;
          add_term(c, ASpec(a, j), GaussianRational(mpq_class(3, 2)));
          add_term(c, ASpec(a, std::vector<int>(n, 0)), GaussianRational(mpq_class(0), mpq_class(1)));
          EXPECT_EQ(reexpress(TruncatedFamily::of(c, n, s + deg)), c) << ASpec(a, j).to_string();
        }
}

// O(j) A(0) = A(j) + lower exponents, with the exact binomial expansion of (ro(A) + lambda)^j
TEST(Blm, DiagonalTimesFamilyShape) {
  int n = 2;
  for (int s = 0; s <= 2; ++s)
    for (const auto& a : strict_super_matrices(n, s))
      for (const auto& j : exponent_vectors(n, 2)) {
        int R = s + j[0] + j[1];
        auto prod = TruncatedFamily::of(ASpec(SuperMatrix(n), j), R) * TruncatedFamily::of(ASpec(a, {0, 0}), R);
        AComb expect;
        Composition c = a.ro();
        for (int k0 = 0; k0 <= j[0]; ++k0)
          for (int k1 = 0; k1 <= j[1]; ++k1) {
            mpq_class coeff = binom(j[0], k0) * binom(j[1], k1);
            for (int t = 0; t < j[0] - k0; ++t) coeff *= c[0];
            for (int t = 0; t < j[1] - k1; ++t) coeff *= c[1];
            add_term(expect, ASpec(a, {k0, k1}), GaussianRational(coeff));
          }
        AComb got = reexpress(prod);
        EXPECT_EQ(got, expect) << ASpec(a, j).to_string();
        EXPECT_EQ(got.at(ASpec(a, j)), GaussianRational(1));
      }
}

TEST(Blm, DividedPowers) {
  int n = 3, R = 4;
  for (int h = 1; h < n; ++h)
    for (int k = 2; k <= 3; ++k) {
      auto e = letter_family(Letter{LetterKind::E, h, {}}, n, R);
      auto p = e;
      for (int t = 1; t < k; ++t) p = p * e;
      NatMatrix m(n);
      m(h, h + 1) = k;
      long fact = k == 2 ? 2 : 6;
      EXPECT_EQ(p, TruncatedFamily::of(ASpec(SuperMatrix(m, NatMatrix(n)), {0, 0, 0}), R).scaled(GaussianRational(fact)));
    }
}

TEST(Blm, LetterLevels) {
  int n = 2;
  EXPECT_TRUE(letter_level(Letter{LetterKind::E, 1, {}}, n, 0).is_zero());
  for (int r = 0; r <= 3; ++r) {
    EXPECT_EQ(letter_level(Letter{LetterKind::HBar, 2, {}}, n, r),
              a_jr(strict_unit(n, 2, 2, true), {0, 0}, r).scaled(GaussianRational::eps()));
    EXPECT_EQ(letter_level(Letter{LetterKind::FBar, 1, {}}, n, r),
              a_jr(strict_unit(n, 2, 1, true), {0, 0}, r).scaled(GaussianRational::eps()));
  }
  auto gens = generators(2, 2);
  EXPECT_EQ(gens.size(), 2u + 2u + 1u + 1u + 1u + 1u);
  EXPECT_THROW(gen_spec(GenTag::E, 2, 2), InvalidArgument);
}

TEST(Blm, RelationSuitesSmall) {
  for (auto s : {RelationSuite::QR, RelationSuite::QS})
    for (int n = 1; n <= 2; ++n) {
      auto rep = check_relations(s, n, 3);
      EXPECT_TRUE(rep.ok()) << rep.suite << " n=" << n << ": " << rep.failures.front();
      EXPECT_GT(rep.checks, 0u);
    }
}

// negative control: dropping the factor 2 in [hbar_i, hbar_i] = 2 H_i is caught
TEST(Blm, WrongRelationIsDetected) {
  int n = 2, R = 2;
  auto hb = WordPoly::letter(Letter{LetterKind::HBar, 1, {}});
  auto h = WordPoly::letter(Letter{LetterKind::H, 1, {}});
  EXPECT_EQ(evaluate_family(bracket(hb, hb), n, R), evaluate_family(h.scaled(2), n, R));
  EXPECT_NE(evaluate_family(bracket(hb, hb), n, R), evaluate_family(h, n, R));
}

TEST(Blm, SpanningSetIsABasis) {
  for (int n = 1; n <= 2; ++n)
    for (int r = 0; r <= 3; ++r) {
      auto b = blm_basis_rank(n, r);
      EXPECT_EQ(b.dim, count_super_matrices(n, r));
      EXPECT_EQ(b.size, b.dim);
      EXPECT_EQ(b.rank, b.dim);
    }
}

TEST(Blm, TriangularProductsSmall) {
  for (int n = 1; n <= 2; ++n)
    for (int s = 0; s <= 2; ++s)
      for (const auto& a : strict_super_matrices(n, s)) {
        int factors = 0;
        for (const auto& f : triangular_factors(a)) factors += f.second;
        auto t = triangular_product(a, std::max(s, factors));
        EXPECT_TRUE(t.ok()) << a.to_string();
        EXPECT_TRUE(t.expansion_match) << a.to_string();
        EXPECT_TRUE(t.leading_sign == 1 || t.leading_sign == -1);
      }
  auto empty = triangular_product(SuperMatrix(2), 2);
  EXPECT_EQ(empty.leading_sign, 1);
  EXPECT_EQ(empty.symbolic.size(), 1u);
}

TEST(Blm, PbwImagesIndependentSmall) {
  auto rep = pi_images_check(1, 2, 1);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.rank, rep.count);
}
