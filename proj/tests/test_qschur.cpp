#include <gtest/gtest.h>

#include "qschur/errors.hpp"
#include "qschur/qschur.hpp"
#include "qschur/sergeev.hpp"

using namespace qschur;

namespace {
SuperMatrix sm(int n, std::vector<int> even, std::vector<int> odd) {
  SuperMatrix m(n);
  m.even.v = std::move(even);
  m.odd.v = std::move(odd);
  return m;
}
}  // namespace

TEST(QSchur, SpotProductBothEngines) {
  NatMatrix z(2);
  SuperMatrix x(z, unit_matrix(2, 1, 2)), a(z, unit_matrix(2, 2, 1));
  QElement expect = QElement::phi(SuperMatrix(unit_matrix(2, 1, 1), z)).scaled(-1);
  EXPECT_EQ(product(x, a, Engine::Formula), expect);
  EXPECT_EQ(product(x, a, Engine::Oracle), expect);
}

// Q(1,1) is spanned by phi_(1|0) = 1 and phi_(0|1) with square -1
TEST(QSchur, RankOneDegreeOne) {
  auto one = sm(1, {1}, {0}), odd = sm(1, {0}, {1});
  EXPECT_EQ(oracle_product(odd, odd), QElement::phi(one).scaled(-1));
  EXPECT_EQ(oracle_product(one, odd), QElement::phi(odd));
}

TEST(QSchur, FormulasMatchOracleSmallGrid) {
  for (Shape s : kAllShapes)
    for (int n = 1; n <= 2; ++n)
      for (int r = 0; r <= 3; ++r)
        for (const auto& a : super_matrices(n, r))
          for (int h : shape_indices(s, n)) {
            auto x = generator_matrix(s, h, a.ro());
            if (!x) continue;
            EXPECT_EQ(formula_product(s, h, a), oracle_product(*x, a)) << shape_name(s) << " h=" << h << " A=" << a.to_string();
          }
}

TEST(QSchur, DiagonalIdempotentsActAsIdentity) {
  for (int r = 0; r <= 3; ++r)
    for (const auto& a : super_matrices(2, r)) {
      QElement pa = QElement::phi(a);
      EXPECT_EQ(product(diag_super(a.ro()), a, Engine::Oracle), pa);
      EXPECT_EQ(general_product(QElement::identity(2, r), pa), pa);
      EXPECT_EQ(general_product(pa, QElement::identity(2, r)), pa);
    }
}

TEST(QSchur, MismatchedRowColumnGivesZero) {
  auto x = sm(2, {1, 0, 0, 0}, {0, 0, 0, 0});
  auto a = sm(2, {0, 0, 0, 1}, {0, 0, 0, 0});
  EXPECT_TRUE(oracle_product(x, a).is_zero());
}

TEST(QSchur, AssociativityOfGeneralProduct) {
  int n = 2, r = 2;
  auto basis = super_matrices(n, r);
  for (size_t i = 0; i < basis.size(); i += 3)
    for (size_t j = 0; j < basis.size(); j += 4)
      for (size_t k = 0; k < basis.size(); k += 5) {
        QElement a = QElement::phi(basis[i]), b = QElement::phi(basis[j]), c = QElement::phi(basis[k]);
        EXPECT_EQ(general_product(general_product(a, b), c), general_product(a, general_product(b, c)));
      }
}

// negative control: a sign-flipped term is told apart from the oracle
TEST(QSchur, PerturbedFormulaIsDetected) {
  size_t checked = 0;
  for (const auto& a : super_matrices(2, 2)) {
    auto x = generator_matrix(Shape::Upper1, 1, a.ro());
    if (!x) continue;
    QElement f = formula_product(Shape::Upper1, 1, a);
    if (f.is_zero()) continue;
    auto first = f.terms().begin();
    QElement bad = f;
    bad.add_term(first->first, first->second * GaussianRational(-2));  // flips the sign
    EXPECT_NE(bad, oracle_product(*x, a));
    ++checked;
  }
  EXPECT_GT(checked, 0u);
}

TEST(QSchur, FormulaEngineRejectsNonGenerators) {
  auto x = sm(2, {0, 2, 0, 0}, {0, 0, 0, 0});
  auto a = sm(2, {0, 0, 2, 0}, {0, 0, 0, 0});
  EXPECT_THROW(product(x, a, Engine::Formula), InvalidArgument);
  EXPECT_NO_THROW(product(x, a, Engine::Auto));
}

TEST(QSchur, TmCoordinatesHaveFullRank) {
  for (int n = 1; n <= 2; ++n)
    for (int r = 0; r <= 3; ++r) {
      size_t count = 0, rk = 0;
      for (const auto& b : tm_rank_report(n, r)) {
        count += b.count;
        rk += b.rank;
        EXPECT_TRUE(b.disjoint_supports);
      }
      EXPECT_EQ(count, count_super_matrices(n, r));
      EXPECT_EQ(rk, count);
    }
}

TEST(QSchur, ParityIsAdditive) {
  for (const auto& x : super_matrices(2, 2))
    for (const auto& a : super_matrices(2, 2)) {
      if (x.co() != a.ro()) continue;
      QElement p = oracle_product(x, a);
      if (!p.is_zero()) EXPECT_EQ(p.parity(), (x.parity() + a.parity()) % 2);
    }
}
