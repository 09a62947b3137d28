#include <gtest/gtest.h>

#include <set>

#include "qschur/superindex.hpp"

using namespace qschur;

namespace {
// count pairs (even, odd) by placing each cell's contribution independently: a cell of weight w
// contributes x^w for the even part times (1 + x) for the odd bit
size_t count_by_series(int n, int r) {
  std::vector<size_t> poly(r + 1, 0);
  poly[0] = 1;
  for (int cell = 0; cell < n * n; ++cell) {
    std::vector<size_t> next(r + 1, 0);
    for (int d = 0; d <= r; ++d)
      if (poly[d])
        for (int e = 0; d + e <= r; ++e)
          for (int o = 0; o <= 1 && d + e + o <= r; ++o) next[d + e + o] += poly[d];
    poly = next;
  }
  return poly[r];
}
}  // namespace

TEST(SuperMatrix, EnumerationMatchesSeries) {
  for (int n = 1; n <= 3; ++n)
    for (int r = 0; r <= 4; ++r) {
      auto all = super_matrices(n, r);
      EXPECT_EQ(all.size(), count_by_series(n, r)) << n << " " << r;
      EXPECT_EQ(count_super_matrices(n, r), all.size());
      std::set<SuperMatrix> uniq(all.begin(), all.end());
      EXPECT_EQ(uniq.size(), all.size());
      EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
      for (const auto& m : all) {
        EXPECT_TRUE(m.valid());
        EXPECT_EQ(m.total(), r);
      }
    }
  // M(1,1) = {(1|0), (0|1)}
  EXPECT_EQ(super_matrices(1, 1).size(), 2u);
}

TEST(SuperMatrix, RejectsBadOddEntries) {
  NatMatrix e(2), o(2);
  o(1, 2) = 2;
  EXPECT_THROW(SuperMatrix(e, o), std::exception);
  o(1, 2) = 0;
  e(2, 2) = -1;
  EXPECT_THROW(SuperMatrix(e, o), std::exception);
}

TEST(SuperMatrix, RowColumnSumsAndParity) {
  NatMatrix e(2), o(2);
  e(1, 2) = 2;
  o(2, 1) = 1;
  o(2, 2) = 1;
  SuperMatrix m(e, o);
  EXPECT_EQ(m.ro(), (Composition{2, 2}));
  EXPECT_EQ(m.co(), (Composition{1, 3}));
  EXPECT_EQ(m.parity(), 0);
  EXPECT_EQ(m.odd_diagonal_set(), (std::vector<int>{2}));
  EXPECT_TRUE(m.is_strict());
  EXPECT_FALSE(m.plus_diagonal({1, 0}).is_strict());
  EXPECT_EQ(m.plus_diagonal({1, 0}).strict_part(), m);
}

TEST(SuperMatrix, ShiftsLeavingTheSetGiveNothing) {
  NatMatrix e(2), o(2);
  e(2, 1) = 1;
  SuperMatrix m(e, o);
  auto up = shift_plus(m, 1, 1, Part::Even);
  ASSERT_TRUE(up.has_value());
  EXPECT_EQ(up->e(1, 1), 1);
  EXPECT_EQ(up->e(2, 1), 0);
  auto s = shift_minus(m, 1, 1, Part::Even);
  EXPECT_FALSE(s.has_value());
  auto t = shift_plus(m, 1, 1, Part::Odd);
  EXPECT_FALSE(t.has_value());
}

TEST(Order, PreorderAxiomsOnSmallGrid) {
  auto mats = nat_matrices(2, 3);
  for (const auto& a : mats) {
    EXPECT_TRUE(preceq_nat(a, a));
    for (const auto& b : mats)
      for (const auto& c : mats)
        if (preceq_nat(a, b) && preceq_nat(b, c)) EXPECT_TRUE(preceq_nat(a, c));
  }
}

TEST(Order, StrictPrecIsIrreflexiveAndAsymmetric) {
  std::vector<SuperMatrix> all;
  for (int r = 0; r <= 3; ++r)
    for (const auto& m : strict_super_matrices(2, r)) all.push_back(m);
  for (const auto& a : all) {
    EXPECT_FALSE(strict_prec(a, a));
    for (const auto& b : all)
      if (strict_prec(a, b)) EXPECT_FALSE(strict_prec(b, a));
  }
}

TEST(Positions, ChainIsTotalAndCoversTheSquare) {
  for (int n = 1; n <= 4; ++n) {
    auto ps = positions_in_order(n);
    EXPECT_EQ(ps.size(), size_t(n * n));
    for (size_t a = 0; a < ps.size(); ++a)
      for (size_t b = 0; b < ps.size(); ++b) EXPECT_EQ(position_le(ps[a], ps[b]), a <= b);
  }
}
