#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "qschur/symgroup.hpp"
#include "qschur/verify.hpp"

using namespace qschur;

namespace {
// plain vector permutations as the reference
std::vector<int> vcompose(const std::vector<int>& u, const std::vector<int>& v) {
  std::vector<int> w(v.size());
  for (size_t i = 0; i < v.size(); ++i) w[i] = u[v[i] - 1];
  return w;
}
int vinversions(const std::vector<int>& u) {
  int c = 0;
  for (size_t i = 0; i < u.size(); ++i)
    for (size_t j = i + 1; j < u.size(); ++j) c += u[i] > u[j];
  return c;
}
std::vector<int> random_images(std::mt19937& g, int r) {
  std::vector<int> v(r);
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), g);
  return v;
}
}  // namespace

TEST(Permutation, ComposeInverseLengthMatchVectors) {
  std::mt19937 g(11);
  for (int t = 0; t < 500; ++t) {
    int r = 1 + t % kMaxDegree;
    auto a = random_images(g, r), b = random_images(g, r);
    auto u = Permutation::from_images(a), v = Permutation::from_images(b);
    EXPECT_EQ((u * v).images(), vcompose(a, b));
    EXPECT_TRUE((u * u.inverse()).is_identity());
    EXPECT_EQ(u.length(), vinversions(a));
  }
}

TEST(Permutation, SimpleReflectionConvention) {
  auto s = Permutation::simple(2, 4);
  EXPECT_EQ(s.images(), (std::vector<int>{1, 3, 2, 4}));
  // (s1 s2)(1) = s1(s2(1)) = s1(1) = 2
  EXPECT_EQ(word({1, 2}, 3)(1), 2);
  EXPECT_THROW(Permutation::simple(4, 4), std::exception);
  EXPECT_THROW(Permutation::from_images({1, 1, 2}), std::exception);
}

TEST(Permutation, GroupOrder) {
  for (int r = 0; r <= 5; ++r) {
    auto all = all_permutations(r);
    std::set<uint64_t> keys;
    for (auto& p : all) keys.insert(p.key());
    size_t fact = 1;
    for (int i = 2; i <= r; ++i) fact *= i;
    EXPECT_EQ(all.size(), fact);
    EXPECT_EQ(keys.size(), fact);
  }
}

TEST(Compositions, CountsAreStarsAndBars) {
  EXPECT_EQ(compositions(3, 4).size(), 15u);
  EXPECT_EQ(compositions(1, 0).size(), 1u);
  EXPECT_EQ(prefix_sums({2, 0, 3}), (std::vector<int>{0, 2, 2, 5}));
  EXPECT_EQ(block_of({2, 0, 3}, 3), 3);
}

// brute-force coset structure: D_nu are the unique minimal elements of the cosets S_nu w
TEST(Cosets, MinimalRightCosetRepsMatchBruteForce) {
  for (int r = 1; r <= 5; ++r)
    for (const auto& nu : compositions(3, r)) {
      std::set<uint64_t> expected;
      for (const auto& w : all_permutations(r)) {
        Permutation best = w;
        for (const auto& y : young_subgroup_members(nu))
          if ((y * w).length() < best.length()) best = y * w;
        expected.insert(best.key());
        EXPECT_EQ(coset_rep(w, nu), best);
      }
      std::set<uint64_t> got;
      for (const auto& d : min_right_coset_reps(nu)) got.insert(d.key());
      EXPECT_EQ(got, expected);
    }
}

TEST(Cosets, MatrixTripleRoundTrip) {
  for (int n = 1; n <= 3; ++n)
    for (int r = 0; r <= 5; ++r)
      for (const auto& m : nat_matrices(n, r)) {
        auto t = matrix_to_triple(m);
        EXPECT_EQ(t.lambda, m.row_sums());
        EXPECT_EQ(t.mu, m.col_sums());
        EXPECT_TRUE(is_min_double_coset_rep(t.d, t.lambda, t.mu));
        EXPECT_EQ(triple_to_matrix(t.lambda, t.d, t.mu), m);
      }
}

TEST(Cosets, DoubleCosetRepsBijectWithMatrices) {
  for (int r = 0; r <= 5; ++r)
    for (const auto& lam : compositions(3, r))
      for (const auto& mu : compositions(3, r))
        EXPECT_EQ(min_double_coset_reps(lam, mu).size(), nat_matrices(lam, mu).size());
}

TEST(DMatrix, WordRealizesPermutationAndIsReduced) {
  for (int n = 1; n <= 3; ++n)
    for (int r = 0; r <= 5; ++r)
      for (const auto& m : nat_matrices(n, r)) {
        auto w = d_of_matrix_word(m);
        auto d = d_of_matrix(m);
        EXPECT_EQ(word(w, r), d);
        EXPECT_EQ(int(w.size()), d.length());
      }
}

TEST(DMatrix, EqualsBruteForceMinimum) {
  for (int n = 1; n <= 3; ++n)
    for (int r = 0; r <= 5; ++r)
      for (const auto& m : nat_matrices(n, r)) EXPECT_EQ(d_of_matrix(m), min_double_coset_rep_bruteforce(m));
}

// negative control: a non-minimal representative is told apart
TEST(DMatrix, NonMinimalRepresentativeRejected) {
  NatMatrix m(2);
  m(1, 1) = 1;
  m(1, 2) = 1;
  m(2, 1) = 1;
  m(2, 2) = 1;
  auto d = d_of_matrix(m);
  auto other = Permutation::simple(1, 4) * d;  // same double coset, longer
  EXPECT_EQ(triple_to_matrix(m.row_sums(), other, m.col_sums()), m);
  EXPECT_FALSE(is_min_double_coset_rep(other, m.row_sums(), m.col_sums()));
  EXPECT_NE(other, min_double_coset_rep_bruteforce(m));
}
