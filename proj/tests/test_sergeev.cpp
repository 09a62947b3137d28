#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "qschur/errors.hpp"
#include "qschur/sergeev.hpp"

using namespace qschur;

namespace {

// reference normal form by rewriting words in s_i and c_i:
// c_j s_i -> s_i c_{s_i(j)}, then sort the c's using c_i c_j = -c_j c_i and c_i^2 = -1
struct Tok {
  bool is_s;
  int i;
};

struct RefMonomial {
  std::vector<int> perm;  // 1-based images
  std::vector<int> cs;    // increasing
  int sign = 1;
};

RefMonomial reference_normal_form(std::vector<Tok> w, int r) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t k = 0; k + 1 < w.size(); ++k)
      if (!w[k].is_s && w[k + 1].is_s) {
        int i = w[k + 1].i, j = w[k].i;
        int sj = j == i ? i + 1 : (j == i + 1 ? i : j);
        w[k] = {true, i};
        w[k + 1] = {false, sj};
        moved = true;
      }
  }
  RefMonomial m;
  m.perm.resize(r);
  std::iota(m.perm.begin(), m.perm.end(), 1);
  std::vector<int> cs;
  for (const auto& t : w) {
    if (t.is_s) {
      // perm := perm o s_i
      std::swap(m.perm[t.i - 1], m.perm[t.i]);
    } else {
      cs.push_back(t.i);
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t k = 0; k + 1 < cs.size(); ++k) {
      if (cs[k] == cs[k + 1]) {
        cs.erase(cs.begin() + k, cs.begin() + k + 2);
        m.sign = -m.sign;
        changed = true;
        break;
      }
      if (cs[k] > cs[k + 1]) {
        std::swap(cs[k], cs[k + 1]);
        m.sign = -m.sign;
        changed = true;
      }
    }
  }
  m.cs = cs;
  return m;
}

SergeevElement as_element(const RefMonomial& m, int r) {
  CliffordMask mask = 0;
  for (int c : m.cs) mask |= CliffordMask{1} << (c - 1);
  return SergeevElement::monomial(Permutation::from_images(m.perm), mask, GaussianRational(m.sign));
}

std::vector<Tok> random_word(std::mt19937& g, int r, int len) {
  std::vector<Tok> w;
  for (int k = 0; k < len; ++k) {
    bool s = r > 1 && g() % 2;
    w.push_back(s ? Tok{true, int(1 + g() % (r - 1))} : Tok{false, int(1 + g() % r)});
  }
  return w;
}

SergeevElement library_word(const std::vector<Tok>& w, int r) {
  SergeevElement e = SergeevElement::one(r);
  for (const auto& t : w)
    e = e * (t.is_s ? SergeevElement::perm(Permutation::simple(t.i, r)) : SergeevElement::clifford(t.i, r));
  return e;
}

SergeevElement random_element(std::mt19937& g, int r) {
  SergeevElement e(r);
  auto perms = all_permutations(r);
  for (int k = 0; k < 4; ++k) {
    auto w = perms[g() % perms.size()];
    CliffordMask mask = g() % (1u << r);
    e += SergeevElement::monomial(w, mask, GaussianRational(mpq_class(long(g() % 7) - 3, long(1 + g() % 3))));
  }
  return e;
}

}  // namespace

TEST(Sergeev, WordProductsMatchRewritingReference) {
  std::mt19937 g(3);
  for (int t = 0; t < 400; ++t) {
    int r = 1 + t % 6;
    auto w = random_word(g, r, 1 + t % 9);
    EXPECT_EQ(library_word(w, r), as_element(reference_normal_form(w, r), r));
  }
}

TEST(Sergeev, DefiningRelationsExhaustive) {
  for (int r = 1; r <= 4; ++r) {
    auto rep = check_sergeev_relations(r);
    EXPECT_TRUE(rep.ok()) << rep.failures.front();
    EXPECT_GT(rep.checks, 0u);
  }
}

TEST(Sergeev, AssociativityOnRandomElements) {
  std::mt19937 g(5);
  for (int t = 0; t < 60; ++t) {
    int r = 1 + t % 4;
    auto a = random_element(g, r), b = random_element(g, r), c = random_element(g, r);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
  }
}

TEST(Sergeev, YoungSymmetrizerSquares) {
  for (int r = 0; r <= 5; ++r)
    for (const auto& lam : compositions(3, r)) {
      auto x = x_sum(lam);
      long order = 1;
      for (int part : lam)
        for (int k = 2; k <= part; ++k) order *= k;
      EXPECT_EQ(x * x, x.scaled(CheckedInt(order)));
    }
}

TEST(Sergeev, CliffordIntervalSquare) {
  auto c = c_interval(1, 2, 3);
  EXPECT_EQ(c * c, SergeevElementZ::one(3).scaled(CheckedInt(-2)));
  auto c3 = c_interval(1, 3, 3);
  EXPECT_EQ(c3 * c3, SergeevElementZ::one(3).scaled(CheckedInt(-3)));
}

// negative control: the wrong commutation s_i c_i = c_i s_i is detected
TEST(Sergeev, WrongCommutationIsDetected) {
  int r = 3;
  auto s = SergeevElement::perm(Permutation::simple(1, r));
  auto c = SergeevElement::clifford(1, r);
  EXPECT_NE(s * c, c * s);
  EXPECT_EQ(s * c, SergeevElement::clifford(2, r) * s);
}

TEST(Sergeev, DegreeMismatchAndOverflow) {
  EXPECT_THROW(SergeevElement::one(2) * SergeevElement::one(3), DegreeMismatch);
  CheckedInt big(std::numeric_limits<long long>::max());
  EXPECT_THROW(big + CheckedInt(1), ConsistencyError);
}

TEST(Sergeev, ParityOfHomogeneousElements) {
  EXPECT_EQ(SergeevElement::clifford(1, 2).parity(), 1);
  EXPECT_EQ(SergeevElement::perm(Permutation::simple(1, 2)).parity(), 0);
  EXPECT_EQ((SergeevElement::clifford(1, 2) + SergeevElement::one(2)).parity(), -1);
}
