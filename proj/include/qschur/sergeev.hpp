#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qschur/errors.hpp"
#include "qschur/scalar.hpp"
#include "qschur/superindex.hpp"
#include "qschur/symgroup.hpp"

namespace qschur {

// 64-bit integer coefficient that throws instead of wrapping
struct CheckedInt {
  long long v = 0;
  CheckedInt() = default;
  CheckedInt(long long x) : v(x) {}  // NOLINT
  bool is_zero() const { return v == 0; }
  CheckedInt& operator+=(CheckedInt o) {
    if (__builtin_add_overflow(v, o.v, &v)) throw ConsistencyError("integer overflow");
    return *this;
  }
  CheckedInt& operator-=(CheckedInt o) {
    if (__builtin_sub_overflow(v, o.v, &v)) throw ConsistencyError("integer overflow");
    return *this;
  }
  CheckedInt& operator*=(CheckedInt o) {
    if (__builtin_mul_overflow(v, o.v, &v)) throw ConsistencyError("integer overflow");
    return *this;
  }
  friend CheckedInt operator+(CheckedInt a, CheckedInt b) { return a += b; }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) { return a -= b; }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) { return a *= b; }
  CheckedInt operator-() const { return CheckedInt(0) - *this; }
  friend bool operator==(CheckedInt a, CheckedInt b) { return a.v == b.v; }
  friend bool operator!=(CheckedInt a, CheckedInt b) { return a.v != b.v; }
};

inline GaussianRational to_gaussian(CheckedInt c) { return GaussianRational(c.v); }
inline GaussianRational to_gaussian(const GaussianRational& c) { return c; }

// bit i of a mask is the generator c_{i+1}
using CliffordMask = uint32_t;

namespace detail {
inline constexpr int kMaskShift = 48;
inline uint64_t mono_key(uint64_t perm, CliffordMask mask) { return perm | (uint64_t(mask) << kMaskShift); }
inline uint64_t mono_perm(uint64_t key) { return key & ((uint64_t{1} << kMaskShift) - 1); }
inline CliffordMask mono_mask(uint64_t key) { return static_cast<CliffordMask>(key >> kMaskShift); }

// sign of c^a c^b = sign * c^(a xor b), both in increasing normal form
inline int clifford_sign(CliffordMask a, CliffordMask b) {
  int swaps = 0;
  for (CliffordMask bb = b; bb; bb &= bb - 1) {
    int j = std::countr_zero(bb);
    swaps += std::popcount(a >> (j + 1));
  }
  swaps += std::popcount(a & b);
  return (swaps & 1) ? -1 : 1;
}

// v^{-1} c^alpha v = sign * c^{alpha'}; vinv is the packed inverse of v
inline int conjugate_mask(CliffordMask alpha, uint64_t vinv, CliffordMask* out) {
  int seq[kMaxDegree];
  int len = 0;
  CliffordMask m = 0;
  for (CliffordMask a = alpha; a; a &= a - 1) {
    int i = std::countr_zero(a);
    int t = pget(vinv, i);
    seq[len++] = t;
    m |= CliffordMask{1} << t;
  }
  int inv = 0;
  for (int x = 0; x < len; ++x)
    for (int y = x + 1; y < len; ++y) inv += seq[x] > seq[y];
  *out = m;
  return (inv & 1) ? -1 : 1;
}

// (u, alpha)(v, beta) = sign * (u o v, gamma)
inline int mono_mul(uint64_t a, uint64_t b, uint64_t binv_perm, int r, uint64_t* out) {
  uint64_t w = compose_keys(mono_perm(a), mono_perm(b), r);
  CliffordMask ap;
  int sign = conjugate_mask(mono_mask(a), binv_perm, &ap);
  CliffordMask beta = mono_mask(b);
  sign *= clifford_sign(ap, beta);
  *out = mono_key(w, ap ^ beta);
  return sign;
}
}  // namespace detail

// sort a word of Clifford generators (1-based) into normal form
std::pair<int, CliffordMask> clifford_normalize(const std::vector<int>& factors, int r);

template <class C>
class BasicSergeevElement {
 public:
  using Coeff = C;
  using Map = std::unordered_map<uint64_t, C>;

  BasicSergeevElement() = default;
  explicit BasicSergeevElement(int r) : r_(r) {}

  static BasicSergeevElement one(int r) { return monomial(Permutation::identity(r), 0); }
  static BasicSergeevElement monomial(const Permutation& w, CliffordMask mask, C c = C(1)) {
    BasicSergeevElement e(w.degree());
    if (w.degree() < 32 && (mask >> w.degree()) != 0) throw InvalidArgument("mask exceeds degree");
    e.add_term(detail::mono_key(w.key(), mask), c);
    return e;
  }
  static BasicSergeevElement perm(const Permutation& w) { return monomial(w, 0); }
  // c_i
  static BasicSergeevElement clifford(int i, int r) {
    if (i < 1 || i > r) throw InvalidArgument("clifford index out of range");
    return monomial(Permutation::identity(r), CliffordMask{1} << (i - 1));
  }

  int degree() const { return r_; }
  const Map& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(uint64_t key, const C& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(key, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  C coeff(const Permutation& w, CliffordMask mask) const {
    auto it = terms_.find(detail::mono_key(w.key(), mask));
    return it == terms_.end() ? C(0) : it->second;
  }

  // canonical order: permutation images lexicographic, then mask
  std::vector<std::tuple<Permutation, CliffordMask, C>> sorted_terms() const {
    std::vector<std::tuple<Permutation, CliffordMask, C>> out;
    out.reserve(terms_.size());
    for (const auto& [k, c] : terms_)
      out.emplace_back(Permutation::from_key(r_, detail::mono_perm(k)), detail::mono_mask(k), c);
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
      if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) < std::get<0>(y);
      return std::get<1>(x) < std::get<1>(y);
    });
    return out;
  }

  // 0 or 1 when homogeneous (zero counts as even), -1 otherwise
  int parity() const {
    int p = -2;
    for (const auto& [k, c] : terms_) {
      int q = std::popcount(detail::mono_mask(k)) & 1;
      if (p == -2) p = q;
      else if (p != q) return -1;
    }
    return p == -2 ? 0 : p;
  }

  BasicSergeevElement& operator+=(const BasicSergeevElement& o) {
    check(o);
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  BasicSergeevElement& operator-=(const BasicSergeevElement& o) {
    check(o);
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  friend BasicSergeevElement operator+(BasicSergeevElement a, const BasicSergeevElement& b) { return a += b; }
  friend BasicSergeevElement operator-(BasicSergeevElement a, const BasicSergeevElement& b) { return a -= b; }
  BasicSergeevElement operator-() const { return scaled(C(-1)); }

  BasicSergeevElement scaled(const C& s) const {
    BasicSergeevElement e(r_);
    if (s.is_zero()) return e;
    for (const auto& [k, c] : terms_) e.terms_.emplace(k, c * s);
    return e;
  }
  friend BasicSergeevElement operator*(const C& s, const BasicSergeevElement& a) { return a.scaled(s); }

  friend BasicSergeevElement operator*(const BasicSergeevElement& a, const BasicSergeevElement& b) {
    a.check(b);
    BasicSergeevElement out(a.r_);
    if (a.is_zero() || b.is_zero()) return out;
    std::vector<std::pair<uint64_t, uint64_t>> binv;
    binv.reserve(b.terms_.size());
    for (const auto& [k, c] : b.terms_) binv.emplace_back(k, detail::inverse_key(detail::mono_perm(k), a.r_));
    out.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ka, ca] : a.terms_) {
      size_t idx = 0;
      for (const auto& [kb, cb] : b.terms_) {
        uint64_t key;
        int sign = detail::mono_mul(ka, kb, binv[idx++].second, a.r_, &key);
        C c = ca * cb;
        out.add_term(key, sign > 0 ? c : -c);
      }
    }
    return out;
  }
  BasicSergeevElement& operator*=(const BasicSergeevElement& o) { return *this = *this * o; }

  friend bool operator==(const BasicSergeevElement& a, const BasicSergeevElement& b) {
    return a.r_ == b.r_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const BasicSergeevElement& a, const BasicSergeevElement& b) { return !(a == b); }

  template <class D>
  BasicSergeevElement<D> convert() const {
    BasicSergeevElement<D> e(r_);
    for (const auto& [k, c] : terms_) e.add_term(k, D(to_gaussian(c)));
    return e;
  }

 private:
  void check(const BasicSergeevElement& o) const {
    if (r_ != o.r_) throw DegreeMismatch("Sergeev elements of different degree");
  }
  int r_ = 0;
  Map terms_;
};

using SergeevElement = BasicSergeevElement<GaussianRational>;
using SergeevElementZ = BasicSergeevElement<CheckedInt>;

// builders over integer coefficients; convert<GaussianRational>() for the public type
SergeevElementZ x_sum(const Composition& lambda);
SergeevElementZ y_sum(const Composition& lambda);
SergeevElementZ sum_of(const std::vector<Permutation>& perms, int r);
SergeevElementZ c_interval(int i, int j, int r);
// product over blocks with alpha_i = 1 of c_{block i}; alpha_i = 1 on an empty block throws
SergeevElementZ c_alpha_lambda(const Composition& lambda, const std::vector<int>& alpha);
// 1 + s_u + s_u s_{u+-1} + ... with `len` factors in the longest product
enum class ChainDir { Up, Down };
SergeevElementZ chain(int start, int len, ChainDir dir, int r);
// s_{i1} s_{i2} ... as an element
SergeevElementZ word_element(const std::vector<int>& idx, int r);

// d_M c_M sum_{sigma in D_{nu_M} cap S_{co M}} sigma
SergeevElementZ t_body(const SuperMatrix& m);
// x_{ro M} * t_body(M)
SergeevElementZ t_matrix(const SuperMatrix& m);

// defining relations of H^c_r for every index choice, plus associativity on all generator triples
struct SergeevRelationReport {
  int r = 0;
  size_t checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
SergeevRelationReport check_sergeev_relations(int r);

}  // namespace qschur
