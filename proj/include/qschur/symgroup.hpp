#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qschur {

// packed one-line notation caps the degree
inline constexpr int kMaxDegree = 12;

namespace detail {
// entry i (0-based) holds the 0-based image, 4 bits each
inline int pget(uint64_t key, int i) { return static_cast<int>((key >> (4 * i)) & 0xF); }
inline uint64_t pset(uint64_t key, int i, int v) {
  return (key & ~(uint64_t{0xF} << (4 * i))) | (uint64_t(v) << (4 * i));
}
uint64_t identity_key(int r);
uint64_t compose_keys(uint64_t u, uint64_t v, int r);  // u o v
uint64_t inverse_key(uint64_t u, int r);
int inversions(uint64_t u, int r);
}  // namespace detail

class Permutation {
 public:
  Permutation() = default;
  static Permutation identity(int r);
  // 1-based one-line images
  static Permutation from_images(const std::vector<int>& images);
  // s_i swaps i and i+1, 1 <= i < r
  static Permutation simple(int i, int r);
  static Permutation from_key(int r, uint64_t key) { return Permutation(r, key); }

  int degree() const { return r_; }
  uint64_t key() const { return key_; }
  int operator()(int i) const { return detail::pget(key_, i - 1) + 1; }  // 1-based
  std::vector<int> images() const;
  Permutation inverse() const { return Permutation(r_, detail::inverse_key(key_, r_)); }
  int length() const { return detail::inversions(key_, r_); }
  bool is_identity() const { return key_ == detail::identity_key(r_); }
  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.r_ == b.r_ && a.key_ == b.key_; }
  friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
  // lexicographic on one-line images
  friend bool operator<(const Permutation& a, const Permutation& b);

 private:
  Permutation(int r, uint64_t key) : r_(r), key_(key) {}
  int r_ = 0;
  uint64_t key_ = 0;
};

// (u o v)(i) = u(v(i))
Permutation compose(const Permutation& u, const Permutation& v);
inline Permutation operator*(const Permutation& u, const Permutation& v) { return compose(u, v); }
// s_{i1} s_{i2} ... s_{ik}
Permutation word(const std::vector<int>& simple_indices, int r);

using Composition = std::vector<int>;

int composition_sum(const Composition& c);
// tilde[0] = 0, tilde[i] = c_1 + ... + c_i
std::vector<int> prefix_sums(const Composition& c);
// Lambda(n, r) in lexicographic order
std::vector<Composition> compositions(int n, int r);
// 1-based block index holding value v
int block_of(const Composition& c, int v);

// natural n x n matrix, 1-based accessors
struct NatMatrix {
  int n = 0;
  std::vector<int> v;
  NatMatrix() = default;
  explicit NatMatrix(int n_) : n(n_), v(size_t(n_) * n_, 0) {}
  int& operator()(int i, int j) { return v[size_t(i - 1) * n + (j - 1)]; }
  int operator()(int i, int j) const { return v[size_t(i - 1) * n + (j - 1)]; }
  int total() const;
  Composition row_sums() const;
  Composition col_sums() const;
  friend bool operator==(const NatMatrix& a, const NatMatrix& b) { return a.n == b.n && a.v == b.v; }
  friend bool operator<(const NatMatrix& a, const NatMatrix& b) {
    return a.n != b.n ? a.n < b.n : a.v < b.v;
  }
};

// all n x n natural matrices with entry sum r
std::vector<NatMatrix> nat_matrices(int n, int r);
// those with prescribed row and column sums
std::vector<NatMatrix> nat_matrices(const Composition& rows, const Composition& cols);

std::vector<Permutation> all_permutations(int r);
bool in_young_subgroup(const Permutation& w, const Composition& lambda);
std::vector<Permutation> young_subgroup_members(const Composition& lambda);
// l(s d) > l(d) for every simple s in S_nu
bool is_min_right_coset_rep(const Permutation& d, const Composition& nu);
std::vector<Permutation> min_right_coset_reps(const Composition& nu);
// the d in D_nu with w in S_nu d
Permutation coset_rep(const Permutation& w, const Composition& nu);
// precomputed projection w -> coset_rep(w, nu) on packed keys
class CosetProjector {
 public:
  CosetProjector() = default;
  explicit CosetProjector(const Composition& nu);
  uint64_t project(uint64_t w) const;
  int degree() const { return r_; }

 private:
  int r_ = 0;
  std::vector<int> block_;  // 0-based value -> block
  std::vector<int> start_;  // block -> first 0-based value
};
bool is_min_double_coset_rep(const Permutation& d, const Composition& lambda, const Composition& mu);
std::vector<Permutation> min_double_coset_reps(const Composition& lambda, const Composition& mu);

struct Triple {
  Composition lambda;
  Permutation d;
  Composition mu;
};

// m_ij = |block_i(lambda) cap d(block_j(mu))|
NatMatrix triple_to_matrix(const Composition& lambda, const Permutation& d, const Composition& mu);
// minimal representative built block by block
Triple matrix_to_triple(const NatMatrix& m);

struct SigmaTable {
  int n = 0;
  std::vector<int> sigma;   // sigma_{i,j}, 0 <= i <= n, 1 <= j <= n
  std::vector<int> atilde;  // atilde_{i,j}, same indexing
  int s(int i, int j) const { return sigma[size_t(i) * (n + 1) + j]; }
  int a(int i, int j) const { return atilde[size_t(i) * (n + 1) + j]; }
};
SigmaTable sigma_table(const NatMatrix& m);

// the product of descending s-chains w_{i,j}
Permutation d_of_matrix(const NatMatrix& m);
// word of simple reflections (left to right) realizing d_of_matrix
std::vector<int> d_of_matrix_word(const NatMatrix& m);

}  // namespace qschur
