#include "qschur/symgroup.hpp"

#include <algorithm>
#include <numeric>

#include "qschur/errors.hpp"

namespace qschur {

namespace detail {

uint64_t identity_key(int r) {
  uint64_t k = 0;
  for (int i = 0; i < r; ++i) k |= uint64_t(i) << (4 * i);
  return k;
}

uint64_t compose_keys(uint64_t u, uint64_t v, int r) {
  uint64_t k = 0;
  for (int i = 0; i < r; ++i) k |= uint64_t(pget(u, pget(v, i))) << (4 * i);
  return k;
}

uint64_t inverse_key(uint64_t u, int r) {
  uint64_t k = 0;
  for (int i = 0; i < r; ++i) k |= uint64_t(i) << (4 * pget(u, i));
  return k;
}

int inversions(uint64_t u, int r) {
  int c = 0;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) c += pget(u, i) > pget(u, j);
  return c;
}

}  // namespace detail

static void check_degree(int r) {
  if (r < 0 || r > kMaxDegree) throw InvalidArgument("degree out of range: " + std::to_string(r));
}

Permutation Permutation::identity(int r) {
  check_degree(r);
  return Permutation(r, detail::identity_key(r));
}

Permutation Permutation::from_images(const std::vector<int>& images) {
  int r = static_cast<int>(images.size());
  check_degree(r);
  std::vector<bool> seen(r, false);
  uint64_t k = 0;
  for (int i = 0; i < r; ++i) {
    int v = images[i];
    if (v < 1 || v > r || seen[v - 1]) throw InvalidArgument("not a permutation");
    seen[v - 1] = true;
    k |= uint64_t(v - 1) << (4 * i);
  }
  return Permutation(r, k);
}

Permutation Permutation::simple(int i, int r) {
  check_degree(r);
  if (i < 1 || i >= r) throw InvalidArgument("simple reflection index out of range");
  uint64_t k = detail::identity_key(r);
  k = detail::pset(k, i - 1, i);
  k = detail::pset(k, i, i - 1);
  return Permutation(r, k);
}

std::vector<int> Permutation::images() const {
  std::vector<int> out(r_);
  for (int i = 0; i < r_; ++i) out[i] = detail::pget(key_, i) + 1;
  return out;
}

std::string Permutation::to_string() const {
  std::string s = "[";
  for (int i = 0; i < r_; ++i) {
    if (i) s += ",";
    s += std::to_string(detail::pget(key_, i) + 1);
  }
  return s + "]";
}

bool operator<(const Permutation& a, const Permutation& b) {
  if (a.r_ != b.r_) return a.r_ < b.r_;
  for (int i = 0; i < a.r_; ++i) {
    int x = detail::pget(a.key_, i), y = detail::pget(b.key_, i);
    if (x != y) return x < y;
  }
  return false;
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.degree() != v.degree()) throw DegreeMismatch("compose: degree mismatch");
  return Permutation::from_key(u.degree(), detail::compose_keys(u.key(), v.key(), u.degree()));
}

Permutation word(const std::vector<int>& idx, int r) {
  Permutation w = Permutation::identity(r);
  for (int i : idx) w = w * Permutation::simple(i, r);
  return w;
}

int composition_sum(const Composition& c) { return std::accumulate(c.begin(), c.end(), 0); }

std::vector<int> prefix_sums(const Composition& c) {
  std::vector<int> t(c.size() + 1, 0);
  for (size_t i = 0; i < c.size(); ++i) t[i + 1] = t[i] + c[i];
  return t;
}

static void compositions_rec(int n, int r, Composition& cur, std::vector<Composition>& out) {
  if (static_cast<int>(cur.size()) == n - 1) {
    cur.push_back(r);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int a = r; a >= 0; --a) {
    cur.push_back(a);
    compositions_rec(n, r - a, cur, out);
    cur.pop_back();
  }
}

std::vector<Composition> compositions(int n, int r) {
  std::vector<Composition> out;
  if (n <= 0 || r < 0) return out;
  Composition cur;
  compositions_rec(n, r, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

int block_of(const Composition& c, int v) {
  int acc = 0;
  for (size_t i = 0; i < c.size(); ++i) {
    acc += c[i];
    if (v <= acc) return static_cast<int>(i) + 1;
  }
  throw InvalidArgument("value beyond composition");
}

int NatMatrix::total() const { return std::accumulate(v.begin(), v.end(), 0); }

Composition NatMatrix::row_sums() const {
  Composition c(n, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) c[i - 1] += (*this)(i, j);
  return c;
}

Composition NatMatrix::col_sums() const {
  Composition c(n, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) c[j - 1] += (*this)(i, j);
  return c;
}

std::vector<NatMatrix> nat_matrices(int n, int r) {
  std::vector<NatMatrix> out;
  for (const auto& c : compositions(n * n, r)) {
    NatMatrix m(n);
    m.v = c;
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<NatMatrix> nat_matrices(const Composition& rows, const Composition& cols) {
  if (rows.size() != cols.size()) throw InvalidArgument("row/column sum length mismatch");
  int n = static_cast<int>(rows.size());
  std::vector<NatMatrix> out;
  if (n == 0 || composition_sum(rows) != composition_sum(cols)) return out;
  NatMatrix m(n);
  Composition rowrem = rows, colrem = cols;
  auto rec = [&](auto& self, int cell) -> void {
    if (cell == n * n) {
      out.push_back(m);
      return;
    }
    int i = cell / n, j = cell % n;
    int lo = 0, hi = std::min(rowrem[i], colrem[j]);
    if (j == n - 1) lo = rowrem[i];  // last column closes the row
    if (i == n - 1) lo = std::max(lo, colrem[j]);
    if (j == n - 1 && rowrem[i] > hi) return;
    if (i == n - 1 && colrem[j] > hi) return;
    for (int a = lo; a <= hi; ++a) {
      if (j == n - 1 && a != rowrem[i]) continue;
      if (i == n - 1 && a != colrem[j]) continue;
      m.v[cell] = a;
      rowrem[i] -= a;
      colrem[j] -= a;
      self(self, cell + 1);
      rowrem[i] += a;
      colrem[j] += a;
    }
    m.v[cell] = 0;
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> all_permutations(int r) {
  check_degree(r);
  std::vector<int> img(r);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

bool in_young_subgroup(const Permutation& w, const Composition& lambda) {
  for (int i = 1; i <= w.degree(); ++i)
    if (block_of(lambda, i) != block_of(lambda, w(i))) return false;
  return true;
}

std::vector<Permutation> young_subgroup_members(const Composition& lambda) {
  int r = composition_sum(lambda);
  check_degree(r);
  std::vector<Permutation> out{Permutation::identity(r)};
  auto t = prefix_sums(lambda);
  for (size_t b = 0; b < lambda.size(); ++b) {
    if (lambda[b] < 2) continue;
    std::vector<int> img(lambda[b]);
    std::iota(img.begin(), img.end(), t[b] + 1);
    std::vector<Permutation> local;
    do {
      std::vector<int> full(r);
      std::iota(full.begin(), full.end(), 1);
      for (int i = 0; i < lambda[b]; ++i) full[t[b] + i] = img[i];
      local.push_back(Permutation::from_images(full));
    } while (std::next_permutation(img.begin(), img.end()));
    std::vector<Permutation> next;
    next.reserve(out.size() * local.size());
    for (const auto& a : out)
      for (const auto& c : local) next.push_back(a * c);
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_min_right_coset_rep(const Permutation& d, const Composition& nu) {
  auto t = prefix_sums(nu);
  Permutation inv = d.inverse();
  for (size_t b = 0; b < nu.size(); ++b)
    for (int k = t[b] + 1; k < t[b + 1]; ++k)
      if (inv(k) > inv(k + 1)) return false;
  return true;
}

std::vector<Permutation> min_right_coset_reps(const Composition& nu) {
  int r = composition_sum(nu);
  check_degree(r);
  // a rep is determined by the word of blocks read along positions
  std::vector<int> labels;
  for (size_t b = 0; b < nu.size(); ++b)
    for (int i = 0; i < nu[b]; ++i) labels.push_back(static_cast<int>(b));
  auto t = prefix_sums(nu);
  std::vector<Permutation> out;
  do {
    std::vector<int> next(t.begin(), t.end() - 1);
    std::vector<int> img(r);
    for (int i = 0; i < r; ++i) img[i] = ++next[labels[i]];
    out.push_back(Permutation::from_images(img));
  } while (std::next_permutation(labels.begin(), labels.end()));
  std::sort(out.begin(), out.end());
  return out;
}

CosetProjector::CosetProjector(const Composition& nu) : r_(composition_sum(nu)) {
  check_degree(r_);
  auto t = prefix_sums(nu);
  block_.resize(r_);
  start_.assign(t.begin(), t.end() - 1);
  for (size_t b = 0; b < nu.size(); ++b)
    for (int v = t[b]; v < t[b + 1]; ++v) block_[v] = static_cast<int>(b);
}

uint64_t CosetProjector::project(uint64_t w) const {
  int next[kMaxDegree + 1];
  for (size_t b = 0; b < start_.size(); ++b) next[b] = start_[b];
  uint64_t k = 0;
  for (int i = 0; i < r_; ++i) k |= uint64_t(next[block_[detail::pget(w, i)]]++) << (4 * i);
  return k;
}

Permutation coset_rep(const Permutation& w, const Composition& nu) {
  if (composition_sum(nu) != w.degree()) throw DegreeMismatch("coset_rep: degree mismatch");
  return Permutation::from_key(w.degree(), CosetProjector(nu).project(w.key()));
}

bool is_min_double_coset_rep(const Permutation& d, const Composition& lambda, const Composition& mu) {
  return is_min_right_coset_rep(d, lambda) && is_min_right_coset_rep(d.inverse(), mu);
}

std::vector<Permutation> min_double_coset_reps(const Composition& lambda, const Composition& mu) {
  if (composition_sum(lambda) != composition_sum(mu)) throw DegreeMismatch("compositions of different r");
  if (lambda.size() != mu.size()) throw InvalidArgument("compositions with different part counts");
  std::vector<Permutation> out;
  for (const auto& m : nat_matrices(lambda, mu)) out.push_back(matrix_to_triple(m).d);
  std::sort(out.begin(), out.end());
  return out;
}

NatMatrix triple_to_matrix(const Composition& lambda, const Permutation& d, const Composition& mu) {
  if (lambda.size() != mu.size()) throw InvalidArgument("compositions with different part counts");
  int r = d.degree();
  if (composition_sum(lambda) != r || composition_sum(mu) != r) throw DegreeMismatch("triple degree mismatch");
  int n = static_cast<int>(lambda.size());
  NatMatrix m(n);
  for (int p = 1; p <= r; ++p) m(block_of(lambda, d(p)), block_of(mu, p)) += 1;
  return m;
}

Triple matrix_to_triple(const NatMatrix& m) {
  int n = m.n;
  Composition lambda = m.row_sums(), mu = m.col_sums();
  int r = composition_sum(lambda);
  check_degree(r);
  // positions of mu-block j go to lambda-blocks 1..n in order; values increase per lambda-block
  std::vector<int> label;
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i)
      for (int c = 0; c < m(i, j); ++c) label.push_back(i - 1);
  auto t = prefix_sums(lambda);
  std::vector<int> next(t.begin(), t.end() - 1);
  std::vector<int> img(r);
  for (int p = 0; p < r; ++p) img[p] = ++next[label[p]];
  return Triple{lambda, Permutation::from_images(img), mu};
}

SigmaTable sigma_table(const NatMatrix& m) {
  int n = m.n;
  SigmaTable st;
  st.n = n;
  st.sigma.assign(size_t(n + 1) * (n + 1), 0);
  st.atilde.assign(size_t(n + 1) * (n + 1), 0);
  Composition col = m.col_sums();
  for (int i = 0; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      int before = 0;
      for (int k = 1; k < j; ++k) before += col[k - 1];
      int s = before, a = before;
      for (int h = 1; h <= i; ++h) {
        for (int k = j; k <= n; ++k) s += m(h, k);
        a += m(h, j);
      }
      st.sigma[size_t(i) * (n + 1) + j] = s;
      st.atilde[size_t(i) * (n + 1) + j] = a;
    }
  }
  return st;
}

std::vector<int> d_of_matrix_word(const NatMatrix& m) {
  int n = m.n;
  SigmaTable st = sigma_table(m);
  std::vector<int> w;
  for (int j = 1; j <= n - 1; ++j) {
    for (int i = 2; i <= n; ++i) {
      int a = m(i, j);
      int sg = st.s(i - 1, j), at = st.a(i - 1, j);
      if (a == 0 || sg == at) continue;
      for (int t = 0; t < a; ++t)
        for (int s = sg + t; s >= at + 1 + t; --s) w.push_back(s);
    }
  }
  return w;
}

Permutation d_of_matrix(const NatMatrix& m) { return word(d_of_matrix_word(m), m.total()); }

}  // namespace qschur
