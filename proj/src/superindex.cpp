#include "qschur/superindex.hpp"

#include <algorithm>

#include "qschur/errors.hpp"

namespace qschur {

SuperMatrix::SuperMatrix(NatMatrix e, NatMatrix o) : n(e.n), even(std::move(e)), odd(std::move(o)) {
  if (odd.n != n || even.v.size() != size_t(n) * n || odd.v.size() != size_t(n) * n)
    throw InvalidArgument("super matrix parts must be n x n");
  if (!valid()) throw InvalidArgument("invalid super matrix " + to_string());
}

bool SuperMatrix::valid() const {
  for (size_t t = 0; t < even.v.size(); ++t) {
    if (even.v[t] < 0) return false;
    if (odd.v[t] != 0 && odd.v[t] != 1) return false;
  }
  return true;
}

bool SuperMatrix::is_strict() const {
  for (int i = 1; i <= n; ++i)
    if (even(i, i) != 0) return false;
  return true;
}

NatMatrix SuperMatrix::abs() const {
  NatMatrix m(n);
  for (size_t t = 0; t < m.v.size(); ++t) m.v[t] = even.v[t] + odd.v[t];
  return m;
}

int SuperMatrix::total() const { return even.total() + odd.total(); }
int SuperMatrix::parity() const { return odd.total() % 2; }
Composition SuperMatrix::ro() const { return abs().row_sums(); }
Composition SuperMatrix::co() const { return abs().col_sums(); }

Composition SuperMatrix::nu() const {
  Composition c;
  c.reserve(size_t(n) * n);
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i) c.push_back(a(i, j));
  return c;
}

Composition SuperMatrix::even_diagonal() const {
  Composition c(n);
  for (int i = 1; i <= n; ++i) c[i - 1] = even(i, i);
  return c;
}

std::vector<int> SuperMatrix::odd_diagonal_set() const {
  std::vector<int> d;
  for (int i = 1; i <= n; ++i)
    if (odd(i, i)) d.push_back(i);
  return d;
}

SuperMatrix SuperMatrix::strict_part() const {
  SuperMatrix s = *this;
  for (int i = 1; i <= n; ++i) s.even(i, i) = 0;
  return s;
}

SuperMatrix SuperMatrix::plus_diagonal(const Composition& lambda) const {
  if (static_cast<int>(lambda.size()) != n) throw InvalidArgument("diagonal length mismatch");
  SuperMatrix s = *this;
  for (int i = 1; i <= n; ++i) s.even(i, i) += lambda[i - 1];
  return s;
}

std::string SuperMatrix::to_string() const {
  auto rows = [&](const NatMatrix& m) {
    std::string s = "[";
    for (int i = 1; i <= n; ++i) {
      s += i > 1 ? ",[" : "[";
      for (int j = 1; j <= n; ++j) s += (j > 1 ? "," : "") + std::to_string(m(i, j));
      s += "]";
    }
    return s + "]";
  };
  return "(" + rows(even) + "|" + rows(odd) + ")";
}

NatMatrix unit_matrix(int n, int i, int j) {
  NatMatrix m(n);
  m(i, j) = 1;
  return m;
}

SuperMatrix diag_super(const Composition& lambda) {
  return SuperMatrix(static_cast<int>(lambda.size())).plus_diagonal(lambda);
}

int mtilde(const NatMatrix& m, int h, int k) {
  int s = 0;
  for (int j = 1; j < k; ++j)
    for (int i = 1; i <= m.n; ++i) s += m(i, j);
  for (int i = 1; i <= h; ++i) s += m(i, k);
  return s;
}

std::optional<SuperMatrix> shifted(const SuperMatrix& a, std::initializer_list<Shift> shifts) {
  SuperMatrix s = a;
  for (const auto& sh : shifts) {
    if (sh.i < 1 || sh.i > a.n || sh.j < 1 || sh.j > a.n) return std::nullopt;
    if (sh.part == Part::Even)
      s.even(sh.i, sh.j) += sh.delta;
    else
      s.odd(sh.i, sh.j) += sh.delta;
  }
  if (!s.valid()) return std::nullopt;
  return s;
}

std::optional<SuperMatrix> shift_plus(const SuperMatrix& a, int h, int k, Part part) {
  return shifted(a, {{part, h, k, 1}, {part, h + 1, k, -1}});
}

std::optional<SuperMatrix> shift_minus(const SuperMatrix& a, int h, int k, Part part) {
  return shifted(a, {{part, h, k, -1}, {part, h + 1, k, 1}});
}

static void odd_splits(const NatMatrix& m, std::vector<SuperMatrix>& out) {
  std::vector<int> nz;
  for (size_t t = 0; t < m.v.size(); ++t)
    if (m.v[t] > 0) nz.push_back(static_cast<int>(t));
  for (uint32_t s = 0; s < (1u << nz.size()); ++s) {
    SuperMatrix x(m.n);
    x.even = m;
    for (size_t b = 0; b < nz.size(); ++b)
      if (s >> b & 1u) {
        x.even.v[nz[b]] -= 1;
        x.odd.v[nz[b]] = 1;
      }
    out.push_back(std::move(x));
  }
}

std::vector<SuperMatrix> super_matrices(int n, int r) {
  std::vector<SuperMatrix> out;
  for (const auto& m : nat_matrices(n, r)) odd_splits(m, out);
  std::sort(out.begin(), out.end());
  return out;
}

size_t count_super_matrices(int n, int r) { return super_matrices(n, r).size(); }

std::vector<SuperMatrix> strict_super_matrices(int n, int s) {
  std::vector<SuperMatrix> out;
  for (const auto& x : super_matrices(n, s))
    if (x.is_strict()) out.push_back(x);
  return out;
}

bool preceq_nat(const NatMatrix& b, const NatMatrix& a) {
  int n = a.n;
  for (int s = 1; s <= n; ++s)
    for (int t = 1; t <= n; ++t) {
      if (s == t) continue;
      int sa = 0, sb = 0;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          bool in = s < t ? (i <= s && j >= t) : (i >= s && j <= t);
          if (in) {
            sa += a(i, j);
            sb += b(i, j);
          }
        }
      if (sb > sa) return false;
    }
  return true;
}

OrderRelation preceq(const SuperMatrix& b, const SuperMatrix& a) {
  if (a.n != b.n) throw InvalidArgument("preceq: size mismatch");
  bool le = preceq_nat(b.abs(), a.abs()), ge = preceq_nat(a.abs(), b.abs());
  if (le && ge) return OrderRelation::EqualClass;
  if (le) return OrderRelation::Less;
  if (ge) return OrderRelation::Greater;
  return OrderRelation::Incomparable;
}

static NatMatrix off_diagonal(NatMatrix m) {
  for (int i = 1; i <= m.n; ++i) m(i, i) = 0;
  return m;
}

bool strict_prec(const SuperMatrix& b, const SuperMatrix& a) {
  if (a.n != b.n) throw InvalidArgument("strict_prec: size mismatch");
  NatMatrix ab = a.abs(), bb = b.abs();
  bool same_off = off_diagonal(ab) == off_diagonal(bb);
  if (!same_off && preceq_nat(bb, ab)) return true;
  if (same_off) {
    auto da = a.odd_diagonal_set(), db = b.odd_diagonal_set();
    bool subset = std::includes(da.begin(), da.end(), db.begin(), db.end());
    return subset && da.size() > db.size();
  }
  return false;
}

bool position_le(const Position& p, const Position& q) {
  if (p.cls() != q.cls()) return p.cls() < q.cls();
  switch (p.cls()) {
    case 1:
      return p.j > q.j || (p.j == q.j && p.i >= q.i);
    case 0:
      return p.i <= q.i;
    default:
      return p.j < q.j || (p.j == q.j && p.i <= q.i);
  }
}

std::vector<Position> positions_in_order(int n) {
  std::vector<Position> ps;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) ps.push_back({i, j});
  std::sort(ps.begin(), ps.end(), [](const Position& p, const Position& q) { return position_le(p, q) && !(p == q); });
  return ps;
}

}  // namespace qschur
