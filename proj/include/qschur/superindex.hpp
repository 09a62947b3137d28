#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qschur/symgroup.hpp"

namespace qschur {

// (A0|A1): A0 natural, A1 with entries in {0,1}
struct SuperMatrix {
  int n = 0;
  NatMatrix even;
  NatMatrix odd;

  SuperMatrix() = default;
  explicit SuperMatrix(int n_) : n(n_), even(n_), odd(n_) {}
  // throws InvalidArgument unless both are n x n and the pair is valid
  SuperMatrix(NatMatrix e, NatMatrix o);

  int e(int i, int j) const { return even(i, j); }
  int o(int i, int j) const { return odd(i, j); }
  int a(int i, int j) const { return even(i, j) + odd(i, j); }

  bool valid() const;
  bool is_strict() const;  // zero even diagonal
  NatMatrix abs() const;   // A0 + A1
  int total() const;
  int parity() const;  // number of odd entries mod 2
  Composition ro() const;
  Composition co() const;
  Composition nu() const;  // column-major listing of |M|
  Composition even_diagonal() const;
  std::vector<int> odd_diagonal_set() const;  // the set D(A), 1-based
  SuperMatrix strict_part() const;            // even diagonal cleared
  SuperMatrix plus_diagonal(const Composition& lambda) const;
  std::string to_string() const;

  friend bool operator==(const SuperMatrix& x, const SuperMatrix& y) {
    return x.n == y.n && x.even == y.even && x.odd == y.odd;
  }
  friend bool operator!=(const SuperMatrix& x, const SuperMatrix& y) { return !(x == y); }
  // row-major lexicographic on (even, odd)
  friend bool operator<(const SuperMatrix& x, const SuperMatrix& y) {
    if (x.n != y.n) return x.n < y.n;
    if (x.even.v != y.even.v) return x.even.v < y.even.v;
    return x.odd.v < y.odd.v;
  }
};

NatMatrix unit_matrix(int n, int i, int j);
SuperMatrix diag_super(const Composition& lambda);

// m~_{h,k}: entries in earlier columns plus rows 1..h of column k
int mtilde(const NatMatrix& m, int h, int k);

enum class Part { Even, Odd };

struct Shift {
  Part part;
  int i, j;
  int delta;
};

// nullopt when the result leaves M(N|Z2): a negative even entry or an odd entry outside {0,1}
std::optional<SuperMatrix> shifted(const SuperMatrix& a, std::initializer_list<Shift> shifts);
std::optional<SuperMatrix> shift_plus(const SuperMatrix& a, int h, int k, Part part);   // +E_hk - E_{h+1,k}
std::optional<SuperMatrix> shift_minus(const SuperMatrix& a, int h, int k, Part part);  // -E_hk + E_{h+1,k}

// M(n, r): all super matrices with |M| = r, sorted canonically
std::vector<SuperMatrix> super_matrices(int n, int r);
// strict super matrices with |A| = s
std::vector<SuperMatrix> strict_super_matrices(int n, int s);
size_t count_super_matrices(int n, int r);

// corner-sum preorder on natural matrices: B <= A
bool preceq_nat(const NatMatrix& b, const NatMatrix& a);

enum class OrderRelation { Less, EqualClass, Greater, Incomparable };
// compares |B| with |A|
OrderRelation preceq(const SuperMatrix& b, const SuperMatrix& a);
// (a) |B| < |A| with different off-diagonal parts, or (b) equal off-diagonal parts and D(B) a proper subset of D(A)
bool strict_prec(const SuperMatrix& b, const SuperMatrix& a);

struct Position {
  int i = 0, j = 0;
  // -1 below the diagonal, 0 on it, +1 above
  int cls() const { return i > j ? -1 : (i == j ? 0 : 1); }
  friend bool operator==(const Position& p, const Position& q) { return p.i == q.i && p.j == q.j; }
};

bool position_le(const Position& p, const Position& q);
// the full chain of [1,n] x [1,n] in increasing order
std::vector<Position> positions_in_order(int n);

}  // namespace qschur
