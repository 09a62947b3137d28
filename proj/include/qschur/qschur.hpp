#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qschur/scalar.hpp"
#include "qschur/superindex.hpp"

namespace qschur {

// element of Q(n, r) in the basis phi_M
class QElement {
 public:
  using Map = std::map<SuperMatrix, GaussianRational>;

  QElement() = default;
  QElement(int n, int r) : n_(n), r_(r) {}

  // M must lie in M(n, r)
  static QElement phi(const SuperMatrix& m);
  // a shift that fell outside M(N|Z2) gives zero
  static QElement phi(const std::optional<SuperMatrix>& m, int n, int r);
  static QElement identity(int n, int r);

  int n() const { return n_; }
  int r() const { return r_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  GaussianRational coeff(const SuperMatrix& m) const;
  void add_term(const SuperMatrix& m, const GaussianRational& c);
  // 0/1 when homogeneous (zero counts as even), -1 otherwise
  int parity() const;
  std::string to_string() const;

  QElement& operator+=(const QElement& o);
  QElement& operator-=(const QElement& o);
  friend QElement operator+(QElement a, const QElement& b) { return a += b; }
  friend QElement operator-(QElement a, const QElement& b) { return a -= b; }
  QElement scaled(const GaussianRational& s) const;
  friend QElement operator*(const GaussianRational& s, const QElement& a) { return a.scaled(s); }
  friend bool operator==(const QElement& a, const QElement& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const QElement& a, const QElement& b) { return !(a == b); }

 private:
  void check(const QElement& o) const;
  int n_ = 0, r_ = 0;
  Map terms_;
};

// phi_X phi_A through composition in H^c_r and an exact decomposition in the T_M
QElement oracle_product(const SuperMatrix& x, const SuperMatrix& a);

enum class Shape { Upper0, Upper1, Diag1, Diag0, Lower0, Lower1 };
const char* shape_name(Shape s);
std::optional<Shape> parse_shape(const std::string& s);
inline constexpr Shape kAllShapes[] = {Shape::Upper0, Shape::Upper1, Shape::Diag1,
                                       Shape::Diag0,  Shape::Lower0, Shape::Lower1};

// the generator X of a shape with co(X) = lambda; nullopt when it would be invalid
std::optional<SuperMatrix> generator_matrix(Shape s, int h, const Composition& lambda);
// recognize X as a generator shape (with lambda = co(X)); h = 0 for Diag0
std::optional<std::pair<Shape, int>> detect_shape(const SuperMatrix& x);
// valid h for a shape at size n: 1..n-1 for off-diagonal shapes, 1..n for Diag1, {0} for Diag0
std::vector<int> shape_indices(Shape s, int n);

// closed-form products; X is the generator with co(X) = ro(A); InvalidArgument if X is invalid
QElement left_mul_upper0(int h, const SuperMatrix& a);
QElement left_mul_upper1(int h, const SuperMatrix& a);
QElement left_mul_diag_odd(int h, const SuperMatrix& a);
QElement left_mul_diag_even(const SuperMatrix& a);
QElement left_mul_lower0(int h, const SuperMatrix& a);
QElement left_mul_lower1(int h, const SuperMatrix& a);
QElement formula_product(Shape s, int h, const SuperMatrix& a);

enum class Engine { Formula, Oracle, Auto };
std::optional<Engine> parse_engine(const std::string& s);

// phi_X phi_A by the chosen engine; Formula throws InvalidArgument unless X is a generator shape
QElement product(const SuperMatrix& x, const SuperMatrix& a, Engine engine = Engine::Auto);
// bilinear extension
QElement general_product(const QElement& a, const QElement& b, Engine engine = Engine::Oracle);

// rank data for the T_M coordinates of one Hom block S_xi -> S_mu
struct TmRankBlock {
  Composition xi, mu;
  size_t count = 0;
  size_t rank = 0;
  bool disjoint_supports = true;  // distinct |M| never share a coordinate
};
std::vector<TmRankBlock> tm_rank_report(int n, int r);

// drop cached bodies, solvers and products
void clear_oracle_caches();

}  // namespace qschur
