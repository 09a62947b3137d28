#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qschur/qschur.hpp"

namespace qschur {

// A(j): A strict (zero even diagonal), j in N^n
struct ASpec {
  SuperMatrix a;
  std::vector<int> j;

  ASpec() = default;
  ASpec(SuperMatrix a_, std::vector<int> j_);  // validates
  std::string to_string() const;
  friend bool operator==(const ASpec& x, const ASpec& y) { return x.a == y.a && x.j == y.j; }
  friend bool operator<(const ASpec& x, const ASpec& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.j < y.j;
  }
};

// finite linear combination of families A(j)
using AComb = std::map<ASpec, GaussianRational>;
void add_term(AComb& c, const ASpec& s, const GaussianRational& v);
AComb operator+(AComb a, const AComb& b);
AComb scaled(const AComb& a, const GaussianRational& s);
std::string to_string(const AComb& c);

// lambda^j with 0^0 = 1
mpq_class lambda_power(const Composition& lambda, const std::vector<int>& j);

// sum over lambda in Lambda(n, r - |A|) of lambda^j phi_{A + diag(lambda)}; zero when |A| > r
QElement a_jr(const SuperMatrix& a, const std::vector<int>& j, int r);
QElement a_jr(const ASpec& s, int r);
QElement evaluate(const AComb& c, int n, int r);

// left factors of the closed multiplication formulas
enum class GenTag { H, HBar, E, EBar, F, FBar };
const char* gen_tag_name(GenTag g);
std::optional<GenTag> parse_gen_tag(const std::string& s);
inline constexpr GenTag kAllGenTags[] = {GenTag::H, GenTag::HBar, GenTag::E, GenTag::EBar, GenTag::F, GenTag::FBar};
// O(e_h), (O|E_hh)(0), (E_{h,h+1}|O)(0), (O|E_{h,h+1})(0), (E_{h+1,h}|O)(0), (O|E_{h+1,h})(0); no eps factor
ASpec gen_spec(GenTag g, int h, int n);
std::vector<int> gen_indices(GenTag g, int n);

// g(0) * x(j) as a combination of families; the coefficients do not depend on r
AComb gen_mul(GenTag g, int h, const ASpec& x);
AComb gen_mul(GenTag g, int h, const AComb& x);

// the family restricted to degrees 0..R
class TruncatedFamily {
 public:
  TruncatedFamily() = default;
  TruncatedFamily(int n, int R);

  static TruncatedFamily identity(int n, int R);
  static TruncatedFamily of(const ASpec& s, int R);
  static TruncatedFamily of(const AComb& c, int n, int R);

  int n() const { return n_; }
  int R() const { return R_; }
  const QElement& level(int r) const { return comp_.at(r); }
  QElement& level(int r) { return comp_.at(r); }
  bool is_zero() const;
  int parity() const;

  TruncatedFamily& operator+=(const TruncatedFamily& o);
  TruncatedFamily& operator-=(const TruncatedFamily& o);
  friend TruncatedFamily operator+(TruncatedFamily a, const TruncatedFamily& b) { return a += b; }
  friend TruncatedFamily operator-(TruncatedFamily a, const TruncatedFamily& b) { return a -= b; }
  TruncatedFamily scaled(const GaussianRational& s) const;
  // degreewise product
  friend TruncatedFamily operator*(const TruncatedFamily& a, const TruncatedFamily& b);
  friend bool operator==(const TruncatedFamily& a, const TruncatedFamily& b) {
    return a.n_ == b.n_ && a.R_ == b.R_ && a.comp_ == b.comp_;
  }

 private:
  void check(const TruncatedFamily& o) const;
  int n_ = 0, R_ = -1;
  std::vector<QElement> comp_;
};

// xy - (-1)^{p(x)p(y)} yx
TruncatedFamily super_bracket(const TruncatedFamily& x, const TruncatedFamily& y);

// rewrite a truncated family in the families A(B, j) by an exact solve per strict part B;
// polynomials in lambda of degree <= R - |B| are recovered exactly
AComb reexpress(const TruncatedFamily& f);

// ---- generators and words

enum class LetterKind { One, H, HBar, E, EBar, F, FBar };  // One = 1_lambda (lambda fixes the degree)
struct Letter {
  LetterKind kind;
  int i = 0;
  Composition lambda;
  int parity() const;
  std::string to_string() const;
  friend bool operator<(const Letter& x, const Letter& y) {
    if (x.kind != y.kind) return x.kind < y.kind;
    if (x.i != y.i) return x.i < y.i;
    return x.lambda < y.lambda;
  }
  friend bool operator==(const Letter& x, const Letter& y) {
    return x.kind == y.kind && x.i == y.i && x.lambda == y.lambda;
  }
};

// degree-r component, eps factors included: H_i, eps A(O|E_ii), A(E_{j,j+1}|O), ...
QElement letter_level(const Letter& l, int n, int r);
TruncatedFamily letter_family(const Letter& l, int n, int R);
// named families H1.., Hbar1.., E1.., Ebar1.., F1.., Fbar1..
std::map<std::string, TruncatedFamily> generators(int n, int R);

using Word = std::vector<Letter>;
// noncommutative polynomial in letters
class WordPoly {
 public:
  WordPoly() = default;
  static WordPoly letter(const Letter& l);
  static WordPoly scalar(const GaussianRational& c);  // c times the empty word
  const std::map<Word, GaussianRational>& terms() const { return terms_; }
  int parity() const;  // -1 if inhomogeneous, 0 for zero
  WordPoly& operator+=(const WordPoly& o);
  WordPoly& operator-=(const WordPoly& o);
  friend WordPoly operator+(WordPoly a, const WordPoly& b) { return a += b; }
  friend WordPoly operator-(WordPoly a, const WordPoly& b) { return a -= b; }
  WordPoly scaled(const GaussianRational& s) const;
  friend WordPoly operator*(const WordPoly& a, const WordPoly& b);

 private:
  std::map<Word, GaussianRational> terms_;
};
WordPoly bracket(const WordPoly& x, const WordPoly& y);

QElement evaluate(const WordPoly& p, int n, int r);
TruncatedFamily evaluate_family(const WordPoly& p, int n, int R);

// ---- relation suites

enum class RelationSuite { QR, QS };

struct RelationInstance {
  std::string group;  // QR1 .. QS6
  std::string label;
  int level = -1;     // fixed degree (relations mentioning 1_lambda), -1 for every degree
  WordPoly lhs, rhs;
};
std::vector<RelationInstance> relation_instances(RelationSuite s, int n, int R);

struct RelationReport {
  std::string suite;
  int n = 0, R = 0;
  size_t instances = 0;
  size_t checks = 0;  // instance x degree evaluations
  std::map<std::string, size_t> per_group;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};
RelationReport check_relations(RelationSuite s, int n, int R);

// ---- basis, triangular products, PBW images

struct BasisRank {
  size_t size = 0, rank = 0, dim = 0;
};
BasisRank blm_basis_rank(int n, int r);

struct TriangularResult {
  SuperMatrix a;
  int R = 0;
  int leading_sign = 0;        // +1, -1, or 0 when the coefficient of A(A,0) is not +-1
  AComb symbolic;              // through the closed formulas
  AComb expansion;             // re-expressed from the degreewise product
  bool degreewise_match = false;  // symbolic evaluated at each r <= R equals the degreewise product
  bool expansion_match = false;   // expansion == symbolic
  std::vector<std::string> violations;  // terms that are not strictly below A
  bool ok() const { return leading_sign != 0 && violations.empty() && degreewise_match; }
};
// the ordered generator product of the triangular formula
std::vector<std::pair<Letter, int>> triangular_factors(const SuperMatrix& a);  // (letter, power) left to right
TriangularResult triangular_product(const SuperMatrix& a, int R);

// PBW monomial u^A as a word
Word pbw_word(const SuperMatrix& a);
struct PiReport {
  RelationReport qs;
  size_t count = 0, rank = 0;
  bool ok() const { return qs.ok() && rank == count; }
};
// QS suite on the images plus the rank of the images of u^A for |A| <= amax
PiReport pi_images_check(int n, int R, int amax);

}  // namespace qschur
