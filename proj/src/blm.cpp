#include "qschur/blm.hpp"

#include <functional>
#include <mutex>

#include "qschur/errors.hpp"
#include "qschur/linalg.hpp"

namespace qschur {

// ---------------------------------------------------------------- ASpec / AComb

ASpec::ASpec(SuperMatrix a_, std::vector<int> j_) : a(std::move(a_)), j(std::move(j_)) {
  if (!a.is_strict()) throw InvalidArgument("A(j) needs a zero even diagonal: " + a.to_string());
  if (static_cast<int>(j.size()) != a.n) throw InvalidArgument("A(j): j has the wrong length");
  for (int x : j)
    if (x < 0) throw InvalidArgument("A(j): negative exponent");
}

static std::string vec_string(const std::vector<int>& v) {
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string ASpec::to_string() const { return a.to_string() + "(" + vec_string(j) + ")"; }

void add_term(AComb& c, const ASpec& s, const GaussianRational& v) {
  if (v.is_zero()) return;
  auto it = c.find(s);
  if (it == c.end()) {
    c.emplace(s, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) c.erase(it);
}

AComb operator+(AComb a, const AComb& b) {
  for (const auto& [s, v] : b) add_term(a, s, v);
  return a;
}

AComb scaled(const AComb& a, const GaussianRational& s) {
  AComb out;
  for (const auto& [k, v] : a) add_term(out, k, v * s);
  return out;
}

std::string to_string(const AComb& c) {
  if (c.empty()) return "0";
  std::string s;
  for (const auto& [k, v] : c) {
    if (!s.empty()) s += " + ";
    s += "(" + v.to_string() + ")*" + k.to_string();
  }
  return s;
}

mpq_class lambda_power(const Composition& lambda, const std::vector<int>& j) {
  mpz_class p = 1;
  for (size_t i = 0; i < j.size(); ++i) {
    if (j[i] == 0) continue;
    mpz_class t;
    mpz_pow_ui(t.get_mpz_t(), mpz_class(lambda[i]).get_mpz_t(), static_cast<unsigned long>(j[i]));
    p *= t;
  }
  return mpq_class(p);
}

QElement a_jr(const SuperMatrix& a, const std::vector<int>& j, int r) {
  ASpec s(a, j);
  return a_jr(s, r);
}

QElement a_jr(const ASpec& s, int r) {
  int n = s.a.n;
  QElement out(n, r);
  int rest = r - s.a.total();
  if (rest < 0) return out;
  for (const auto& lam : compositions(n, rest)) {
    mpq_class c = lambda_power(lam, s.j);
    if (sgn(c) != 0) out.add_term(s.a.plus_diagonal(lam), GaussianRational(c));
  }
  return out;
}

QElement evaluate(const AComb& c, int n, int r) {
  QElement out(n, r);
  for (const auto& [s, v] : c) {
    if (s.a.n != n) throw InvalidArgument("evaluate: size mismatch");
    out += a_jr(s, r).scaled(v);
  }
  return out;
}

// ---------------------------------------------------------------- closed formulas

const char* gen_tag_name(GenTag g) {
  switch (g) {
    case GenTag::H: return "h";
    case GenTag::HBar: return "hbar";
    case GenTag::E: return "e";
    case GenTag::EBar: return "ebar";
    case GenTag::F: return "f";
    case GenTag::FBar: return "fbar";
  }
  return "?";
}

std::optional<GenTag> parse_gen_tag(const std::string& s) {
  for (GenTag g : kAllGenTags)
    if (s == gen_tag_name(g)) return g;
  return std::nullopt;
}

std::vector<int> gen_indices(GenTag g, int n) {
  int top = (g == GenTag::H || g == GenTag::HBar) ? n : n - 1;
  std::vector<int> v;
  for (int i = 1; i <= top; ++i) v.push_back(i);
  return v;
}

ASpec gen_spec(GenTag g, int h, int n) {
  int top = (g == GenTag::H || g == GenTag::HBar) ? n : n - 1;
  if (h < 1 || h > top) throw InvalidArgument(std::string("generator index out of range for ") + gen_tag_name(g));
  SuperMatrix m(n);
  std::vector<int> j(n, 0);
  switch (g) {
    case GenTag::H: j[h - 1] = 1; break;
    case GenTag::HBar: m.odd(h, h) = 1; break;
    case GenTag::E: m.even(h, h + 1) = 1; break;
    case GenTag::EBar: m.odd(h, h + 1) = 1; break;
    case GenTag::F: m.even(h + 1, h) = 1; break;
    case GenTag::FBar: m.odd(h + 1, h) = 1; break;
  }
  return ASpec(m, j);
}

namespace {

long binom(int n, int k) {
  long b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

int sign_pow(int e) { return (e % 2) ? -1 : 1; }

struct Acc {
  AComb out;
  int n;
  // drops terms that leave M(N|Z2) or have a negative exponent
  void add(NatMatrix e, NatMatrix o, std::vector<int> j, long c) {
    if (c == 0) return;
    for (int x : e.v)
      if (x < 0) return;
    for (int x : o.v)
      if (x < 0 || x > 1) return;
    for (int x : j)
      if (x < 0) return;
    for (int i = 1; i <= n; ++i)
      if (e(i, i) != 0) throw ConsistencyError("closed formula produced a nonzero even diagonal");
    add_term(out, ASpec(SuperMatrix(std::move(e), std::move(o)), std::move(j)), GaussianRational(c));
  }
};

NatMatrix bump(NatMatrix m, int i, int j, int d) {
  m(i, j) += d;
  return m;
}
NatMatrix bump2(NatMatrix m, int i, int j, int d, int i2, int j2, int d2) {
  m(i, j) += d;
  m(i2, j2) += d2;
  return m;
}
std::vector<int> jshift(std::vector<int> j, int h, int d) {
  j[h - 1] += d;
  return j;
}

}  // namespace

AComb gen_mul(GenTag g, int h, const ASpec& x) {
  const int n = x.a.n;
  gen_spec(g, h, n);  // range check
  const NatMatrix& e = x.a.even;
  const NatMatrix& o = x.a.odd;
  const std::vector<int>& j = x.j;
  auto mt = [&](int a, int b) { return sign_pow(mtilde(o, a, b)); };
  auto ab = [&](int a, int b) { return e(a, b) + o(a, b); };
  Acc acc{{}, n};

  switch (g) {
    case GenTag::H: {
      acc.add(e, o, jshift(j, h, 1), 1);
      long s = 0;
      for (int k = 1; k <= n; ++k) s += ab(h, k);
      acc.add(e, o, j, s);
      break;
    }
    case GenTag::HBar: {
      for (int k = 1; k <= n; ++k) {
        if (k == h) continue;
        if (o(h, k) == 0)
          acc.add(bump(e, h, k, -1), bump(o, h, k, 1), j, mt(h, k));
        else
          acc.add(bump(e, h, k, 1), bump(o, h, k, -1), j, mt(h, k) * ab(h, k));
      }
      int jh = j[h - 1];
      for (int k = 0; k <= jh; ++k) {
        acc.add(e, bump(o, h, h, 1), jshift(j, h, -k), mt(h, h) * binom(jh, k));
        acc.add(e, bump(o, h, h, -1), jshift(j, h, 1 - k), mt(h, h) * binom(jh, k) * sign_pow(k));
      }
      break;
    }
    case GenTag::E: {
      for (int k = 1; k <= n; ++k)
        if (k != h && k != h + 1) acc.add(bump2(e, h, k, 1, h + 1, k, -1), o, j, e(h, k) + 1);
      int jh = j[h - 1], jh1 = j[h];
      for (int k = 0; k <= jh; ++k)
        acc.add(bump(e, h + 1, h, -1), o, jshift(j, h, 1 - k), binom(jh, k) * sign_pow(k));
      for (int k = 0; k <= jh1; ++k)
        acc.add(bump(e, h, h + 1, 1), o, jshift(j, h + 1, -k), (e(h, h + 1) + 1) * binom(jh1, k));
      for (int k = 1; k <= n; ++k) acc.add(e, bump2(o, h, k, 1, h + 1, k, -1), j, 1);
      break;
    }
    case GenTag::EBar: {
      for (int k = 1; k <= n; ++k)
        if (k != h) acc.add(bump(e, h, k, 1), bump(o, h + 1, k, -1), j, mt(h + 1, k) * (e(h, k) + 1));
      int jh = j[h - 1], jh1 = j[h];
      for (int k = 0; k <= jh; ++k)
        acc.add(e, bump(o, h + 1, h, -1), jshift(j, h, 1 - k), mt(h + 1, h) * binom(jh, k) * sign_pow(k));
      for (int k = 1; k <= n; ++k)
        if (k != h + 1) acc.add(bump(e, h + 1, k, -1), bump(o, h, k, 1), j, mt(h, k));
      for (int k = 0; k <= jh1; ++k)
        acc.add(e, bump(o, h, h + 1, 1), jshift(j, h + 1, -k), mt(h, h + 1) * binom(jh1, k));
      break;
    }
    case GenTag::F: {
      for (int k = 1; k <= n; ++k)
        if (k != h && k != h + 1) acc.add(bump2(e, h, k, -1, h + 1, k, 1), o, j, e(h + 1, k) + 1);
      int jh = j[h - 1], jh1 = j[h];
      for (int k = 0; k <= jh; ++k)
        acc.add(bump(e, h + 1, h, 1), o, jshift(j, h, -k), (e(h + 1, h) + 1) * binom(jh, k));
      for (int k = 0; k <= jh1; ++k)
        acc.add(bump(e, h, h + 1, -1), o, jshift(j, h + 1, 1 - k), binom(jh1, k) * sign_pow(k));
      for (int k = 1; k <= n; ++k) acc.add(e, bump2(o, h, k, -1, h + 1, k, 1), j, 1);
      break;
    }
    case GenTag::FBar: {
      for (int k = 1; k <= n; ++k)
        if (k != h + 1) acc.add(bump(e, h + 1, k, 1), bump(o, h, k, -1), j, mt(h, k) * (e(h + 1, k) + 1));
      int jh = j[h - 1], jh1 = j[h];
      for (int k = 0; k <= jh1; ++k)
        acc.add(e, bump(o, h, h + 1, -1), jshift(j, h + 1, 1 - k), mt(h, h + 1) * binom(jh1, k) * sign_pow(k));
      for (int k = 1; k <= n; ++k)
        if (k != h) acc.add(bump(e, h, k, -1), bump(o, h + 1, k, 1), j, mt(h, k));
      for (int k = 0; k <= jh; ++k)
        acc.add(e, bump(o, h + 1, h, 1), jshift(j, h, -k), mt(h, h) * binom(jh, k));
      break;
    }
  }
  return acc.out;
}

AComb gen_mul(GenTag g, int h, const AComb& x) {
  AComb out;
  for (const auto& [s, v] : x)
    for (const auto& [t, w] : gen_mul(g, h, s)) add_term(out, t, w * v);
  return out;
}

// ---------------------------------------------------------------- truncated families

TruncatedFamily::TruncatedFamily(int n, int R) : n_(n), R_(R) {
  if (n < 1 || R < 0) throw InvalidArgument("truncated family needs n >= 1 and R >= 0");
  for (int r = 0; r <= R; ++r) comp_.emplace_back(n, r);
}

TruncatedFamily TruncatedFamily::identity(int n, int R) {
  TruncatedFamily f(n, R);
  for (int r = 0; r <= R; ++r) f.comp_[r] = QElement::identity(n, r);
  return f;
}

TruncatedFamily TruncatedFamily::of(const ASpec& s, int R) {
  TruncatedFamily f(s.a.n, R);
  for (int r = 0; r <= R; ++r) f.comp_[r] = a_jr(s, r);
  return f;
}

TruncatedFamily TruncatedFamily::of(const AComb& c, int n, int R) {
  TruncatedFamily f(n, R);
  for (int r = 0; r <= R; ++r) f.comp_[r] = evaluate(c, n, r);
  return f;
}

bool TruncatedFamily::is_zero() const {
  for (const auto& q : comp_)
    if (!q.is_zero()) return false;
  return true;
}

int TruncatedFamily::parity() const {
  int p = 0;
  for (const auto& q : comp_) {
    int x = q.parity();
    if (x < 0) return -1;
    if (q.is_zero()) continue;
    if (p == 0 && x == 1) p = 1;
    else if (p != x) return -1;
  }
  return p;
}

void TruncatedFamily::check(const TruncatedFamily& o) const {
  if (n_ != o.n_ || R_ != o.R_) throw DegreeMismatch("truncated families of different shape");
}

TruncatedFamily& TruncatedFamily::operator+=(const TruncatedFamily& o) {
  check(o);
  for (int r = 0; r <= R_; ++r) comp_[r] += o.comp_[r];
  return *this;
}

TruncatedFamily& TruncatedFamily::operator-=(const TruncatedFamily& o) {
  check(o);
  for (int r = 0; r <= R_; ++r) comp_[r] -= o.comp_[r];
  return *this;
}

TruncatedFamily TruncatedFamily::scaled(const GaussianRational& s) const {
  TruncatedFamily f = *this;
  for (auto& q : f.comp_) q = q.scaled(s);
  return f;
}

TruncatedFamily operator*(const TruncatedFamily& a, const TruncatedFamily& b) {
  a.check(b);
  TruncatedFamily f(a.n_, a.R_);
  for (int r = 0; r <= a.R_; ++r) f.comp_[r] = general_product(a.comp_[r], b.comp_[r], Engine::Auto);
  return f;
}

TruncatedFamily super_bracket(const TruncatedFamily& x, const TruncatedFamily& y) {
  int p = x.parity(), q = y.parity();
  if (p < 0 || q < 0) throw InvalidArgument("super bracket of inhomogeneous elements");
  TruncatedFamily xy = x * y, yx = y * x;
  return (p && q) ? xy + yx : xy - yx;
}

namespace {

std::vector<Composition> weak_upto(int n, int s) {
  std::vector<Composition> out;
  for (int t = 0; t <= s; ++t)
    for (auto& c : compositions(n, t)) out.push_back(std::move(c));
  return out;
}

// inverse of (lambda^j) over lambda, j in {|.| <= s}
const DenseMatrix<mpq_class>& vandermonde_inverse(int n, int s) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, DenseMatrix<mpq_class>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, s);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto pts = weak_upto(n, s);
  DenseMatrix<mpq_class> m(pts.size(), pts.size());
  for (size_t a = 0; a < pts.size(); ++a)
    for (size_t b = 0; b < pts.size(); ++b) m(a, b) = lambda_power(pts[a], pts[b]);
  auto inv = inverse(m);
  if (!inv) throw ConsistencyError("lambda^j interpolation matrix is singular");
  return cache.emplace(key, std::move(*inv)).first->second;
}

}  // namespace

AComb reexpress(const TruncatedFamily& f) {
  const int n = f.n(), R = f.R();
  std::map<SuperMatrix, std::map<Composition, GaussianRational>> blocks;
  for (int r = 0; r <= R; ++r)
    for (const auto& [m, c] : f.level(r).terms()) blocks[m.strict_part()][m.even_diagonal()] = c;
  AComb out;
  for (const auto& [b, vals] : blocks) {
    int s = R - b.total();
    auto pts = weak_upto(n, s);
    const auto& inv = vandermonde_inverse(n, s);
    std::vector<GaussianRational> rhs(pts.size());
    for (size_t a = 0; a < pts.size(); ++a) {
      auto it = vals.find(pts[a]);
      if (it != vals.end()) rhs[a] = it->second;
    }
    for (size_t jj = 0; jj < pts.size(); ++jj) {
      GaussianRational g;
      for (size_t a = 0; a < pts.size(); ++a)
        if (sgn(inv(jj, a)) != 0 && !rhs[a].is_zero()) g += GaussianRational(inv(jj, a)) * rhs[a];
      add_term(out, ASpec(b, pts[jj]), g);
    }
  }
  return out;
}

// ---------------------------------------------------------------- letters and words

int Letter::parity() const {
  return (kind == LetterKind::HBar || kind == LetterKind::EBar || kind == LetterKind::FBar) ? 1 : 0;
}

std::string Letter::to_string() const {
  switch (kind) {
    case LetterKind::One: return "1_" + vec_string(lambda);
    case LetterKind::H: return "h" + std::to_string(i);
    case LetterKind::HBar: return "hbar" + std::to_string(i);
    case LetterKind::E: return "e" + std::to_string(i);
    case LetterKind::EBar: return "ebar" + std::to_string(i);
    case LetterKind::F: return "f" + std::to_string(i);
    case LetterKind::FBar: return "fbar" + std::to_string(i);
  }
  return "?";
}

QElement letter_level(const Letter& l, int n, int r) {
  if (l.kind == LetterKind::One) {
    if (static_cast<int>(l.lambda.size()) != n) throw InvalidArgument("1_lambda: wrong length");
    QElement q(n, r);
    if (composition_sum(l.lambda) == r) q.add_term(diag_super(l.lambda), 1);
    return q;
  }
  GenTag g = GenTag::H;
  switch (l.kind) {
    case LetterKind::H: g = GenTag::H; break;
    case LetterKind::HBar: g = GenTag::HBar; break;
    case LetterKind::E: g = GenTag::E; break;
    case LetterKind::EBar: g = GenTag::EBar; break;
    case LetterKind::F: g = GenTag::F; break;
    case LetterKind::FBar: g = GenTag::FBar; break;
    default: break;
  }
  QElement q = a_jr(gen_spec(g, l.i, n), r);
  return l.parity() ? q.scaled(GaussianRational::eps()) : q;
}

TruncatedFamily letter_family(const Letter& l, int n, int R) {
  TruncatedFamily f(n, R);
  for (int r = 0; r <= R; ++r) f.level(r) = letter_level(l, n, r);
  return f;
}

std::map<std::string, TruncatedFamily> generators(int n, int R) {
  std::map<std::string, TruncatedFamily> out;
  for (int i = 1; i <= n; ++i) {
    out["H" + std::to_string(i)] = letter_family({LetterKind::H, i, {}}, n, R);
    out["Hbar" + std::to_string(i)] = letter_family({LetterKind::HBar, i, {}}, n, R);
  }
  for (int j = 1; j < n; ++j) {
    out["E" + std::to_string(j)] = letter_family({LetterKind::E, j, {}}, n, R);
    out["Ebar" + std::to_string(j)] = letter_family({LetterKind::EBar, j, {}}, n, R);
    out["F" + std::to_string(j)] = letter_family({LetterKind::F, j, {}}, n, R);
    out["Fbar" + std::to_string(j)] = letter_family({LetterKind::FBar, j, {}}, n, R);
  }
  return out;
}

WordPoly WordPoly::letter(const Letter& l) {
  WordPoly p;
  p.terms_[{l}] = GaussianRational(1);
  return p;
}

WordPoly WordPoly::scalar(const GaussianRational& c) {
  WordPoly p;
  if (!c.is_zero()) p.terms_[{}] = c;
  return p;
}

int WordPoly::parity() const {
  int p = -2;
  for (const auto& [w, c] : terms_) {
    int q = 0;
    for (const auto& l : w) q ^= l.parity();
    if (p == -2) p = q;
    else if (p != q) return -1;
  }
  return p == -2 ? 0 : p;
}

WordPoly& WordPoly::operator+=(const WordPoly& o) {
  for (const auto& [w, c] : o.terms_) {
    auto& x = terms_[w];
    x += c;
    if (x.is_zero()) terms_.erase(w);
  }
  return *this;
}

WordPoly& WordPoly::operator-=(const WordPoly& o) { return *this += o.scaled(-1); }

WordPoly WordPoly::scaled(const GaussianRational& s) const {
  WordPoly p;
  if (s.is_zero()) return p;
  for (const auto& [w, c] : terms_) p.terms_[w] = c * s;
  return p;
}

WordPoly operator*(const WordPoly& a, const WordPoly& b) {
  WordPoly p;
  for (const auto& [u, c] : a.terms_)
    for (const auto& [v, d] : b.terms_) {
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      WordPoly t;
      t.terms_[w] = c * d;
      p += t;
    }
  return p;
}

WordPoly bracket(const WordPoly& x, const WordPoly& y) {
  int p = x.parity(), q = y.parity();
  if (p < 0 || q < 0) throw InvalidArgument("super bracket of inhomogeneous elements");
  return (p && q) ? x * y + y * x : x * y - y * x;
}

QElement evaluate(const WordPoly& p, int n, int r) {
  std::map<Letter, QElement> letters;
  std::map<Word, QElement> memo;  // suffix values
  auto letter_at = [&](const Letter& l) -> const QElement& {
    auto it = letters.find(l);
    if (it == letters.end()) it = letters.emplace(l, letter_level(l, n, r)).first;
    return it->second;
  };
  std::function<QElement(const Word&, size_t)> suffix = [&](const Word& w, size_t from) -> QElement {
    if (from == w.size()) return QElement::identity(n, r);
    Word key(w.begin() + static_cast<long>(from), w.end());
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    QElement rest = suffix(w, from + 1);
    QElement v = rest.is_zero() ? rest : general_product(letter_at(w[from]), rest, Engine::Auto);
    memo.emplace(std::move(key), v);
    return v;
  };
  QElement out(n, r);
  for (const auto& [w, c] : p.terms()) out += suffix(w, 0).scaled(c);
  return out;
}

TruncatedFamily evaluate_family(const WordPoly& p, int n, int R) {
  TruncatedFamily f(n, R);
  for (int r = 0; r <= R; ++r) f.level(r) = evaluate(p, n, r);
  return f;
}

// ---------------------------------------------------------------- relations

namespace {

WordPoly L(LetterKind k, int i) { return WordPoly::letter({k, i, {}}); }
WordPoly one(const Composition& lam) { return WordPoly::letter({LetterKind::One, 0, lam}); }
WordPoly h(int i) { return L(LetterKind::H, i); }
WordPoly hb(int i) { return L(LetterKind::HBar, i); }
WordPoly e(int i) { return L(LetterKind::E, i); }
WordPoly eb(int i) { return L(LetterKind::EBar, i); }
WordPoly f(int i) { return L(LetterKind::F, i); }
WordPoly fb(int i) { return L(LetterKind::FBar, i); }
const WordPoly kZero;

// (eps_i, alpha_j)
int pairing(int i, int j) { return (i == j ? 1 : 0) - (i == j + 1 ? 1 : 0); }
std::string idx(std::initializer_list<int> v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "(" + s + ")";
}

struct Builder {
  std::vector<RelationInstance> out;
  void add(const std::string& group, const std::string& label, WordPoly lhs, WordPoly rhs, int level = -1) {
    out.push_back({group, label, level, std::move(lhs), std::move(rhs)});
  }
};

// relations shared by both suites: QR3/QS3, QR5/QS5, QR6/QS6
void add_common(Builder& b, const std::string& pre, int n) {
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < n; ++j) {
      int p = pairing(i, j);
      bool adj = (i == j || i == j + 1);
      b.add(pre + "3", "[hbar_i,e_j]" + idx({i, j}), bracket(hb(i), e(j)), eb(j).scaled(p));
      b.add(pre + "3", "[hbar_i,f_j]" + idx({i, j}), bracket(hb(i), f(j)), fb(j).scaled(-p));
      b.add(pre + "3", "[hbar_i,ebar_j]" + idx({i, j}), bracket(hb(i), eb(j)), adj ? e(j) : kZero);
      b.add(pre + "3", "[hbar_i,fbar_j]" + idx({i, j}), bracket(hb(i), fb(j)), adj ? f(j) : kZero);
    }
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      int d = std::abs(i - j);
      if (d != 1) {
        b.add(pre + "5", "[e_i,ebar_j]" + idx({i, j}), bracket(e(i), eb(j)), kZero);
        b.add(pre + "5", "[ebar_i,ebar_j]" + idx({i, j}), bracket(eb(i), eb(j)), kZero);
        b.add(pre + "5", "[f_i,fbar_j]" + idx({i, j}), bracket(f(i), fb(j)), kZero);
        b.add(pre + "5", "[fbar_i,fbar_j]" + idx({i, j}), bracket(fb(i), fb(j)), kZero);
      }
      if (d > 1) {
        b.add(pre + "5", "[e_i,e_j]" + idx({i, j}), bracket(e(i), e(j)), kZero);
        b.add(pre + "5", "[f_i,f_j]" + idx({i, j}), bracket(f(i), f(j)), kZero);
      }
      if (d == 1) {
        b.add(pre + "6", "[e_i,[e_i,e_j]]" + idx({i, j}), bracket(e(i), bracket(e(i), e(j))), kZero);
        b.add(pre + "6", "[ebar_i,[e_i,e_j]]" + idx({i, j}), bracket(eb(i), bracket(e(i), e(j))), kZero);
        b.add(pre + "6", "[f_i,[f_i,f_j]]" + idx({i, j}), bracket(f(i), bracket(f(i), f(j))), kZero);
        b.add(pre + "6", "[fbar_i,[f_i,f_j]]" + idx({i, j}), bracket(fb(i), bracket(f(i), f(j))), kZero);
      }
    }
  for (int i = 1; i + 1 < n; ++i) {
    b.add(pre + "5", "[e_i,e_i+1]=[ebar_i,ebar_i+1]" + idx({i}), bracket(e(i), e(i + 1)), bracket(eb(i), eb(i + 1)));
    b.add(pre + "5", "[e_i,ebar_i+1]=[ebar_i,e_i+1]" + idx({i}), bracket(e(i), eb(i + 1)), bracket(eb(i), e(i + 1)));
    b.add(pre + "5", "[f_i+1,f_i]=[fbar_i+1,fbar_i]" + idx({i}), bracket(f(i + 1), f(i)), bracket(fb(i + 1), fb(i)));
    b.add(pre + "5", "[f_i+1,fbar_i]=[fbar_i+1,f_i]" + idx({i}), bracket(f(i + 1), fb(i)), bracket(fb(i + 1), f(i)));
  }
}

void add_qr_level(Builder& b, int n, int r) {
  auto lams = compositions(n, r);
  const std::string lv = " r=" + std::to_string(r);
  // QR1
  for (const auto& a : lams)
    for (const auto& c : lams)
      b.add("QR1", "1_l*1_m " + vec_string(a) + vec_string(c) + lv, one(a) * one(c), a == c ? one(a) : kZero, r);
  {
    WordPoly s;
    for (const auto& a : lams) s += one(a);
    b.add("QR1", "sum 1_l = 1" + lv, s, WordPoly::scalar(1), r);
  }
  for (int i = 1; i <= n; ++i)
    for (const auto& a : lams) {
      b.add("QR1", "hbar_i 1_l = 1_l hbar_i " + idx({i}) + vec_string(a) + lv, hb(i) * one(a), one(a) * hb(i), r);
      if (a[i - 1] == 0)
        b.add("QR1", "hbar_i 1_l = 0 " + idx({i}) + vec_string(a) + lv, hb(i) * one(a), kZero, r);
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      WordPoly rhs;
      if (i == j)
        for (const auto& a : lams) rhs += one(a).scaled(2 * a[i - 1]);
      b.add("QR1", "hbar_i hbar_j + hbar_j hbar_i" + idx({i, j}) + lv, hb(i) * hb(j) + hb(j) * hb(i), rhs, r);
    }
  // QR2; 1_{lambda +- alpha_j} is zero outside Lambda(n, r)
  for (int j = 1; j < n; ++j)
    for (const auto& a : lams) {
      Composition up = a, dn = a;
      up[j - 1] += 1;
      up[j] -= 1;
      dn[j - 1] -= 1;
      dn[j] += 1;
      bool up_ok = up[j] >= 0, dn_ok = dn[j - 1] >= 0;
      std::string tag = idx({j}) + vec_string(a) + lv;
      b.add("QR2", "e_j 1_l" + tag, e(j) * one(a), up_ok ? one(up) * e(j) : kZero, r);
      b.add("QR2", "ebar_j 1_l" + tag, eb(j) * one(a), up_ok ? one(up) * eb(j) : kZero, r);
      b.add("QR2", "f_j 1_l" + tag, f(j) * one(a), dn_ok ? one(dn) * f(j) : kZero, r);
      b.add("QR2", "fbar_j 1_l" + tag, fb(j) * one(a), dn_ok ? one(dn) * fb(j) : kZero, r);
    }
  // QR4
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      WordPoly minus, plus;
      if (i == j)
        for (const auto& a : lams) {
          minus += one(a).scaled(a[i - 1] - a[i]);
          plus += one(a).scaled(a[i - 1] + a[i]);
        }
      WordPoly hh = i == j ? hb(i) - hb(i + 1) : kZero;
      std::string tag = idx({i, j}) + lv;
      b.add("QR4", "e_i f_j - f_j e_i" + tag, e(i) * f(j) - f(j) * e(i), minus, r);
      b.add("QR4", "ebar_i fbar_j + fbar_j ebar_i" + tag, eb(i) * fb(j) + fb(j) * eb(i), plus, r);
      b.add("QR4", "e_i fbar_j - fbar_j e_i" + tag, e(i) * fb(j) - fb(j) * e(i), hh, r);
      b.add("QR4", "ebar_i f_j - f_j ebar_i" + tag, eb(i) * f(j) - f(j) * eb(i), hh, r);
    }
}

void add_qs(Builder& b, int n) {
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      b.add("QS1", "[h_i,h_j]" + idx({i, j}), bracket(h(i), h(j)), kZero);
      b.add("QS1", "[h_i,hbar_j]" + idx({i, j}), bracket(h(i), hb(j)), kZero);
      b.add("QS1", "[hbar_i,hbar_j]" + idx({i, j}), bracket(hb(i), hb(j)), i == j ? h(i).scaled(2) : kZero);
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j < n; ++j) {
      int p = pairing(i, j);
      b.add("QS2", "[h_i,e_j]" + idx({i, j}), bracket(h(i), e(j)), e(j).scaled(p));
      b.add("QS2", "[h_i,ebar_j]" + idx({i, j}), bracket(h(i), eb(j)), eb(j).scaled(p));
      b.add("QS2", "[h_i,f_j]" + idx({i, j}), bracket(h(i), f(j)), f(j).scaled(-p));
      b.add("QS2", "[h_i,fbar_j]" + idx({i, j}), bracket(h(i), fb(j)), fb(j).scaled(-p));
    }
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      bool d = i == j;
      b.add("QS4", "[e_i,f_j]" + idx({i, j}), bracket(e(i), f(j)), d ? h(i) - h(i + 1) : kZero);
      b.add("QS4", "[ebar_i,fbar_j]" + idx({i, j}), bracket(eb(i), fb(j)), d ? h(i) + h(i + 1) : kZero);
      b.add("QS4", "[ebar_i,f_j]" + idx({i, j}), bracket(eb(i), f(j)), d ? hb(i) - hb(i + 1) : kZero);
      b.add("QS4", "[e_i,fbar_j]" + idx({i, j}), bracket(e(i), fb(j)), d ? hb(i) - hb(i + 1) : kZero);
    }
}

}  // namespace

std::vector<RelationInstance> relation_instances(RelationSuite s, int n, int R) {
  if (n < 1 || R < 0) throw InvalidArgument("relation suite needs n >= 1 and R >= 0");
  Builder b;
  if (s == RelationSuite::QR) {
    for (int r = 0; r <= R; ++r) add_qr_level(b, n, r);
    add_common(b, "QR", n);
  } else {
    add_qs(b, n);
    add_common(b, "QS", n);
  }
  return b.out;
}

RelationReport check_relations(RelationSuite s, int n, int R) {
  RelationReport rep;
  rep.suite = s == RelationSuite::QR ? "QR" : "QS";
  rep.n = n;
  rep.R = R;
  auto inst = relation_instances(s, n, R);
  rep.instances = inst.size();
  for (const auto& ri : inst) {
    ++rep.per_group[ri.group];
    WordPoly diff = ri.lhs - ri.rhs;
    int lo = ri.level >= 0 ? ri.level : 0, hi = ri.level >= 0 ? ri.level : R;
    for (int r = lo; r <= hi; ++r) {
      ++rep.checks;
      QElement v = evaluate(diff, n, r);
      if (!v.is_zero())
        rep.failures.push_back(ri.group + " " + ri.label + " at r=" + std::to_string(r) + ": residual " +
                               v.to_string());
    }
  }
  return rep;
}

// ---------------------------------------------------------------- basis rank

BasisRank blm_basis_rank(int n, int r) {
  BasisRank br;
  br.dim = count_super_matrices(n, r);
  for (int s = 0; s <= r; ++s) {
    auto lams = compositions(n, r - s);
    std::vector<Composition> js;
    for (const auto& j : weak_upto(n, r - s))
      if (j[n - 1] == 0) js.push_back(j);
    DenseMatrix<mpq_class> m(js.size(), lams.size());
    for (size_t a = 0; a < js.size(); ++a)
      for (size_t b = 0; b < lams.size(); ++b) m(a, b) = lambda_power(lams[b], js[a]);
    size_t rk = rank(m);
    // the supports of A(j, r) for distinct strict A are disjoint, so the rank is blockwise
    for (size_t cnt = strict_super_matrices(n, s).size(), t = 0; t < cnt; ++t) {
      br.size += js.size();
      br.rank += rk;
    }
  }
  return br;
}

// ---------------------------------------------------------------- triangular products

namespace {

struct Factor {
  GenTag tag;
  int h;
  int power;
};

std::vector<Factor> triangular_gen_factors(const SuperMatrix& a) {
  if (!a.is_strict()) throw InvalidArgument("triangular product needs a zero even diagonal");
  std::vector<Factor> fs;
  auto push = [&](GenTag t, int h, int p) {
    if (p > 0) fs.push_back({t, h, p});
  };
  for (const auto& pos : positions_in_order(a.n)) {
    int i = pos.i, j = pos.j;
    int a0 = a.e(i, j), a1 = a.o(i, j), ab = a0 + a1;
    if (pos.cls() < 0) {
      push(GenTag::FBar, i - 1, a1);
      push(GenTag::F, i - 1, a0);
      for (int hh = i - 2; hh >= j; --hh) push(GenTag::F, hh, ab);
    } else if (pos.cls() == 0) {
      push(GenTag::HBar, i, a1);
    } else {
      push(GenTag::EBar, i, a1);
      push(GenTag::E, i, a0);
      for (int hh = i + 1; hh <= j - 1; ++hh) push(GenTag::E, hh, ab);
    }
  }
  return fs;
}

LetterKind letter_kind(GenTag g) {
  switch (g) {
    case GenTag::H: return LetterKind::H;
    case GenTag::HBar: return LetterKind::HBar;
    case GenTag::E: return LetterKind::E;
    case GenTag::EBar: return LetterKind::EBar;
    case GenTag::F: return LetterKind::F;
    case GenTag::FBar: return LetterKind::FBar;
  }
  return LetterKind::H;
}

mpz_class factorial(int k) {
  mpz_class f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

std::vector<std::pair<Letter, int>> triangular_factors(const SuperMatrix& a) {
  std::vector<std::pair<Letter, int>> out;
  for (const auto& f : triangular_gen_factors(a)) out.push_back({Letter{letter_kind(f.tag), f.h, {}}, f.power});
  return out;
}

TriangularResult triangular_product(const SuperMatrix& a, int R) {
  TriangularResult res;
  res.a = a;
  res.R = R;
  const int n = a.n;
  auto fs = triangular_gen_factors(a);

  // factors are used without eps: A(O|E)(0) itself, and A(kE)(0) = E(0)^k / k!
  AComb sym;
  add_term(sym, ASpec(SuperMatrix(n), std::vector<int>(n, 0)), 1);
  TruncatedFamily deg = TruncatedFamily::identity(n, R);
  for (auto it = fs.rbegin(); it != fs.rend(); ++it) {
    TruncatedFamily g = TruncatedFamily::of(gen_spec(it->tag, it->h, n), R);
    for (int p = 0; p < it->power; ++p) {
      sym = gen_mul(it->tag, it->h, sym);
      deg = g * deg;
    }
    GaussianRational inv(mpq_class(1, factorial(it->power)));
    sym = scaled(sym, inv);
    deg = deg.scaled(inv);
  }
  res.symbolic = sym;
  res.degreewise_match = TruncatedFamily::of(sym, n, R) == deg;
  res.expansion = reexpress(deg);
  res.expansion_match = res.expansion == res.symbolic;

  ASpec lead(a, std::vector<int>(n, 0));
  auto it = res.expansion.find(lead);
  if (it != res.expansion.end()) {
    if (it->second == GaussianRational(1)) res.leading_sign = 1;
    else if (it->second == GaussianRational(-1)) res.leading_sign = -1;
  }
  for (const auto& [s, c] : res.expansion) {
    if (s == lead) continue;
    if (!strict_prec(s.a, a)) res.violations.push_back("(" + c.to_string() + ")*" + s.to_string());
  }
  return res;
}

// ---------------------------------------------------------------- PBW images

Word pbw_word(const SuperMatrix& a) {
  Word w;
  auto push = [&](LetterKind k, int i, int p) {
    for (int t = 0; t < p; ++t) w.push_back({k, i, {}});
  };
  auto ps = positions_in_order(a.n);
  for (const auto& pos : ps) {
    if (pos.cls() >= 0) continue;
    int i = pos.i, j = pos.j, ab = a.a(i, j);
    push(LetterKind::FBar, i - 1, a.o(i, j));
    push(LetterKind::F, i - 1, a.e(i, j));
    for (int k = i - 2; k >= j; --k) push(LetterKind::F, k, ab);
  }
  for (int i = 1; i <= a.n; ++i) {
    push(LetterKind::HBar, i, a.o(i, i));
    push(LetterKind::H, i, a.e(i, i));
  }
  for (const auto& pos : ps) {
    if (pos.cls() <= 0) continue;
    int i = pos.i, j = pos.j, ab = a.a(i, j);
    push(LetterKind::EBar, i, a.o(i, j));
    push(LetterKind::E, i, a.e(i, j));
    for (int k = j - 1; k >= i + 1; --k) push(LetterKind::E, k, ab);
  }
  return w;
}

PiReport pi_images_check(int n, int R, int amax) {
  PiReport rep;
  rep.qs = check_relations(RelationSuite::QS, n, R);
  std::vector<std::pair<int, SuperMatrix>> cols;
  for (int r = 0; r <= R; ++r)
    for (const auto& m : super_matrices(n, r)) cols.emplace_back(r, m);
  std::map<std::pair<int, SuperMatrix>, size_t> col_of;
  for (size_t c = 0; c < cols.size(); ++c) col_of[cols[c]] = c;

  std::vector<SuperMatrix> as;
  for (int s = 0; s <= amax; ++s)
    for (const auto& m : super_matrices(n, s)) as.push_back(m);
  DenseMatrix<GaussianRational> mat(as.size(), cols.size());
  for (size_t row = 0; row < as.size(); ++row) {
    WordPoly p;
    {
      WordPoly one_word = WordPoly::scalar(1);
      for (const auto& l : pbw_word(as[row])) one_word = one_word * WordPoly::letter(l);
      p = one_word;
    }
    for (int r = 0; r <= R; ++r) {
      QElement v = evaluate(p, n, r);
      for (const auto& [m, c] : v.terms()) mat(row, col_of.at({r, m})) = c;
    }
  }
  rep.count = as.size();
  rep.rank = rank(mat);
  return rep;
}

}  // namespace qschur
