#include "qschur/qschur.hpp"

#include <mutex>
#include <unordered_map>

#include "qschur/errors.hpp"
#include "qschur/linalg.hpp"
#include "qschur/sergeev.hpp"

namespace qschur {

// ---------------------------------------------------------------- QElement

QElement QElement::phi(const SuperMatrix& m) {
  if (!m.valid()) throw InvalidArgument("phi: invalid super matrix " + m.to_string());
  QElement q(m.n, m.total());
  q.terms_.emplace(m, GaussianRational(1));
  return q;
}

QElement QElement::phi(const std::optional<SuperMatrix>& m, int n, int r) {
  if (!m) return QElement(n, r);
  if (m->n != n || m->total() != r) throw InvalidArgument("phi: matrix outside M(n,r)");
  return phi(*m);
}

QElement QElement::identity(int n, int r) {
  QElement q(n, r);
  for (const auto& l : compositions(n, r)) q.terms_.emplace(diag_super(l), GaussianRational(1));
  return q;
}

GaussianRational QElement::coeff(const SuperMatrix& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? GaussianRational(0) : it->second;
}

void QElement::add_term(const SuperMatrix& m, const GaussianRational& c) {
  if (c.is_zero()) return;
  if (m.n != n_ || m.total() != r_ || !m.valid()) throw InvalidArgument("term outside M(n,r): " + m.to_string());
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

int QElement::parity() const {
  int p = -2;
  for (const auto& [m, c] : terms_) {
    int q = m.parity();
    if (p == -2) p = q;
    else if (p != q) return -1;
  }
  return p == -2 ? 0 : p;
}

std::string QElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")*phi" + m.to_string();
  }
  return s;
}

void QElement::check(const QElement& o) const {
  if (n_ != o.n_ || r_ != o.r_) throw DegreeMismatch("QElements from different Q(n,r)");
}

QElement& QElement::operator+=(const QElement& o) {
  check(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

QElement& QElement::operator-=(const QElement& o) {
  check(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

QElement QElement::scaled(const GaussianRational& s) const {
  QElement q(n_, r_);
  if (s.is_zero()) return q;
  for (const auto& [m, c] : terms_) q.terms_.emplace(m, c * s);
  return q;
}

// ---------------------------------------------------------------- oracle

namespace {

using Coords = std::unordered_map<uint64_t, long>;

struct BlockSolver {
  std::vector<SuperMatrix> cands;
  std::vector<const Coords*> coords;
  std::vector<uint64_t> pivots;
  DenseMatrix<mpq_class> inv;
};

struct PairKey {
  SuperMatrix x, a;
  friend bool operator<(const PairKey& p, const PairKey& q) {
    if (p.x != q.x) return p.x < q.x;
    return p.a < q.a;
  }
};

class Oracle {
 public:
  static Oracle& get() {
    static Oracle o;
    return o;
  }

  void clear() {
    std::lock_guard<std::recursive_mutex> g(mu_);
    bodies_.clear();
    coords_.clear();
    solvers_.clear();
    products_.clear();
    projectors_.clear();
  }

  const SergeevElementZ& body(const SuperMatrix& m) {
    std::lock_guard<std::recursive_mutex> g(mu_);
    auto it = bodies_.find(m);
    if (it != bodies_.end()) return it->second;
    return bodies_.emplace(m, t_body(m)).first->second;
  }

  const CosetProjector& projector(const Composition& xi) {
    std::lock_guard<std::recursive_mutex> g(mu_);
    auto it = projectors_.find(xi);
    if (it != projectors_.end()) return it->second;
    return projectors_.emplace(xi, CosetProjector(xi)).first->second;
  }

  // coordinates of x_xi * e in the basis x_xi d c^alpha, d in D_xi
  Coords project(const SergeevElementZ& e, const Composition& xi) {
    const CosetProjector& p = projector(xi);
    Coords out;
    for (const auto& [k, c] : e.terms()) {
      uint64_t key = detail::mono_key(p.project(detail::mono_perm(k)), detail::mono_mask(k));
      long& slot = out[key];
      if (__builtin_add_overflow(slot, c.v, &slot)) throw ConsistencyError("integer overflow");
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
  }

  const Coords& coords(const SuperMatrix& m) {
    std::lock_guard<std::recursive_mutex> g(mu_);
    auto it = coords_.find(m);
    if (it != coords_.end()) return it->second;
    return coords_.emplace(m, project(body(m), m.ro())).first->second;
  }

  const BlockSolver& solver(const NatMatrix& block) {
    std::lock_guard<std::recursive_mutex> g(mu_);
    auto it = solvers_.find(block);
    if (it != solvers_.end()) return it->second;
    BlockSolver s;
    std::vector<SuperMatrix> all;
    {
      std::vector<int> nz;
      for (size_t t = 0; t < block.v.size(); ++t)
        if (block.v[t] > 0) nz.push_back(static_cast<int>(t));
      for (uint32_t mask = 0; mask < (1u << nz.size()); ++mask) {
        SuperMatrix x(block.n);
        x.even = block;
        for (size_t b = 0; b < nz.size(); ++b)
          if (mask >> b & 1u) {
            x.even.v[nz[b]] -= 1;
            x.odd.v[nz[b]] = 1;
          }
        all.push_back(std::move(x));
      }
    }
    std::sort(all.begin(), all.end());
    s.cands = all;
    std::vector<uint64_t> rows;
    std::unordered_map<uint64_t, size_t> row_index;
    for (const auto& c : s.cands) {
      const Coords& co = coords(c);
      s.coords.push_back(&co);
      for (const auto& [k, v] : co)
        if (row_index.emplace(k, rows.size()).second) rows.push_back(k);
    }
    std::sort(rows.begin(), rows.end());
    for (size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
    DenseMatrix<mpq_class> m(rows.size(), s.cands.size());
    for (size_t j = 0; j < s.cands.size(); ++j)
      for (const auto& [k, v] : *s.coords[j]) m(row_index[k], j) = v;
    auto piv = independent_rows(m);
    if (piv.size() != s.cands.size())
      throw ConsistencyError("T_M coordinates are dependent in a double-coset block");
    DenseMatrix<mpq_class> sq(piv.size(), piv.size());
    for (size_t i = 0; i < piv.size(); ++i) {
      s.pivots.push_back(rows[piv[i]]);
      for (size_t j = 0; j < s.cands.size(); ++j) sq(i, j) = m(piv[i], j);
    }
    auto inv = inverse(sq);
    if (!inv) throw ConsistencyError("singular pivot block");
    s.inv = std::move(*inv);
    return solvers_.emplace(block, std::move(s)).first->second;
  }

  QElement product(const SuperMatrix& x, const SuperMatrix& a) {
    if (x.n != a.n) throw InvalidArgument("oracle_product: size mismatch");
    if (x.total() != a.total()) throw DegreeMismatch("oracle_product: degree mismatch");
    if (!x.valid() || !a.valid()) throw InvalidArgument("oracle_product: invalid super matrix");
    int n = x.n, r = x.total();
    QElement out(n, r);
    if (x.co() != a.ro()) return out;
    std::lock_guard<std::recursive_mutex> g(mu_);
    PairKey pk{x, a};
    auto hit = products_.find(pk);
    if (hit != products_.end()) return hit->second;

    Composition xi = x.ro(), mu = a.co();
    SergeevElementZ z = body(x) * body(a);
    Coords b = project(z, xi);

    // split coordinates by double coset S_xi d S_mu
    std::map<NatMatrix, Coords> blocks;
    std::unordered_map<uint64_t, NatMatrix> block_of_d;
    for (const auto& [k, v] : b) {
      uint64_t d = detail::mono_perm(k);
      auto it = block_of_d.find(d);
      if (it == block_of_d.end())
        it = block_of_d.emplace(d, triple_to_matrix(xi, Permutation::from_key(r, d), mu)).first;
      blocks[it->second].emplace(k, v);
    }
    for (const auto& [blk, bc] : blocks) {
      const BlockSolver& s = solver(blk);
      size_t m = s.cands.size();
      std::vector<mpq_class> rhs(m);
      for (size_t i = 0; i < m; ++i) {
        auto it = bc.find(s.pivots[i]);
        rhs[i] = it == bc.end() ? 0 : it->second;
      }
      std::vector<mpq_class> f(m, 0);
      for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) f[i] += s.inv(i, j) * rhs[j];
      // residual over every coordinate touched by b or the candidates
      std::unordered_map<uint64_t, mpq_class> res;
      for (const auto& [k, v] : bc) res[k] = -mpq_class(v);
      for (size_t j = 0; j < m; ++j) {
        if (sgn(f[j]) == 0) continue;
        for (const auto& [k, v] : *s.coords[j]) res[k] += f[j] * v;
      }
      for (const auto& [k, v] : res)
        if (sgn(v) != 0)
          throw ConsistencyError("oracle decomposition left a nonzero residual for " + x.to_string() + " * " +
                                 a.to_string());
      for (size_t j = 0; j < m; ++j)
        if (sgn(f[j]) != 0) out.add_term(s.cands[j], GaussianRational(f[j]));
    }
    products_.emplace(pk, out);
    return out;
  }

 private:
  std::recursive_mutex mu_;
  std::map<SuperMatrix, SergeevElementZ> bodies_;
  std::map<SuperMatrix, Coords> coords_;
  std::map<NatMatrix, BlockSolver> solvers_;
  std::map<PairKey, QElement> products_;
  std::map<Composition, CosetProjector> projectors_;
};

}  // namespace

QElement oracle_product(const SuperMatrix& x, const SuperMatrix& a) { return Oracle::get().product(x, a); }

void clear_oracle_caches() { Oracle::get().clear(); }

std::vector<TmRankBlock> tm_rank_report(int n, int r) {
  Oracle& o = Oracle::get();
  std::vector<TmRankBlock> out;
  auto lams = compositions(n, r);
  for (const auto& xi : lams)
    for (const auto& mu : lams) {
      TmRankBlock blk{xi, mu, 0, 0, true};
      std::unordered_map<uint64_t, NatMatrix> owner;
      for (const auto& nat : nat_matrices(xi, mu)) {
        std::vector<SuperMatrix> cands;
        for (const auto& m : super_matrices(n, r))
          if (m.abs() == nat) cands.push_back(m);
        std::vector<uint64_t> rows;
        std::unordered_map<uint64_t, size_t> idx;
        for (const auto& c : cands)
          for (const auto& [k, v] : o.coords(c)) {
            auto [it, fresh] = owner.emplace(k, nat);
            if (!fresh && !(it->second == nat)) blk.disjoint_supports = false;
            if (idx.emplace(k, rows.size()).second) rows.push_back(k);
          }
        DenseMatrix<mpq_class> m(rows.size(), cands.size());
        for (size_t j = 0; j < cands.size(); ++j)
          for (const auto& [k, v] : o.coords(cands[j])) m(idx[k], j) = v;
        blk.count += cands.size();
        blk.rank += rank(m);
      }
      out.push_back(std::move(blk));
    }
  return out;
}

// ---------------------------------------------------------------- shapes

const char* shape_name(Shape s) {
  switch (s) {
    case Shape::Upper0: return "upper0";
    case Shape::Upper1: return "upper1";
    case Shape::Diag1: return "diag1";
    case Shape::Diag0: return "diag0";
    case Shape::Lower0: return "lower0";
    case Shape::Lower1: return "lower1";
  }
  return "?";
}

std::optional<Shape> parse_shape(const std::string& s) {
  for (Shape x : kAllShapes)
    if (s == shape_name(x)) return x;
  return std::nullopt;
}

std::vector<int> shape_indices(Shape s, int n) {
  std::vector<int> h;
  if (s == Shape::Diag0) return {0};
  int top = s == Shape::Diag1 ? n : n - 1;
  for (int i = 1; i <= top; ++i) h.push_back(i);
  return h;
}

std::optional<SuperMatrix> generator_matrix(Shape s, int h, const Composition& lambda) {
  int n = static_cast<int>(lambda.size());
  SuperMatrix d = diag_super(lambda);
  auto off_ok = [&] { return h >= 1 && h < n; };
  switch (s) {
    case Shape::Diag0:
      return d;
    case Shape::Diag1:
      if (h < 1 || h > n) return std::nullopt;
      return shifted(d, {{Part::Even, h, h, -1}, {Part::Odd, h, h, 1}});
    case Shape::Upper0:
      if (!off_ok()) return std::nullopt;
      return shifted(d, {{Part::Even, h, h + 1, 1}, {Part::Even, h + 1, h + 1, -1}});
    case Shape::Upper1:
      if (!off_ok()) return std::nullopt;
      return shifted(d, {{Part::Even, h + 1, h + 1, -1}, {Part::Odd, h, h + 1, 1}});
    case Shape::Lower0:
      if (!off_ok()) return std::nullopt;
      return shifted(d, {{Part::Even, h, h, -1}, {Part::Even, h + 1, h, 1}});
    case Shape::Lower1:
      if (!off_ok()) return std::nullopt;
      return shifted(d, {{Part::Even, h, h, -1}, {Part::Odd, h + 1, h, 1}});
  }
  return std::nullopt;
}

std::optional<std::pair<Shape, int>> detect_shape(const SuperMatrix& x) {
  Composition lambda = x.co();
  for (Shape s : kAllShapes)
    for (int h : shape_indices(s, x.n)) {
      auto g = generator_matrix(s, h, lambda);
      if (g && *g == x) return std::make_pair(s, h);
    }
  return std::nullopt;
}

// ---------------------------------------------------------------- formulas

namespace {

int neg1(int e) { return (e & 1) ? -1 : 1; }

struct Acc {
  QElement out;
  void add(long c, const std::optional<SuperMatrix>& m) {
    if (c != 0 && m) out.add_term(*m, GaussianRational(c));
  }
};

void require_generator(Shape s, int h, const SuperMatrix& a) {
  if (!a.valid()) throw InvalidArgument("invalid super matrix " + a.to_string());
  if (!generator_matrix(s, h, a.ro()))
    throw InvalidArgument(std::string("generator ") + shape_name(s) + " with h=" + std::to_string(h) +
                          " is not a valid super matrix for ro(A)");
}

constexpr Part E = Part::Even;
constexpr Part O = Part::Odd;

}  // namespace

QElement left_mul_upper0(int h, const SuperMatrix& a) {
  require_generator(Shape::Upper0, h, a);
  Acc acc{QElement(a.n, a.total())};
  for (int k = 1; k <= a.n; ++k) {
    if (a.a(h + 1, k) < 1) continue;
    acc.add(a.e(h, k) + 1, shifted(a, {{E, h, k, 1}, {E, h + 1, k, -1}}));
    acc.add(1, shifted(a, {{O, h, k, 1}, {O, h + 1, k, -1}}));
  }
  return acc.out;
}

QElement left_mul_upper1(int h, const SuperMatrix& a) {
  require_generator(Shape::Upper1, h, a);
  Acc acc{QElement(a.n, a.total())};
  for (int k = 1; k <= a.n; ++k) {
    if (a.a(h + 1, k) < 1) continue;
    acc.add(neg1(mtilde(a.odd, h + 1, k)) * (a.e(h, k) + 1), shifted(a, {{E, h, k, 1}, {O, h + 1, k, -1}}));
    acc.add(neg1(mtilde(a.odd, h, k)), shifted(a, {{E, h + 1, k, -1}, {O, h, k, 1}}));
  }
  return acc.out;
}

QElement left_mul_diag_odd(int h, const SuperMatrix& a) {
  require_generator(Shape::Diag1, h, a);
  Acc acc{QElement(a.n, a.total())};
  for (int k = 1; k <= a.n; ++k) {
    if (a.a(h, k) < 1) continue;
    int sg = neg1(mtilde(a.odd, h, k));
    acc.add(sg, shifted(a, {{E, h, k, -1}, {O, h, k, 1}}));
    acc.add(sg * (a.e(h, k) + 1), shifted(a, {{E, h, k, 1}, {O, h, k, -1}}));
  }
  return acc.out;
}

QElement left_mul_diag_even(const SuperMatrix& a) {
  require_generator(Shape::Diag0, 0, a);
  return QElement::phi(a);
}

QElement left_mul_lower0(int h, const SuperMatrix& a) {
  require_generator(Shape::Lower0, h, a);
  Acc acc{QElement(a.n, a.total())};
  for (int k = 1; k <= a.n; ++k) {
    if (a.a(h, k) < 1) continue;
    acc.add(a.e(h + 1, k) + 1, shifted(a, {{E, h, k, -1}, {E, h + 1, k, 1}}));
    acc.add(1, shifted(a, {{O, h, k, -1}, {O, h + 1, k, 1}}));
  }
  return acc.out;
}

QElement left_mul_lower1(int h, const SuperMatrix& a) {
  require_generator(Shape::Lower1, h, a);
  Acc acc{QElement(a.n, a.total())};
  for (int k = 1; k <= a.n; ++k) {
    if (a.a(h, k) < 1) continue;
    int sg = neg1(mtilde(a.odd, h, k));
    acc.add(sg * (a.e(h + 1, k) + 1), shifted(a, {{E, h + 1, k, 1}, {O, h, k, -1}}));
    acc.add(sg, shifted(a, {{E, h, k, -1}, {O, h + 1, k, 1}}));
  }
  return acc.out;
}

QElement formula_product(Shape s, int h, const SuperMatrix& a) {
  switch (s) {
    case Shape::Upper0: return left_mul_upper0(h, a);
    case Shape::Upper1: return left_mul_upper1(h, a);
    case Shape::Diag1: return left_mul_diag_odd(h, a);
    case Shape::Diag0: return left_mul_diag_even(a);
    case Shape::Lower0: return left_mul_lower0(h, a);
    case Shape::Lower1: return left_mul_lower1(h, a);
  }
  throw InvalidArgument("unknown shape");
}

std::optional<Engine> parse_engine(const std::string& s) {
  if (s == "formula") return Engine::Formula;
  if (s == "oracle") return Engine::Oracle;
  if (s == "auto") return Engine::Auto;
  return std::nullopt;
}

QElement product(const SuperMatrix& x, const SuperMatrix& a, Engine engine) {
  if (engine == Engine::Oracle) return oracle_product(x, a);
  if (x.n != a.n) throw InvalidArgument("product: size mismatch");
  if (x.total() != a.total()) throw DegreeMismatch("product: degree mismatch");
  if (x.co() != a.ro()) return QElement(a.n, a.total());
  auto sh = detect_shape(x);
  if (!sh) {
    if (engine == Engine::Formula) throw InvalidArgument("no closed formula for left factor " + x.to_string());
    return oracle_product(x, a);
  }
  return formula_product(sh->first, sh->second, a);
}

QElement general_product(const QElement& a, const QElement& b, Engine engine) {
  if (a.n() != b.n() || a.r() != b.r()) throw DegreeMismatch("general_product: different Q(n,r)");
  QElement out(a.n(), a.r());
  std::map<Composition, std::vector<std::pair<const SuperMatrix*, const GaussianRational*>>> by_ro;
  for (const auto& [m, c] : b.terms()) by_ro[m.ro()].emplace_back(&m, &c);
  for (const auto& [x, cx] : a.terms()) {
    auto it = by_ro.find(x.co());
    if (it == by_ro.end()) continue;
    for (const auto& [m, cm] : it->second) {
      QElement p = product(x, *m, engine);
      GaussianRational s = cx * *cm;
      for (const auto& [k, v] : p.terms()) out.add_term(k, v * s);
    }
  }
  return out;
}

}  // namespace qschur
