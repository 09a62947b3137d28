#include "qschur/identities.hpp"

#include <algorithm>

#include "qschur/errors.hpp"
#include "qschur/superindex.hpp"

namespace qschur {

using Z = SergeevElementZ;

int IdentityCase::p(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw InvalidArgument("identity case lacks parameter " + key);
  return it->second;
}

std::string IdentityCase::describe() const {
  std::string s = name + " r=" + std::to_string(r);
  if (a.n > 0) {
    s += " A=[";
    for (size_t t = 0; t < a.v.size(); ++t) s += (t ? "," : "") + std::to_string(a.v[t]);
    s += "]";
  }
  if (!mu.empty()) {
    s += " mu=(";
    for (size_t t = 0; t < mu.size(); ++t) s += (t ? "," : "") + std::to_string(mu[t]);
    s += ")";
  }
  for (const auto& [k, v] : params) s += " " + k + "=" + std::to_string(v);
  return s;
}

const char* outcome_name(CaseOutcome o) {
  switch (o) {
    case CaseOutcome::Pass: return "pass";
    case CaseOutcome::Fail: return "fail";
    case CaseOutcome::Inadmissible: return "inadmissible";
  }
  return "?";
}

namespace {

// s_from s_{from+1} ... s_to (empty when to < from)
Z asc(int from, int to, int r) {
  std::vector<int> w;
  for (int i = from; i <= to; ++i) w.push_back(i);
  return word_element(w, r);
}

// s_from s_{from-1} ... s_to (empty when to > from)
Z desc(int from, int to, int r) {
  std::vector<int> w;
  for (int i = from; i >= to; --i) w.push_back(i);
  return word_element(w, r);
}

Z dA(const NatMatrix& m) { return Z::perm(d_of_matrix(m)); }
Z C(int i, int j, int r) { return c_interval(i, j, r); }
Z c1(int i, int r) { return Z::clifford(i, r); }

Z coset_sum(const NatMatrix& m) {
  Composition nu;
  for (int j = 1; j <= m.n; ++j)
    for (int i = 1; i <= m.n; ++i) nu.push_back(m(i, j));
  Composition mu = m.col_sums();
  std::vector<Permutation> sig;
  for (const auto& s : min_right_coset_reps(nu))
    if (in_young_subgroup(s, mu)) sig.push_back(s);
  return sum_of(sig, m.total());
}

NatMatrix shift_nat(NatMatrix m, int h, int k, int sign) {
  m(h, k) += sign;
  m(h + 1, k) -= sign;
  return m;
}

struct MatrixInfo {
  int n, r;
  std::vector<int> lt;  // prefix sums of ro(A)
  MatrixInfo(const NatMatrix& a) : n(a.n), r(a.total()), lt(prefix_sums(a.row_sums())) {}
};

int a_k(const NatMatrix& a, int h, int k) {
  int s = 0;
  for (int u = 1; u < k; ++u) s += a(h + 1, u);
  return s;
}

int b_k(const NatMatrix& a, int h, int k) {
  int s = 0;
  for (int u = k + 1; u <= a.n; ++u) s += a(h, u);
  return s;
}

std::string need(bool ok, const char* why) { return ok ? std::string() : std::string(why); }

// -- matrix grids

using MatrixVisitor = std::function<void(const NatMatrix&, std::vector<IdentityCase>&)>;

std::vector<IdentityCase> matrix_grid(int nmax, int rmax, const MatrixVisitor& visit) {
  std::vector<IdentityCase> out;
  for (int n = 1; n <= nmax; ++n)
    for (int r = 0; r <= rmax && r <= kMaxDegree; ++r)
      for (const auto& m : nat_matrices(n, r)) visit(m, out);
  return out;
}

IdentityCase mcase(const std::string& name, const NatMatrix& m, std::map<std::string, int> params) {
  IdentityCase c;
  c.name = name;
  c.r = m.total();
  c.a = m;
  c.params = std::move(params);
  return c;
}

bool in_range(int x, int lo, int hi) { return x >= lo && x <= hi; }

// -- chain grids

std::vector<Composition> positive_compositions(int r) {
  std::vector<Composition> out;
  if (r == 0) return out;
  for (uint32_t cuts = 0; cuts < (1u << (r - 1)); ++cuts) {
    Composition c;
    int run = 1;
    for (int i = 1; i < r; ++i) {
      if (cuts >> (i - 1) & 1u) {
        c.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    c.push_back(run);
    out.push_back(c);
  }
  return out;
}

// values lo..hi lie in one block of mu
bool same_block(const Composition& mu, int lo, int hi) {
  int r = composition_sum(mu);
  if (lo < 1 || hi > r || lo > hi) return false;
  return block_of(mu, lo) == block_of(mu, hi);
}

std::vector<IdentityCase> chain_grid(const std::string& name, int rmax, bool uses_v, bool uses_t, bool uses_mu,
                                     const std::function<std::string(const IdentityCase&)>& violation) {
  std::vector<IdentityCase> out;
  for (int r = 1; r <= rmax && r <= kMaxDegree; ++r) {
    std::vector<Composition> mus = uses_mu ? positive_compositions(r) : std::vector<Composition>{Composition{}};
    for (const auto& mu : mus)
      for (int u = 1; u <= r; ++u)
        for (int v = 1; v <= (uses_v ? r : 1); ++v)
          for (int t = 1; t <= (uses_t ? r : 1); ++t) {
            IdentityCase c;
            c.name = name;
            c.r = r;
            c.mu = mu;
            c.params["u"] = u;
            if (uses_v) c.params["v"] = v;
            if (uses_t) c.params["t"] = t;
            if (violation(c).empty()) out.push_back(std::move(c));
          }
  }
  return out;
}

std::vector<IdentitySpec> build_registry() {
  std::vector<IdentitySpec> reg;

  // ---- shift identities for d_A

  {
    IdentitySpec s;
    s.name = "shift-plus";
    s.summary = "s_{l+1}..s_{l+a_k+p} d_A = s_l..s_{l-b_k+1} d_{A+} s_{at+1}..s_{at+p}, 0 <= p < a_{h+1,k}";
    s.violation = [](const IdentityCase& c) {
      int n = c.a.n, h = c.p("h"), k = c.p("k"), p = c.p("p");
      if (!in_range(h, 1, n - 1) || !in_range(k, 1, n)) return std::string("h or k out of range");
      return need(p >= 0 && p < c.a(h + 1, k), "needs 0 <= p < a_{h+1,k}");
    };
    s.sides = [](const IdentityCase& c) {
      const NatMatrix& a = c.a;
      MatrixInfo mi(a);
      int h = c.p("h"), k = c.p("k"), p = c.p("p"), r = mi.r, l = mi.lt[h];
      int ak = a_k(a, h, k), bk = b_k(a, h, k), at = mtilde(a, h, k);
      Z lhs = asc(l + 1, l + ak + p, r) * dA(a);
      Z rhs = desc(l, l - bk + 1, r) * dA(shift_nat(a, h, k, 1)) * asc(at + 1, at + p, r);
      return std::make_pair(lhs, rhs);
    };
    s.enumerate = [](int nmax, int rmax) {
      return matrix_grid(nmax, rmax, [](const NatMatrix& m, std::vector<IdentityCase>& out) {
        for (int h = 1; h < m.n; ++h)
          for (int k = 1; k <= m.n; ++k)
            for (int p = 0; p < m(h + 1, k); ++p) out.push_back(mcase("shift-plus", m, {{"h", h}, {"k", k}, {"p", p}}));
      });
    };
    reg.push_back(std::move(s));
  }
  {
    IdentitySpec s;
    s.name = "shift-minus";
    s.summary = "s_{l-1}..s_{l-b_k-q} d_A = s_l..s_{l+a_k-1} d_{A-} s_{at-1}..s_{at-q}, 0 <= q < a_{h,k}";
    s.violation = [](const IdentityCase& c) {
      int n = c.a.n, h = c.p("h"), k = c.p("k"), q = c.p("q");
      if (!in_range(h, 1, n - 1) || !in_range(k, 1, n)) return std::string("h or k out of range");
      return need(q >= 0 && q < c.a(h, k), "needs 0 <= q < a_{h,k}");
    };
    s.sides = [](const IdentityCase& c) {
      const NatMatrix& a = c.a;
      MatrixInfo mi(a);
      int h = c.p("h"), k = c.p("k"), q = c.p("q"), r = mi.r, l = mi.lt[h];
      int ak = a_k(a, h, k), bk = b_k(a, h, k), at = mtilde(a, h, k);
      Z lhs = desc(l - 1, l - bk - q, r) * dA(a);
      Z rhs = asc(l, l + ak - 1, r) * dA(shift_nat(a, h, k, -1)) * desc(at - 1, at - q, r);
      return std::make_pair(lhs, rhs);
    };
    s.enumerate = [](int nmax, int rmax) {
      return matrix_grid(nmax, rmax, [](const NatMatrix& m, std::vector<IdentityCase>& out) {
        for (int h = 1; h < m.n; ++h)
          for (int k = 1; k <= m.n; ++k)
            for (int q = 0; q < m(h, k); ++q) out.push_back(mcase("shift-minus", m, {{"h", h}, {"k", k}, {"q", q}}));
      });
    };
    reg.push_back(std::move(s));
  }

  // ---- c_k through descending chains

  {
    IdentitySpec s;
    s.name = "clifford-chains";
    s.summary = "c_k (s_{j1}..s_{i1})...(s_{jl}..s_{il}) = (...) c_{k+l} when i_t < k+t-1 <= j_t";
    s.violation = [](const IdentityCase& c) {
      int k = c.p("k"), l = c.p("l"), r = c.r;
      if (k < 1 || l < 1 || k + l > r) return std::string("needs k >= 1, l >= 1, k + l <= r");
      for (int t = 1; t <= l; ++t) {
        int i = c.p("i" + std::to_string(t)), j = c.p("j" + std::to_string(t));
        if (!(i < k + t - 1 && k + t - 1 <= j)) return std::string("needs i_t < k+t-1 <= j_t");
        if (i < 1 || j > r - 1) return std::string("simple reflection index out of range");
      }
      return std::string();
    };
    s.sides = [](const IdentityCase& c) {
      int k = c.p("k"), l = c.p("l"), r = c.r;
      Z w = Z::one(r);
      for (int t = 1; t <= l; ++t) w = w * desc(c.p("j" + std::to_string(t)), c.p("i" + std::to_string(t)), r);
      return std::make_pair(c1(k, r) * w, w * c1(k + l, r));
    };
    s.enumerate = [](int, int rmax) {
      std::vector<IdentityCase> out;
      for (int r = 2; r <= rmax; ++r)
        for (int k = 1; k < r; ++k)
          for (int l = 1; k + l <= r; ++l) {
            IdentityCase c;
            c.name = "clifford-chains";
            c.r = r;
            c.params = {{"k", k}, {"l", l}};
            auto rec = [&](auto& self, int t) -> void {
              if (t > l) {
                out.push_back(c);
                return;
              }
              for (int i = 1; i < k + t - 1; ++i)
                for (int j = k + t - 1; j <= r - 1; ++j) {
                  c.params["i" + std::to_string(t)] = i;
                  c.params["j" + std::to_string(t)] = j;
                  self(self, t + 1);
                }
              c.params.erase("i" + std::to_string(t));
              c.params.erase("j" + std::to_string(t));
            };
            rec(rec, 1);
          }
      return out;
    };
    reg.push_back(std::move(s));
  }

  // ---- Clifford generators through d_A

  {
    IdentitySpec s;
    s.name = "clifford-dA-plus";
    s.summary = "c_{l+a_k+p+1} d_A = d_A c_{at+p+1}, 0 <= p < a_{h+1,k}";
    s.violation = [](const IdentityCase& c) {
      int n = c.a.n, h = c.p("h"), k = c.p("k"), p = c.p("p");
      if (!in_range(h, 1, n - 1) || !in_range(k, 1, n)) return std::string("h or k out of range");
      return need(p >= 0 && p < c.a(h + 1, k), "needs 0 <= p < a_{h+1,k}");
    };
    s.sides = [](const IdentityCase& c) {
      const NatMatrix& a = c.a;
      MatrixInfo mi(a);
      int h = c.p("h"), k = c.p("k"), p = c.p("p"), r = mi.r, l = mi.lt[h];
      int at = mtilde(a, h, k);
      return std::make_pair(c1(l + a_k(a, h, k) + p + 1, r) * dA(a), dA(a) * c1(at + p + 1, r));
    };
    s.enumerate = [](int nmax, int rmax) {
      return matrix_grid(nmax, rmax, [](const NatMatrix& m, std::vector<IdentityCase>& out) {
        for (int h = 1; h < m.n; ++h)
          for (int k = 1; k <= m.n; ++k)
            for (int p = 0; p < m(h + 1, k); ++p)
              out.push_back(mcase("clifford-dA-plus", m, {{"h", h}, {"k", k}, {"p", p}}));
      });
    };
    reg.push_back(std::move(s));
  }
  {
    IdentitySpec s;
    s.name = "clifford-dA-minus";
    s.summary = "c_{l-b_k-q} d_A = d_A c_{at-q}, 0 <= q < a_{h,k}";
    s.violation = [](const IdentityCase& c) {
      int n = c.a.n, h = c.p("h"), k = c.p("k"), q = c.p("q");
      if (!in_range(h, 1, n) || !in_range(k, 1, n)) return std::string("h or k out of range");
      return need(q >= 0 && q < c.a(h, k), "needs 0 <= q < a_{h,k}");
    };
    s.sides = [](const IdentityCase& c) {
      const NatMatrix& a = c.a;
      MatrixInfo mi(a);
      int h = c.p("h"), k = c.p("k"), q = c.p("q"), r = mi.r, l = mi.lt[h];
      int at = mtilde(a, h, k);
      return std::make_pair(c1(l - b_k(a, h, k) - q, r) * dA(a), dA(a) * c1(at - q, r));
    };
    s.enumerate = [](int nmax, int rmax) {
      return matrix_grid(nmax, rmax, [](const NatMatrix& m, std::vector<IdentityCase>& out) {
        for (int h = 1; h <= m.n; ++h)
          for (int k = 1; k <= m.n; ++k)
            for (int q = 0; q < m(h, k); ++q)
              out.push_back(mcase("clifford-dA-minus", m, {{"h", h}, {"k", k}, {"q", q}}));
      });
    };
    reg.push_back(std::move(s));
  }

  // ---- coset sums

  {
    IdentitySpec s;
    s.name = "coset-sum-plus";
    s.summary = "up-chain(at+1) sum_{D_nuA cap S_mu} = down-chain(at) sum_{D_nuA+ cap S_mu}, a_{h+1,k} >= 1";
    s.violation = [](const IdentityCase& c) {
      int n = c.a.n, h = c.p("h"), k = c.p("k");
      if (!in_range(h, 1, n - 1) || !in_range(k, 1, n)) return std::string("h or k out of range");
      return need(c.a(h + 1, k) >= 1, "needs a_{h+1,k} >= 1");
    };
    s.sides = [](const IdentityCase& c) {
      const NatMatrix& a = c.a;
      int h = c.p("h"), k = c.p("k"), r = a.total(), at = mtilde(a, h, k);
      Z lhs = chain(at + 1, a(h + 1, k) - 1, ChainDir::Up, r) * coset_sum(a);
      Z rhs = chain(at, a(h, k), ChainDir::Down, r) * coset_sum(shift_nat(a, h, k, 1));
      return std::make_pair(lhs, rhs);
    };
    s.enumerate = [](int nmax, int rmax) {
      return matrix_grid(nmax, rmax, [](const NatMatrix& m, std::vector<IdentityCase>& out) {
        for (int h = 1; h < m.n; ++h)
          for (int k = 1; k <= m.n; ++k)
            if (m(h + 1, k) >= 1) out.push_back(mcase("coset-sum-plus", m, {{"h", h}, {"k", k}}));
      });
    };
    reg.push_back(std::move(s));
  }
  {
    IdentitySpec s;
    s.name = "coset-sum-minus";
    s.summary = "down-chain(at-1) sum_{D_nuA cap S_mu} = up-chain(at) sum_{D_nuA- cap S_mu}, a_{h,k} >= 1";
    s.violation = [](const IdentityCase& c) {
      int n = c.a.n, h = c.p("h"), k = c.p("k");
      if (!in_range(h, 1, n - 1) || !in_range(k, 1, n)) return std::string("h or k out of range");
      return need(c.a(h, k) >= 1, "needs a_{h,k} >= 1");
    };
    s.sides = [](const IdentityCase& c) {
      const NatMatrix& a = c.a;
      int h = c.p("h"), k = c.p("k"), r = a.total(), at = mtilde(a, h, k);
      Z lhs = chain(at - 1, a(h, k) - 1, ChainDir::Down, r) * coset_sum(a);
      Z rhs = chain(at, a(h + 1, k), ChainDir::Up, r) * coset_sum(shift_nat(a, h, k, -1));
      return std::make_pair(lhs, rhs);
    };
    s.enumerate = [](int nmax, int rmax) {
      return matrix_grid(nmax, rmax, [](const NatMatrix& m, std::vector<IdentityCase>& out) {
        for (int h = 1; h < m.n; ++h)
          for (int k = 1; k <= m.n; ++k)
            if (m(h, k) >= 1) out.push_back(mcase("coset-sum-minus", m, {{"h", h}, {"k", k}}));
      });
    };
    reg.push_back(std::move(s));
  }

  // ---- interval sums commuting with chains

  {
    IdentitySpec s;
    s.name = "commute-down";
    s.summary = "c_{u-t+1,u+1} commutes with 1 + s_u + ... + s_u..s_{u-t+1}, t < u";
    s.chain_family = true;
    s.violation = [](const IdentityCase& c) {
      int u = c.p("u"), t = c.p("t");
      return need(t >= 1 && t < u && u + 1 <= c.r, "needs 1 <= t < u, u+1 <= r");
    };
    s.sides = [](const IdentityCase& c) {
      int u = c.p("u"), t = c.p("t"), r = c.r;
      Z ch = chain(u, t, ChainDir::Down, r), cc = C(u - t + 1, u + 1, r);
      return std::make_pair(cc * ch, ch * cc);
    };
    auto v = s.violation;
    s.enumerate = [v](int, int rmax) { return chain_grid("commute-down", rmax, false, true, false, v); };
    reg.push_back(std::move(s));
  }
  {
    IdentitySpec s;
    s.name = "commute-up";
    s.summary = "c_{u,u+v} commutes with 1 + s_u + ... + s_u..s_{u+v-1}";
    s.chain_family = true;
    s.violation = [](const IdentityCase& c) {
      int u = c.p("u"), v = c.p("v");
      return need(u >= 2 && v >= 1 && u + v <= c.r, "needs u >= 2 (some t < u), v >= 1, u+v <= r");
    };
    s.sides = [](const IdentityCase& c) {
      int u = c.p("u"), v = c.p("v"), r = c.r;
      Z ch = chain(u, v, ChainDir::Up, r), cc = C(u, u + v, r);
      return std::make_pair(cc * ch, ch * cc);
    };
    auto v = s.violation;
    s.enumerate = [v](int, int rmax) { return chain_grid("commute-up", rmax, true, false, false, v); };
    reg.push_back(std::move(s));
  }

  // ---- x_mu * Clifford * down chain

  auto down_hyp = [](const IdentityCase& c, bool uses_v) {
    int u = c.p("u"), t = c.p("t"), r = c.r;
    if (!(t >= 1 && t <= u && u <= r)) return std::string("needs 1 <= t <= u <= r");
    if (!same_block(c.mu, u - t + 1, u + 1)) return std::string("needs s_{u-t+1..u} in S_mu");
    if (uses_v) {
      int v = c.p("v");
      if (!(v >= 1 && u + v <= r)) return std::string("needs v >= 1, u+v <= r");
    }
    return std::string();
  };
  auto up_hyp = [](const IdentityCase& c, bool uses_t) {
    int u = c.p("u"), v = c.p("v"), r = c.r;
    if (!(u >= 1 && v >= 1 && u + v <= r)) return std::string("needs u, v >= 1, u+v <= r");
    if (!same_block(c.mu, u, u + v)) return std::string("needs s_{u..u+v-1} in S_mu");
    if (uses_t) {
      int t = c.p("t");
      if (!(t >= 1 && t <= u)) return std::string("needs 1 <= t <= u");
    }
    return std::string();
  };

  struct ChainEntry {
    const char* name;
    const char* summary;
    bool down;
    bool extra;  // uses v (down family) or t (up family)
    std::function<std::pair<Z, Z>(int u, int v, int t, int r, const Z& xmu)> f;  // returns (x_mu-free left factor, rhs)
  };

  std::vector<ChainEntry> chains = {
      {"down-chain-a", "x_mu D = (t+1) x_mu", true, false,
       [](int, int, int t, int r, const Z& x) { return std::make_pair(Z::one(r), (t + 1) * x); }},
      {"down-chain-b", "x_mu c_{u+1} D = x_mu c_{u-t+1,u+1}", true, false,
       [](int u, int, int t, int r, const Z& x) { return std::make_pair(c1(u + 1, r), x * C(u - t + 1, u + 1, r)); }},
      {"down-chain-c", "x_mu c_{u+1} c_{u+1,u+v} D = -(t+1) x_mu [+ x_mu c_{u-t+1,u+1} c_{u+2,u+v}]", true, true,
       [](int u, int v, int t, int r, const Z& x) {
         Z rhs = CheckedInt(-(t + 1)) * x;
         if (v > 1) rhs += x * C(u - t + 1, u + 1, r) * C(u + 2, u + v, r);
         return std::make_pair(c1(u + 1, r) * C(u + 1, u + v, r), rhs);
       }},
      {"down-chain-d", "x_mu c_{u+1} c_{u-t+1,u} D = 0", true, false,
       [](int u, int, int t, int r, const Z&) { return std::make_pair(c1(u + 1, r) * C(u - t + 1, u, r), Z(r)); }},
      {"down-chain-e", "x_mu c_{u+1} c_{u-t+1,u} c_{u+1,u+v} D = t x_mu c_{u-t+1,u+1}", true, true,
       [](int u, int v, int t, int r, const Z& x) {
         return std::make_pair(c1(u + 1, r) * C(u - t + 1, u, r) * C(u + 1, u + v, r),
                               CheckedInt(t) * (x * C(u - t + 1, u + 1, r)));
       }},
      {"down-chain0-a", "x_mu c_{u+1,u+v} D = x_mu c_{u-t+1,u+1} [+ (t+1) x_mu c_{u+2,u+v}]", true, true,
       [](int u, int v, int t, int r, const Z& x) {
         Z rhs = x * C(u - t + 1, u + 1, r);
         if (v > 1) rhs += CheckedInt(t + 1) * (x * C(u + 2, u + v, r));
         return std::make_pair(C(u + 1, u + v, r), rhs);
       }},
      {"down-chain0-b", "x_mu c_{u-t+1,u} D = t x_mu c_{u-t+1,u+1}", true, false,
       [](int u, int, int t, int r, const Z& x) {
         return std::make_pair(C(u - t + 1, u, r), CheckedInt(t) * (x * C(u - t + 1, u + 1, r)));
       }},
      {"down-chain0-c", "x_mu c_{u-t+1,u} c_{u+1,u+v} D = 0 or t x_mu c_{u-t+1,u+1} c_{u+2,u+v}", true, true,
       [](int u, int v, int t, int r, const Z& x) {
         Z rhs(r);
         if (v > 1) rhs = CheckedInt(t) * (x * C(u - t + 1, u + 1, r) * C(u + 2, u + v, r));
         return std::make_pair(C(u - t + 1, u, r) * C(u + 1, u + v, r), rhs);
       }},
      {"up-chain-a", "x_mu U = (v+1) x_mu", false, false,
       [](int, int v, int, int r, const Z& x) { return std::make_pair(Z::one(r), (v + 1) * x); }},
      {"up-chain-b", "x_mu c_u U = x_mu c_{u,u+v}", false, false,
       [](int u, int v, int, int r, const Z& x) { return std::make_pair(c1(u, r), x * C(u, u + v, r)); }},
      {"up-chain-c", "x_mu c_u c_{u+1,u+v} U = 0", false, false,
       [](int u, int v, int, int r, const Z&) { return std::make_pair(c1(u, r) * C(u + 1, u + v, r), Z(r)); }},
      {"up-chain-d", "x_mu c_u c_{u-t+1,u} U = -(v+1) x_mu [- x_mu c_{u-t+1,u-1} c_{u,u+v}]", false, true,
       [](int u, int v, int t, int r, const Z& x) {
         Z rhs = CheckedInt(-(v + 1)) * x;
         if (t > 1) rhs -= x * C(u - t + 1, u - 1, r) * C(u, u + v, r);
         return std::make_pair(c1(u, r) * C(u - t + 1, u, r), rhs);
       }},
      {"up-chain-e", "x_mu c_u c_{u-t+1,u} c_{u+1,u+v} U = -v x_mu c_{u,u+v}", false, true,
       [](int u, int v, int t, int r, const Z& x) {
         return std::make_pair(c1(u, r) * C(u - t + 1, u, r) * C(u + 1, u + v, r),
                               CheckedInt(-v) * (x * C(u, u + v, r)));
       }},
      {"up-chain0-a", "x_mu c_{u+1,u+v} U = v x_mu c_{u,u+v}", false, false,
       [](int u, int v, int, int r, const Z& x) {
         return std::make_pair(C(u + 1, u + v, r), CheckedInt(v) * (x * C(u, u + v, r)));
       }},
      {"up-chain0-b", "x_mu c_{u-t+1,u} U = x_mu c_{u,u+v} [+ (v+1) x_mu c_{u-t+1,u-1}]", false, true,
       [](int u, int v, int t, int r, const Z& x) {
         Z rhs = x * C(u, u + v, r);
         if (t > 1) rhs += CheckedInt(v + 1) * (x * C(u - t + 1, u - 1, r));
         return std::make_pair(C(u - t + 1, u, r), rhs);
       }},
      {"up-chain0-c", "x_mu c_{u-t+1,u} c_{u+1,u+v} U = 0 or v x_mu c_{u-t+1,u-1} c_{u,u+v}", false, true,
       [](int u, int v, int t, int r, const Z& x) {
         Z rhs(r);
         if (t > 1) rhs = CheckedInt(v) * (x * C(u - t + 1, u - 1, r) * C(u, u + v, r));
         return std::make_pair(C(u - t + 1, u, r) * C(u + 1, u + v, r), rhs);
       }},
  };

  for (const auto& e : chains) {
    IdentitySpec s;
    s.name = e.name;
    s.summary = e.summary;
    s.chain_family = true;
    bool down = e.down, extra = e.extra;
    s.violation = [down, extra, down_hyp, up_hyp](const IdentityCase& c) {
      return down ? down_hyp(c, extra) : up_hyp(c, extra);
    };
    auto f = e.f;
    s.sides = [down, extra, f](const IdentityCase& c) {
      int r = c.r, u = c.p("u");
      int v = (!down || extra) ? c.p("v") : 1;
      int t = (down || extra) ? c.p("t") : 1;
      Z x = x_sum(c.mu);
      auto [left, rhs] = f(u, v, t, r, x);
      Z ch = down ? chain(u, t, ChainDir::Down, r) : chain(u, v, ChainDir::Up, r);
      return std::make_pair(x * (left * ch), rhs);
    };
    auto viol = s.violation;
    std::string name = e.name;
    s.enumerate = [name, down, extra, viol](int, int rmax) {
      bool uses_v = down ? extra : true;
      bool uses_t = down ? true : extra;
      return chain_grid(name, rmax, uses_v, uses_t, true, viol);
    };
    reg.push_back(std::move(s));
  }
  return reg;
}

}  // namespace

const std::vector<IdentitySpec>& identity_registry() {
  static const std::vector<IdentitySpec> reg = build_registry();
  return reg;
}

const IdentitySpec& identity_spec(const std::string& name) {
  for (const auto& s : identity_registry())
    if (s.name == name) return s;
  throw InvalidArgument("unknown identity: " + name);
}

CaseOutcome check_identity(const IdentityCase& c) {
  const IdentitySpec& s = identity_spec(c.name);
  try {
    if (!s.violation(c).empty()) return CaseOutcome::Inadmissible;
  } catch (const InvalidArgument&) {
    return CaseOutcome::Inadmissible;
  }
  auto [lhs, rhs] = s.sides(c);
  return lhs == rhs ? CaseOutcome::Pass : CaseOutcome::Fail;
}

std::vector<IdentityCase> enumerate_cases(const std::string& name, int nmax, int rmax) {
  return identity_spec(name).enumerate(nmax, rmax);
}

IdentitySuiteReport run_identity_suite(int nmax, int rmax, const std::string& only, int chain_rmax) {
  IdentitySuiteReport rep;
  for (const auto& s : identity_registry()) {
    if (!only.empty() && s.name != only) continue;
    IdentityTally& tally = rep.by_name[s.name];
    int bound = s.chain_family && chain_rmax > 0 ? chain_rmax : rmax;
    for (const auto& c : s.enumerate(nmax, bound)) {
      ++tally.cases;
      CaseOutcome o = check_identity(c);
      if (o == CaseOutcome::Pass) {
        ++tally.passed;
      } else {
        ++tally.failed;
        if (tally.failures.size() < 5) tally.failures.push_back(c.describe() + " -> " + outcome_name(o));
      }
    }
    rep.cases += tally.cases;
    rep.failures += tally.failed;
  }
  return rep;
}

}  // namespace qschur
