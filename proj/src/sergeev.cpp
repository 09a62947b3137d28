#include "qschur/sergeev.hpp"

namespace qschur {

std::pair<int, CliffordMask> clifford_normalize(const std::vector<int>& factors, int r) {
  int sign = 1;
  CliffordMask m = 0;
  for (int i : factors) {
    if (i < 1 || i > r) throw InvalidArgument("clifford index out of range");
    sign *= detail::clifford_sign(m, CliffordMask{1} << (i - 1));
    m ^= CliffordMask{1} << (i - 1);
  }
  return {sign, m};
}

SergeevElementZ sum_of(const std::vector<Permutation>& perms, int r) {
  SergeevElementZ e(r);
  for (const auto& w : perms) e.add_term(detail::mono_key(w.key(), 0), 1);
  return e;
}

SergeevElementZ x_sum(const Composition& lambda) {
  return sum_of(young_subgroup_members(lambda), composition_sum(lambda));
}

SergeevElementZ y_sum(const Composition& lambda) {
  SergeevElementZ e(composition_sum(lambda));
  for (const auto& w : young_subgroup_members(lambda)) e.add_term(detail::mono_key(w.key(), 0), w.length() % 2 ? -1 : 1);
  return e;
}

SergeevElementZ c_interval(int i, int j, int r) {
  if (i < 1 || j > r || i > j) throw InvalidArgument("c_interval needs 1 <= i <= j <= r");
  SergeevElementZ e(r);
  for (int k = i; k <= j; ++k) e += SergeevElementZ::clifford(k, r);
  return e;
}

SergeevElementZ c_alpha_lambda(const Composition& lambda, const std::vector<int>& alpha) {
  if (alpha.size() != lambda.size()) throw InvalidArgument("alpha length mismatch");
  int r = composition_sum(lambda);
  auto t = prefix_sums(lambda);
  SergeevElementZ e = SergeevElementZ::one(r);
  for (size_t b = 0; b < lambda.size(); ++b) {
    if (alpha[b] != 0 && alpha[b] != 1) throw InvalidArgument("alpha entries must be 0 or 1");
    if (!alpha[b]) continue;
    if (lambda[b] == 0) throw InvalidArgument("alpha_i = 1 on an empty block");
    e = e * c_interval(t[b] + 1, t[b + 1], r);
  }
  return e;
}

SergeevElementZ word_element(const std::vector<int>& idx, int r) { return SergeevElementZ::perm(word(idx, r)); }

SergeevElementZ chain(int start, int len, ChainDir dir, int r) {
  SergeevElementZ e = SergeevElementZ::one(r);
  Permutation w = Permutation::identity(r);
  int step = dir == ChainDir::Up ? 1 : -1;
  for (int m = 0; m < len; ++m) {
    w = w * Permutation::simple(start + step * m, r);
    e += SergeevElementZ::perm(w);
  }
  return e;
}

SergeevElementZ t_body(const SuperMatrix& m) {
  if (!m.valid()) throw InvalidArgument("invalid super matrix");
  NatMatrix a = m.abs();
  int r = a.total();
  Triple tr = matrix_to_triple(a);
  Composition nu = m.nu();
  std::vector<int> alpha;
  for (int j = 1; j <= m.n; ++j)
    for (int i = 1; i <= m.n; ++i) alpha.push_back(m.o(i, j));
  SergeevElementZ cm = c_alpha_lambda(nu, alpha);
  std::vector<Permutation> sig;
  for (const auto& s : min_right_coset_reps(nu))
    if (in_young_subgroup(s, tr.mu)) sig.push_back(s);
  return SergeevElementZ::perm(tr.d) * cm * sum_of(sig, r);
}

SergeevElementZ t_matrix(const SuperMatrix& m) { return x_sum(m.ro()) * t_body(m); }

SergeevRelationReport check_sergeev_relations(int r) {
  if (r < 1 || r > kMaxDegree) throw InvalidArgument("check_sergeev_relations: degree out of range");
  using Z = SergeevElementZ;
  SergeevRelationReport rep;
  rep.r = r;
  const Z one = Z::one(r);
  auto s = [&](int i) { return Z::perm(Permutation::simple(i, r)); };
  auto c = [&](int i) { return Z::clifford(i, r); };
  auto expect = [&](const std::string& what, const Z& lhs, const Z& rhs) {
    ++rep.checks;
    if (!(lhs == rhs)) rep.failures.push_back(what);
  };
  auto tag = [](const char* name, int i, int j = 0) {
    return std::string(name) + "(" + std::to_string(i) + (j ? "," + std::to_string(j) : std::string()) + ")";
  };
  for (int i = 1; i < r; ++i) {
    expect(tag("s_i^2=1", i), s(i) * s(i), one);
    for (int j = 1; j < r; ++j) {
      if (std::abs(i - j) == 1) expect(tag("braid", i, j), s(i) * s(j) * s(i), s(j) * s(i) * s(j));
      if (std::abs(i - j) > 1) expect(tag("s_i s_j=s_j s_i", i, j), s(i) * s(j), s(j) * s(i));
    }
    expect(tag("s_i c_i=c_i+1 s_i", i), s(i) * c(i), c(i + 1) * s(i));
    expect(tag("s_i c_i+1=c_i s_i", i), s(i) * c(i + 1), c(i) * s(i));
    for (int j = 1; j <= r; ++j)
      if (j != i && j != i + 1) expect(tag("s_i c_j=c_j s_i", i, j), s(i) * c(j), c(j) * s(i));
  }
  for (int i = 1; i <= r; ++i) {
    expect(tag("c_i^2=-1", i), c(i) * c(i), CheckedInt(-1) * one);
    for (int j = 1; j <= r; ++j)
      if (j != i) expect(tag("c_i c_j=-c_j c_i", i, j), c(i) * c(j), CheckedInt(-1) * (c(j) * c(i)));
  }
  std::vector<std::pair<std::string, Z>> gens;
  for (int i = 1; i < r; ++i) gens.emplace_back("s" + std::to_string(i), s(i));
  for (int i = 1; i <= r; ++i) gens.emplace_back("c" + std::to_string(i), c(i));
  for (const auto& [na, a] : gens)
    for (const auto& [nb, b] : gens)
      for (const auto& [nc, cc] : gens) expect("assoc(" + na + "," + nb + "," + nc + ")", (a * b) * cc, a * (b * cc));
  return rep;
}

}  // namespace qschur
