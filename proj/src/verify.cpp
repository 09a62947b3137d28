#include "qschur/verify.hpp"

#include <chrono>

#include "qschur/errors.hpp"

namespace qschur {

json SuiteResult::to_json() const {
  return json{{"suite", suite}, {"cases", cases}, {"failures", failures}, {"seconds", seconds}, {"details", details}};
}

std::vector<std::string> suite_names() {
  return {"identities", "sergeev", "d-matrix", "formulas", "tm-rank", "blm-basis", "relations", "triangular", "pi",
          "spot"};
}

Permutation min_double_coset_rep_bruteforce(const NatMatrix& m) {
  Composition ro = m.row_sums(), co = m.col_sums();
  std::optional<Permutation> best;
  for (const auto& w : all_permutations(m.total()))
    if (triple_to_matrix(ro, w, co) == m && (!best || w.length() < best->length())) best = w;
  if (!best) throw ConsistencyError("no permutation realizes the matrix");
  return *best;
}

namespace {

std::string mat_string(const NatMatrix& m) {
  std::string s = "[";
  for (size_t i = 0; i < m.v.size(); ++i) s += (i ? "," : "") + std::to_string(m.v[i]);
  return s + "]";
}

void suite_identities(SuiteResult& res, const SuiteOptions& o) {
  int chain = o.chain_rmax > 0 ? o.chain_rmax : o.rmax;
  auto rep = run_identity_suite(o.n, o.rmax, o.name, chain);
  if (!o.name.empty() && rep.by_name.empty()) throw InvalidArgument("unknown identity: " + o.name);
  res.cases = rep.cases;
  res.failures = rep.failures;
  res.details = to_json(rep);
  res.details["nmax"] = o.n;
  res.details["rmax"] = o.rmax;
  res.details["chain_rmax"] = chain;
}

void suite_sergeev(SuiteResult& res, const SuiteOptions& o) {
  json per = json::object();
  for (int r = 1; r <= o.rmax; ++r) {
    auto rep = check_sergeev_relations(r);
    res.cases += rep.checks;
    res.failures += rep.failures.size();
    per[std::to_string(r)] = json{{"checks", rep.checks}, {"failures", rep.failures}};
  }
  res.details["by_degree"] = per;
}

void suite_d_matrix(SuiteResult& res, const SuiteOptions& o) {
  json bad = json::array();
  for (int n = 1; n <= o.n; ++n)
    for (int r = 0; r <= o.rmax; ++r)
      for (const auto& m : nat_matrices(n, r)) {
        ++res.cases;
        if (d_of_matrix(m) != min_double_coset_rep_bruteforce(m)) {
          ++res.failures;
          if (bad.size() < 10) bad.push_back(mat_string(m));
        }
      }
  res.details["mismatches"] = bad;
}

void suite_formulas(SuiteResult& res, const SuiteOptions& o) {
  json per = json::object(), bad = json::array();
  size_t residuals = 0;
  for (Shape s : kAllShapes) {
    size_t cases = 0, fails = 0;
    for (int n = 1; n <= o.n; ++n)
      for (int r = 0; r <= o.rmax; ++r)
        for (const auto& a : super_matrices(n, r))
          for (int h : shape_indices(s, n)) {
            auto x = generator_matrix(s, h, a.ro());
            if (!x) continue;
            ++cases;
            try {
              if (formula_product(s, h, a) != oracle_product(*x, a)) {
                ++fails;
                if (bad.size() < 10) bad.push_back(std::string(shape_name(s)) + " h=" + std::to_string(h) + " A=" + a.to_string());
              }
            } catch (const ConsistencyError& e) {
              ++fails;
              ++residuals;
              if (bad.size() < 10) bad.push_back(e.what());
            }
          }
    per[shape_name(s)] = json{{"cases", cases}, {"failures", fails}};
    res.cases += cases;
    res.failures += fails;
  }
  res.details["shapes"] = per;
  res.details["residuals"] = residuals;
  res.details["examples"] = bad;
}

void suite_tm_rank(SuiteResult& res, const SuiteOptions& o) {
  json rows = json::array();
  for (int n = 1; n <= o.n; ++n)
    for (int r = 0; r <= o.rmax; ++r) {
      size_t count = 0, rk = 0;
      bool disjoint = true;
      for (const auto& b : tm_rank_report(n, r)) {
        count += b.count;
        rk += b.rank;
        disjoint = disjoint && b.disjoint_supports;
      }
      size_t dim = count_super_matrices(n, r);
      bool ok = count == dim && rk == dim && disjoint;
      ++res.cases;
      if (!ok) ++res.failures;
      rows.push_back(json{{"n", n}, {"r", r}, {"dim", dim}, {"count", count}, {"rank", rk}, {"ok", ok}});
    }
  res.details["rows"] = rows;
}

void suite_blm_basis(SuiteResult& res, const SuiteOptions& o) {
  json rows = json::array();
  for (int n = 1; n <= o.n; ++n)
    for (int r = 0; r <= o.rmax; ++r) {
      auto b = blm_basis_rank(n, r);
      bool ok = b.size == b.dim && b.rank == b.dim;
      ++res.cases;
      if (!ok) ++res.failures;
      rows.push_back(json{{"n", n}, {"r", r}, {"dim", b.dim}, {"size", b.size}, {"rank", b.rank}, {"ok", ok}});
    }
  res.details["rows"] = rows;
}

void suite_relations(SuiteResult& res, const SuiteOptions& o) {
  json reps = json::array();
  for (auto s : {RelationSuite::QR, RelationSuite::QS})
    for (int n = 1; n <= o.n; ++n) {
      auto rep = check_relations(s, n, o.rmax);
      res.cases += rep.checks;
      res.failures += rep.failures.size();
      json j = to_json(rep);
      if (j["failures"].size() > 10) j["failures"] = json(std::vector<std::string>(rep.failures.begin(), rep.failures.begin() + 10));
      reps.push_back(j);
    }
  res.details["reports"] = reps;
}

void suite_triangular(SuiteResult& res, const SuiteOptions& o) {
  int amax = o.amax >= 0 ? o.amax : o.rmax;
  json rows = json::array();
  std::map<std::string, size_t> signs;
  for (int n = 1; n <= o.n; ++n)
    for (int s = 0; s <= amax; ++s)
      for (const auto& a : strict_super_matrices(n, s)) {
        int factors = 0;
        for (const auto& f : triangular_factors(a)) factors += f.second;
        int R = std::max({o.rmax, s, factors});
        auto t = triangular_product(a, R);
        ++res.cases;
        bool ok = t.ok() && t.expansion_match;
        ++signs[std::to_string(t.leading_sign)];
        if (!ok) {
          ++res.failures;
          if (rows.size() < 10) rows.push_back(to_json(t));
        }
      }
  res.details["amax"] = amax;
  res.details["leading_signs"] = signs;
  res.details["failed"] = rows;
}

void suite_pi(SuiteResult& res, const SuiteOptions& o) {
  int amax = o.amax >= 0 ? o.amax : std::max(0, o.rmax - 1);
  auto rep = pi_images_check(o.n, o.rmax, amax);
  res.cases = rep.qs.checks + 1;
  res.failures = rep.qs.failures.size() + (rep.rank == rep.count ? 0 : 1);
  json qs = to_json(rep.qs);
  if (qs["failures"].size() > 10) qs["failures"] = json(std::vector<std::string>(rep.qs.failures.begin(), rep.qs.failures.begin() + 10));
  res.details = json{{"n", o.n}, {"R", o.rmax}, {"amax", amax}, {"pbw_count", rep.count}, {"pbw_rank", rep.rank}, {"qs", qs}};
}

void suite_spot(SuiteResult& res, const SuiteOptions&) {
  NatMatrix z(2);
  SuperMatrix x(z, unit_matrix(2, 1, 2)), a(z, unit_matrix(2, 2, 1));
  QElement expect = QElement::phi(SuperMatrix(unit_matrix(2, 1, 1), z)).scaled(-1);
  QElement f = product(x, a, Engine::Formula), g = product(x, a, Engine::Oracle);
  res.cases = 2;
  res.failures = (f == expect ? 0 : 1) + (g == expect ? 0 : 1);
  res.details = json{{"formula", to_json(f)}, {"oracle", to_json(g)}, {"expected", to_json(expect)}};
}

}  // namespace

SuiteResult run_suite(const std::string& suite, const SuiteOptions& opt) {
  if (opt.n < 1 || opt.rmax < 0) throw InvalidArgument("suite options need n >= 1 and rmax >= 0");
  SuiteResult res;
  res.suite = suite;
  auto t0 = std::chrono::steady_clock::now();
  if (suite == "identities" || suite == "section3") suite_identities(res, opt);
  else if (suite == "sergeev") suite_sergeev(res, opt);
  else if (suite == "d-matrix") suite_d_matrix(res, opt);
  else if (suite == "formulas") suite_formulas(res, opt);
  else if (suite == "tm-rank") suite_tm_rank(res, opt);
  else if (suite == "blm-basis") suite_blm_basis(res, opt);
  else if (suite == "relations") suite_relations(res, opt);
  else if (suite == "triangular") suite_triangular(res, opt);
  else if (suite == "pi") suite_pi(res, opt);
  else if (suite == "spot") suite_spot(res, opt);
  else throw InvalidArgument("unknown suite: " + suite);
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace qschur
