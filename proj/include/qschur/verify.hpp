#pragma once

#include <string>
#include <vector>

#include "qschur/json_io.hpp"

namespace qschur {

struct SuiteOptions {
  int n = 2;           // grid suites sweep sizes 1..n; pi uses n itself
  int rmax = 3;        // degree bound / truncation
  int amax = -1;       // |A| bound for triangular and pi (default: rmax, resp. rmax - 1)
  int chain_rmax = 0;  // degree bound for the chain identities (default: rmax)
  std::string name;    // single identity filter
};

struct SuiteResult {
  std::string suite;
  size_t cases = 0;
  size_t failures = 0;
  double seconds = 0;
  json details = json::object();
  bool ok() const { return failures == 0; }
  json to_json() const;
};

// identities (alias section3), sergeev, d-matrix, formulas, tm-rank, blm-basis, relations, triangular, pi, spot
std::vector<std::string> suite_names();
// InvalidArgument for an unknown suite
SuiteResult run_suite(const std::string& suite, const SuiteOptions& opt);

// the minimal-length permutation d with triple_to_matrix(ro, d, co) = m, by scanning S_r
Permutation min_double_coset_rep_bruteforce(const NatMatrix& m);

}  // namespace qschur
