#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qschur/sergeev.hpp"
#include "qschur/symgroup.hpp"

namespace qschur {

struct IdentityCase {
  std::string name;
  int r = 0;
  NatMatrix a;    // n = 0 when unused
  Composition mu;  // empty when unused
  std::map<std::string, int> params;

  int p(const std::string& key) const;
  std::string describe() const;
};

enum class CaseOutcome { Pass, Fail, Inadmissible };
const char* outcome_name(CaseOutcome o);

struct IdentitySpec {
  std::string name;
  std::string summary;
  // empty string when the case satisfies the hypotheses
  std::function<std::string(const IdentityCase&)> violation;
  std::function<std::pair<SergeevElementZ, SergeevElementZ>(const IdentityCase&)> sides;
  std::function<std::vector<IdentityCase>(int nmax, int rmax)> enumerate;
  bool chain_family = false;  // parameterized by (u, v, t, mu) rather than a matrix
};

const std::vector<IdentitySpec>& identity_registry();
const IdentitySpec& identity_spec(const std::string& name);

CaseOutcome check_identity(const IdentityCase& c);
// admissible grid: matrix families use n <= nmax, |A| <= rmax; chain families use r <= rmax
std::vector<IdentityCase> enumerate_cases(const std::string& name, int nmax, int rmax);

struct IdentityTally {
  size_t cases = 0, passed = 0, failed = 0;
  std::vector<std::string> failures;  // first few descriptions
};

struct IdentitySuiteReport {
  std::map<std::string, IdentityTally> by_name;
  size_t cases = 0, failures = 0;
};

// chain_rmax bounds r for the chain families; 0 means rmax
IdentitySuiteReport run_identity_suite(int nmax, int rmax, const std::string& only = "", int chain_rmax = 0);

}  // namespace qschur
