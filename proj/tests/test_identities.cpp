#include <gtest/gtest.h>

#include <set>

#include "qschur/errors.hpp"
#include "qschur/identities.hpp"

using namespace qschur;

TEST(Identities, RegistryNamesAreUnique) {
  std::set<std::string> names;
  for (const auto& s : identity_registry()) {
    EXPECT_TRUE(names.insert(s.name).second) << s.name;
    EXPECT_FALSE(s.summary.empty());
  }
  EXPECT_EQ(names.size(), 25u);
  EXPECT_THROW(identity_spec("no-such-identity"), InvalidArgument);
}

TEST(Identities, EveryEntryHasCasesAndPasses) {
  auto rep = run_identity_suite(3, 4, "", 5);
  EXPECT_EQ(rep.failures, 0u);
  for (const auto& [name, t] : rep.by_name) {
    EXPECT_GT(t.cases, 0u) << name;
    EXPECT_EQ(t.failed, 0u) << name << ": " << (t.failures.empty() ? "" : t.failures.front());
  }
}

TEST(Identities, EnumeratedCasesAreAdmissible) {
  for (const auto& s : identity_registry())
    for (const auto& c : enumerate_cases(s.name, 2, 3)) EXPECT_TRUE(s.violation(c).empty()) << c.describe();
}

// negative control: perturbing one side must be caught
TEST(Identities, PerturbedRightSideFails) {
  for (const auto& s : identity_registry()) {
    size_t caught = 0, tried = 0;
    for (const auto& c : enumerate_cases(s.name, 2, 3)) {
      auto [lhs, rhs] = s.sides(c);
      if (rhs.is_zero()) continue;
      ++tried;
      caught += lhs != rhs.scaled(CheckedInt(2));
    }
    EXPECT_EQ(caught, tried) << s.name;
  }
}

// the chain hypotheses are not vacuous: dropping the block condition breaks some instances
TEST(Identities, ChainHypothesisIsNeeded) {
  const auto& s = identity_spec("down-chain-a");
  size_t broken = 0;
  for (int r = 2; r <= 4; ++r)
    for (int u = 1; u < r; ++u)
      for (int t = 1; t <= u; ++t) {
        IdentityCase c;
        c.name = s.name;
        c.r = r;
        c.mu = Composition(r, 1);
        c.params = {{"u", u}, {"t", t}, {"v", 1}};
        EXPECT_EQ(check_identity(c), CaseOutcome::Inadmissible);
        auto [lhs, rhs] = s.sides(c);
        broken += lhs != rhs;
      }
  EXPECT_GT(broken, 0u);
}

TEST(Identities, OutOfRangeParametersAreInadmissible) {
  IdentityCase c;
  c.name = "shift-plus";
  c.r = 1;
  c.a = NatMatrix(2);
  c.a(1, 1) = 1;
  c.params = {{"h", 5}, {"k", 1}, {"p", 0}};
  EXPECT_EQ(check_identity(c), CaseOutcome::Inadmissible);
}
