// one PASS/FAIL line per acceptance criterion; exit status 1 if any fails
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "qschur/verify.hpp"

using namespace qschur;

namespace {

struct Criterion {
  int id;
  const char* title;
  std::vector<std::pair<std::string, SuiteOptions>> suites;
  double limit_seconds;
};

SuiteOptions opts(int n, int rmax, int amax = -1, int chain_rmax = 0) {
  SuiteOptions o;
  o.n = n;
  o.rmax = rmax;
  o.amax = amax;
  o.chain_rmax = chain_rmax;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  std::vector<Criterion> crits = {
      {1, "Sergeev defining relations, r <= 5", {{"sergeev", opts(1, 5)}}, 60},
      {2, "identity registry, n <= 3, r <= 5, chains r <= 6", {{"identities", opts(3, 5, -1, 6)}}, 600},
      {3, "d_A equals brute-force minimum, n <= 3, |A| <= 6", {{"d-matrix", opts(3, 6)}}, 600},
      {4, "six generator formulas equal the oracle, n <= 3, r <= 4", {{"formulas", opts(3, 4)}}, 900},
      {5, "T_M rank and spanning-set rank equal |M(n,r)|, n <= 3, r <= 4",
       {{"tm-rank", opts(3, 4)}, {"blm-basis", opts(3, 4)}}, 900},
      {6, "QR1-QR6 and QS1-QS6 degreewise, n <= 3, r <= 4", {{"relations", opts(3, 4)}}, 900},
      {7, "triangular products, n <= 2, |A| <= 3", {{"triangular", opts(2, 3, 3)}}, 600},
      {8, "PBW images independent, n = 2, |A| <= 2, R = 3", {{"pi", opts(2, 3, 2)}}, 600},
      {9, "spot product in Q(2,1), both engines", {{"spot", opts(2, 1)}}, 60},
  };

  int failed = 0;
  for (const auto& c : crits) {
    if (only && c.id != only) continue;
    size_t cases = 0, failures = 0;
    double secs = 0;
    std::string note;
    for (const auto& [suite, o] : c.suites) {
      try {
        SuiteResult r = run_suite(suite, o);
        cases += r.cases;
        failures += r.failures;
        secs += r.seconds;
        if (!r.ok()) note += " " + suite + ": " + r.details.dump().substr(0, 400);
      } catch (const std::exception& e) {
        ++failures;
        note += " " + suite + " threw: " + e.what();
      }
    }
    bool ok = failures == 0 && cases > 0 && secs <= c.limit_seconds;
    if (secs > c.limit_seconds) note += " over the time limit";
    std::printf("%s criterion %d: %s | cases=%zu failures=%zu time=%.2fs limit=%.0fs%s\n", ok ? "PASS" : "FAIL", c.id,
                c.title, cases, failures, secs, c.limit_seconds, note.c_str());
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  return failed ? 1 : 0;
}
