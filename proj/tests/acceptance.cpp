// Acceptance gate: ten pass/fail criteria covering every identity the
// library asserts, each with a wall-clock budget where one applies.
// Prints one line per criterion and exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "invol/closed_forms.hpp"
#include "invol/exact.hpp"
#include "invol/permutation.hpp"
#include "invol/verify.hpp"

namespace {

using invol::CheckReport;
using invol::Int;

int g_failures = 0;

void emit(int index, const std::string& label, bool ok, double ms, double budget_ms,
          const std::string& extra) {
  const bool within_budget = budget_ms <= 0.0 || ms < budget_ms;
  const bool pass = ok && within_budget;
  if (!pass) ++g_failures;
  std::string detail = extra;
  if (!ok && detail.empty()) detail = "identity violated";
  if (ok && !within_budget)
    detail += (detail.empty() ? "" : "; ") + std::string("over budget");
  std::printf("[%s] criterion %2d: %s (%.1f ms", pass ? "PASS" : "FAIL", index, label.c_str(), ms);
  if (budget_ms > 0.0) std::printf(", budget %.0f ms", budget_ms);
  if (!detail.empty()) std::printf("; %s", detail.c_str());
  std::printf(")\n");
  std::fflush(stdout);
}

void run_report(int index, const std::string& label, double budget_ms,
                const std::function<CheckReport()>& checker,
                const std::function<std::string(const CheckReport&)>& postcheck = {}) {
  try {
    const CheckReport report = checker();
    std::string extra;
    bool ok = report.ok();
    if (!ok && !report.counterexamples.empty())
      extra = std::to_string(report.counterexamples.size()) +
              " counterexample(s), first at " + report.counterexamples.front().point;
    if (ok && postcheck) {
      extra = postcheck(report);
      ok = extra.empty() || extra[0] != '!';
      if (!ok) extra = extra.substr(1);
    }
    emit(index, label, ok, report.elapsed_ms, budget_ms, extra);
  } catch (const std::exception& e) {
    emit(index, label, false, 0.0, budget_ms, std::string("exception: ") + e.what());
  }
}

// Direct statistic checks on small symmetric groups; everything here is
// independent of the closed forms under test.
bool sanity_suite(std::string& detail) {
  using invol::StatKind;

  for (int n = 1; n <= 7; ++n) {
    bool bad = false;
    invol::for_each_permutation(n, [&](const std::vector<int>& w) {
      const std::span<const int> word(w);
      if (invol::rises(word) + invol::descents(word) != n - 1) bad = true;
    });
    if (bad) {
      detail = "rises + descents != n-1 at n=" + std::to_string(n);
      return false;
    }
  }

  for (int n = 1; n <= 8; ++n) {
    const invol::StatTable table = invol::brute_stat_table(n, StatKind::eulerian_a);
    Int total = 0;
    for (std::size_t k = 0; k < table.entries.size(); ++k) {
      total += table.entries[k];
      if (table.entries[k] != table.entries[table.entries.size() - 1 - k]) {
        detail = "descent table not palindromic at n=" + std::to_string(n);
        return false;
      }
    }
    if (total != invol::factorial(n)) {
      detail = "descent table does not sum to n! at n=" + std::to_string(n);
      return false;
    }
    std::vector<Int> by_rises(table.entries.size());
    invol::for_each_permutation(
        n, [&](const std::vector<int>& w) { ++by_rises[invol::rises(std::span<const int>(w))]; });
    if (by_rises != table.entries) {
      detail = "rises and descents not equidistributed at n=" + std::to_string(n);
      return false;
    }
  }

  for (int n = 0; n <= 10; ++n) {
    bool bad = false;
    invol::for_each_involution(n, [&](const std::vector<int>& w) {
      const std::span<const int> word(w);
      if (invol::sign_involution(word) != invol::sign_permutation(word)) bad = true;
    });
    if (bad) {
      detail = "involution sign shortcut disagrees at n=" + std::to_string(n);
      return false;
    }
  }

  return true;
}

}  // namespace

int main() {
  run_report(1, "signed rise table matches full enumeration, n <= 12", 10000.0,
             [] { return invol::check_thm3_bruteforce(12); });
  run_report(2, "polarization fibers sized by the binomial law, n <= 7, m <= 6", 30000.0,
             [] { return invol::check_prop1_fibers(7, 6); });
  run_report(3, "enumeration census matches the counting formulas, n <= 8, m <= 6", 30000.0,
             [] { return invol::check_prop2_even_count(8, 6); });
  run_report(4, "signed-count routes agree, n <= 60, m <= 60", 5000.0,
             [] { return invol::check_ahat_routes(60, 60); });
  run_report(5, "binomial convolutions reproduce the counts, n <= 10, m <= 10", 0.0,
             [] { return invol::check_eq34_binomial(10, 10); });
  run_report(6, "convolution-identity residual vanishes, n <= 20, s <= 20", 5000.0,
             [] { return invol::check_worpitzky(20, 20); });
  run_report(
      7, "bivariate series identity on the 17x17 window", 5000.0,
      [] { return invol::check_gf_identity(16, 16); },
      [](const CheckReport& r) {
        if (r.points_checked != 289)
          return "!expected 289 coefficients, saw " + std::to_string(r.points_checked);
        return std::string("289 coefficients compared");
      });
  run_report(
      8, "ten-term recurrence holds from a threshold n0 <= 4 through n = 200", 10000.0,
      [] { return invol::check_zeilberger(200); },
      [](const CheckReport& r) {
        if (!r.n0) return std::string("!no threshold reported");
        if (*r.n0 > 4) return "!n0=" + std::to_string(*r.n0) + " exceeds 4";
        return "n0=" + std::to_string(*r.n0);
      });
  run_report(9, "signed involution totals agree by four routes, n <= 500", 10000.0,
             [] { return invol::check_f1_fourway(500, 60); });

  {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
      ok = sanity_suite(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    emit(10, "permutation statistic sanity suite", ok, ms, 0.0, detail);
  }

  if (g_failures == 0) {
    std::printf("all 10 criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", g_failures);
  return 1;
}
