#include "invol/verify.hpp"

#include <chrono>
#include <functional>
#include <string>

#include "invol/closed_forms.hpp"
#include "invol/geninv.hpp"
#include "invol/permutation.hpp"
#include "invol/series.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace invol {

namespace {

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct CellResult {
  long long points = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;
};

void run_cells(int count, int threads, const std::function<void(int)>& body) {
  if (threads > 1) {
#ifdef _OPENMP
#pragma omp parallel for num_threads(threads) schedule(dynamic)
    for (int c = 0; c < count; ++c) body(c);
#else
    for (int c = 0; c < count; ++c) body(c);
#endif
  } else {
    for (int c = 0; c < count; ++c) body(c);
  }
}

void merge_cells(CheckReport& report, std::vector<CellResult>& cells) {
  for (auto& cell : cells) {
    report.points_checked += cell.points;
    for (auto& cex : cell.counterexamples) report.counterexamples.push_back(std::move(cex));
    for (auto& note : cell.notes) report.notes.push_back(std::move(note));
  }
}

std::string word_str(const std::vector<int>& word) {
  std::string out = "[";
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(word[i]);
  }
  return out + "]";
}

void expect_eq(CellResult& cell, const Int& lhs, const Int& rhs, const std::string& point,
               const std::string& label) {
  ++cell.points;
  if (lhs != rhs)
    cell.counterexamples.push_back({point, label + ": lhs=" + lhs.str() + " rhs=" + rhs.str()});
}

}  // namespace

CheckReport check_thm3_bruteforce(int n_max, int threads) {
  Stopwatch sw;
  CheckReport report{.identity = "thm3-bruteforce", .range = "0<=n<=" + std::to_string(n_max)};
  std::vector<CellResult> cells(static_cast<std::size_t>(n_max) + 1);
  run_cells(n_max + 1, threads, [&](int n) {
    CellResult& cell = cells[static_cast<std::size_t>(n)];
    const StatTable brute = brute_stat_table(n, StatKind::involution_f);
    const int len = static_cast<int>(brute.entries.size());
    for (int k = 0; k < len; ++k)
      expect_eq(cell, f_signed(n, k), brute.entries[static_cast<std::size_t>(k)],
                "n=" + std::to_string(n) + ",k=" + std::to_string(k), "formula vs enumeration");
    // Off-table indices must vanish (n = 0 keeps its single entry at k = 0).
    for (int k : {-2, -1, len, len + 1, len + 2})
      expect_eq(cell, f_signed(n, k), 0, "n=" + std::to_string(n) + ",k=" + std::to_string(k),
                "out-of-range index");
  });
  merge_cells(report, cells);
  report.elapsed_ms = sw.ms();
  return report;
}

CheckReport check_prop1_fibers(int n_max, int m_max, int threads) {
  Stopwatch sw;
  CheckReport report{.identity = "prop1-fibers",
                     .range = "0<=n<=" + std::to_string(n_max) + ",1<=m<=" + std::to_string(m_max)};
  const int count = (n_max + 1) * m_max;
  std::vector<CellResult> cells(static_cast<std::size_t>(count));
  run_cells(count, threads, [&](int c) {
    CellResult& cell = cells[static_cast<std::size_t>(c)];
    const int n = c / m_max;
    const int m = 1 + c % m_max;
    const std::string where = "n=" + std::to_string(n) + ",m=" + std::to_string(m);
    Int covered = 0;
    for (const auto& [sigma, size] : fibers(n, m)) {
      ++cell.points;
      if (!is_involution(sigma)) {
        cell.counterexamples.push_back(
            {where + ",sigma=" + word_str(sigma.word()), "fiber key is not an involution"});
        continue;
      }
      const Int expected = binomial(n + m - rises(sigma) - 1LL, n);
      if (size != expected)
        cell.counterexamples.push_back({where + ",sigma=" + word_str(sigma.word()),
                                        "fiber size: lhs=" + size.str() +
                                            " rhs=" + expected.str()});
      covered += size;
    }
    expect_eq(cell, covered, a_total(n, m), where, "fiber sizes vs total count");
  });
  merge_cells(report, cells);
  report.elapsed_ms = sw.ms();
  return report;
}

CheckReport check_prop2_even_count(int n_max, int m_max, int threads) {
  Stopwatch sw;
  CheckReport report{.identity = "prop2-even-count",
                     .range = "0<=n<=" + std::to_string(n_max) + ",0<=m<=" + std::to_string(m_max)};
  const int count = (n_max + 1) * (m_max + 1);
  std::vector<CellResult> cells(static_cast<std::size_t>(count));
  run_cells(count, threads, [&](int c) {
    CellResult& cell = cells[static_cast<std::size_t>(c)];
    const int n = c / (m_max + 1);
    const int m = c % (m_max + 1);
    const std::string where = "n=" + std::to_string(n) + ",m=" + std::to_string(m);
    const GenInvCensus tallies = census(n, m);
    expect_eq(cell, a_plus(n, m), tallies.even, where, "even count");
    expect_eq(cell, a_total(n, m), tallies.total, where, "total count");
    expect_eq(cell, a_hat(n, m), tallies.signed_sum, where, "signed count");
  });
  merge_cells(report, cells);
  report.elapsed_ms = sw.ms();
  return report;
}

CheckReport check_eq34_binomial(int n_max, int m_max, int threads) {
  Stopwatch sw;
  CheckReport report{.identity = "eq34-binomial",
                     .range = "1<=n<=" + std::to_string(n_max) + ",0<=m<=" + std::to_string(m_max)};
  report.notes.push_back(
      "n=0 excluded: the signed convolution degenerates at (n,m)=(0,0)");
  std::vector<CellResult> cells(static_cast<std::size_t>(n_max));
  run_cells(n_max, threads, [&](int c) {
    CellResult& cell = cells[static_cast<std::size_t>(c)];
    const int n = c + 1;
    for (int m = 0; m <= m_max; ++m) {
      const std::string where = "n=" + std::to_string(n) + ",m=" + std::to_string(m);
      Int conv_plus = 0, conv_minus = 0, conv_signed = 0;
      for (int k = 0; k <= m - 1; ++k) {
        const Int weight = binomial(n + static_cast<long long>(k), k);
        const auto [fp, fm] = f_split(n, m - k - 1);
        conv_plus += weight * fp;
        conv_minus += weight * fm;
        conv_signed += weight * f_signed(n, m - k - 1);
      }
      expect_eq(cell, conv_plus, a_plus(n, m), where, "even convolution");
      expect_eq(cell, conv_minus, a_minus(n, m), where, "odd convolution");
      expect_eq(cell, conv_signed, a_hat(n, m), where, "signed convolution");
    }
  });
  merge_cells(report, cells);
  report.elapsed_ms = sw.ms();
  return report;
}

CheckReport check_ahat_routes(int n_max, int m_max, int threads) {
  Stopwatch sw;
  CheckReport report{.identity = "ahat-routes",
                     .range = "0<=n<=" + std::to_string(n_max) + ",0<=m<=" + std::to_string(m_max)};
  std::vector<CellResult> cells(static_cast<std::size_t>(n_max) + 1);
  run_cells(n_max + 1, threads, [&](int n) {
    CellResult& cell = cells[static_cast<std::size_t>(n)];
    for (int m = 0; m <= m_max; ++m)
      expect_eq(cell, a_hat_from_counts(n, m), a_hat_alternating(n, m),
                "n=" + std::to_string(n) + ",m=" + std::to_string(m), "count route vs sum route");
  });
  merge_cells(report, cells);
  report.elapsed_ms = sw.ms();
  return report;
}

CheckReport check_worpitzky(int n_max, int s_max, int threads) {
  Stopwatch sw;
  CheckReport report{.identity = "worpitzky",
                     .range = "1<=n<=" + std::to_string(n_max) + ",1<=s<=" + std::to_string(s_max)};
  std::vector<CellResult> cells(static_cast<std::size_t>(n_max));
  run_cells(n_max, threads, [&](int c) {
    CellResult& cell = cells[static_cast<std::size_t>(c)];
    const int n = c + 1;
    for (int s = 1; s <= s_max; ++s)
      expect_eq(cell, worpitzky_residual(n, s), 0,
                "n=" + std::to_string(n) + ",s=" + std::to_string(s), "residual");
  });
  merge_cells(report, cells);
  report.elapsed_ms = sw.ms();
  return report;
}

CheckReport check_gf_identity(int u_max, int t_max, int threads) {
  Stopwatch sw;
  CheckReport report{.identity = "gf-identity",
                     .range = "t<=" + std::to_string(t_max) + ",u<=" + std::to_string(u_max)};
  for (const CoeffMismatch& bad : verify_gf_identity(u_max, t_max, threads))
    report.counterexamples.push_back(
        {"t^" + std::to_string(bad.t_deg) + ",u^" + std::to_string(bad.u_deg),
         "lhs=" + bad.lhs.str() + " rhs=" + bad.rhs.str()});
  report.points_checked = static_cast<long long>(t_max + 1) * (u_max + 1);
  report.elapsed_ms = sw.ms();
  return report;
}

CheckReport check_zeilberger(int n_max, int threads) {
  Stopwatch sw;
  CheckReport report{.identity = "zeilberger",
                     .range = "3<=n<=" + std::to_string(n_max) + ",-3<=k<=n+1"};

  // Tabulate the signed rise rows once; every residual then costs ten
  // lookups.  Rows are independent, so they fill in parallel.
  std::vector<std::vector<Int>> rows(static_cast<std::size_t>(n_max) + 1);
  run_cells(n_max + 1, threads, [&](int n) { rows[static_cast<std::size_t>(n)] = f_signed_row(n); });
  const auto lookup = [&rows](int n, int k) -> Int {
    return rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  };

  int last_failing_n = 2;
  for (int n = 3; n <= n_max; ++n) {
    for (int k = -3; k <= n + 1; ++k) {
      ++report.points_checked;
      const Int residual = zeilberger_residual_with(n, k, lookup);
      if (residual == 0) continue;
      const std::string point = "n=" + std::to_string(n) + ",k=" + std::to_string(k);
      if (n <= 4) {
        last_failing_n = std::max(last_failing_n, n);
        report.notes.push_back("residual " + residual.str() + " at " + point +
                               " (below the reported threshold)");
      } else {
        report.counterexamples.push_back({point, "residual=" + residual.str()});
        last_failing_n = std::max(last_failing_n, n);
      }
    }
  }
  report.n0 = last_failing_n + 1;
  report.notes.push_back("recurrence holds from n0=" + std::to_string(*report.n0) + " onward");
  report.elapsed_ms = sw.ms();
  return report;
}

CheckReport check_f1_fourway(int n_max, int sum_n_max, int threads) {
  Stopwatch sw;
  CheckReport report{.identity = "f1-fourway",
                     .range = "0<=n<=" + std::to_string(n_max) +
                              " (row sums to n<=" + std::to_string(sum_n_max) + ")"};
  const std::vector<Int> by_recurrence = F1_recurrence(n_max);
  const std::vector<Int> by_egf = egf_scaled(n_max);

  std::vector<CellResult> cells(static_cast<std::size_t>(n_max) + 1);
  run_cells(n_max + 1, threads, [&](int n) {
    CellResult& cell = cells[static_cast<std::size_t>(n)];
    const std::string where = "n=" + std::to_string(n);
    const Int closed = F1_closed(n);
    expect_eq(cell, closed, by_recurrence[static_cast<std::size_t>(n)], where,
              "closed form vs recurrence");
    expect_eq(cell, closed, by_egf[static_cast<std::size_t>(n)], where, "closed form vs egf route");
    expect_eq(cell, closed, 2 * i_plus(n) - involutions_count(n), where,
              "closed form vs sign-class counts");
    if (n <= sum_n_max) {
      const std::vector<Int> row = f_signed_row(n);
      Int sum = 0;
      for (const Int& v : row) sum += v;
      expect_eq(cell, closed, sum, where, "closed form vs row sum");
    }
  });
  merge_cells(report, cells);

  // Fixed spot values, independent of every route above.
  CellResult spots;
  expect_eq(spots, F1_closed(4), Int(-2), "n=4", "spot value");
  expect_eq(spots, F1_closed(5), Int(6), "n=5", "spot value");
  report.points_checked += spots.points;
  for (auto& cex : spots.counterexamples) report.counterexamples.push_back(std::move(cex));

  report.elapsed_ms = sw.ms();
  return report;
}

std::vector<CheckReport> check_all(int threads) {
  std::vector<CheckReport> reports;
  reports.push_back(check_prop1_fibers(7, 6, threads));
  reports.push_back(check_prop2_even_count(8, 6, threads));
  reports.push_back(check_eq34_binomial(10, 10, threads));
  reports.push_back(check_thm3_bruteforce(12, threads));
  reports.push_back(check_worpitzky(20, 20, threads));
  reports.push_back(check_gf_identity(16, 16, threads));
  reports.push_back(check_zeilberger(200, threads));
  reports.push_back(check_f1_fourway(500, 60, threads));
  reports.push_back(check_ahat_routes(60, 60, threads));
  return reports;
}

}  // namespace invol
