#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invol/exact.hpp"

namespace invol {

struct Counterexample {
  std::string point;   // e.g. "n=3,k=1"
  std::string detail;  // e.g. "lhs=4 rhs=5"
  bool operator==(const Counterexample&) const = default;
};

struct CheckReport {
  std::string identity;
  std::string range;
  long long points_checked = 0;
  std::vector<Counterexample> counterexamples;
  double elapsed_ms = 0.0;
  // Minimal n from which the ten-term recurrence holds (zeilberger only).
  std::optional<int> n0;
  // Informational remarks that are not failures (e.g. excluded points).
  std::vector<std::string> notes;

  bool ok() const { return counterexamples.empty(); }
};

// Each checker sweeps its documented grid and reports every violation as a
// counterexample; an empty list means the identity held everywhere.  The
// grids decompose into independent cells, so threads > 1 fans the cells out
// across workers and merges per-cell results in deterministic cell order.
// Defaults match the ranges the identities are asserted for.

// Signed rise table from the inversion formula equals the table enumerated
// over all involutions, for 0 <= n <= n_max.
CheckReport check_thm3_bruteforce(int n_max = 12, int threads = 1);

// Every polarization fiber has size C(n+m-t-1, n), t = rises of the image
// involution; every fiber key is an involution; fiber sizes sum to the
// closed-form total.  0 <= n <= n_max, 1 <= m <= m_max.
CheckReport check_prop1_fibers(int n_max = 7, int m_max = 6, int threads = 1);

// Closed forms against the enumeration census: a_plus counts even objects,
// a_total counts all, a_hat matches the signed sum.  0 <= n,m within range.
CheckReport check_prop2_even_count(int n_max = 8, int m_max = 6, int threads = 1);

// Binomial convolutions of the split and signed tables reproduce a_plus,
// a_minus, and a_hat, for 1 <= n <= n_max, 0 <= m <= m_max.  (The a_hat form
// degenerates at the excluded point (0,0).)
CheckReport check_eq34_binomial(int n_max = 10, int m_max = 10, int threads = 1);

// 2*a_plus - a_total equals the alternating sum, 0 <= n,m <= bounds.
CheckReport check_ahat_routes(int n_max = 60, int m_max = 60, int threads = 1);

// worpitzky_residual(n, s) = 0 for 1 <= n <= n_max, 1 <= s <= s_max.
CheckReport check_worpitzky(int n_max = 20, int s_max = 20, int threads = 1);

// Coefficient-by-coefficient comparison of the bivariate identity on the
// window t <= t_max, u <= u_max.
CheckReport check_gf_identity(int u_max = 16, int t_max = 16, int threads = 1);

// Ten-term recurrence residual over 3 <= n <= n_max, -3 <= k <= n+1, with
// tabulated rows.  Reports the minimal n0 from which every residual
// vanishes; early rows that fail are noted, not counted as counterexamples,
// as long as n0 <= 4.
CheckReport check_zeilberger(int n_max = 200, int threads = 1);

// Four routes to the signed involution count agree for 0 <= n <= n_max, and
// the row sums of the signed rise table agree for n <= sum_n_max; includes
// the fixed spot values at n = 4 and n = 5.
CheckReport check_f1_fourway(int n_max = 500, int sum_n_max = 60, int threads = 1);

// All of the above with default ranges, in a fixed order.
std::vector<CheckReport> check_all(int threads = 1);

}  // namespace invol
