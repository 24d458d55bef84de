#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "invol/exact.hpp"

namespace invol {

// Counting formulas for generalized involutions of length n over {1..m},
// and everything derived from them.  All routes here are pure formula
// evaluation; the enumeration oracles live elsewhere so the two can be
// compared meaningfully.

// Total count: sum over h of C(m+n-2h-1, n-2h) * C(C(m,2)+h-1, h).
Int a_total(int n, int m);

// Count of even objects: sum over h of C(m, n-4h) * C(C(m+1,2)+2h-1, 2h).
Int a_plus(int n, int m);

// Count of odd objects: a_total - a_plus.
Int a_minus(int n, int m);

// Signed count, route 1: even minus odd, i.e. 2*a_plus - a_total.
Int a_hat_from_counts(int n, int m);

// Signed count, route 2: sum over j of
// (-1)^j * C(C(m+1,2)+j-1, j) * C(m, n-2j).
Int a_hat_alternating(int n, int m);

// Signed count with both routes evaluated and compared; disagreement is a
// hard internal error (std::logic_error).  Returns the route-2 value.
Int a_hat(int n, int m);

// Row of signed counts a_hat(n, 0..m_max), computed incrementally so large
// sweeps stay cheap.
std::vector<Int> a_hat_row(int n, int m_max);

// Signed count of involutions of S_n with k rises, by binomial inversion of
// the a_hat row: sum_{m=0}^{k+1} (-1)^(k-m+1) * C(n+1, k-m+1) * a_hat(n, m).
// Any integer k is accepted; out-of-range k gives 0 for n >= 1.  The
// inversion degenerates at n = 0, so f_signed(0, 0) = 1 is pinned directly
// (the empty involution: sign +1, zero rises).
Int f_signed(int n, int k);

// Same quantity with the signed count written out as its alternating sum,
// i.e. the full double sum over m and j.  Kept separate from f_signed so the
// two transcriptions can be asserted equal instead of assumed.
Int f_signed_expanded(int n, int k);

// Row f_signed(n, 0..max(n-1,0)) computed from one a_hat row.
std::vector<Int> f_signed_row(int n);

// Split counts (f_plus, f_minus) of even/odd involutions with k rises, by
// the same inversion applied to a_plus and a_minus.  Negative components
// signal a broken formula and raise std::logic_error.
std::pair<Int, Int> f_split(int n, int k);

// Left side minus right side of the Worpitzky-type identity
//   sum_{j=0}^{s-1} C(n+j, j) * f_{n, s-j-1}  =  a_hat_alternating(n, s).
// Expected 0 for n >= 1; the n = 0 row is computed but not asserted.
Int worpitzky_residual(int n, int s);

// Residual of the ten-term recurrence with polynomial coefficients:
//   n*f_{n,k} - [nine shifted terms in rows n-1, n-2, n-3].
// Out-of-range f-values are 0 except f_{0,0} = 1.  Requires n >= 3.
// The _with variant evaluates against a caller-supplied lookup, so
// tabulated rows can replace the per-point closed form on large sweeps.
Int zeilberger_residual(int n, int k);
Int zeilberger_residual_with(int n, int k, const std::function<Int(int, int)>& f);

// Signed count of all involutions of S_n (the rise polynomial evaluated at
// t = 1), as the literal closed form
//   2 * sum_h n!/((2h)!(n-4h)! 2^(2h))  -  sum_h n!/((n-2h)! h! 2^h).
// Evaluated inline, not via i_plus/involutions_count, so the identity
// F1_closed = 2*i_plus - involutions_count stays a meaningful check.
Int F1_closed(int n);

// Same sequence by the two-term recurrence F_n = F_{n-1} - (n-1)*F_{n-2},
// seeds F_0 = F_1 = 1.  Returns F_0..F_N.
std::vector<Int> F1_recurrence(int n_max);

// Scaled coefficients E_n = n! * [t^n] exp(t - t^2/2) through the integer
// recurrence E_{n+1} = E_n - n*E_{n-1}, E_0 = E_1 = 1, which follows from
// the differential relation g' = (1-t)*g for the exponential generating
// function g.  Returns E_0..E_N; E_n should equal F1_closed(n).
std::vector<Int> egf_scaled(int n_max);

// Number of even involutions of S_n:
//   sum over h of n! / ((2h)! * (n-4h)! * 2^(2h)).
Int i_plus(int n);

// Number of involutions of S_n:
//   sum over h of n! / ((n-2h)! * h! * 2^h).
Int involutions_count(int n);

}  // namespace invol
