#pragma once

#include <vector>

#include "invol/exact.hpp"

namespace invol {

// Dense truncated bivariate power series over exact integers.  The window
// (t_order, u_order) is fixed per value; every retained coefficient is exact
// because all series handled here have nonnegative valuation, so a product
// coefficient at (i, j) only ever draws on factor coefficients at or below
// (i, j).  Operations require both operands to share the same window.
class BivariateSeries {
 public:
  BivariateSeries() = default;
  BivariateSeries(int t_order, int u_order);

  static BivariateSeries constant(const Int& value, int t_order, int u_order);
  // Embeds a univariate series: coefficients along t (u-degree 0) or along u
  // (t-degree 0).  Coefficients beyond the window are dropped.
  static BivariateSeries from_t_coeffs(const std::vector<Int>& coeffs, int t_order, int u_order);
  static BivariateSeries from_u_coeffs(const std::vector<Int>& coeffs, int t_order, int u_order);

  int t_order() const { return t_order_; }
  int u_order() const { return u_order_; }

  const Int& at(int t_deg, int u_deg) const;
  void set(int t_deg, int u_deg, Int value);

  BivariateSeries& operator+=(const BivariateSeries& other);
  BivariateSeries& operator-=(const BivariateSeries& other);
  BivariateSeries operator+(const BivariateSeries& other) const;
  BivariateSeries operator-(const BivariateSeries& other) const;
  BivariateSeries operator*(const BivariateSeries& other) const;
  BivariateSeries pow(int exponent) const;

  bool operator==(const BivariateSeries&) const = default;

 private:
  std::size_t index(int t_deg, int u_deg) const;
  int t_order_ = 0;
  int u_order_ = 0;
  std::vector<Int> coeffs_;
};

// Univariate helpers on plain coefficient vectors (index = degree), truncated
// to `order` (inclusive).
std::vector<Int> mul_trunc(const std::vector<Int>& a, const std::vector<Int>& b, int order);
std::vector<Int> pow_trunc(const std::vector<Int>& base, int exponent, int order);

// 1/(1-t)^p = sum_j C(p+j-1, j) t^j, coefficients for j = 0..t_order.
// Requires p >= 1.
std::vector<Int> expand_inv_one_minus_t_pow(int p, int t_order);

// (1+u^2)^(-K) = sum_h (-1)^h C(K+h-1, h) u^(2h), up to u^u_order.
// Requires K >= 0; K = 0 gives the constant series 1.
std::vector<Int> expand_inv_one_plus_u2_pow(long long K, int u_order);

// Column generating function (1+u)^m * (1+u^2)^(-m(m+1)/2); its u^n
// coefficient equals the signed generalized-involution count a_hat(n, m).
std::vector<Int> column_gf(int m, int u_order);

struct CoeffMismatch {
  int t_deg = 0;
  int u_deg = 0;
  Int lhs;
  Int rhs;
  bool operator==(const CoeffMismatch&) const = default;
};

// Compares the two sides of the bivariate identity
//   sum_n F_n(t) u^n / (1-t)^(n+1)  =  sum_m t^m (1+u)^(m+1) / (1+u^2)^C(m+2,2)
// coefficient-by-coefficient on the full window t^i u^j, i <= t_order,
// j <= u_order.  Truncation is exact on that window: left summands with
// n > u_order only touch higher u-degrees, right summands with m > t_order
// only higher t-degrees.  Returns every differing coefficient, ordered by
// (t_deg, u_deg); empty means the identity holds on the window.  Summands
// are independent, so threads > 1 computes them concurrently and merges in
// fixed order.
std::vector<CoeffMismatch> verify_gf_identity(int u_order, int t_order, int threads = 1);

}  // namespace invol
