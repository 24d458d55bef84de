#include "invol/series.hpp"

#include <algorithm>
#include <stdexcept>

#include "invol/closed_forms.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace invol {

BivariateSeries::BivariateSeries(int t_order, int u_order)
    : t_order_(t_order), u_order_(u_order) {
  if (t_order < 0 || u_order < 0)
    throw std::invalid_argument("BivariateSeries: negative order");
  coeffs_.resize(static_cast<std::size_t>(t_order + 1) * (u_order + 1));
}

BivariateSeries BivariateSeries::constant(const Int& value, int t_order, int u_order) {
  BivariateSeries s(t_order, u_order);
  s.coeffs_[0] = value;
  return s;
}

BivariateSeries BivariateSeries::from_t_coeffs(const std::vector<Int>& coeffs, int t_order,
                                               int u_order) {
  BivariateSeries s(t_order, u_order);
  for (int i = 0; i <= t_order && i < static_cast<int>(coeffs.size()); ++i)
    s.coeffs_[s.index(i, 0)] = coeffs[static_cast<std::size_t>(i)];
  return s;
}

BivariateSeries BivariateSeries::from_u_coeffs(const std::vector<Int>& coeffs, int t_order,
                                               int u_order) {
  BivariateSeries s(t_order, u_order);
  for (int j = 0; j <= u_order && j < static_cast<int>(coeffs.size()); ++j)
    s.coeffs_[s.index(0, j)] = coeffs[static_cast<std::size_t>(j)];
  return s;
}

std::size_t BivariateSeries::index(int t_deg, int u_deg) const {
  if (t_deg < 0 || t_deg > t_order_ || u_deg < 0 || u_deg > u_order_)
    throw std::out_of_range("BivariateSeries: degree outside window");
  return static_cast<std::size_t>(t_deg) * (u_order_ + 1) + u_deg;
}

const Int& BivariateSeries::at(int t_deg, int u_deg) const { return coeffs_[index(t_deg, u_deg)]; }

void BivariateSeries::set(int t_deg, int u_deg, Int value) {
  coeffs_[index(t_deg, u_deg)] = std::move(value);
}

namespace {

void require_same_window(const BivariateSeries& a, const BivariateSeries& b) {
  if (a.t_order() != b.t_order() || a.u_order() != b.u_order())
    throw std::invalid_argument("BivariateSeries: window mismatch");
}

}  // namespace

BivariateSeries& BivariateSeries::operator+=(const BivariateSeries& other) {
  require_same_window(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

BivariateSeries& BivariateSeries::operator-=(const BivariateSeries& other) {
  require_same_window(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

BivariateSeries BivariateSeries::operator+(const BivariateSeries& other) const {
  BivariateSeries out = *this;
  out += other;
  return out;
}

BivariateSeries BivariateSeries::operator-(const BivariateSeries& other) const {
  BivariateSeries out = *this;
  out -= other;
  return out;
}

BivariateSeries BivariateSeries::operator*(const BivariateSeries& other) const {
  require_same_window(*this, other);
  BivariateSeries out(t_order_, u_order_);
  for (int i = 0; i <= t_order_; ++i) {
    for (int j = 0; j <= u_order_; ++j) {
      const Int& lhs = coeffs_[index(i, j)];
      if (lhs == 0) continue;
      for (int p = 0; i + p <= t_order_; ++p) {
        for (int q = 0; j + q <= u_order_; ++q) {
          const Int& rhs = other.coeffs_[other.index(p, q)];
          if (rhs == 0) continue;
          out.coeffs_[out.index(i + p, j + q)] += lhs * rhs;
        }
      }
    }
  }
  return out;
}

BivariateSeries BivariateSeries::pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("BivariateSeries::pow: negative exponent");
  BivariateSeries out = constant(1, t_order_, u_order_);
  for (int e = 0; e < exponent; ++e) out = out * *this;
  return out;
}

std::vector<Int> mul_trunc(const std::vector<Int>& a, const std::vector<Int>& b, int order) {
  if (order < 0) throw std::invalid_argument("mul_trunc: negative order");
  std::vector<Int> out(static_cast<std::size_t>(order) + 1);
  for (std::size_t i = 0; i < a.size() && i <= static_cast<std::size_t>(order); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(order); ++j)
      out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<Int> pow_trunc(const std::vector<Int>& base, int exponent, int order) {
  if (exponent < 0) throw std::invalid_argument("pow_trunc: negative exponent");
  std::vector<Int> out(static_cast<std::size_t>(order) + 1);
  out[0] = 1;
  for (int e = 0; e < exponent; ++e) out = mul_trunc(out, base, order);
  return out;
}

std::vector<Int> expand_inv_one_minus_t_pow(int p, int t_order) {
  if (p < 1) throw std::invalid_argument("expand_inv_one_minus_t_pow: requires p >= 1");
  if (t_order < 0) throw std::invalid_argument("expand_inv_one_minus_t_pow: negative order");
  std::vector<Int> out(static_cast<std::size_t>(t_order) + 1);
  out[0] = 1;
  // C(p+j-1, j) advanced stepwise by exact division.
  for (int j = 1; j <= t_order; ++j) {
    out[static_cast<std::size_t>(j)] = out[static_cast<std::size_t>(j) - 1] * (p + j - 1);
    out[static_cast<std::size_t>(j)] /= j;
  }
  return out;
}

std::vector<Int> expand_inv_one_plus_u2_pow(long long K, int u_order) {
  if (K < 0) throw std::invalid_argument("expand_inv_one_plus_u2_pow: requires K >= 0");
  if (u_order < 0) throw std::invalid_argument("expand_inv_one_plus_u2_pow: negative order");
  std::vector<Int> out(static_cast<std::size_t>(u_order) + 1);
  out[0] = 1;
  Int c = 1;  // C(K+h-1, h), advanced stepwise
  for (int h = 1; 2 * h <= u_order; ++h) {
    c *= K + h - 1;
    c /= h;
    out[static_cast<std::size_t>(2 * h)] = h % 2 == 0 ? c : -c;
  }
  return out;
}

std::vector<Int> column_gf(int m, int u_order) {
  if (m < 0) throw std::invalid_argument("column_gf: negative m");
  const std::vector<Int> one_plus_u = {1, 1};
  const long long pairs = static_cast<long long>(m) * (m + 1) / 2;
  return mul_trunc(pow_trunc(one_plus_u, m, u_order),
                   expand_inv_one_plus_u2_pow(pairs, u_order), u_order);
}

std::vector<CoeffMismatch> verify_gf_identity(int u_order, int t_order, int threads) {
  if (u_order < 0 || t_order < 0)
    throw std::invalid_argument("verify_gf_identity: negative order");

  // Left side: for each n, the t-profile F_n(t)/(1-t)^(n+1) lands at u-degree
  // exactly n.  Right side: for each m, the u-profile (1+u)^(m+1) *
  // (1+u^2)^(-C(m+2,2)) lands at t-degree exactly m.  Each summand fills one
  // line of its grid, so they are computed independently and merged in index
  // order.
  std::vector<std::vector<Int>> lhs_lines(static_cast<std::size_t>(u_order) + 1);
  std::vector<std::vector<Int>> rhs_lines(static_cast<std::size_t>(t_order) + 1);

  auto lhs_line = [&](int n) {
    lhs_lines[static_cast<std::size_t>(n)] =
        mul_trunc(f_signed_row(n), expand_inv_one_minus_t_pow(n + 1, t_order), t_order);
  };
  auto rhs_line = [&](int m) {
    const long long K = static_cast<long long>(m + 2) * (m + 1) / 2;
    rhs_lines[static_cast<std::size_t>(m)] =
        mul_trunc(binomial_row(m + 1), expand_inv_one_plus_u2_pow(K, u_order), u_order);
  };

  const int total = u_order + 1 + t_order + 1;
  auto run_cell = [&](int cell) {
    if (cell <= u_order)
      lhs_line(cell);
    else
      rhs_line(cell - u_order - 1);
  };
  if (threads > 1) {
#ifdef _OPENMP
#pragma omp parallel for num_threads(threads) schedule(dynamic)
    for (int cell = 0; cell < total; ++cell) run_cell(cell);
#else
    for (int cell = 0; cell < total; ++cell) run_cell(cell);
#endif
  } else {
    for (int cell = 0; cell < total; ++cell) run_cell(cell);
  }

  std::vector<CoeffMismatch> mismatches;
  for (int i = 0; i <= t_order; ++i) {
    for (int j = 0; j <= u_order; ++j) {
      const Int& lhs = lhs_lines[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      const Int& rhs = rhs_lines[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (lhs != rhs) mismatches.push_back({i, j, lhs, rhs});
    }
  }
  return mismatches;
}

}  // namespace invol
