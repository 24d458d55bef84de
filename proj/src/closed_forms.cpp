#include "invol/closed_forms.hpp"

#include <stdexcept>
#include <string>

namespace invol {

namespace {

long long choose2(long long m) { return m * (m - 1) / 2; }

// Out-of-range values of the signed rise table are 0; the single exception
// is the empty involution, which contributes 1 at (0, 0).
Int f_ext(int n, int k, const std::function<Int(int, int)>& f) {
  if (n < 0) return 0;
  if (n == 0) return k == 0 ? Int(1) : Int(0);
  if (k < 0 || k > n - 1) return 0;
  return f(n, k);
}

}  // namespace

Int a_total(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("a_total: negative argument");
  Int sum = 0;
  for (int h = 0; 2 * h <= n; ++h)
    sum += binomial(m + n - 2LL * h - 1, n - 2LL * h) * binomial(choose2(m) + h - 1, h);
  return sum;
}

Int a_plus(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("a_plus: negative argument");
  Int sum = 0;
  for (int h = 0; 4 * h <= n; ++h)
    sum += binomial(m, n - 4LL * h) * binomial(choose2(m + 1LL) + 2 * h - 1, 2 * h);
  return sum;
}

Int a_minus(int n, int m) { return a_total(n, m) - a_plus(n, m); }

Int a_hat_from_counts(int n, int m) { return 2 * a_plus(n, m) - a_total(n, m); }

Int a_hat_alternating(int n, int m) {
  if (n < 0 || m < 0) throw std::invalid_argument("a_hat_alternating: negative argument");
  const long long s = choose2(m + 1LL);
  Int sum = 0;
  for (int j = 0; 2 * j <= n; ++j) {
    const Int term = binomial(s + j - 1, j) * binomial(m, n - 2LL * j);
    sum += j % 2 == 0 ? term : -term;
  }
  return sum;
}

Int a_hat(int n, int m) {
  const Int counts = a_hat_from_counts(n, m);
  const Int alternating = a_hat_alternating(n, m);
  if (counts != alternating)
    throw std::logic_error("a_hat: routes disagree at n=" + std::to_string(n) +
                           ", m=" + std::to_string(m));
  return alternating;
}

std::vector<Int> a_hat_row(int n, int m_max) {
  if (n < 0 || m_max < 0) throw std::invalid_argument("a_hat_row: negative argument");
  std::vector<Int> row(static_cast<std::size_t>(m_max) + 1);
  for (int m = 0; m <= m_max; ++m) {
    const std::vector<Int> pascal = binomial_row(m);
    const long long s = choose2(m + 1LL);
    Int c = 1;  // C(s+j-1, j), advanced stepwise
    Int sum = 0;
    for (int j = 0; 2 * j <= n; ++j) {
      const int r = n - 2 * j;
      if (r <= m) {
        const Int term = c * pascal[static_cast<std::size_t>(r)];
        sum += j % 2 == 0 ? term : -term;
      }
      c *= s + j;
      c /= j + 1;
    }
    row[static_cast<std::size_t>(m)] = sum;
  }
  return row;
}

Int f_signed(int n, int k) {
  if (n < 0) throw std::invalid_argument("f_signed: negative n");
  if (n == 0) return k == 0 ? Int(1) : Int(0);
  Int sum = 0;
  for (int m = 0; m <= k + 1; ++m) {
    const Int term = binomial(n + 1LL, k - m + 1LL) * a_hat(n, m);
    sum += (k - m + 1) % 2 == 0 ? term : -term;
  }
  return sum;
}

Int f_signed_expanded(int n, int k) {
  if (n < 0) throw std::invalid_argument("f_signed_expanded: negative n");
  if (n == 0) return k == 0 ? Int(1) : Int(0);
  Int sum = 0;
  for (int m = 0; m <= k + 1; ++m) {
    const long long s = choose2(m + 1LL);
    Int inner = 0;
    for (int j = 0; 2 * j <= n; ++j) {
      const Int term = binomial(s + j - 1, j) * binomial(m, n - 2LL * j);
      inner += j % 2 == 0 ? term : -term;
    }
    const Int term = binomial(n + 1LL, k - m + 1LL) * inner;
    sum += (k - m + 1) % 2 == 0 ? term : -term;
  }
  return sum;
}

std::vector<Int> f_signed_row(int n) {
  if (n < 0) throw std::invalid_argument("f_signed_row: negative n");
  if (n == 0) return {Int(1)};
  const std::vector<Int> hat = a_hat_row(n, n);
  const std::vector<Int> pascal = binomial_row(n + 1);
  std::vector<Int> row(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Int sum = 0;
    for (int m = 0; m <= k + 1; ++m) {
      const Int term = pascal[static_cast<std::size_t>(k - m + 1)] * hat[static_cast<std::size_t>(m)];
      sum += (k - m + 1) % 2 == 0 ? term : -term;
    }
    row[static_cast<std::size_t>(k)] = sum;
  }
  return row;
}

std::pair<Int, Int> f_split(int n, int k) {
  if (n < 0) throw std::invalid_argument("f_split: negative n");
  if (n == 0) return k == 0 ? std::pair<Int, Int>(1, 0) : std::pair<Int, Int>(0, 0);
  Int plus = 0, minus = 0;
  for (int m = 0; m <= k + 1; ++m) {
    const Int weight = binomial(n + 1LL, k - m + 1LL);
    const int sgn = (k - m + 1) % 2 == 0 ? 1 : -1;
    plus += sgn * weight * a_plus(n, m);
    minus += sgn * weight * a_minus(n, m);
  }
  if (plus < 0 || minus < 0)
    throw std::logic_error("f_split: negative component at n=" + std::to_string(n) +
                           ", k=" + std::to_string(k));
  return {plus, minus};
}

Int worpitzky_residual(int n, int s) {
  if (n < 0 || s < 1) throw std::invalid_argument("worpitzky_residual: requires n >= 0, s >= 1");
  Int lhs = 0;
  for (int j = 0; j <= s - 1; ++j)
    lhs += binomial(n + static_cast<long long>(j), j) * f_signed(n, s - j - 1);
  return lhs - a_hat_alternating(n, s);
}

Int zeilberger_residual_with(int n, int k, const std::function<Int(int, int)>& f) {
  if (n < 3) throw std::invalid_argument("zeilberger_residual: requires n >= 3");
  const long long kk = static_cast<long long>(k) * k;
  const long long nn = static_cast<long long>(n) * n;
  const long long kn = static_cast<long long>(k) * n;
  Int rhs = 0;
  rhs += (2 + k - static_cast<long long>(n)) * f_ext(n - 1, k, f);
  rhs += (2LL * n - k - 1) * f_ext(n - 1, k - 1, f);
  rhs += -(n + 3LL * k + kk) * f_ext(n - 2, k, f);
  rhs += (-2 + 4LL * k + 2 * kk - 2 * kn) * f_ext(n - 2, k - 1, f);
  rhs += (2 - k - kk + 2 * kn - nn) * f_ext(n - 2, k - 2, f);
  rhs += (-static_cast<long long>(n) - kk - 2 * k + 2) * f_ext(n - 3, k, f);
  rhs += (-7 + 4LL * k + 3 * kk + 2 * n - 2 * kn) * f_ext(n - 3, k - 1, f);
  rhs += (8 - 2LL * k - 3 * kk - 2 * n + 4 * kn - nn) * f_ext(n - 3, k - 2, f);
  rhs += (-3 + kk + static_cast<long long>(n) - 2 * kn + nn) * f_ext(n - 3, k - 3, f);
  return n * f_ext(n, k, f) - rhs;
}

Int zeilberger_residual(int n, int k) {
  return zeilberger_residual_with(n, k, [](int a, int b) { return f_signed(a, b); });
}

Int i_plus(int n) {
  if (n < 0) throw std::invalid_argument("i_plus: negative n");
  const Int nf = factorial(n);
  Int sum = 0;
  for (int h = 0; 4 * h <= n; ++h)
    sum += nf / (factorial(2 * h) * factorial(n - 4 * h) * (Int(1) << (2 * h)));
  return sum;
}

Int involutions_count(int n) {
  if (n < 0) throw std::invalid_argument("involutions_count: negative n");
  const Int nf = factorial(n);
  Int sum = 0;
  for (int h = 0; 2 * h <= n; ++h)
    sum += nf / (factorial(n - 2 * h) * factorial(h) * (Int(1) << h));
  return sum;
}

Int F1_closed(int n) {
  if (n < 0) throw std::invalid_argument("F1_closed: negative n");
  // Literal evaluation of the two-sum closed form; kept independent of
  // i_plus/involutions_count so their relation stays a checkable identity.
  const Int nf = factorial(n);
  Int even_twice = 0;
  for (int h = 0; 4 * h <= n; ++h)
    even_twice += 2 * (nf / (factorial(2 * h) * factorial(n - 4 * h) * (Int(1) << (2 * h))));
  Int all = 0;
  for (int h = 0; 2 * h <= n; ++h)
    all += nf / (factorial(n - 2 * h) * factorial(h) * (Int(1) << h));
  return even_twice - all;
}

std::vector<Int> F1_recurrence(int n_max) {
  if (n_max < 0) throw std::invalid_argument("F1_recurrence: negative bound");
  std::vector<Int> seq(static_cast<std::size_t>(n_max) + 1);
  seq[0] = 1;
  if (n_max >= 1) seq[1] = 1;
  for (int n = 2; n <= n_max; ++n)
    seq[static_cast<std::size_t>(n)] =
        seq[static_cast<std::size_t>(n) - 1] - (n - 1) * seq[static_cast<std::size_t>(n) - 2];
  return seq;
}

std::vector<Int> egf_scaled(int n_max) {
  if (n_max < 0) throw std::invalid_argument("egf_scaled: negative bound");
  std::vector<Int> seq(static_cast<std::size_t>(n_max) + 1);
  seq[0] = 1;
  if (n_max >= 1) seq[1] = 1;
  for (int n = 1; n + 1 <= n_max; ++n)
    seq[static_cast<std::size_t>(n) + 1] =
        seq[static_cast<std::size_t>(n)] - n * seq[static_cast<std::size_t>(n) - 1];
  return seq;
}

}  // namespace invol
