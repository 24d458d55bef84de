#include "invol/exact.hpp"

namespace invol {

Int binomial(long long a, long long b) {
  if (b < 0) return 0;
  if (a >= 0 && a < b) return 0;  // falling factorial hits zero
  Int result = 1;
  for (long long i = 0; i < b; ++i) {
    result *= a - i;
    result /= i + 1;  // exact: C(a, i+1) is an integer for any integer a
  }
  return result;
}

Int factorial(long long n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Int result = 1;
  for (long long i = 2; i <= n; ++i) result *= i;
  return result;
}

std::vector<Int> binomial_row(int n) {
  if (n < 0) throw std::invalid_argument("binomial_row: negative row index");
  std::vector<Int> row(static_cast<std::size_t>(n) + 1);
  row[0] = 1;
  for (int k = 1; k <= n; ++k) row[k] = row[k - 1] * (n - k + 1) / k;
  return row;
}

}  // namespace invol
