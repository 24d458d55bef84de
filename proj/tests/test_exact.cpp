#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "invol/exact.hpp"

using invol::binomial;
using invol::binomial_row;
using invol::factorial;
using invol::Int;

TEST_CASE("binomial convention") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(-1, 0) == 1);  // empty product
  CHECK(binomial(2, 3) == 0);   // falling factorial hits zero
  CHECK(binomial(3, -1) == 0);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(-3, 2) == 6);   // (-3)(-4)/2
  CHECK(binomial(-2, 3) == -4);  // (-2)(-3)(-4)/6
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == Int("2432902008176640000"));
  CHECK(factorial(25) == Int("15511210043330985984000000"));  // beyond 64-bit
  CHECK_THROWS_AS(factorial(-1), std::invalid_argument);
}

TEST_CASE("Pascal identity for all integer upper arguments") {
  for (long long a = -20; a <= 20; ++a)
    for (long long b = 0; b <= 20; ++b)
      CHECK(binomial(a, b) == binomial(a - 1, b) + binomial(a - 1, b - 1));
}

TEST_CASE("binomial times factorials recovers n!") {
  for (long long n = 0; n <= 30; ++n)
    for (long long b = 0; b <= n; ++b)
      CHECK(binomial(n, b) * factorial(b) * factorial(n - b) == factorial(n));
}

TEST_CASE("symmetry for nonnegative upper argument") {
  for (long long n = 0; n <= 30; ++n)
    for (long long b = 0; b <= n; ++b) CHECK(binomial(n, b) == binomial(n, n - b));
}

TEST_CASE("binomial_row matches pointwise binomials") {
  for (int n = 0; n <= 25; ++n) {
    const std::vector<Int> row = binomial_row(n);
    REQUIRE(row.size() == static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) CHECK(row[static_cast<std::size_t>(k)] == binomial(n, k));
  }
}
