#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace invol {

// Arbitrary-precision signed integer. Every count, coefficient and residual
// in this library is an Int; nothing is ever rounded or reduced.
using Int = boost::multiprecision::cpp_int;

// Binomial coefficient in the falling-factorial convention:
//
//   binomial(a, b) = a(a-1)...(a-b+1) / b!   for b >= 0 and any integer a,
//   binomial(a, b) = 0                       for b < 0.
//
// In particular binomial(a, 0) = 1 for every a, including negative a, and
// binomial(a, b) = 0 whenever 0 <= a < b. The alternating sums below rely on
// both conventions.
Int binomial(long long a, long long b);

// n! for n >= 0; negative input is rejected.
Int factorial(long long n);

// Row n of Pascal's triangle as a vector C(n, 0..n), n >= 0.
std::vector<Int> binomial_row(int n);

}  // namespace invol
