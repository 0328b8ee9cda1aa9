#pragma once

#include <matchlab/rational.hpp>

namespace matchlab {

// n! as an exact integer.
Int factorial(long n);

// Binomial coefficient C(n, k); 0 for k < 0 or k > n.
Int binomial(long n, long k);

// Falling factorial n(n-1)...(n-s+1), s >= 0 factors.
Int falling_factorial(long n, long s);

// Bernoulli number B_m with the B_1 = -1/2 convention, via the recurrence
// sum_{k<=m} C(m+1,k) B_k = 0. Memoized per thread.
Rational bernoulli(long m);

// Unsigned Stirling number of the first kind: coefficient of x^k in the
// rising factorial x(x+1)...(x+n-1). Equivalently the number of
// permutations of n objects with k cycles. Returns 0 for k > n or k < 0.
Int stirling_first_unsigned(long n, long k);

// Stirling number of the second kind: partitions of an n-set into k
// non-empty blocks. Returns 0 out of range.
Int stirling_second(long n, long k);

}  // namespace matchlab
