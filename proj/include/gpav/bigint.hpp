#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace gpav {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);

/// Binomial coefficient with the combinatorial convention: C(n,0)=1 for
/// n>=0, C(n,j)=0 for j>n>=0 or j<0. A negative upper argument is a hard
/// error: every in-range evaluation in the recurrences has nonnegative top,
/// so a negative one signals a bug rather than a value.
BigInt binomial(int n, int j);

/// Variant used by the F-polynomials, where the defining sum runs until the
/// binomial vanishes: returns 0 for n < j, including negative n.
BigInt binomial_or_zero(int n, int j);

}  // namespace gpav
