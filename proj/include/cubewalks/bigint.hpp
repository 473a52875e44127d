#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cubewalks {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k); zero outside 0 <= k <= n.
Int binomial(long n, long k);

Int factorial(long n);

// n (n-1) ... (n-r+1); the empty product 1 for r = 0.
Int falling_factorial(long n, long r);

// base^e with 0^0 = 1
Int int_pow(const Int& base, unsigned long e);

// quotient of an exact integer division; throws InexactDivision otherwise
Int exact_div(const Int& a, const Int& b);

}
