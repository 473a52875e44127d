#include "cubewalks/bigint.hpp"

#include "cubewalks/errors.hpp"

namespace cubewalks {

Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    // r stays integral: after multiplying by (n-k+i) it is C(n-k+i, i) * i!
    // divided down step by step
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

Int falling_factorial(long n, long r) {
    if (r < 0) throw std::invalid_argument("falling_factorial: negative length");
    Int p = 1;
    for (long i = 0; i < r; ++i) p *= n - i;
    return p;
}

Int int_pow(const Int& base, unsigned long e) {
    Int r = 1;
    Int b = base;
    while (e > 0) {
        if (e & 1u) r *= b;
        e >>= 1;
        if (e > 0) b *= b;
    }
    return r;
}

Int exact_div(const Int& a, const Int& b) {
    if (b == 0) throw std::invalid_argument("exact_div: division by zero");
    Int q, r;
    boost::multiprecision::divide_qr(a, b, q, r);
    if (r != 0) throw InexactDivision("exact_div: nonzero remainder");
    return q;
}

}
