#include "cubewalks/rational_function.hpp"

#include <algorithm>
#include <stdexcept>

#include "cubewalks/errors.hpp"

namespace cubewalks {

RationalFunction::RationalFunction(IntPolynomial num, IntPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw std::invalid_argument("RationalFunction: zero denominator");
    Int g = boost::multiprecision::gcd(num_.content(), den_.content());
    if (g > 1) {
        num_ = num_.divide_exact(IntPolynomial{g});
        den_ = den_.divide_exact(IntPolynomial{g});
    }
    if (den_.coeff(0) == -1) {
        num_ = -num_;
        den_ = -den_;
    }
    if (den_.coeff(0) != 1)
        throw std::invalid_argument("RationalFunction: denominator constant term must be a unit");
}

std::vector<Int> RationalFunction::series(std::size_t K) const {
    // den(0) = 1, so coefficients satisfy s_k = num_k - sum_j den_j s_{k-j}
    const std::size_t dd = den_.degree() > 0 ? std::size_t(den_.degree()) : 0;
    std::vector<Int> s(K + 1);
    for (std::size_t k = 0; k <= K; ++k) {
        Int v = num_.coeff(k);
        for (std::size_t j = 1; j <= std::min(k, dd); ++j)
            v -= den_.coeff(j) * s[k - j];
        s[k] = v;
    }
    return s;
}

RationalFunction RationalFunction::reduced(std::span<const Int> lambdas) const {
    if (num_.is_zero()) return RationalFunction({}, IntPolynomial::one());
    IntPolynomial n = num_, d = den_;
    for (const Int& lambda : lambdas) {
        if (lambda == 0) continue;   // (1 - 0 t) is a unit
        IntPolynomial factor{1, -lambda};
        while (n.divisible_by(factor) && d.divisible_by(factor)) {
            n = n.divide_exact(factor);
            d = d.divide_exact(factor);
        }
    }
    return RationalFunction(std::move(n), std::move(d));
}

}
