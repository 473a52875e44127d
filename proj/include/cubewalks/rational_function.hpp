#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cubewalks/polynomial.hpp"

namespace cubewalks {

// Quotient num/den of integer polynomials, normalized so den(0) = 1; the
// power series expansion at t = 0 then has integer coefficients.
class RationalFunction {
public:
    RationalFunction(IntPolynomial num, IntPolynomial den);

    const IntPolynomial& num() const { return num_; }
    const IntPolynomial& den() const { return den_; }

    // first K+1 power series coefficients at t = 0
    std::vector<Int> series(std::size_t K) const;

    // cancel shared factors (1 - lambda t) over the candidate eigenvalues,
    // then any shared integer content
    RationalFunction reduced(std::span<const Int> lambdas) const;

    bool operator==(const RationalFunction&) const = default;

private:
    IntPolynomial num_, den_;
};

}
