#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "cubewalks/bigint.hpp"

namespace cubewalks {

// Univariate polynomial over Z with arbitrary-precision coefficients,
// stored ascending.  Canonical form strips trailing zeros; the zero
// polynomial has no coefficients and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<Int> coeffs);
    explicit IntPolynomial(std::vector<Int> coeffs);

    static IntPolynomial one() { return IntPolynomial{1}; }
    static IntPolynomial monomial(Int c, std::size_t deg);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return long(c_.size()) - 1; }
    Int coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Int(0); }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& leading() const;   // requires a nonzero polynomial

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator-() const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const Int& s) const;
    bool operator==(const IntPolynomial&) const = default;

    // quotient of an exact division; throws InexactDivision on remainder
    IntPolynomial divide_exact(const IntPolynomial& d) const;
    bool divisible_by(const IntPolynomial& d) const;

    Int content() const;   // gcd of coefficients, 0 for the zero polynomial
    Int evaluate(const Int& x) const;

    // ascending powers, e.g. "1 - 10*t^2 + 9*t^4"
    std::string to_string() const;

private:
    bool try_divide(const IntPolynomial& d, IntPolynomial* quotient) const;
    void strip();

    std::vector<Int> c_;
};

}
