#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "cubewalks/bigint.hpp"
#include "cubewalks/errors.hpp"
#include "cubewalks/group.hpp"
#include "cubewalks/matrix.hpp"
#include "cubewalks/polynomial.hpp"
#include "cubewalks/rational_function.hpp"

namespace cubewalks {

// Square matrix of integer polynomials.
class PolyMatrix {
public:
    explicit PolyMatrix(std::size_t size) : size_(size), e_(size * size) {}

    // I - tA for a square integer matrix A
    static PolyMatrix identity_minus_t(const IntMatrix& a);

    std::size_t size() const { return size_; }
    IntPolynomial& at(std::size_t r, std::size_t c) { return e_[r * size_ + c]; }
    const IntPolynomial& at(std::size_t r, std::size_t c) const { return e_[r * size_ + c]; }

private:
    std::size_t size_;
    std::vector<IntPolynomial> e_;
};

// determinant by fraction-free (Bareiss) elimination over Z[t]; every
// interior division is exact.  Consumes its argument.
IntPolynomial det_fraction_free(PolyMatrix m);

// adjacency eigenvalues n - 2h of the n-cube, h = 0..n
std::vector<Int> cube_eigenvalues(int n);

struct PoincareSeries {
    // Cramer quotient with denominator det(I - tA), before any cancellation
    RationalFunction as_computed;
    // the same function with shared (1 - lambda t) factors cancelled
    RationalFunction reduced;
};

// m^a(t) = det(M^a) / det(I - tA), where M^a is I - tA with the column of
// a replaced by the unit vector of the zero element
PoincareSeries poincare_series(int n, const GroupElement& a, int max_n = kDefaultMaxN);

// m^0(t) as det(I - t A°) / det(I - tA), where A° deletes the zero vertex;
// equals poincare_series at the zero element after reduction
PoincareSeries invariants_series(int n, int max_n = kDefaultMaxN);

struct FactoredPoly {
    IntPolynomial expanded;
    // (lambda, multiplicity) for the factor (1 - lambda t)^multiplicity,
    // in eigenvalue order n - 2h, h = 0..n
    std::vector<std::pair<Int, long>> factors;
};

// det(I - tA) = prod_h (1 - (n-2h) t)^C(n,h) for the n-cube
FactoredPoly denominator_factored(int n);

// multiplicity of each (1 - lambda t) in p over the candidate list;
// leftover, when requested, receives p with those factors divided out
std::vector<std::pair<Int, long>> linear_factor_profile(const IntPolynomial& p,
                                                        std::span<const Int> lambdas,
                                                        IntPolynomial* leftover = nullptr);

// m_k = k! [t^k] (cosh t)^{n-h} (sinh t)^h for k = 0..K
std::vector<Int> egf_coefficients(int n, int h, int K);

// (1/2^n) sum_i C(n,i) (n - 2i)^r; vanishes for odd r
Int closed_form_m0(int n, long r);

}
