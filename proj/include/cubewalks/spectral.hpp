#pragma once

#include <span>
#include <vector>

#include "cubewalks/errors.hpp"
#include "cubewalks/group.hpp"
#include "cubewalks/matrix.hpp"
#include "cubewalks/polynomial.hpp"

namespace cubewalks {

// Nonempty set of distinct step elements in Z_2^n.  The n-cube walk uses
// the standard steps {eps_1, ..., eps_n}.
class StepSet {
public:
    StepSet(int n, std::vector<GroupElement> steps);
    static StepSet cube(int n);

    int dimension() const { return n_; }
    const std::vector<GroupElement>& steps() const { return steps_; }

private:
    int n_;
    std::vector<GroupElement> steps_;
};

struct SpectralData {
    // lambda_a = sum_s (-1)^{a.s}, indexed by GroupElement::index()
    std::vector<Int> eigenvalues;
    // E_{b,a} = (-1)^{a.b}; column a is an eigenvector for lambda_a,
    // and E^T E = 2^n I
    IntMatrix eigenvectors;
};

// 2^n x 2^n 0/1 matrix with A_{b,c} = 1 iff c = b + s for some step s
IntMatrix adjacency_matrix(const StepSet& s, int max_n = kDefaultMaxN);

SpectralData eigen_data(const StepSet& s, int max_n = kDefaultMaxN);

// number of k-step walks b -> c, by k integer matrix-vector products
Int walk_count_bruteforce(const StepSet& s, const GroupElement& b,
                          const GroupElement& c, int k, int max_n = kDefaultMaxN);

// the same count via the character sum (1/2^n) sum_a (-1)^{a.(b+c)} lambda_a^k
Int walk_count_spectral(const StepSet& s, const GroupElement& b,
                        const GroupElement& c, int k, int max_n = kDefaultMaxN);

// cube-only closed form in n, k and the weight h of b + c
Int walk_count_cube_closed(int n, int h, int k);

// minimal polynomial of the cube adjacency matrix: prod_h (t - (n - 2h))
IntPolynomial min_poly_cube(int n);

// check that every length-(n+2) window of counts satisfies the linear
// recursion induced by min_poly_cube(n)
bool recursion_check(int n, std::span<const Int> counts);

struct Sl2Triple {
    IntMatrix raising;    // R, sends weight h to weight h + 1
    IntMatrix lowering;   // L, sends weight h to weight h - 1
    IntMatrix dual;       // diagonal matrix with entry n - 2 h(b)
};

// R + L is the cube adjacency matrix; [L, R] = dual, [dual, L] = 2L,
// [dual, R] = -2R
Sl2Triple sl2_triple(int n, int max_n = kDefaultMaxN);

}
