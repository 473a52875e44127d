#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cubewalks/bigint.hpp"
#include "cubewalks/errors.hpp"
#include "cubewalks/group.hpp"
#include "cubewalks/partitions.hpp"

namespace cubewalks {

// Matrix unit E_alpha^beta spanning Z_k(Z_2^n): alpha, beta in [1,n]^k
// where each value occurs with equal parity in alpha and beta, so both
// rows share the endpoint sum_i eps_{alpha_i}.
struct BasisElement {
    std::vector<int> alpha, beta;

    bool parity_ok(int n) const;
    GroupElement endpoint(int n) const;

    // "E[2,2,3,3,3]^[2,1,2,1,3]"
    std::string to_string() const;
    // "E_22333^21213"; requires single-digit entries
    std::string compact() const;

    bool operator==(const BasisElement&) const = default;
    bool operator<(const BasisElement& o) const {
        return alpha != o.alpha ? alpha < o.alpha : beta < o.beta;
    }
};

// Lazy stream over the matrix-unit basis of Z_k(Z_2^n) in lexicographic
// (alpha, beta) order, optionally restricted to one endpoint.  Refuses to
// start when n^k exceeds the scan budget.
class BasisEnumerator {
public:
    BasisEnumerator(int k, int n, std::optional<GroupElement> target = std::nullopt,
                    long long budget = kDefaultBudget);
    std::optional<BasisElement> next();

private:
    std::vector<int> decode(std::uint64_t code) const;
    bool advance_alpha();

    int k_, n_;
    std::optional<GroupElement> target_;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> buckets_;
    std::uint64_t total_codes_ = 0;
    std::uint64_t alpha_code_ = 0;   // next row tuple to try
    std::vector<int> alpha_;
    const std::vector<std::uint32_t>* bucket_ = nullptr;
    std::size_t bucket_pos_ = 0;
    bool done_ = false;
};

// number of basis elements the enumerator would yield, via the per-endpoint
// row counts
Int count_basis(int k, int n, std::optional<GroupElement> target = std::nullopt,
                long long budget = kDefaultBudget);

// dim Z_k(Z_2^n) = (1/2^n) sum_i C(n,i) (n-2i)^{2k}
Int dim_Zk_Z2n_spectral(long k, long n);
// dim Z_k(Z_2^n) = sum_r T(k,r) n!/(n-r)!
Int dim_Zk_Z2n_diagrammatic(long k, long n);

// m_k^a: dimension of the weight-a module, via the walk closed form
Int dim_module(long k, int n, const GroupElement& a);

// m_k^a by the multinomial sum over integer partitions of k with exactly
// h odd parts; depends on a only through h
Int multiplicity_multinomial(long k, int n, int h);

// T_d = sum over relabelings of (zeta_d, zeta'_d) by injections of the
// block indices into [1,n], in lexicographic injection order
std::vector<BasisElement> expand_Td(const SetPartition& d, int n);

// p_beta T_d p_alpha: the summand E_alpha^beta when present
std::optional<BasisElement> project(std::span<const BasisElement> summands,
                                    const std::vector<int>& alpha,
                                    const std::vector<int>& beta);

struct BratteliLevel {
    int level;
    // nonzero multiplicities, ordered by GroupElement::index()
    std::vector<std::pair<GroupElement, Int>> multiplicities;

    Int multiplicity(const GroupElement& a) const;
    Int sum_of_squares() const;
};

// levels 0..k_max of the walk multiplicity diagram for the n-cube, built
// with the Pascal-type rule m_k^a = sum_i m_{k-1}^{a + eps_i}
std::vector<BratteliLevel> bratteli(int n, int k_max, int max_n = kDefaultMaxN);

// walk on the cube starting at the zero element, given by step coordinates
struct WalkPath {
    int n;
    std::vector<int> steps;   // values in [1,n]

    GroupElement endpoint() const;
};

// pair of equal-length, equal-endpoint paths -> E_alpha^beta with
// alpha = rho1.steps and beta = rho2.steps (the second path read from its
// endpoint back to the root)
BasisElement paths_to_diagram(const WalkPath& rho1, const WalkPath& rho2);

}
