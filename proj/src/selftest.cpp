#include "cubewalks/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>

#include "cubewalks/centralizer.hpp"
#include "cubewalks/genfun.hpp"
#include "cubewalks/group.hpp"
#include "cubewalks/matrix.hpp"
#include "cubewalks/partitions.hpp"
#include "cubewalks/polynomial.hpp"
#include "cubewalks/spectral.hpp"

namespace cubewalks {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Reporter {
    std::vector<CheckResult> results;
    std::ostringstream detail;
    bool ok = true;

    void expect(bool cond, const std::string& what) {
        if (cond) return;
        ok = false;
        if (detail.tellp() > 0) detail << "; ";
        detail << what;
    }

    void finish(const std::string& name) {
        results.push_back({name, ok, ok ? "" : detail.str()});
        detail.str("");
        detail.clear();
        ok = true;
    }
};

void check_bratteli_diagram(Reporter& r) {
    const auto levels = bratteli(3, 6);
    r.expect(levels.size() == 7, "expected 7 levels");
    // per-vertex multiplicities, keyed by vertex word
    const std::vector<std::map<std::uint64_t, Int>> expected = {
        {{0, 1}},
        {{1, 1}, {2, 1}, {4, 1}},
        {{0, 3}, {3, 2}, {5, 2}, {6, 2}},
        {{1, 7}, {2, 7}, {4, 7}, {7, 6}},
        {{0, 21}, {3, 20}, {5, 20}, {6, 20}},
        {{1, 61}, {2, 61}, {4, 61}, {7, 60}},
        {{0, 183}, {3, 182}, {5, 182}, {6, 182}},
    };
    const std::vector<Int> sums = {1, 3, 21, 183, 1641, 14763, 132861};
    for (std::size_t k = 0; k < expected.size() && k < levels.size(); ++k) {
        std::map<std::uint64_t, Int> got;
        for (const auto& [a, m] : levels[k].multiplicities) got[a.index()] = m;
        r.expect(got == expected[k], "level " + std::to_string(k) + " multiplicities differ");
        r.expect(levels[k].sum_of_squares() == sums[k],
                 "level " + std::to_string(k) + " sum of squares differs");
    }
    r.finish("bratteli diagram n=3");
}

void check_dimension_table(Reporter& r) {
    r.expect(dim_Zk_Z2n_spectral(2, 3) == 21, "dim Z_2(Z_2^3) spectral != 21");
    r.expect(dim_Zk_Z2n_diagrammatic(2, 3) == 21, "dim Z_2(Z_2^3) diagrammatic != 21");
    r.expect(dim_Zk_Sn(2, 3) == 14, "dim Z_2(S_3) != 14");
    r.expect(dim_Zk_G21n(2, 2) == 4, "dim Z_2(G(2,1,2)) != 4");
    r.expect(even_block_count_closed(4, 2) == 63, "T(4,2) closed != 63");
    r.expect(even_block_count_partitionwise(4, 2) == 63, "T(4,2) partitionwise != 63");
    // dim Z_2(Z_2^3) decomposes as T(2,1) 3!/2! + T(2,2) 3!/1!
    r.expect(even_block_count_closed(2, 1) * falling_factorial(3, 1) +
                     even_block_count_closed(2, 2) * falling_factorial(3, 2) ==
                 21,
             "1*3 + 3*6 != 21 decomposition failed");
    r.finish("dimension table");
}

void check_poincare_n3(Reporter& r) {
    const auto t0 = Clock::now();
    const std::vector<std::vector<Int>> expected = {
        {1, 0, 3, 0, 21, 0, 183, 0, 1641},
        {0, 1, 0, 7, 0, 61, 0, 547, 0},
        {0, 0, 2, 0, 20, 0, 182, 0, 1640},
        {0, 0, 0, 6, 0, 60, 0, 546, 0},
    };
    const std::vector<std::uint64_t> reps = {0, 4, 6, 7};   // one vertex per weight
    const IntPolynomial den_expected{1, 0, -12, 0, 30, 0, -28, 0, 9};
    for (std::size_t h = 0; h < reps.size(); ++h) {
        const PoincareSeries ps = poincare_series(3, GroupElement(3, reps[h]));
        r.expect(ps.as_computed.series(8) == expected[h],
                 "series for weight " + std::to_string(h) + " differs");
        r.expect(ps.as_computed.den() == den_expected,
                 "denominator differs from (1-9t^2)(1-t^2)^3");
    }
    const double dt = seconds_since(t0);
    r.expect(dt < 5.0, "determinant run took too long");
    r.finish("poincare series n=3");
}

void check_cross_routes(Reporter& r, int max_n) {
    const auto t0 = Clock::now();
    const int kmax = 8;
    for (int n = 1; n <= 4; ++n) {
        const StepSet cube = StepSet::cube(n);
        const IntMatrix adj = adjacency_matrix(cube);
        const std::uint64_t size = std::uint64_t{1} << n;
        std::vector<std::vector<Int>> egf(std::size_t(n) + 1);
        for (int h = 0; h <= n; ++h) egf[std::size_t(h)] = egf_coefficients(n, h, kmax);
        std::vector<std::vector<Int>> poincare(size);
        for (std::uint64_t a = 0; a < size; ++a)
            poincare[a] = poincare_series(n, GroupElement(n, a)).as_computed.series(kmax);
        // matrix powers from the zero vertex, one multiplication per step
        std::vector<Int> v(size);
        v[0] = 1;
        for (int k = 0; k <= kmax; ++k) {
            for (std::uint64_t w = 0; w < size; ++w) {
                const GroupElement a(n, std::uint64_t(w));
                const int h = a.hamming_weight();
                const Int& brute = v[w];
                std::ostringstream at;
                at << "n=" << n << " a=" << a.to_string() << " k=" << k << ": ";
                r.expect(walk_count_spectral(cube, GroupElement::zero(n), a, k) == brute,
                         at.str() + "spectral route differs");
                r.expect(walk_count_cube_closed(n, h, k) == brute,
                         at.str() + "closed route differs");
                r.expect(multiplicity_multinomial(k, n, h) == brute,
                         at.str() + "multinomial route differs");
                r.expect(egf[std::size_t(h)][std::size_t(k)] == brute,
                         at.str() + "egf route differs");
                r.expect(poincare[w][std::size_t(k)] == brute,
                         at.str() + "poincare route differs");
            }
            v = adj.apply(v);
        }
    }
    // beyond the fixed suite: the cheap routes for larger n, stepping the
    // walk vector in place instead of holding a dense 2^n x 2^n matrix
    for (int n = 5; n <= std::min(max_n, 12); ++n) {
        const std::uint64_t size = std::uint64_t{1} << n;
        std::vector<Int> v(size);
        v[0] = 1;
        for (int k = 0; k <= kmax; ++k) {
            for (std::uint64_t w = 0; w < size; ++w) {
                const GroupElement a(n, std::uint64_t(w));
                const int h = a.hamming_weight();
                std::ostringstream at;
                at << "n=" << n << " a=" << a.to_string() << " k=" << k << ": ";
                r.expect(walk_count_cube_closed(n, h, k) == v[w],
                         at.str() + "closed route differs");
                r.expect(multiplicity_multinomial(k, n, h) == v[w],
                         at.str() + "multinomial route differs");
            }
            std::vector<Int> next(size);
            for (std::uint64_t w = 0; w < size; ++w)
                for (int i = 1; i <= n; ++i)
                    next[w] += v[w ^ (std::uint64_t{1} << (n - i))];
            v = std::move(next);
        }
    }
    const double dt = seconds_since(t0);
    r.expect(dt < 60.0, "cross-route sweep took too long");
    r.finish("cross-route agreement");
}

void check_recursion(Reporter& r) {
    r.expect(min_poly_cube(3) == IntPolynomial{9, 0, -10, 0, 1},
             "minimal polynomial for n=3 differs");
    // worked instance on the weight-2 stream: 1640 - 10*182 + 9*20
    r.expect(Int(1640) - Int(10) * 182 + Int(9) * 20 == 0, "spot recursion instance failed");
    for (std::uint64_t w : {std::uint64_t(0), std::uint64_t(4), std::uint64_t(6), std::uint64_t(7)}) {
        const GroupElement a(3, w);
        std::vector<Int> counts;
        for (int k = 0; k <= 12; ++k)
            counts.push_back(walk_count_cube_closed(3, a.hamming_weight(), k));
        r.expect(recursion_check(3, counts),
                 "stream for " + a.to_string() + " violates the recursion");
    }
    r.finish("minimal polynomial recursion");
}

void check_basis_and_diagrams(Reporter& r) {
    // full basis at k=2, n=3
    std::set<BasisElement> basis;
    BasisEnumerator be(2, 3);
    while (auto e = be.next()) basis.insert(*e);
    r.expect(basis.size() == 21, "basis of Z_2(Z_2^3) is not 21 elements");
    r.expect(count_basis(2, 3) == 21, "count_basis(2,3) != 21");

    // the four even diagrams expand to 3 + 6 + 6 + 6 summands covering the
    // basis disjointly
    std::map<std::string, std::size_t> sizes;
    std::set<BasisElement> seen;
    bool disjoint = true;
    PartitionEnumerator pe(2, 3, true);
    while (auto d = pe.next()) {
        const auto summands = expand_Td(*d, 3);
        sizes[d->to_string()] = summands.size();
        for (const BasisElement& e : summands)
            if (!seen.insert(e).second) disjoint = false;
    }
    const std::map<std::string, std::size_t> expected_sizes = {
        {"1,1|1,1", 3}, {"1,1|2,2", 6}, {"1,2|1,2", 6}, {"1,2|2,1", 6}};
    r.expect(sizes == expected_sizes, "summand counts per diagram differ");
    r.expect(disjoint, "summands are not disjoint");
    r.expect(seen == basis, "summands do not cover the basis");

    // highlighted walk pair
    const BasisElement e =
        paths_to_diagram(WalkPath{3, {2, 2, 3, 3, 3}}, WalkPath{3, {2, 1, 2, 1, 3}});
    r.expect(e.compact() == "E_22333^21213", "walk pair maps to the wrong matrix unit");

    // per-endpoint pair counts against the module dimensions
    for (int k = 0; k <= 5; ++k)
        for (std::uint64_t w = 0; w < 8; ++w) {
            const GroupElement a(3, w);
            const Int m = dim_module(k, 3, a);
            r.expect(count_basis(k, 3, a) == m * m,
                     "pair count at k=" + std::to_string(k) + " a=" + a.to_string() +
                         " is not m^2");
        }
    r.finish("matrix-unit basis and diagram expansion");
}

void check_tanabe(Reporter& r) {
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 4; ++k) {
            PartitionEnumerator pe(k, n, false);
            while (auto d = pe.next()) {
                const bool lhs = tanabe_condition(*d, n);
                const bool rhs = d->all_blocks_even();
                r.expect(lhs == rhs, "mismatch at n=" + std::to_string(n) + " d=" + d->to_string());
            }
        }
    r.finish("parity condition vs even blocks");
}

void check_invariants_shortcut(Reporter& r) {
    for (int n = 1; n <= 4; ++n) {
        const PoincareSeries inv = invariants_series(n);
        const PoincareSeries poi = poincare_series(n, GroupElement::zero(n));
        r.expect(inv.reduced == poi.reduced,
                 "reduced forms differ at n=" + std::to_string(n));
    }
    r.finish("invariants determinant shortcut");
}

void check_sl2(Reporter& r) {
    for (int n = 1; n <= 6; ++n) {
        const Sl2Triple t = sl2_triple(n);
        const IntMatrix adj = adjacency_matrix(StepSet::cube(n));
        const std::string at = " at n=" + std::to_string(n);
        r.expect(t.raising + t.lowering == adj, "R + L != A" + at);
        r.expect(commutator(t.lowering, t.raising) == t.dual, "[L,R] != A*" + at);
        r.expect(commutator(t.dual, t.lowering) == t.lowering * Int(2), "[A*,L] != 2L" + at);
        r.expect(commutator(t.dual, t.raising) == t.raising * Int(-2), "[A*,R] != -2R" + at);
    }
    r.finish("sl2 triple identities");
}

}

std::vector<CheckResult> run_selftest(const SelftestOptions& opts) {
    Reporter r;
    check_bratteli_diagram(r);
    check_dimension_table(r);
    check_poincare_n3(r);
    check_cross_routes(r, opts.max_n);
    check_recursion(r);
    check_basis_and_diagrams(r);
    check_tanabe(r);
    check_invariants_shortcut(r);
    check_sl2(r);
    if (opts.inject_failure)
        r.results.push_back({"injected failure", false, "requested via --inject-failure"});
    return r.results;
}

}
