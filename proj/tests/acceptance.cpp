// Acceptance gate: ten fixed criteria, one pass/fail line each.  Frozen
// reference values live inline; argv[1] names the command line binary used
// by the criteria that drive the tool end to end.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#include "cubewalks/bigint.hpp"
#include "cubewalks/centralizer.hpp"
#include "cubewalks/genfun.hpp"
#include "cubewalks/group.hpp"
#include "cubewalks/matrix.hpp"
#include "cubewalks/partitions.hpp"
#include "cubewalks/polynomial.hpp"
#include "cubewalks/spectral.hpp"

using namespace cubewalks;
using json = nlohmann::ordered_json;

namespace {

std::string g_cli;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    RunResult r;
    if (g_cli.empty()) return r;
    const std::string cmd = "\"" + g_cli + "\" " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    if (!p) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    const int status = pclose(p);
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

struct Criterion {
    int id;
    std::string name;
    std::function<bool(std::string&)> check;   // detail out-param on failure
};

// 1. the multiplicity diagram printed by the tool, levels 0..6 in
// dimension 3, against the frozen table
bool criterion_bratteli(std::string& why) {
    auto r = run_cli("--format json bratteli -n 3 --k-max 6");
    if (r.exit_code != 0) {
        why = "tool exited with code " + std::to_string(r.exit_code);
        return false;
    }
    const json rec = json::parse(r.out, nullptr, false);
    if (rec.is_discarded()) {
        why = "output is not valid JSON";
        return false;
    }
    const std::vector<std::map<std::string, std::string>> table = {
        {{"000", "1"}},
        {{"100", "1"}, {"010", "1"}, {"001", "1"}},
        {{"000", "3"}, {"110", "2"}, {"101", "2"}, {"011", "2"}},
        {{"100", "7"}, {"010", "7"}, {"001", "7"}, {"111", "6"}},
        {{"000", "21"}, {"110", "20"}, {"101", "20"}, {"011", "20"}},
        {{"100", "61"}, {"010", "61"}, {"001", "61"}, {"111", "60"}},
        {{"000", "183"}, {"110", "182"}, {"101", "182"}, {"011", "182"}},
    };
    const std::vector<std::string> sums = {"1", "3", "21", "183", "1641", "14763", "132861"};
    const json& levels = rec["result"]["levels"];
    if (levels.size() != 7) {
        why = "expected 7 levels";
        return false;
    }
    for (int k = 0; k <= 6; ++k) {
        const json& mults = levels[k]["multiplicities"];
        if (mults.size() != table[std::size_t(k)].size()) {
            why = "level " + std::to_string(k) + " has the wrong support";
            return false;
        }
        for (const auto& [vertex, value] : table[std::size_t(k)])
            if (!mults.contains(vertex) || mults[vertex] != value) {
                why = "level " + std::to_string(k) + " disagrees at " + vertex;
                return false;
            }
        if (levels[k]["sum_of_squares"] != sums[std::size_t(k)]) {
            why = "squared sum differs at level " + std::to_string(k);
            return false;
        }
    }
    return true;
}

// 2. the dimension table and the orbit-size decomposition of dim Z_2
bool criterion_dimensions(std::string& why) {
    if (dim_Zk_Z2n_spectral(2, 3) != 21 || dim_Zk_Z2n_diagrammatic(2, 3) != 21) {
        why = "dim Z_2 over Z_2^3 is not 21";
        return false;
    }
    if (dim_Zk_Sn(2, 3) != 14) {
        why = "dim Z_2 over S_3 is not 14";
        return false;
    }
    if (dim_Zk_G21n(2, 3) != 4) {
        why = "dim Z_2 over G(2,1,3) is not 4";
        return false;
    }
    if (even_block_count_closed(4, 2) != 63 || even_block_count_partitionwise(4, 2) != 63) {
        why = "T(4,2) is not 63 on both routes";
        return false;
    }
    const Int decomposition = even_block_count_closed(2, 1) * falling_factorial(3, 1) +
                              even_block_count_closed(2, 2) * falling_factorial(3, 2);
    if (decomposition != 21 || even_block_count_closed(2, 1) != 1 ||
        even_block_count_closed(2, 2) != 3) {
        why = "1*3 + 3*6 decomposition does not give 21";
        return false;
    }
    return true;
}

// 3. series through t^8 for one representative of each weight, plus the
// factored determinant, inside five seconds
bool criterion_series(std::string& why) {
    const auto t0 = std::chrono::steady_clock::now();

    const IntPolynomial det = det_fraction_free(
        PolyMatrix::identity_minus_t(adjacency_matrix(StepSet::cube(3))));
    const IntPolynomial want_det = IntPolynomial{1, 0, -9} * IntPolynomial{1, 0, -1} *
                                   IntPolynomial{1, 0, -1} * IntPolynomial{1, 0, -1};
    if (det != want_det) {
        why = "det(I - tA) is not (1-9t^2)(1-t^2)^3";
        return false;
    }

    const std::vector<std::pair<std::string, std::vector<Int>>> streams = {
        {"000", {1, 0, 3, 0, 21, 0, 183, 0, 1641}},
        {"100", {0, 1, 0, 7, 0, 61, 0, 547, 0}},
        {"110", {0, 0, 2, 0, 20, 0, 182, 0, 1640}},
        {"111", {0, 0, 0, 6, 0, 60, 0, 546, 0}},
    };
    for (const auto& [vertex, want] : streams) {
        PoincareSeries p = poincare_series(3, GroupElement::parse(vertex));
        if (p.as_computed.series(8) != want || p.reduced.series(8) != want) {
            why = "series at " + vertex + " differs through t^8";
            return false;
        }
    }

    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
    if (elapsed >= 5000) {
        why = "took " + std::to_string(elapsed) + " ms, limit 5000";
        return false;
    }
    return true;
}

// 4. six routes to every count for n <= 4, all endpoints, k <= 8, inside
// sixty seconds
bool criterion_cross_routes(std::string& why) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int n = 1; n <= 4; ++n) {
        const StepSet cube = StepSet::cube(n);
        const IntMatrix adj = adjacency_matrix(cube);
        IntMatrix power = IntMatrix::identity(adj.rows());
        const GroupElement zero = GroupElement::zero(n);

        std::vector<std::vector<Int>> egf(std::size_t(n) + 1), poi;
        for (int h = 0; h <= n; ++h) egf[std::size_t(h)] = egf_coefficients(n, h, 8);
        for (std::uint64_t w = 0; w < (std::uint64_t(1) << n); ++w)
            poi.push_back(poincare_series(n, GroupElement(n, w)).as_computed.series(8));

        for (int k = 0; k <= 8; ++k) {
            for (std::uint64_t w = 0; w < (std::uint64_t(1) << n); ++w) {
                const GroupElement a(n, w);
                const int h = a.hamming_weight();
                const Int want = power.at(0, w);
                const bool ok =
                    walk_count_bruteforce(cube, zero, a, k) == want &&
                    walk_count_spectral(cube, zero, a, k) == want &&
                    walk_count_cube_closed(n, h, k) == want &&
                    multiplicity_multinomial(k, n, h) == want &&
                    egf[std::size_t(h)][std::size_t(k)] == want &&
                    poi[w][std::size_t(k)] == want;
                if (!ok) {
                    why = "routes disagree at n=" + std::to_string(n) +
                          " a=" + a.to_string() + " k=" + std::to_string(k);
                    return false;
                }
            }
            power = power * adj;
        }
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
    if (elapsed >= 60000) {
        why = "took " + std::to_string(elapsed) + " ms, limit 60000";
        return false;
    }
    return true;
}

// 5. the quartic recursion in dimension three, including the worked window
bool criterion_recursion(std::string& why) {
    if (min_poly_cube(3) != IntPolynomial{9, 0, -10, 0, 1}) {
        why = "minimal polynomial is not t^4 - 10 t^2 + 9";
        return false;
    }
    if (Int(1640) - Int(10) * 182 + Int(9) * 20 != 0) {
        why = "worked window 1640 - 1820 + 180 does not vanish";
        return false;
    }
    for (int h = 0; h <= 3; ++h) {
        std::vector<Int> counts;
        for (int k = 0; k <= 12; ++k) counts.push_back(walk_count_cube_closed(3, h, k));
        if (!recursion_check(3, counts)) {
            why = "stream at weight " + std::to_string(h) + " violates the recursion";
            return false;
        }
    }
    return true;
}

// 6. basis enumeration, diagram expansions, and the path pairing
bool criterion_basis(std::string& why) {
    std::vector<BasisElement> basis;
    BasisEnumerator en(2, 3);
    while (auto e = en.next()) basis.push_back(*e);
    if (basis.size() != 21) {
        why = "basis of Z_2(Z_2^3) has " + std::to_string(basis.size()) + " elements";
        return false;
    }

    const std::vector<std::pair<std::vector<int>, std::size_t>> orbits = {
        {{1, 1, 1, 1}, 3}, {{1, 1, 2, 2}, 6}, {{1, 2, 1, 2}, 6}, {{1, 2, 2, 1}, 6}};
    std::set<BasisElement> cover;
    for (const auto& [labels, want_size] : orbits) {
        auto terms = expand_Td(SetPartition(2, labels), 3);
        if (terms.size() != want_size) {
            why = "orbit of " + SetPartition(2, labels).to_string() + " has " +
                  std::to_string(terms.size()) + " summands";
            return false;
        }
        for (const auto& e : terms)
            if (!cover.insert(e).second) {
                why = "summand " + e.to_string() + " appears twice";
                return false;
            }
    }
    if (cover != std::set<BasisElement>(basis.begin(), basis.end())) {
        why = "expansions do not cover the basis";
        return false;
    }

    const BasisElement mapped =
        paths_to_diagram(WalkPath{3, {2, 2, 3, 3, 3}}, WalkPath{3, {2, 1, 2, 1, 3}});
    if (mapped.compact() != "E_22333^21213") {
        why = "highlighted path pair maps to " + mapped.to_string();
        return false;
    }

    for (int k = 0; k <= 5; ++k)
        for (std::uint64_t w = 0; w < 8; ++w) {
            const GroupElement a(3, w);
            const Int m = dim_module(k, 3, a);
            if (count_basis(k, 3, a) != m * m) {
                why = "pair count at k=" + std::to_string(k) + " a=" + a.to_string() +
                      " is not the squared multiplicity";
                return false;
            }
        }
    return true;
}

// 7. the parity condition is exactly the all-even-blocks condition
bool criterion_parity(std::string& why) {
    for (int k = 1; k <= 4; ++k)
        for (int n = 1; n <= 4; ++n) {
            PartitionEnumerator en(k, n, false);
            while (auto d = en.next())
                if (tanabe_condition(*d, n) != d->all_blocks_even()) {
                    why = "mismatch at " + d->to_string() + " with n=" + std::to_string(n);
                    return false;
                }
        }
    return true;
}

// 8. deleting the zero vertex gives the same reduced invariants series
bool criterion_invariants(std::string& why) {
    for (int n = 1; n <= 4; ++n) {
        const PoincareSeries direct = poincare_series(n, GroupElement::zero(n));
        const PoincareSeries shortcut = invariants_series(n);
        if (!(direct.reduced == shortcut.reduced)) {
            why = "reduced forms differ at n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

// 9. raising/lowering split of the adjacency matrix with its sl2 relations
bool criterion_sl2(std::string& why) {
    for (int n = 1; n <= 6; ++n) {
        const Sl2Triple t = sl2_triple(n);
        const IntMatrix a = adjacency_matrix(StepSet::cube(n));
        const bool ok = t.raising + t.lowering == a &&
                        commutator(t.lowering, t.raising) == t.dual &&
                        commutator(t.dual, t.lowering) == t.lowering * Int(2) &&
                        commutator(t.dual, t.raising) == t.raising * Int(-2);
        if (!ok) {
            why = "an identity fails at n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

// 10. the tool's own selftest covers items 1-9 and exits 0
bool criterion_selftest(std::string& why) {
    auto r = run_cli("selftest");
    if (r.exit_code != 0) {
        why = "selftest exited with code " + std::to_string(r.exit_code);
        return false;
    }
    if (r.out.find("FAIL") != std::string::npos) {
        why = "selftest printed a failing line";
        return false;
    }
    return true;
}

}   // namespace

int main(int argc, char** argv) {
    if (argc >= 2) g_cli = argv[1];

    const std::vector<Criterion> criteria = {
        {1, "multiplicity diagram n=3 through level 6", criterion_bratteli},
        {2, "dimension table and orbit decomposition", criterion_dimensions},
        {3, "walk series and factored determinant, n=3", criterion_series},
        {4, "six-route count equivalence, n <= 4, k <= 8", criterion_cross_routes},
        {5, "quartic count recursion, n=3", criterion_recursion},
        {6, "basis, diagram orbits, and path pairing", criterion_basis},
        {7, "parity condition equals even blocks, k,n <= 4", criterion_parity},
        {8, "invariants shortcut equals the direct series", criterion_invariants},
        {9, "sl2 commutation relations, n <= 6", criterion_sl2},
        {10, "tool selftest exits clean", criterion_selftest},
    };

    int passed = 0;
    for (const auto& c : criteria) {
        std::string why;
        bool ok = false;
        try {
            ok = c.check(why);
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        if (ok) ++passed;
        std::printf("%s  criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(),
                    why.empty() ? "" : " -- ", why.c_str());
    }
    std::printf("acceptance: %d/%zu criteria passed\n", passed, criteria.size());
    return passed == int(criteria.size()) ? 0 : 1;
}
