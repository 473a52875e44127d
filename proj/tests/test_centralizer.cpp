#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "cubewalks/bigint.hpp"
#include "cubewalks/centralizer.hpp"
#include "cubewalks/errors.hpp"
#include "cubewalks/group.hpp"
#include "cubewalks/partitions.hpp"

using namespace cubewalks;

namespace {

std::vector<BasisElement> collect_basis(int k, int n,
                                        std::optional<GroupElement> target = std::nullopt) {
    std::vector<BasisElement> out;
    BasisEnumerator en(k, n, target);
    while (auto e = en.next()) out.push_back(*e);
    return out;
}

}   // namespace

TEST_SUITE("basis elements") {
    TEST_CASE("row parity determines membership") {
        CHECK(BasisElement{{1, 1}, {2, 2}}.parity_ok(2));
        CHECK(BasisElement{{1, 2}, {2, 1}}.parity_ok(2));
        CHECK(!BasisElement{{1, 1}, {1, 2}}.parity_ok(2));
        CHECK(!BasisElement{{1}, {2}}.parity_ok(2));
        // the worked pair: 1 and 2 appear with even count in both rows, 3 with odd
        CHECK(BasisElement{{2, 2, 3, 3, 3}, {2, 1, 2, 1, 3}}.parity_ok(3));
    }

    TEST_CASE("endpoint is the parity vector of either row") {
        BasisElement e{{2, 2, 3, 3, 3}, {2, 1, 2, 1, 3}};
        CHECK(e.endpoint(3) == GroupElement::parse("001"));
        BasisElement id1{{1, 2}, {1, 2}};
        CHECK(id1.endpoint(2).is_zero() == false);
        CHECK(id1.endpoint(2) == GroupElement::parse("11"));
    }

    TEST_CASE("printing") {
        BasisElement e{{2, 2, 3, 3, 3}, {2, 1, 2, 1, 3}};
        CHECK(e.to_string() == "E[2,2,3,3,3]^[2,1,2,1,3]");
        CHECK(e.compact() == "E_22333^21213");
        BasisElement wide{{10}, {10}};
        CHECK(wide.to_string() == "E[10]^[10]");
        CHECK_THROWS_AS((void)wide.compact(), std::invalid_argument);
    }
}

TEST_SUITE("basis enumeration") {
    TEST_CASE("two boxes in dimension three") {
        auto basis = collect_basis(2, 3);
        CHECK(basis.size() == 21);
        CHECK(count_basis(2, 3) == 21);
        // lexicographic in (alpha, beta), starting from the identity unit
        CHECK(basis.front() == BasisElement{{1, 1}, {1, 1}});
        CHECK(std::is_sorted(basis.begin(), basis.end()));
        for (const auto& e : basis) {
            CHECK(e.parity_ok(3));
            CHECK(e.endpoint(3) == BasisElement{e.alpha, e.alpha}.endpoint(3));
        }
    }

    TEST_CASE("one box is diagonal only") {
        auto basis = collect_basis(1, 3);
        REQUIRE(basis.size() == 3);
        for (int i = 1; i <= 3; ++i) CHECK(basis[std::size_t(i - 1)] == BasisElement{{i}, {i}});
    }

    TEST_CASE("zero boxes yield the empty unit") {
        auto basis = collect_basis(0, 5);
        REQUIRE(basis.size() == 1);
        CHECK(basis[0].alpha.empty());
        CHECK(basis[0].beta.empty());
        CHECK(count_basis(0, 5) == 1);
        CHECK(collect_basis(0, 5, GroupElement::parse("10000")).empty());
    }

    TEST_CASE("endpoint restriction squares the row count") {
        auto sector = collect_basis(5, 3, GroupElement::parse("001"));
        CHECK(sector.size() == 3721);   // 61^2
        CHECK(count_basis(5, 3, GroupElement::parse("001")) == 3721);
        for (const auto& e : sector) CHECK(e.endpoint(3) == GroupElement::parse("001"));
    }

    TEST_CASE("sector counts add up to the full dimension") {
        for (int k = 0; k <= 4; ++k)
            for (int n = 1; n <= 3; ++n) {
                Int total = 0;
                for (std::uint64_t w = 0; w < (std::uint64_t(1) << n); ++w)
                    total += count_basis(k, n, GroupElement(n, w));
                CHECK(total == count_basis(k, n));
            }
    }

    TEST_CASE("tuple-space budget") {
        CHECK_THROWS_AS(BasisEnumerator(9, 10, std::nullopt, 1000000), BudgetExceeded);
        CHECK_THROWS_AS((void)count_basis(9, 10, std::nullopt, 1000000), BudgetExceeded);
    }
}

TEST_SUITE("dimension formulas") {
    TEST_CASE("frozen values in dimension three") {
        Int expected[] = {1, 3, 21, 183, 1641, 14763, 132861};
        for (long k = 0; k <= 6; ++k) {
            CHECK(dim_Zk_Z2n_spectral(k, 3) == expected[k]);
            CHECK(dim_Zk_Z2n_diagrammatic(k, 3) == expected[k]);
        }
    }

    TEST_CASE("spectral and diagrammatic routes agree") {
        for (long k = 0; k <= 6; ++k)
            for (long n = 1; n <= 6; ++n)
                CHECK(dim_Zk_Z2n_spectral(k, n) == dim_Zk_Z2n_diagrammatic(k, n));
    }

    TEST_CASE("enumeration agrees with both formulas") {
        for (int k = 0; k <= 3; ++k)
            for (int n = 1; n <= 3; ++n)
                CHECK(count_basis(k, n) == dim_Zk_Z2n_spectral(k, n));
    }

    TEST_CASE("dimension equals the walk count of double length") {
        for (long k = 0; k <= 5; ++k)
            for (int n = 1; n <= 4; ++n)
                CHECK(dim_Zk_Z2n_spectral(k, n) ==
                      dim_module(2 * k, n, GroupElement::zero(n)));
    }
}

TEST_SUITE("module multiplicities") {
    TEST_CASE("frozen values in dimension three") {
        CHECK(dim_module(5, 3, GroupElement::parse("001")) == 61);
        CHECK(multiplicity_multinomial(5, 3, 1) == 61);
        CHECK(multiplicity_multinomial(3, 3, 3) == 6);
        CHECK(multiplicity_multinomial(2, 3, 2) == 2);
        CHECK(multiplicity_multinomial(8, 3, 0) == 1641);
        CHECK(multiplicity_multinomial(0, 3, 0) == 1);
        CHECK(multiplicity_multinomial(0, 3, 1) == 0);
    }

    TEST_CASE("multinomial route equals the walk route") {
        for (int n = 1; n <= 4; ++n)
            for (long k = 0; k <= 8; ++k)
                for (int h = 0; h <= n; ++h) {
                    GroupElement a(n, (std::uint64_t(1) << h) - 1);
                    REQUIRE(a.hamming_weight() == h);
                    CHECK(multiplicity_multinomial(k, n, h) == dim_module(k, n, a));
                }
    }

    TEST_CASE("dimension mismatch is rejected") {
        CHECK_THROWS_AS((void)dim_module(2, 3, GroupElement::parse("01")),
                        std::invalid_argument);
    }
}

TEST_SUITE("diagram expansion") {
    TEST_CASE("the four even two-box diagrams in dimension three") {
        // lexicographic partition order: 1111, 1122, 1212, 1221
        SetPartition d1(2, {1, 1, 1, 1});
        SetPartition d2(2, {1, 1, 2, 2});
        SetPartition d3(2, {1, 2, 1, 2});
        SetPartition d4(2, {1, 2, 2, 1});

        auto t1 = expand_Td(d1, 3);
        REQUIRE(t1.size() == 3);
        CHECK(t1[0] == BasisElement{{1, 1}, {1, 1}});
        CHECK(t1[1] == BasisElement{{2, 2}, {2, 2}});
        CHECK(t1[2] == BasisElement{{3, 3}, {3, 3}});

        auto t2 = expand_Td(d2, 3);
        REQUIRE(t2.size() == 6);
        CHECK(t2[0] == BasisElement{{1, 1}, {2, 2}});
        CHECK(t2[1] == BasisElement{{1, 1}, {3, 3}});
        CHECK(t2[2] == BasisElement{{2, 2}, {1, 1}});
        CHECK(t2[3] == BasisElement{{2, 2}, {3, 3}});
        CHECK(t2[4] == BasisElement{{3, 3}, {1, 1}});
        CHECK(t2[5] == BasisElement{{3, 3}, {2, 2}});

        auto t3 = expand_Td(d3, 3);
        REQUIRE(t3.size() == 6);
        CHECK(t3[0] == BasisElement{{1, 2}, {1, 2}});
        CHECK(t3[5] == BasisElement{{3, 2}, {3, 2}});

        auto t4 = expand_Td(d4, 3);
        REQUIRE(t4.size() == 6);
        CHECK(t4[0] == BasisElement{{1, 2}, {2, 1}});
        CHECK(t4[5] == BasisElement{{3, 2}, {2, 3}});
    }

    TEST_CASE("expansions partition the whole basis") {
        for (int n = 1; n <= 3; ++n)
            for (int k = 1; k <= 3; ++k) {
                std::set<BasisElement> seen;
                Int summands = 0;
                PartitionEnumerator en(k, n, true);
                while (auto d = en.next()) {
                    auto terms = expand_Td(*d, n);
                    CHECK(Int(terms.size()) ==
                          falling_factorial(n, d->num_blocks()));
                    for (const auto& e : terms) {
                        CHECK(seen.insert(e).second);   // no overlap across diagrams
                        ++summands;
                    }
                }
                auto basis = collect_basis(k, n);
                CHECK(summands == Int(basis.size()));
                CHECK(seen == std::set<BasisElement>(basis.begin(), basis.end()));
            }
    }

    TEST_CASE("too many blocks for the alphabet") {
        SetPartition d(2, {1, 2, 3, 4});
        CHECK_THROWS_AS((void)expand_Td(d, 3), std::invalid_argument);
    }

    TEST_CASE("projection picks out one summand") {
        SetPartition d2(2, {1, 1, 2, 2});
        auto t2 = expand_Td(d2, 3);
        auto hit = project(t2, {1, 1}, {2, 2});
        REQUIRE(hit.has_value());
        CHECK(*hit == BasisElement{{1, 1}, {2, 2}});
        CHECK(!project(t2, {1, 1}, {1, 1}).has_value());
        CHECK(!project(t2, {1, 2}, {2, 1}).has_value());
    }
}

TEST_SUITE("multiplicity diagram") {
    TEST_CASE("frozen levels in dimension three") {
        auto levels = bratteli(3, 6);
        REQUIRE(levels.size() == 7);

        auto get = [&](int k, const char* v) {
            return levels[std::size_t(k)].multiplicity(GroupElement::parse(v));
        };
        CHECK(get(0, "000") == 1);
        CHECK(levels[0].multiplicities.size() == 1);

        CHECK(get(1, "100") == 1);
        CHECK(get(1, "010") == 1);
        CHECK(get(1, "001") == 1);
        CHECK(levels[1].multiplicities.size() == 3);

        CHECK(get(2, "000") == 3);
        CHECK(get(2, "110") == 2);
        CHECK(get(2, "101") == 2);
        CHECK(get(2, "011") == 2);
        CHECK(levels[2].multiplicities.size() == 4);

        CHECK(get(3, "100") == 7);
        CHECK(get(3, "111") == 6);
        CHECK(get(4, "000") == 21);
        CHECK(get(4, "110") == 20);
        CHECK(get(5, "100") == 61);
        CHECK(get(5, "111") == 60);
        CHECK(get(6, "000") == 183);
        CHECK(get(6, "011") == 182);

        // multiplicity at an absent vertex is zero
        CHECK(get(3, "000") == 0);

        Int sums[] = {1, 3, 21, 183, 1641, 14763, 132861};
        for (int k = 0; k <= 6; ++k)
            CHECK(levels[std::size_t(k)].sum_of_squares() == sums[k]);
    }

    TEST_CASE("pascal rule agrees with the closed multiplicity formulas") {
        for (int n = 1; n <= 4; ++n) {
            auto levels = bratteli(n, 6);
            for (const auto& lvl : levels) {
                for (std::uint64_t w = 0; w < (std::uint64_t(1) << n); ++w) {
                    GroupElement a(n, w);
                    CHECK(lvl.multiplicity(a) ==
                          multiplicity_multinomial(lvl.level, n, a.hamming_weight()));
                }
                CHECK(lvl.sum_of_squares() == dim_Zk_Z2n_spectral(lvl.level, n));
            }
        }
    }

    TEST_CASE("levels alternate between even and odd weights") {
        auto levels = bratteli(4, 5);
        for (const auto& lvl : levels)
            for (const auto& [a, m] : lvl.multiplicities) {
                CHECK((a.hamming_weight() + lvl.level) % 2 == 0);
                CHECK(m > 0);
            }
    }
}

TEST_SUITE("paths and diagrams") {
    TEST_CASE("the worked pair of five-step paths") {
        WalkPath rho1{3, {2, 2, 3, 3, 3}};
        WalkPath rho2{3, {2, 1, 2, 1, 3}};
        CHECK(rho1.endpoint() == GroupElement::parse("001"));
        CHECK(rho2.endpoint() == GroupElement::parse("001"));
        BasisElement e = paths_to_diagram(rho1, rho2);
        CHECK(e.compact() == "E_22333^21213");
    }

    TEST_CASE("bad inputs") {
        const WalkPath out_of_range{3, {1, 4}};
        CHECK_THROWS_AS((void)out_of_range.endpoint(), std::invalid_argument);

        const WalkPath p12{3, {1, 2}}, p13{3, {1, 3}};
        CHECK_THROWS_AS((void)paths_to_diagram(p12, p13),   // different endpoints
                        std::invalid_argument);

        const WalkPath p11{3, {1, 1}}, p2211{3, {2, 2, 1, 1}};
        CHECK_THROWS_AS((void)paths_to_diagram(p11, p2211),   // different lengths
                        std::invalid_argument);

        const WalkPath other_dim{2, {1, 1}};
        CHECK_THROWS_AS((void)paths_to_diagram(p11, other_dim),   // different dimensions
                        std::invalid_argument);
    }

    TEST_CASE("path pairs biject with the matrix-unit basis") {
        int n = 3, k = 3;
        // bucket all 3^3 paths by endpoint, then pair within buckets
        std::vector<WalkPath> paths;
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b <= n; ++b)
                for (int c = 1; c <= n; ++c) paths.push_back(WalkPath{n, {a, b, c}});

        std::set<BasisElement> image;
        for (const auto& p : paths)
            for (const auto& q : paths) {
                if (!(p.endpoint() == q.endpoint())) continue;
                CHECK(image.insert(paths_to_diagram(p, q)).second);
            }
        auto basis = collect_basis(k, n);
        CHECK(image == std::set<BasisElement>(basis.begin(), basis.end()));
        CHECK(image.size() == 183);
    }
}
