#include "cubewalks/centralizer.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cubewalks/spectral.hpp"

namespace cubewalks {

namespace {

// XOR of the unit words for a tuple of coordinates in [1,n]
std::uint64_t endpoint_word(const std::vector<int>& tuple, int n) {
    std::uint64_t w = 0;
    for (int v : tuple) {
        if (v < 1 || v > n)
            throw std::invalid_argument("tuple entry out of [1,n]");
        w ^= std::uint64_t{1} << (n - v);
    }
    return w;
}

std::uint64_t checked_pow_codes(int k, int n, long long budget) {
    Int total = int_pow(Int(n), unsigned(k));
    if (total > budget)
        throw BudgetExceeded("n^k = " + total.str() + " tuples exceeds the scan budget " +
                             std::to_string(budget) + " (raise --budget to override)");
    return total.convert_to<std::uint64_t>();
}

}

bool BasisElement::parity_ok(int n) const {
    if (alpha.size() != beta.size()) return false;
    std::vector<int> diff(std::size_t(n) + 1);
    for (int v : alpha) {
        if (v < 1 || v > n) return false;
        ++diff[std::size_t(v)];
    }
    for (int v : beta) {
        if (v < 1 || v > n) return false;
        --diff[std::size_t(v)];
    }
    for (int d : diff)
        if (d % 2 != 0) return false;
    return true;
}

GroupElement BasisElement::endpoint(int n) const {
    return {n, endpoint_word(alpha, n)};
}

std::string BasisElement::to_string() const {
    std::ostringstream os;
    os << "E[";
    for (std::size_t i = 0; i < alpha.size(); ++i) os << (i ? "," : "") << alpha[i];
    os << "]^[";
    for (std::size_t i = 0; i < beta.size(); ++i) os << (i ? "," : "") << beta[i];
    os << "]";
    return os.str();
}

std::string BasisElement::compact() const {
    std::ostringstream os;
    os << "E_";
    for (int v : alpha) {
        if (v > 9) throw std::invalid_argument("BasisElement::compact: entry above 9");
        os << v;
    }
    os << "^";
    for (int v : beta) {
        if (v > 9) throw std::invalid_argument("BasisElement::compact: entry above 9");
        os << v;
    }
    return os.str();
}

BasisEnumerator::BasisEnumerator(int k, int n, std::optional<GroupElement> target,
                                 long long budget)
    : k_(k), n_(n), target_(std::move(target)) {
    if (k < 0 || n < 1 || n > 64)
        throw std::invalid_argument("BasisEnumerator: need k >= 0 and n in [1,64]");
    if (target_ && target_->dimension() != n)
        throw std::invalid_argument("BasisEnumerator: target dimension mismatch");
    if (k_ == 0) return;
    total_codes_ = checked_pow_codes(k_, n_, budget);
    // bucket the column tuples by endpoint, preserving lexicographic order
    for (std::uint64_t code = 0; code < total_codes_; ++code)
        buckets_[endpoint_word(decode(code), n_)].push_back(std::uint32_t(code));
}

std::vector<int> BasisEnumerator::decode(std::uint64_t code) const {
    std::vector<int> tuple(static_cast<std::size_t>(k_));
    for (std::size_t i = std::size_t(k_); i-- > 0;) {
        tuple[i] = int(code % std::uint64_t(n_)) + 1;
        code /= std::uint64_t(n_);
    }
    return tuple;
}

bool BasisEnumerator::advance_alpha() {
    while (alpha_code_ < total_codes_) {
        const std::uint64_t code = alpha_code_++;
        alpha_ = decode(code);
        const std::uint64_t endpoint = endpoint_word(alpha_, n_);
        if (target_ && endpoint != target_->index()) continue;
        bucket_ = &buckets_.at(endpoint);
        bucket_pos_ = 0;
        return true;
    }
    return false;
}

std::optional<BasisElement> BasisEnumerator::next() {
    if (done_) return std::nullopt;
    if (k_ == 0) {
        done_ = true;
        if (!target_ || target_->is_zero()) return BasisElement{};
        return std::nullopt;
    }
    while (true) {
        if (bucket_ && bucket_pos_ < bucket_->size())
            return BasisElement{alpha_, decode((*bucket_)[bucket_pos_++])};
        if (!advance_alpha()) {
            done_ = true;
            return std::nullopt;
        }
    }
}

Int count_basis(int k, int n, std::optional<GroupElement> target, long long budget) {
    if (k < 0 || n < 1 || n > 64)
        throw std::invalid_argument("count_basis: need k >= 0 and n in [1,64]");
    if (target && target->dimension() != n)
        throw std::invalid_argument("count_basis: target dimension mismatch");
    if (k == 0) return !target || target->is_zero() ? 1 : 0;
    const std::uint64_t total = checked_pow_codes(k, n, budget);
    // tuples sharing an endpoint pair freely, so the total is a sum of
    // squared per-endpoint counts
    std::unordered_map<std::uint64_t, Int> rows;
    std::vector<int> tuple(std::size_t(k), 1);
    std::uint64_t word = endpoint_word(tuple, n);
    for (std::uint64_t code = 0;; ++code) {
        ++rows[word];
        if (code + 1 == total) break;
        // odometer step, updating the endpoint by the coordinates that flip
        for (std::size_t i = tuple.size(); i-- > 0;) {
            word ^= std::uint64_t{1} << (n - tuple[i]);
            if (tuple[i] < n) {
                ++tuple[i];
                word ^= std::uint64_t{1} << (n - tuple[i]);
                break;
            }
            tuple[i] = 1;
            word ^= std::uint64_t{1} << (n - tuple[i]);
        }
    }
    Int total_count = 0;
    if (target) {
        auto it = rows.find(target->index());
        if (it != rows.end()) total_count = it->second * it->second;
    } else {
        for (const auto& [w, cnt] : rows) total_count += cnt * cnt;
    }
    return total_count;
}

Int dim_Zk_Z2n_spectral(long k, long n) {
    if (k < 0 || n < 1 || n > 64)
        throw std::invalid_argument("dim_Zk_Z2n_spectral: need k >= 0 and n in [1,64]");
    Int total = 0;
    for (long i = 0; i <= n; ++i)
        total += binomial(n, i) * int_pow(Int(n - 2 * i), (unsigned long)(2 * k));
    return exact_div(total, Int(1) << unsigned(n));
}

Int dim_Zk_Z2n_diagrammatic(long k, long n) {
    if (k < 0 || n < 1 || n > 64)
        throw std::invalid_argument("dim_Zk_Z2n_diagrammatic: need k >= 0 and n in [1,64]");
    if (k == 0) return 1;
    Int total = 0;
    for (long r = 1; r <= std::min(k, n); ++r)
        total += even_block_count_closed(k, r) * falling_factorial(n, r);
    return total;
}

Int dim_module(long k, int n, const GroupElement& a) {
    if (a.dimension() != n)
        throw std::invalid_argument("dim_module: vertex dimension mismatch");
    return walk_count_cube_closed(n, a.hamming_weight(), int(k));
}

Int multiplicity_multinomial(long k, int n, int h) {
    if (n < 1) throw std::invalid_argument("multiplicity_multinomial: n must be positive");
    if (h < 0 || h > n) throw std::invalid_argument("multiplicity_multinomial: weight out of range");
    if (k < 0) throw std::invalid_argument("multiplicity_multinomial: negative k");
    if (k == 0) return h == 0 ? 1 : 0;
    Int total = 0;
    for_each_integer_partition(int(k), n, [&](const std::vector<int>& lambda) {
        int odd = 0;
        for (int p : lambda)
            if (p % 2 != 0) ++odd;
        if (odd != h) return;
        const long r = long(lambda.size());
        // multinomial(k; lambda) over the step counts, divided by l_j! for
        // each repeated part size
        Int ways = 1;
        long rest = k;
        for (int p : lambda) {
            ways *= binomial(rest, p);
            rest -= p;
        }
        Int rep = 1;
        std::size_t i = 0;
        while (i < lambda.size()) {
            std::size_t j = i;
            while (j < lambda.size() && lambda[j] == lambda[i]) ++j;
            rep *= factorial(long(j - i));
            i = j;
        }
        total += exact_div(ways, rep) * factorial(h) * falling_factorial(n - h, r - h);
    });
    return total;
}

std::vector<BasisElement> expand_Td(const SetPartition& d, int n) {
    if (n < 1 || n > 64) throw std::invalid_argument("expand_Td: n out of range");
    const int r = d.num_blocks();
    if (r > n)
        throw std::invalid_argument("expand_Td: partition has more blocks than values");
    const ZetaLabels z = zeta_labels(d);
    std::vector<BasisElement> out;
    std::vector<int> image(static_cast<std::size_t>(r));
    std::vector<bool> used(std::size_t(n) + 1, false);
    auto rec = [&](auto&& self, int j) -> void {
        if (j == r) {
            BasisElement e;
            e.alpha.reserve(z.bottom.size());
            e.beta.reserve(z.top.size());
            for (int lab : z.bottom) e.alpha.push_back(image[std::size_t(lab - 1)]);
            for (int lab : z.top) e.beta.push_back(image[std::size_t(lab - 1)]);
            out.push_back(std::move(e));
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[std::size_t(v)]) continue;
            used[std::size_t(v)] = true;
            image[std::size_t(j)] = v;
            self(self, j + 1);
            used[std::size_t(v)] = false;
        }
    };
    rec(rec, 0);
    return out;
}

std::optional<BasisElement> project(std::span<const BasisElement> summands,
                                    const std::vector<int>& alpha,
                                    const std::vector<int>& beta) {
    for (const BasisElement& e : summands)
        if (e.alpha == alpha && e.beta == beta) return e;
    return std::nullopt;
}

Int BratteliLevel::multiplicity(const GroupElement& a) const {
    auto it = std::lower_bound(multiplicities.begin(), multiplicities.end(), a.index(),
                               [](const auto& p, std::uint64_t w) { return p.first.index() < w; });
    if (it != multiplicities.end() && it->first == a) return it->second;
    return 0;
}

Int BratteliLevel::sum_of_squares() const {
    Int total = 0;
    for (const auto& [a, m] : multiplicities) total += m * m;
    return total;
}

std::vector<BratteliLevel> bratteli(int n, int k_max, int max_n) {
    if (n < 1 || n > 64) throw std::invalid_argument("bratteli: n out of range");
    if (k_max < 0) throw std::invalid_argument("bratteli: negative level");
    if (n > max_n)
        throw CapExceeded("n = " + std::to_string(n) + " exceeds the vertex cap 2^" +
                          std::to_string(max_n) + " (raise --max-n to override)");
    std::vector<BratteliLevel> levels;
    levels.reserve(std::size_t(k_max) + 1);
    std::unordered_map<std::uint64_t, Int> cur;
    cur[0] = 1;
    for (int k = 0;; ++k) {
        BratteliLevel level{k, {}};
        level.multiplicities.reserve(cur.size());
        for (const auto& [w, m] : cur)
            level.multiplicities.emplace_back(GroupElement(n, w), m);
        std::sort(level.multiplicities.begin(), level.multiplicities.end(),
                  [](const auto& x, const auto& y) { return x.first.index() < y.first.index(); });
        levels.push_back(std::move(level));
        if (k == k_max) break;
        std::unordered_map<std::uint64_t, Int> next;
        for (const auto& [w, m] : cur)
            for (int i = 1; i <= n; ++i)
                next[w ^ (std::uint64_t{1} << (n - i))] += m;
        cur = std::move(next);
    }
    return levels;
}

GroupElement WalkPath::endpoint() const {
    if (n < 1 || n > 64) throw std::invalid_argument("WalkPath: dimension out of range");
    return {n, endpoint_word(steps, n)};
}

BasisElement paths_to_diagram(const WalkPath& rho1, const WalkPath& rho2) {
    if (rho1.n != rho2.n)
        throw std::invalid_argument("paths_to_diagram: dimension mismatch");
    if (rho1.steps.size() != rho2.steps.size())
        throw std::invalid_argument("paths_to_diagram: length mismatch");
    if (!(rho1.endpoint() == rho2.endpoint()))
        throw std::invalid_argument("paths_to_diagram: endpoint mismatch");
    return BasisElement{rho1.steps, rho2.steps};
}

}
