#include "cubewalks/spectral.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cubewalks {

namespace {

void check_cap(int n, int max_n) {
    if (n > max_n)
        throw CapExceeded("n = " + std::to_string(n) + " exceeds the vertex cap 2^" +
                          std::to_string(max_n) + " (raise --max-n to override)");
}

std::uint64_t vertex_count(int n) { return std::uint64_t{1} << n; }

}

StepSet::StepSet(int n, std::vector<GroupElement> steps)
    : n_(n), steps_(std::move(steps)) {
    if (n < 1 || n > 64)
        throw std::invalid_argument("StepSet: dimension must be in [1,64]");
    if (steps_.empty())
        throw std::invalid_argument("StepSet: need at least one step");
    for (const GroupElement& s : steps_)
        if (s.dimension() != n_)
            throw std::invalid_argument("StepSet: step dimension mismatch");
    std::vector<std::uint64_t> idx;
    idx.reserve(steps_.size());
    for (const GroupElement& s : steps_) idx.push_back(s.index());
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
        throw std::invalid_argument("StepSet: steps must be distinct");
}

StepSet StepSet::cube(int n) {
    std::vector<GroupElement> steps;
    steps.reserve(std::size_t(n));
    for (int i = 1; i <= n; ++i) steps.push_back(GroupElement::unit(n, i));
    return StepSet(n, std::move(steps));
}

IntMatrix adjacency_matrix(const StepSet& s, int max_n) {
    const int n = s.dimension();
    check_cap(n, max_n);
    const std::uint64_t size = vertex_count(n);
    IntMatrix a(size, size);
    for (std::uint64_t b = 0; b < size; ++b) {
        GroupElement gb(n, b);
        for (const GroupElement& step : s.steps())
            a.at(b, (gb + step).index()) += 1;
    }
    return a;
}

SpectralData eigen_data(const StepSet& s, int max_n) {
    const int n = s.dimension();
    check_cap(n, max_n);
    const std::uint64_t size = vertex_count(n);
    SpectralData d{std::vector<Int>(size), IntMatrix(size, size)};
    for (std::uint64_t a = 0; a < size; ++a) {
        GroupElement ga(n, a);
        Int lambda = 0;
        for (const GroupElement& step : s.steps()) lambda += character_value(ga, step);
        d.eigenvalues[a] = lambda;
        for (std::uint64_t b = 0; b < size; ++b)
            d.eigenvectors.at(b, a) = character_value(ga, GroupElement(n, b));
    }
    return d;
}

Int walk_count_bruteforce(const StepSet& s, const GroupElement& b,
                          const GroupElement& c, int k, int max_n) {
    const int n = s.dimension();
    if (b.dimension() != n || c.dimension() != n)
        throw std::invalid_argument("walk_count_bruteforce: vertex dimension mismatch");
    if (k < 0) throw std::invalid_argument("walk_count_bruteforce: negative length");
    check_cap(n, max_n);
    IntMatrix a = adjacency_matrix(s, max_n);
    std::vector<Int> v(vertex_count(n));
    v[b.index()] = 1;
    for (int step = 0; step < k; ++step) v = a.apply(v);
    return v[c.index()];
}

Int walk_count_spectral(const StepSet& s, const GroupElement& b,
                        const GroupElement& c, int k, int max_n) {
    const int n = s.dimension();
    if (b.dimension() != n || c.dimension() != n)
        throw std::invalid_argument("walk_count_spectral: vertex dimension mismatch");
    if (k < 0) throw std::invalid_argument("walk_count_spectral: negative length");
    check_cap(n, max_n);
    const GroupElement d = b + c;
    const std::uint64_t size = vertex_count(n);
    Int total = 0;
    for (std::uint64_t a = 0; a < size; ++a) {
        GroupElement ga(n, a);
        Int lambda = 0;
        for (const GroupElement& step : s.steps()) lambda += character_value(ga, step);
        total += character_value(ga, d) * int_pow(lambda, unsigned(k));
    }
    Int q, r;
    boost::multiprecision::divide_qr(total, Int(1) << n, q, r);
    if (r != 0)
        throw std::logic_error("walk_count_spectral: character sum not divisible by 2^n");
    return q;
}

Int walk_count_cube_closed(int n, int h, int k) {
    if (n < 1) throw std::invalid_argument("walk_count_cube_closed: n must be positive");
    if (h < 0 || h > n) throw std::invalid_argument("walk_count_cube_closed: weight out of range");
    if (k < 0) throw std::invalid_argument("walk_count_cube_closed: negative length");
    Int total = 0;
    for (int i = 0; i <= n; ++i) {
        Int inner = 0;
        for (int j = 0; j <= h; ++j) {
            Int term = binomial(h, j) * binomial(n - h, i - j);
            inner += (j % 2 == 0) ? term : -term;
        }
        total += inner * int_pow(Int(n - 2 * i), unsigned(k));
    }
    Int q, r;
    boost::multiprecision::divide_qr(total, Int(1) << n, q, r);
    if (r != 0)
        throw std::logic_error("walk_count_cube_closed: sum not divisible by 2^n");
    return q;
}

IntPolynomial min_poly_cube(int n) {
    if (n < 1) throw std::invalid_argument("min_poly_cube: n must be positive");
    IntPolynomial p = IntPolynomial::one();
    for (int h = 0; h <= n; ++h) p = p * IntPolynomial{-(n - 2 * h), 1};
    return p;
}

bool recursion_check(int n, std::span<const Int> counts) {
    IntPolynomial p = min_poly_cube(n);
    const std::size_t window = std::size_t(p.degree()) + 1;
    if (counts.size() < window)
        throw std::invalid_argument("recursion_check: need at least deg + 1 terms");
    for (std::size_t start = 0; start + window <= counts.size(); ++start) {
        Int acc = 0;
        for (std::size_t j = 0; j < window; ++j) acc += p.coeff(j) * counts[start + j];
        if (acc != 0) return false;
    }
    return true;
}

Sl2Triple sl2_triple(int n, int max_n) {
    if (n < 1 || n > 64) throw std::invalid_argument("sl2_triple: dimension out of range");
    check_cap(n, max_n);
    const std::uint64_t size = vertex_count(n);
    Sl2Triple t{IntMatrix(size, size), IntMatrix(size, size), IntMatrix(size, size)};
    for (std::uint64_t b = 0; b < size; ++b) {
        GroupElement gb(n, b);
        const int h = gb.hamming_weight();
        t.dual.at(b, b) = n - 2 * h;
        for (int i = 1; i <= n; ++i) {
            GroupElement image = gb + GroupElement::unit(n, i);
            if (image.hamming_weight() > h)
                t.raising.at(image.index(), b) = 1;
            else
                t.lowering.at(image.index(), b) = 1;
        }
    }
    return t;
}

}
