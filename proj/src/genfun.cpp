#include "cubewalks/genfun.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "cubewalks/spectral.hpp"

namespace cubewalks {

PolyMatrix PolyMatrix::identity_minus_t(const IntMatrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("PolyMatrix::identity_minus_t: matrix not square");
    PolyMatrix m(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            IntPolynomial entry{Int(i == j ? 1 : 0), -a.at(i, j)};
            m.at(i, j) = std::move(entry);
        }
    return m;
}

IntPolynomial det_fraction_free(PolyMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return IntPolynomial::one();
    int sign = 1;
    IntPolynomial prev = IntPolynomial::one();
    for (std::size_t step = 0; step + 1 < n; ++step) {
        // pivot: lowest-index row with a nonzero entry in the pivot column;
        // when the whole column vanishes, swap in a later column
        std::size_t pr = step;
        while (true) {
            while (pr < n && m.at(pr, step).is_zero()) ++pr;
            if (pr < n) break;
            std::size_t pc = step + 1;
            for (; pc < n; ++pc) {
                bool has = false;
                for (std::size_t i = step; i < n && !has; ++i) has = !m.at(i, pc).is_zero();
                if (has) break;
            }
            if (pc == n) return {};   // remaining block vanishes identically
            for (std::size_t i = 0; i < n; ++i) std::swap(m.at(i, step), m.at(i, pc));
            sign = -sign;
            pr = step;
        }
        if (pr != step) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pr, j), m.at(step, j));
            sign = -sign;
        }
        const IntPolynomial pivot = m.at(step, step);
        for (std::size_t i = step + 1; i < n; ++i) {
            for (std::size_t j = step + 1; j < n; ++j)
                m.at(i, j) = (m.at(i, j) * pivot - m.at(i, step) * m.at(step, j))
                                 .divide_exact(prev);
            m.at(i, step) = {};
        }
        prev = pivot;
    }
    IntPolynomial det = m.at(n - 1, n - 1);
    return sign == 1 ? det : -det;
}

std::vector<Int> cube_eigenvalues(int n) {
    if (n < 1) throw std::invalid_argument("cube_eigenvalues: n must be positive");
    std::vector<Int> lambdas;
    lambdas.reserve(std::size_t(n) + 1);
    for (int h = 0; h <= n; ++h) lambdas.emplace_back(n - 2 * h);
    return lambdas;
}

namespace {

void check_cap(int n, int max_n) {
    if (n > max_n)
        throw CapExceeded("n = " + std::to_string(n) + " exceeds the vertex cap 2^" +
                          std::to_string(max_n) + " (raise --max-n to override)");
}

PoincareSeries make_series(IntPolynomial num, IntPolynomial den, int n) {
    RationalFunction raw(std::move(num), std::move(den));
    std::vector<Int> lambdas = cube_eigenvalues(n);
    RationalFunction red = raw.reduced(lambdas);
    return {std::move(raw), std::move(red)};
}

}

PoincareSeries poincare_series(int n, const GroupElement& a, int max_n) {
    if (a.dimension() != n)
        throw std::invalid_argument("poincare_series: vertex dimension mismatch");
    check_cap(n, max_n);
    const IntMatrix adj = adjacency_matrix(StepSet::cube(n), max_n);
    PolyMatrix base = PolyMatrix::identity_minus_t(adj);
    IntPolynomial den = det_fraction_free(base);
    // Cramer numerator: the column of a carries the unit vector of the
    // zero element
    PolyMatrix m = PolyMatrix::identity_minus_t(adj);
    for (std::size_t i = 0; i < m.size(); ++i)
        m.at(i, a.index()) = i == 0 ? IntPolynomial::one() : IntPolynomial{};
    IntPolynomial num = det_fraction_free(std::move(m));
    return make_series(std::move(num), std::move(den), n);
}

PoincareSeries invariants_series(int n, int max_n) {
    check_cap(n, max_n);
    const IntMatrix adj = adjacency_matrix(StepSet::cube(n), max_n);
    IntPolynomial den = det_fraction_free(PolyMatrix::identity_minus_t(adj));
    // delete the zero vertex's row and column
    const std::size_t size = adj.rows() - 1;
    IntMatrix pruned(size, size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) pruned.at(i, j) = adj.at(i + 1, j + 1);
    IntPolynomial num = det_fraction_free(PolyMatrix::identity_minus_t(pruned));
    return make_series(std::move(num), std::move(den), n);
}

FactoredPoly denominator_factored(int n) {
    if (n < 1) throw std::invalid_argument("denominator_factored: n must be positive");
    FactoredPoly f{IntPolynomial::one(), {}};
    for (int h = 0; h <= n; ++h) {
        const Int lambda = n - 2 * h;
        const long mult = binomial(n, h).convert_to<long>();
        f.factors.emplace_back(lambda, mult);
        if (lambda == 0) continue;   // unit factor
        IntPolynomial factor{1, -lambda};
        for (long i = 0; i < mult; ++i) f.expanded = f.expanded * factor;
    }
    return f;
}

std::vector<std::pair<Int, long>> linear_factor_profile(const IntPolynomial& p,
                                                        std::span<const Int> lambdas,
                                                        IntPolynomial* leftover) {
    std::vector<std::pair<Int, long>> profile;
    IntPolynomial rest = p;
    for (const Int& lambda : lambdas) {
        if (lambda == 0) continue;
        IntPolynomial factor{1, -lambda};
        long mult = 0;
        while (!rest.is_zero() && rest.divisible_by(factor)) {
            rest = rest.divide_exact(factor);
            ++mult;
        }
        if (mult > 0) profile.emplace_back(lambda, mult);
    }
    if (leftover) *leftover = std::move(rest);
    return profile;
}

std::vector<Int> egf_coefficients(int n, int h, int K) {
    if (n < 1) throw std::invalid_argument("egf_coefficients: n must be positive");
    if (h < 0 || h > n) throw std::invalid_argument("egf_coefficients: weight out of range");
    if (K < 0) throw std::invalid_argument("egf_coefficients: negative order");
    const std::size_t len = std::size_t(K) + 1;
    // truncated exponential series with rational coefficients
    std::vector<Rational> cosh_t(len), sinh_t(len);
    Int fact = 1;
    for (std::size_t i = 0; i < len; ++i) {
        if (i > 0) fact *= Int(i);
        Rational inv = Rational(1) / Rational(fact);
        if (i % 2 == 0)
            cosh_t[i] = inv;
        else
            sinh_t[i] = inv;
    }
    auto mul = [&](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<Rational> c(len);
        for (std::size_t i = 0; i < len; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; i + j < len; ++j)
                if (b[j] != 0) c[i + j] += a[i] * b[j];
        }
        return c;
    };
    std::vector<Rational> series(len);
    series[0] = 1;
    for (int e = 0; e < n - h; ++e) series = mul(series, cosh_t);
    for (int e = 0; e < h; ++e) series = mul(series, sinh_t);
    std::vector<Int> out(len);
    fact = 1;
    for (std::size_t k = 0; k < len; ++k) {
        if (k > 0) fact *= Int(k);
        Rational scaled = series[k] * Rational(fact);
        if (boost::multiprecision::denominator(scaled) != 1)
            throw std::logic_error("egf_coefficients: non-integral scaled coefficient");
        out[k] = boost::multiprecision::numerator(scaled);
    }
    return out;
}

Int closed_form_m0(int n, long r) {
    if (n < 1) throw std::invalid_argument("closed_form_m0: n must be positive");
    if (r < 0) throw std::invalid_argument("closed_form_m0: negative order");
    Int total = 0;
    for (int i = 0; i <= n; ++i)
        total += binomial(n, i) * int_pow(Int(n - 2 * i), (unsigned long)(r));
    return exact_div(total, Int(1) << unsigned(n));
}

}
