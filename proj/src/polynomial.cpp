#include "cubewalks/polynomial.hpp"

#include <sstream>
#include <stdexcept>

#include "cubewalks/errors.hpp"

namespace cubewalks {

IntPolynomial::IntPolynomial(std::initializer_list<Int> coeffs) : c_(coeffs) {
    strip();
}

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
    strip();
}

IntPolynomial IntPolynomial::monomial(Int c, std::size_t deg) {
    if (c == 0) return {};
    std::vector<Int> v(deg + 1);
    v[deg] = std::move(c);
    return IntPolynomial(std::move(v));
}

const Int& IntPolynomial::leading() const {
    if (is_zero()) throw std::logic_error("IntPolynomial::leading: zero polynomial");
    return c_.back();
}

void IntPolynomial::strip() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Int> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) + o.coeff(i);
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<Int> v(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeff(i) - o.coeff(i);
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<Int> v(c_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = -c_[i];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Int> v(c_.size() + o.c_.size() - 1);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            v[i + j] += c_[i] * o.c_[j];
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::operator*(const Int& s) const {
    std::vector<Int> v(c_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = c_[i] * s;
    return IntPolynomial(std::move(v));
}

bool IntPolynomial::try_divide(const IntPolynomial& d, IntPolynomial* quotient) const {
    if (d.is_zero()) throw std::invalid_argument("IntPolynomial: division by zero polynomial");
    if (is_zero()) {
        if (quotient) *quotient = {};
        return true;
    }
    if (degree() < d.degree()) return false;

    std::vector<Int> rem = c_;
    const long dd = d.degree();
    const Int& lead = d.c_.back();
    std::vector<Int> q(std::size_t(degree() - dd) + 1);
    for (long i = degree() - dd; i >= 0; --i) {
        Int& top = rem[std::size_t(i + dd)];
        if (top == 0) continue;
        Int qq, rr;
        boost::multiprecision::divide_qr(top, lead, qq, rr);
        if (rr != 0) return false;
        q[std::size_t(i)] = qq;
        for (long j = 0; j <= dd; ++j) rem[std::size_t(i + j)] -= qq * d.c_[std::size_t(j)];
    }
    for (const Int& r : rem)
        if (r != 0) return false;
    if (quotient) *quotient = IntPolynomial(std::move(q));
    return true;
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& d) const {
    IntPolynomial q;
    if (!try_divide(d, &q))
        throw InexactDivision("IntPolynomial::divide_exact: nonzero remainder");
    return q;
}

bool IntPolynomial::divisible_by(const IntPolynomial& d) const {
    return try_divide(d, nullptr);
}

Int IntPolynomial::content() const {
    Int g = 0;
    for (const Int& c : c_) g = boost::multiprecision::gcd(g, c);
    return g;
}

Int IntPolynomial::evaluate(const Int& x) const {
    Int r = 0;
    for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Int a = c_[i];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (i == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

}
