#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cubewalks {

// Element of Z_2^n, n <= 64, packed into a word with coordinate 1 in the
// most significant of the low n bits.  index() is then the lexicographic
// rank of the bit string, with the zero element first.  Addition is XOR.
class GroupElement {
public:
    GroupElement(int n, std::uint64_t word) : n_(n), word_(word) {
        if (n < 1 || n > 64)
            throw std::invalid_argument("GroupElement: dimension must be in [1,64]");
        if (n < 64 && word >= (std::uint64_t{1} << n))
            throw std::invalid_argument("GroupElement: word out of range for dimension");
    }

    static GroupElement zero(int n) { return {n, 0}; }

    // epsilon_i, the element with a single 1 in coordinate i, i in [1,n]
    static GroupElement unit(int n, int i) {
        if (i < 1 || i > n)
            throw std::invalid_argument("GroupElement::unit: coordinate out of range");
        return {n, std::uint64_t{1} << (n - i)};
    }

    // bit string, e.g. "110" -> (1,1,0) in Z_2^3
    static GroupElement parse(const std::string& s) {
        if (s.empty() || s.size() > 64)
            throw std::invalid_argument("GroupElement::parse: need 1..64 binary digits");
        std::uint64_t w = 0;
        for (char ch : s) {
            if (ch != '0' && ch != '1')
                throw std::invalid_argument("GroupElement::parse: invalid character");
            w = (w << 1) | std::uint64_t(ch - '0');
        }
        return {int(s.size()), w};
    }

    int dimension() const { return n_; }

    // coordinate i, i in [1,n]
    int bit(int i) const {
        if (i < 1 || i > n_)
            throw std::invalid_argument("GroupElement::bit: coordinate out of range");
        return int((word_ >> (n_ - i)) & 1u);
    }

    std::uint64_t index() const { return word_; }
    int hamming_weight() const { return std::popcount(word_); }
    bool is_zero() const { return word_ == 0; }

    GroupElement operator+(const GroupElement& o) const {
        check_dimension(o);
        return {n_, word_ ^ o.word_};
    }

    // integer dot product a.b, i.e. the number of shared ones
    int dot(const GroupElement& o) const {
        check_dimension(o);
        return std::popcount(word_ & o.word_);
    }

    std::string to_string() const {
        std::string s(std::size_t(n_), '0');
        for (int i = 1; i <= n_; ++i) s[std::size_t(i - 1)] = char('0' + bit(i));
        return s;
    }

    friend bool operator==(const GroupElement&, const GroupElement&) = default;

private:
    void check_dimension(const GroupElement& o) const {
        if (n_ != o.n_)
            throw std::invalid_argument("GroupElement: dimension mismatch");
    }

    int n_;
    std::uint64_t word_;
};

// character value chi_b(a) = (-1)^{a.b}
inline int character_value(const GroupElement& a, const GroupElement& b) {
    return a.dot(b) % 2 == 0 ? 1 : -1;
}

}
