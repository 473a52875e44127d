#include "cubewalks/matrix.hpp"

#include <stdexcept>

namespace cubewalks {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] + o.e_[i];
    return m;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] - o.e_[i];
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_)
        throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix m(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                m.at(i, j) += a * o.at(k, j);
        }
    return m;
}

IntMatrix IntMatrix::operator*(const Int& s) const {
    IntMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] * s;
    return m;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    if (v.size() != cols_)
        throw std::invalid_argument("IntMatrix::apply: dimension mismatch");
    std::vector<Int> w(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Int& a = at(i, j);
            if (a != 0) w[i] += a * v[j];
        }
    return w;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

bool IntMatrix::is_zero() const {
    for (const Int& x : e_)
        if (x != 0) return false;
    return true;
}

IntMatrix commutator(const IntMatrix& x, const IntMatrix& y) {
    return x * y - y * x;
}

}
