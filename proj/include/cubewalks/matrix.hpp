#pragma once

#include <cstddef>
#include <vector>

#include "cubewalks/bigint.hpp"

namespace cubewalks {

// Dense matrix over Z, row major.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    IntMatrix operator+(const IntMatrix& o) const;
    IntMatrix operator-(const IntMatrix& o) const;
    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix operator*(const Int& s) const;

    // M v
    std::vector<Int> apply(const std::vector<Int>& v) const;

    IntMatrix transpose() const;
    bool is_zero() const;

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_, cols_;
    std::vector<Int> e_;
};

// [X, Y] = XY - YX
IntMatrix commutator(const IntMatrix& x, const IntMatrix& y);

}
