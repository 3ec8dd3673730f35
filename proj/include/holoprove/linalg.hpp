#pragma once

#include "holoprove/rational.hpp"

#include <cstddef>
#include <vector>

namespace holoprove {

/// Row-major dense matrix over Q, just enough for exact nullspace computation.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    /// In-place reduced row echelon form; returns the pivot column of each pivot row.
    std::vector<std::size_t> reduce();

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

/// Basis of {x : A x = 0} read off the reduced echelon form: one vector per
/// free column, with a 1 in that column. Ordered by free column.
std::vector<std::vector<Rational>> nullspace(RationalMatrix a);

}  // namespace holoprove
