#include "holoprove/linalg.hpp"

#include <utility>

namespace holoprove {

std::vector<std::size_t> RationalMatrix::reduce() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t p = row;
        while (p < rows_ && (*this)(p, col) == 0) ++p;
        if (p == rows_) continue;
        if (p != row) {
            for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(p, c), (*this)(row, c));
        }
        const Rational inv = Rational(1) / (*this)(row, col);
        for (std::size_t c = col; c < cols_; ++c) (*this)(row, c) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || (*this)(r, col) == 0) continue;
            const Rational f = (*this)(r, col);
            for (std::size_t c = col; c < cols_; ++c) (*this)(r, c) -= f * (*this)(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::vector<std::vector<Rational>> nullspace(RationalMatrix a) {
    const auto pivots = a.reduce();
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(a.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace holoprove
