#ifndef OBSTRUCTOR_LINALG_HPP
#define OBSTRUCTOR_LINALG_HPP

#include <cstddef>
#include <vector>

#include "obstructor/rational.hpp"

namespace obstructor {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Rank by fraction-free-enough Gaussian elimination; exact over Q, so the
// only pivot requirement is nonzero. The matrix is consumed.
inline std::size_t matrix_rank(RationalMatrix m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows == 0 ? 0 : m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][col].is_zero())
            ++pivot;
        if (pivot == rows)
            continue;
        std::swap(m[rank], m[pivot]);
        const Rational inv = m[rank][col].inverse();
        for (std::size_t j = col; j < cols; ++j)
            m[rank][j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || m[i][col].is_zero())
                continue;
            const Rational f = m[i][col];
            for (std::size_t j = col; j < cols; ++j)
                m[i][j] -= f * m[rank][j];
        }
        ++rank;
    }
    return rank;
}

} // namespace obstructor

#endif
