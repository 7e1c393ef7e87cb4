#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

namespace ncp {

/// Dense row-major matrix over an exact field element type.
/// T needs +, -, *, /, == and copy; zero/one are passed in because
/// elements of extension fields carry their field handle.
template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T>
T det(Matrix<T> m, const T& zero, const T& one) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det: matrix not square");
    T result = one;
    bool negate = false;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == zero) ++pivot;
        if (pivot == n) return zero;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            negate = !negate;
        }
        result = result * m[col][col];
        T inv_pivot = one / m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == zero) continue;
            T factor = m[r][col] * inv_pivot;
            for (std::size_t c = col; c < n; ++c) m[r][c] = m[r][c] - factor * m[col][c];
        }
    }
    if (negate) result = zero - result;
    return result;
}

/// Solves m x = b. Returns nullopt iff m is singular.
template <class T>
std::optional<std::vector<T>> solve(Matrix<T> m, std::vector<T> b, const T& zero, const T& one) {
    const std::size_t n = m.size();
    if (b.size() != n) throw std::invalid_argument("solve: dimension mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == zero) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(m[pivot], m[col]);
        std::swap(b[pivot], b[col]);
        T inv_pivot = one / m[col][col];
        for (std::size_t c = col; c < n; ++c) m[col][c] = m[col][c] * inv_pivot;
        b[col] = b[col] * inv_pivot;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == zero) continue;
            T factor = m[r][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] = m[r][c] - factor * m[col][c];
            b[r] = b[r] - factor * b[col];
        }
    }
    return b;
}

}  // namespace ncp
