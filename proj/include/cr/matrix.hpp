#pragma once

#include <array>
#include <vector>

#include "cr/gaussian.hpp"

namespace cr {

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Laplace expansion along the first row; division-free, fine for the small
// matrices this library meets (dimension <= 6).
template <class T>
T mat_det(const Matrix<T>& a, const T& zero) {
    size_t n = a.size();
    if (n == 0) throw std::invalid_argument("determinant of empty matrix");
    if (n == 1) return a[0][0];
    T acc = zero;
    for (size_t j = 0; j < n; ++j) {
        if (a[0][j] == zero) continue;
        Matrix<T> minor;
        minor.reserve(n - 1);
        for (size_t r = 1; r < n; ++r) {
            std::vector<T> row;
            row.reserve(n - 1);
            for (size_t c = 0; c < n; ++c) {
                if (c != j) row.push_back(a[r][c]);
            }
            minor.push_back(std::move(row));
        }
        T term = a[0][j] * mat_det(minor, zero);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// Row reduction over a field (T supports /, is_zero).
template <class T>
int mat_rank(Matrix<T> a) {
    if (a.empty()) return 0;
    size_t rows = a.size(), cols = a[0].size();
    int rank = 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[r], a[piv]);
        for (size_t rr = r + 1; rr < rows; ++rr) {
            if (a[rr][c].is_zero()) continue;
            T f = a[rr][c] / a[r][c];
            for (size_t cc = c; cc < cols; ++cc) a[rr][cc] = a[rr][cc] - f * a[r][cc];
        }
        ++r;
        ++rank;
    }
    return rank;
}

template <class T>
bool mat_is_hermitian(const Matrix<T>& a) {
    size_t n = a.size();
    for (size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) return false;
        for (size_t j = 0; j < n; ++j) {
            if (!(a[i][j] == a[j][i].conj())) return false;
        }
    }
    return true;
}

// Inertia (positive, negative, zero) of an exact hermitian matrix via
// congruence reduction; zero diagonals are handled through hyperbolic pairs.
std::array<int, 3> hermitian_inertia(Matrix<Gaussian> a);

}  // namespace cr
