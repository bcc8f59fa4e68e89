#include "cr/matrix.hpp"

#include <stdexcept>

namespace cr {

namespace {

Matrix<Gaussian> drop(const Matrix<Gaussian>& a, const std::vector<size_t>& keep) {
    Matrix<Gaussian> b(keep.size(), std::vector<Gaussian>(keep.size(), Gaussian::zero()));
    for (size_t i = 0; i < keep.size(); ++i) {
        for (size_t j = 0; j < keep.size(); ++j) b[i][j] = a[keep[i]][keep[j]];
    }
    return b;
}

}  // namespace

std::array<int, 3> hermitian_inertia(Matrix<Gaussian> a) {
    if (!mat_is_hermitian(a)) throw std::invalid_argument("inertia of a non-hermitian matrix");
    std::array<int, 3> sig{0, 0, 0};
    while (!a.empty()) {
        size_t n = a.size();
        size_t p = n;
        for (size_t i = 0; i < n; ++i) {
            if (!a[i][i].is_zero()) {
                p = i;
                break;
            }
        }
        if (p < n) {
            // Schur complement against a nonzero diagonal pivot
            Gaussian d = a[p][p];
            (d.re > 0 ? sig[0] : sig[1])++;
            std::vector<size_t> keep;
            for (size_t i = 0; i < n; ++i) {
                if (i != p) keep.push_back(i);
            }
            Matrix<Gaussian> b = drop(a, keep);
            for (size_t i = 0; i < keep.size(); ++i) {
                for (size_t j = 0; j < keep.size(); ++j) {
                    b[i][j] -= a[keep[i]][p] * a[p][keep[j]] / d;
                }
            }
            a = std::move(b);
            continue;
        }
        // all-diagonal-zero case: find an off-diagonal entry
        size_t pi = n, pj = n;
        for (size_t i = 0; i < n && pi == n; ++i) {
            for (size_t j = i + 1; j < n; ++j) {
                if (!a[i][j].is_zero()) {
                    pi = i;
                    pj = j;
                    break;
                }
            }
        }
        if (pi == n) {
            sig[2] += (int)n;
            break;
        }
        // hyperbolic 2x2 block contributes one of each sign
        sig[0]++;
        sig[1]++;
        Gaussian u = a[pi][pj];
        std::vector<size_t> keep;
        for (size_t i = 0; i < n; ++i) {
            if (i != pi && i != pj) keep.push_back(i);
        }
        Matrix<Gaussian> b = drop(a, keep);
        for (size_t i = 0; i < keep.size(); ++i) {
            for (size_t j = 0; j < keep.size(); ++j) {
                Gaussian vi = a[keep[i]][pi], wi = a[keep[i]][pj];
                Gaussian vjc = a[pi][keep[j]], wjc = a[pj][keep[j]];
                b[i][j] -= wi * vjc / u + vi * wjc / u.conj();
            }
        }
        a = std::move(b);
    }
    return sig;
}

}  // namespace cr
