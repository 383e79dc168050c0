#pragma once

#include <vector>

#include "sd/common.hpp"
#include "sd/scalars.hpp"

namespace sd {

/// Dense matrix over a field context. Only the handful of exact-arithmetic
/// operations the algebra code needs: reduced echelon form, kernel, solving,
/// inversion.
template <class F>
struct FMatrix {
    using Elem = typename F::Elem;
    int rows = 0, cols = 0;
    std::vector<Elem> a;

    FMatrix() = default;
    FMatrix(int r, int c, const F& field) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, field.zero()) {}

    Elem& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    const Elem& at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
};

/// In-place reduced row echelon form; returns the pivot columns.
template <class F>
std::vector<int> rref(FMatrix<F>& m, const F& f) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int pr = -1;
        for (int i = row; i < m.rows; ++i)
            if (!f.is_zero(m.at(i, col))) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(row, j));
        typename F::Elem s = f.inv(m.at(row, col));
        for (int j = 0; j < m.cols; ++j) m.at(row, j) = f.mul(m.at(row, j), s);
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || f.is_zero(m.at(i, col))) continue;
            typename F::Elem t = m.at(i, col);
            for (int j = 0; j < m.cols; ++j)
                m.at(i, j) = f.sub(m.at(i, j), f.mul(t, m.at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Echelon basis of the row span of `vectors` (each of length `cols`).
template <class F>
std::vector<std::vector<typename F::Elem>> row_space_basis(
    const std::vector<std::vector<typename F::Elem>>& vectors, int cols, const F& f) {
    FMatrix<F> m(static_cast<int>(vectors.size()), cols, f);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = vectors[i][j];
    std::vector<int> piv = rref(m, f);
    std::vector<std::vector<typename F::Elem>> basis;
    for (std::size_t i = 0; i < piv.size(); ++i) {
        std::vector<typename F::Elem> row(cols, f.zero());
        for (int j = 0; j < cols; ++j) row[j] = m.at(static_cast<int>(i), j);
        basis.push_back(std::move(row));
    }
    return basis;
}

/// Kernel basis of the linear map x -> M x (columns of M are input coords).
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(FMatrix<F> m, const F& f) {
    const int n = m.cols;
    std::vector<int> piv = rref(m, f);
    std::vector<bool> is_piv(n, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<std::vector<typename F::Elem>> basis;
    for (int free = 0; free < n; ++free) {
        if (is_piv[free]) continue;
        std::vector<typename F::Elem> v(n, f.zero());
        v[free] = f.one();
        for (std::size_t r = 0; r < piv.size(); ++r)
            v[piv[r]] = f.neg(m.at(static_cast<int>(r), free));
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Reduce v modulo an echelon basis (rows in reduced echelon form).
template <class F>
std::vector<typename F::Elem> reduce_mod(std::vector<typename F::Elem> v,
                                         const std::vector<std::vector<typename F::Elem>>& echelon,
                                         const F& f) {
    for (const auto& row : echelon) {
        int lead = -1;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (!f.is_zero(row[j])) {
                lead = static_cast<int>(j);
                break;
            }
        if (lead < 0) continue;
        typename F::Elem t = v[lead];
        if (f.is_zero(t)) continue;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] = f.sub(v[j], f.mul(t, row[j]));
    }
    return v;
}

/// Solve A x = b for square invertible A; throws InputError if singular.
template <class F>
std::vector<typename F::Elem> solve(const FMatrix<F>& A, const std::vector<typename F::Elem>& b, const F& f) {
    if (A.rows != A.cols || static_cast<int>(b.size()) != A.rows)
        throw InputError("solve: shape mismatch");
    FMatrix<F> aug(A.rows, A.cols + 1, f);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < A.cols; ++j) aug.at(i, j) = A.at(i, j);
        aug.at(i, A.cols) = b[i];
    }
    std::vector<int> piv = rref(aug, f);
    // invertible iff the pivots are exactly the columns of A
    if (static_cast<int>(piv.size()) != A.rows) throw InputError("solve: singular matrix");
    for (int i = 0; i < A.rows; ++i)
        if (piv[i] != i) throw InputError("solve: singular matrix");
    std::vector<typename F::Elem> x(A.cols, f.zero());
    for (int i = 0; i < A.rows; ++i) x[i] = aug.at(i, A.cols);
    return x;
}

template <class F>
bool is_invertible(const FMatrix<F>& A, const F& f) {
    if (A.rows != A.cols) return false;
    FMatrix<F> m = A;
    return static_cast<int>(rref(m, f).size()) == A.rows;
}

}  // namespace sd
