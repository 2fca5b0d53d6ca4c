#include "carleman/poly_matrix.hpp"

#include <utility>

#include "carleman/error.hpp"

namespace carleman {

PolyMatrix::PolyMatrix(std::size_t n, std::size_t nvars) : n_(n), nvars_(nvars), data_(n * n, Polynomial(nvars)) {}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.n_ != b.n_ || a.nvars_ != b.nvars_) throw Error(ErrorKind::DimensionMismatch, "polynomial matrix product");
    PolyMatrix out(a.n_, a.nvars_);
    for (std::size_t i = 0; i < a.n_; ++i)
        for (std::size_t k = 0; k < a.n_; ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < a.n_; ++j) {
                if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
            }
        }
    return out;
}

CofactorData bareiss_cofactors(const PolyMatrix& a) {
    const std::size_t n = a.size();
    const std::size_t nv = a.nvars();
    const std::size_t width = 2 * n;
    // augmented rows [A | I]
    std::vector<std::vector<Polynomial>> rows(n, std::vector<Polynomial>(width, Polynomial(nv)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) rows[i][j] = a(i, j);
        rows[i][n + i] = Polynomial::constant(nv, 1);
    }
    Polynomial prev = Polynomial::constant(nv, 1);
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && rows[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return {Polynomial(nv), PolyMatrix()};
        if (pivot != k) {
            std::swap(rows[pivot], rows[k]);
            negate = !negate;
        }
        const Polynomial& p = rows[k][k];
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            const Polynomial factor = rows[i][k];
            for (std::size_t j = 0; j < width; ++j) {
                if (j == k) continue;
                Polynomial v = p * rows[i][j];
                if (!factor.is_zero() && !rows[k][j].is_zero()) v -= factor * rows[k][j];
                rows[i][j] = v.is_zero() ? std::move(v) : divide_exact(v, prev);
            }
            rows[i][k] = Polynomial(nv);
        }
        prev = p;
    }
    // Now R [A | I] = [D I | R] with D = +-det A; the sign tracks row swaps.
    CofactorData out;
    out.determinant = prev;
    out.adjugate = PolyMatrix(n, nv);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.adjugate(i, j) = rows[i][n + j];
    if (negate) {
        out.determinant = -out.determinant;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) out.adjugate(i, j) = -out.adjugate(i, j);
    }
    return out;
}

}  // namespace carleman
