#include "carleman/matrix.hpp"

#include <utility>

#include "carleman/error.hpp"

namespace carleman {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols) {
        throw Error(ErrorKind::DimensionMismatch, "matrix entry count does not match shape");
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) { return scalar(n, 1); }

RationalMatrix RationalMatrix::scalar(std::size_t n, const Rational& c) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = c;
    return m;
}

RationalMatrix RationalMatrix::permutation(const std::vector<std::size_t>& perm) {
    RationalMatrix m(perm.size(), perm.size());
    for (std::size_t j = 0; j < perm.size(); ++j) m(perm[j], j) = 1;
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Rational RationalMatrix::trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

Rational RationalMatrix::determinant() const {
    if (!is_square()) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    RationalMatrix a = *this;
    Rational det = 1;
    const std::size_t n = rows_;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a(pivot, k) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(pivot, c));
            det = -det;
        }
        det *= a(k, k);
        for (std::size_t r = k + 1; r < n; ++r) {
            if (a(r, k) == 0) continue;
            Rational f = a(r, k) / a(k, k);
            for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
        }
    }
    return det;
}

std::optional<RationalMatrix> RationalMatrix::inverse() const {
    if (!is_square()) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
    const std::size_t n = rows_;
    RationalMatrix a = *this;
    RationalMatrix inv = identity(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && a(pivot, k) == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != k) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a(k, c), a(pivot, c));
                std::swap(inv(k, c), inv(pivot, c));
            }
        }
        Rational p = a(k, k);
        for (std::size_t c = 0; c < n; ++c) {
            a(k, c) /= p;
            inv(k, c) /= p;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == k || a(r, k) == 0) continue;
            Rational f = a(r, k);
            for (std::size_t c = 0; c < n; ++c) {
                a(r, c) -= f * a(k, c);
                inv(r, c) -= f * inv(k, c);
            }
        }
    }
    return inv;
}

bool RationalMatrix::is_permutation() const {
    if (!is_square()) return false;
    std::vector<int> row_hits(rows_, 0);
    for (std::size_t c = 0; c < cols_; ++c) {
        int hits = 0;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Rational& v = (*this)(r, c);
            if (v == 0) continue;
            if (v != 1) return false;
            ++hits;
            ++row_hits[r];
        }
        if (hits != 1) return false;
    }
    for (int h : row_hits)
        if (h != 1) return false;
    return true;
}

std::vector<std::size_t> RationalMatrix::permutation_image() const {
    std::vector<std::size_t> perm(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        for (std::size_t r = 0; r < rows_; ++r)
            if ((*this)(r, c) != 0) perm[c] = r;
    return perm;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    RationalMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

bool is_positive_semidefinite(const RationalMatrix& m) {
    if (!m.is_square() || m != m.transpose()) return false;
    RationalMatrix a = m;
    const std::size_t n = a.rows();
    for (std::size_t k = 0; k < n; ++k) {
        if (a(k, k) < 0) return false;
        if (a(k, k) == 0) {
            for (std::size_t r = k + 1; r < n; ++r)
                if (a(r, k) != 0) return false;
            continue;
        }
        for (std::size_t r = k + 1; r < n; ++r) {
            if (a(r, k) == 0) continue;
            Rational f = a(r, k) / a(k, k);
            for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
        }
    }
    return true;
}

RationalMatrix block_diagonal(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
    return out;
}

std::string to_string(const RationalMatrix& m) {
    std::string out = "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += r ? ", [" : "[";
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) out += ", ";
            out += to_string(m(r, c));
        }
        out += "]";
    }
    return out + "]";
}

}  // namespace carleman
