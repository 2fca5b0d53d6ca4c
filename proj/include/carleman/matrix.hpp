#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "carleman/rational.hpp"

namespace carleman {

// Small dense matrix over the rationals. Row-major.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix scalar(std::size_t n, const Rational& c);
    /// Permutation matrix sending basis vector e_j to e_{perm[j]}.
    static RationalMatrix permutation(const std::vector<std::size_t>& perm);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    const std::vector<Rational>& entries() const noexcept { return data_; }

    RationalMatrix transpose() const;
    Rational determinant() const;
    std::optional<RationalMatrix> inverse() const;
    Rational trace() const;
    /// True when every row and column holds exactly one entry 1 and zeros elsewhere.
    bool is_permutation() const;
    /// For permutation matrices: perm[j] = row index of the 1 in column j.
    std::vector<std::size_t> permutation_image() const;

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;
    friend auto operator<=>(const RationalMatrix& a, const RationalMatrix& b) {
        if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
        if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
        for (std::size_t i = 0; i < a.data_.size(); ++i) {
            int s = cmp(a.data_[i], b.data_[i]);
            if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Exact test that A is positive semidefinite (A symmetric). Symmetric
/// Gaussian elimination; a zero pivot with a non-zero remaining column fails.
bool is_positive_semidefinite(const RationalMatrix& a);

/// Block-diagonal matrix diag(a, b).
RationalMatrix block_diagonal(const RationalMatrix& a, const RationalMatrix& b);

std::string to_string(const RationalMatrix& m);

}  // namespace carleman
