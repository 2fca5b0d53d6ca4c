#pragma once

#include <cstddef>
#include <vector>

#include "carleman/polynomial.hpp"

namespace carleman {

/// Dense square matrix of polynomials sharing one variable count. Row-major.
class PolyMatrix {
public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t n, std::size_t nvars);

    std::size_t size() const noexcept { return n_; }
    std::size_t nvars() const noexcept { return nvars_; }
    Polynomial& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
    const Polynomial& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

private:
    std::size_t n_ = 0;
    std::size_t nvars_ = 0;
    std::vector<Polynomial> data_;
};

struct CofactorData {
    Polynomial determinant;
    /// adjugate * A = A * adjugate = determinant * I.
    PolyMatrix adjugate;
};

/// Fraction-free Gauss-Jordan elimination on [A | I]. Every division is an
/// exact polynomial division by the previous pivot. A singular A gives a
/// zero determinant and an empty adjugate.
CofactorData bareiss_cofactors(const PolyMatrix& a);

}  // namespace carleman
