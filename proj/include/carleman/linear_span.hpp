#pragma once

#include <cstddef>
#include <map>

#include "carleman/polynomial.hpp"

namespace carleman {

/// Incremental echelon form over polynomials viewed as coefficient vectors.
///
/// Each inserted vector carries a tag; every stored row remembers which
/// combination of tagged inputs produced it, so a reduction also yields the
/// coefficients expressing a vector in terms of the inserted ones. Vectors
/// that reduce to zero on insertion are rejected, so the accepted tags form
/// the greedy (insertion-order) maximal independent subset.
class LinearReducer {
public:
    using Combination = std::map<std::size_t, Rational>;

    struct Reduction {
        Polynomial remainder;
        Combination combination;  // v = remainder + sum combination[tag] * input(tag)
    };

    LinearReducer() = default;

    /// Returns true (and keeps v) when v is independent of the rows so far.
    bool insert(const Polynomial& v, std::size_t tag);
    Reduction reduce(const Polynomial& v) const;
    bool contains(const Polynomial& v) const { return reduce(v).remainder.is_zero(); }
    std::size_t rank() const noexcept { return rows_.size(); }

private:
    struct Row {
        Polynomial vec;
        Combination combo;
    };
    std::map<Exponents, Row, GrlexLess> rows_;
};

}  // namespace carleman
