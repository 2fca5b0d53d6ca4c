#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "carleman/group.hpp"
#include "carleman/poly_matrix.hpp"
#include "carleman/polynomial.hpp"

namespace carleman {

inline constexpr std::size_t kDefaultCoinvariantCap = 720;

enum class CoinvariantKind {
    Artin,     // monomials with exponent of the j-th variable of a block below j
    Harmonic,  // derivatives d^alpha V of the block Vandermonde product, alpha of Artin type
};

std::string_view to_string(CoinvariantKind k);

/// A basis h_1..h_{|W|} of a graded complement to the ideal generated by the
/// positive-degree invariants of W = S_{m_1} x ... x S_{m_r} acting in blocks,
/// together with Delta = det(h_j(w_i v)) and its adjugate.
struct CoinvariantBasis {
    std::vector<std::size_t> block_sizes;
    std::size_t nvars = 0;
    CoinvariantKind kind = CoinvariantKind::Artin;
    std::vector<Polynomial> basis;
    /// W as permutation matrices, lexicographic in the concatenated one-line words.
    std::vector<RationalMatrix> elements;
    /// Adjacent transpositions inside each block.
    std::vector<RationalMatrix> generators;
    PolyMatrix evaluation;  // (h_j(w_i v))_{ij}
    Polynomial delta;
    PolyMatrix adjugate;

    std::size_t order() const noexcept { return elements.size(); }
    /// The harmonic span is W-stable; the Artin span in general is not.
    bool w_stable() const noexcept { return kind == CoinvariantKind::Harmonic; }
};

/// Tensor product of the per-block Artin exponent ranges, in increasing grlex order.
std::vector<Exponents> artin_exponents(const std::vector<std::size_t>& block_sizes);

/// Throws SizeBoundExceeded when |W| > cap, ParameterOutOfRange for a zero block.
CoinvariantBasis artin_basis(const std::vector<std::size_t>& block_sizes, std::size_t cap = kDefaultCoinvariantCap);
CoinvariantBasis harmonic_basis(const std::vector<std::size_t>& block_sizes,
                                std::size_t cap = kDefaultCoinvariantCap);

/// Exact W-invariance, checked on the adjacent transpositions.
bool is_w_invariant(const Polynomial& f, const CoinvariantBasis& b);

struct DeltaFactor {
    std::size_t first;   // 0-based variable indices of x_first - x_second
    std::size_t second;
    unsigned exponent;
};

struct DeltaReport {
    std::vector<DeltaFactor> factors;
    Polynomial cofactor;
    bool pass = false;
};

/// Divides Delta by every x_i - x_j inside a block as often as possible.
/// Passes when every form divides and the remaining cofactor is a non-zero constant.
DeltaReport delta_divisibility_check(const CoinvariantBasis& b);

/// Sign e(w) with Delta(w v) = e(w) Delta(v): the sign of i -> index(w_i w).
int delta_sign_character(const CoinvariantBasis& b, std::size_t element);

/// W-invariant f_j with f = sum_j h_j f_j, via Delta f_j = sum_i adj_{ji} f(w_i v).
/// Throws DeltaDivisionFailed if a quotient is not a polynomial.
std::vector<Polynomial> cramer_decompose(const Polynomial& f, const CoinvariantBasis& b);

/// Basis of the G-invariant part of span(H): Reynolds images of the h_j,
/// primitive-scaled, greedily independent. Needs a W-stable basis
/// (BasisNotStable) and G inside W (NotASubgroup).
std::vector<Polynomial> subgroup_basis(const CoinvariantBasis& b, const FiniteMatrixGroup& group);

struct InvariantTerm {
    Polynomial h;            // element of the H^G basis
    Polynomial coefficient;  // W-invariant
};

/// f = sum h f_h over the H^G basis with W-invariant coefficients.
/// Throws NotInvariant when f is not G-invariant.
std::vector<InvariantTerm> invariant_decompose(const Polynomial& f, const CoinvariantBasis& b,
                                               const FiniteMatrixGroup& group);

}  // namespace carleman
