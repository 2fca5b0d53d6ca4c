#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "carleman/group.hpp"
#include "carleman/polynomial.hpp"

namespace carleman {

/// (1/|G|) sum_g f o l_g.
Polynomial reynolds(const Polynomial& f, const FiniteMatrixGroup& group);
/// Exact check f o l_g = f for every element g.
bool is_invariant(const Polynomial& f, const FiniteMatrixGroup& group);

/// Homogeneous generators sigma_1..sigma_p of an invariant ring.
struct GeneratorSystem {
    std::vector<Polynomial> generators;
    std::vector<int> degrees;
    FiniteMatrixGroup group;

    std::size_t size() const noexcept { return generators.size(); }
};

/// Validates invariance and homogeneity; throws NotInvariant / ParameterOutOfRange.
GeneratorSystem make_generator_system(std::vector<Polynomial> generators, const FiniteMatrixGroup& group);

/// Reynolds images of all monomials of degree <= |G|, reduced greedily by
/// degree to a minimal generating subset. Generators are scaled to primitive
/// integer form; within a degree they are listed by decreasing leading monomial.
GeneratorSystem invariant_generators(const FiniteMatrixGroup& group);

/// Exponent vectors beta over generators of the given degrees with
/// sum beta_i deg_i = d, in increasing grlex order.
std::vector<Exponents> weighted_monomials(const std::vector<int>& degrees, unsigned d);

/// Memoized products sigma^beta.
class GeneratorProducts {
public:
    explicit GeneratorProducts(std::vector<Polynomial> generators, std::size_t nvars);
    const Polynomial& operator()(const Exponents& beta);
    std::size_t nvars() const noexcept { return nvars_; }

private:
    std::vector<Polynomial> gens_;
    std::size_t nvars_;
    std::map<Exponents, Polynomial, GrlexLess> cache_;
};

/// F with compose(F, generators) = f, solved degree by degree. Among all
/// solutions the one whose support is chosen greedily in increasing grlex
/// order of generator monomials (dependent columns set to zero) is returned.
/// Throws NotInAlgebra when f is not a polynomial in the generators.
Polynomial express_in_generators(const Polynomial& f, const std::vector<Polynomial>& generators,
                                 const std::vector<int>& degrees);

/// Checks invariance (NotInvariant), then express_in_generators.
Polynomial rewrite_invariant(const Polynomial& f, const GeneratorSystem& system);

/// L : V -> E = R^{mn}, v -> (g_1 v, ..., g_m v) and the lift J.
class WeylEmbedding {
public:
    explicit WeylEmbedding(const FiniteMatrixGroup& group);

    /// The mn x n matrix stacking the group elements in closure order.
    const RationalMatrix& matrix() const noexcept { return l_; }
    std::size_t block_count() const noexcept { return m_; }
    std::size_t block_size() const noexcept { return n_; }

    /// J(f)(h) = (1/m) sum_i f(h_i), with h_i the i-th block of E.
    Polynomial lift(const Polynomial& f) const;
    /// L^* F = F o L.
    Polynomial pullback(const Polynomial& big) const;
    /// Block permutation induced by g: block i carries g_i, and g_i g lands in block pi(i).
    std::vector<std::size_t> block_action(std::size_t element) const;
    /// Invariance of F under every induced block permutation.
    bool is_block_invariant(const Polynomial& big) const;

private:
    FiniteMatrixGroup group_;
    RationalMatrix l_;
    std::size_t m_;
    std::size_t n_;
};

WeylEmbedding weyl_embedding(const FiniteMatrixGroup& group);

enum class NormBoundKind {
    Exact,       // sqrt of a certified rational largest eigenvalue that is a perfect square
    Spectral,    // certified upper bound on the spectral norm
    Frobenius,   // exact Frobenius-norm bound
};

std::string_view to_string(NormBoundKind k);

struct NormBound {
    Rational value;
    NormBoundKind kind;
};

/// Certified upper bound for max_g ||g|| (spectral norm).
NormBound operator_norm_mu(const FiniteMatrixGroup& group);

/// n^2 mu rho; throws ParameterOutOfRange for non-positive input.
Rational faa_di_bruno_radius(const Rational& rho, std::size_t n, const Rational& mu);

}  // namespace carleman
