#pragma once

#include <cstddef>
#include <vector>

#include "carleman/group.hpp"
#include "carleman/invariant_theory.hpp"
#include "carleman/polynomial.hpp"

namespace carleman {

/// A polynomial map V1 -> V2: one component per coordinate of V2, each a
/// polynomial in the coordinates of V1.
using EquivariantMap = std::vector<Polynomial>;

/// One abstract finite group acting on V1 (rho1) and on V2 (rho2), stored as
/// the closure of the block-diagonal matrices diag(rho1(g), rho2(g)).
class RepresentationPair {
public:
    /// gens1[i] and gens2[i] are the images of the same abstract generator.
    static RepresentationPair from_generators(const std::vector<RationalMatrix>& gens1,
                                              const std::vector<RationalMatrix>& gens2,
                                              std::size_t max_order = kDefaultMaxOrder);

    const FiniteMatrixGroup& group() const noexcept { return group_; }
    std::size_t source_dim() const noexcept { return dim1_; }
    std::size_t target_dim() const noexcept { return dim2_; }
    RationalMatrix rho1(std::size_t element) const;
    RationalMatrix rho2(std::size_t element) const;
    /// The image of the group in GL(V1), whose invariants are the coefficient ring.
    const FiniteMatrixGroup& source_group() const noexcept { return source_; }
    /// The action on V1 x V2^* by (rho1(g), rho2(g)^{-T}).
    FiniteMatrixGroup dual_group(std::size_t max_order = kDefaultMaxOrder) const;

private:
    FiniteMatrixGroup group_;
    FiniteMatrixGroup source_;
    std::size_t dim1_ = 0;
    std::size_t dim2_ = 0;
};

/// f(rho1(g) x) = rho2(g) f(x) for every g, exactly.
bool is_equivariant(const EquivariantMap& f, const RepresentationPair& rep);
/// (1/|G|) sum_g rho2(g)^{-1} o f o rho1(g).
EquivariantMap twisted_reynolds(const EquivariantMap& f, const RepresentationPair& rep);

/// sum_t f_t(x) z_t as a polynomial in source_dim + target_dim variables.
Polynomial flatten(const EquivariantMap& f, std::size_t target_dim);
/// Scalar multiple c(x) f(x).
EquivariantMap multiply(const Polynomial& c, const EquivariantMap& f);

struct ModuleGenerators {
    std::vector<EquivariantMap> maps;
    std::vector<int> degrees;
    /// Highest degree up to which every averaged monomial map was checked to decompose.
    int validated_degree = 0;
};

/// Twisted Reynolds images of the monomial maps of degree <= |G|, greedily
/// reduced by degree over the invariant ring generated by `sigma`. Afterwards
/// every averaged monomial map up to degree |G| + max generator degree is
/// checked to decompose; a failure throws NotInModule.
ModuleGenerators equivariant_module_generators(const RepresentationPair& rep, const GeneratorSystem& sigma);

/// Direct degreewise solve of f = sum_j (L_j o sigma) P_j; the column order is
/// generator index, then increasing grlex of sigma-monomials, and dependent
/// columns get coefficient zero. Throws NotEquivariant / NotInModule.
std::vector<Polynomial> decompose_equivariant(const EquivariantMap& f, const GeneratorSystem& sigma,
                                              const ModuleGenerators& module, const RepresentationPair& rep);

/// Cross-check through H_f(v, l) = l(f(v)) on V1 x V2^*: with invariant
/// generators tau of that space, H_f = L_f o tau, tau_i(v, 0) = theta_i o sigma,
/// d_l tau_i(v, 0) = sum_j (h_ij o sigma) P_j, and
/// L(f)_j = sum_i ((d_i L_f) o theta) h_ij.
std::vector<Polynomial> decompose_equivariant_dual(const EquivariantMap& f, const GeneratorSystem& sigma,
                                                   const ModuleGenerators& module, const RepresentationPair& rep);

/// sum_j (L_j o sigma) P_j.
EquivariantMap reconstruct(const std::vector<Polynomial>& coefficients, const GeneratorSystem& sigma,
                           const ModuleGenerators& module);

}  // namespace carleman
