#pragma once

#include <cstddef>
#include <map>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "carleman/matrix.hpp"
#include "carleman/polynomial.hpp"

namespace carleman {

inline constexpr std::size_t kDefaultMaxOrder = 1024;

/// A finite subgroup of GL(n, Q) stored as its full element list.
///
/// Elements appear in closure order: breadth-first from the identity, each
/// new element produced as (generator * known element) in generator order.
class FiniteMatrixGroup {
public:
    FiniteMatrixGroup() = default;

    /// Closes the generators under multiplication. Throws SingularGenerator,
    /// DimensionMismatch, or OrderBoundExceeded when more than max_order
    /// elements appear.
    static FiniteMatrixGroup close(const std::vector<RationalMatrix>& generators,
                                   std::size_t max_order = kDefaultMaxOrder);
    static FiniteMatrixGroup trivial(std::size_t n);
    /// Uses the given list verbatim as the element order after checking closure.
    static FiniteMatrixGroup from_elements(std::vector<RationalMatrix> elements);

    std::size_t dimension() const noexcept { return n_; }
    std::size_t order() const noexcept { return elements_.size(); }
    const std::vector<RationalMatrix>& elements() const noexcept { return elements_; }
    const std::vector<RationalMatrix>& generators() const noexcept { return generators_; }
    const RationalMatrix& operator[](std::size_t i) const { return elements_[i]; }

    bool contains(const RationalMatrix& g) const { return index_.count(g) != 0; }
    /// Position of g in the element order; throws IndexOutOfRange if absent.
    std::size_t index_of(const RationalMatrix& g) const;

private:
    void build_index();

    std::size_t n_ = 0;
    std::vector<RationalMatrix> elements_;
    std::vector<RationalMatrix> generators_;
    std::map<RationalMatrix, std::size_t> index_;
};

/// f o l_g, i.e. x -> f(g x).
inline Polynomial act(const Polynomial& f, const RationalMatrix& g) { return substitute_linear(f, g); }

/// Built-in groups: trivial:n, sign:n ({+-I}), sym:n, cyclic:n (cyclic
/// coordinate shift), rot4 (rotation by a quarter turn on R^2),
/// blocks:a,b,... (product of symmetric groups acting in blocks).
FiniteMatrixGroup builtin_group(std::string_view spec, std::size_t max_order = kDefaultMaxOrder);
/// Generator matrices of a built-in group spec, in the order used by builtin_group.
std::vector<RationalMatrix> builtin_generators(std::string_view spec);

/// Permutation matrices of the product of symmetric groups acting on
/// consecutive coordinate blocks, ordered lexicographically by the
/// concatenated one-line permutation words.
std::vector<RationalMatrix> block_permutations(const std::vector<std::size_t>& block_sizes);

/// Matrices as JSON: list of row lists, entries are "p/q" strings.
nlohmann::json to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const nlohmann::json& j);
std::vector<RationalMatrix> matrices_from_json(const nlohmann::json& j);

}  // namespace carleman
