#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "carleman/interval.hpp"
#include "carleman/polynomial.hpp"
#include "carleman/weight_sequence.hpp"

namespace carleman {

enum class SymmetricBasis { Elementary, Newton };

std::string_view to_string(SymmetricBasis b);
/// Variable prefix used when printing F: "s" (elementary) or "u" (Newton).
std::string_view variable_prefix(SymmetricBasis b);

/// e_i(x_1..x_n); throws IndexOutOfRange unless 1 <= i <= n.
Polynomial elementary_symmetric(std::size_t n, std::size_t i);
/// p_i = x_1^i + ... + x_n^i; throws IndexOutOfRange when i = 0.
Polynomial newton_power_sum(std::size_t n, std::size_t i);
std::vector<Polynomial> symmetric_generators(std::size_t n, SymmetricBasis basis);

/// G with G(target gens) = F(source gens), via Newton's identities.
Polynomial change_basis(const Polynomial& f, SymmetricBasis from, SymmetricBasis to);

/// F with F(e_1..e_n) = f (or F(p_1..p_n) = f). Throws NotSymmetric.
Polynomial rewrite_symmetric(const Polynomial& f, SymmetricBasis basis = SymmetricBasis::Elementary);

/// For f invariant under S_{m_1} x ... x S_{m_r} permuting consecutive
/// blocks, F over the concatenated elementary symmetric generators of the
/// blocks. Throws NotBlockSymmetric.
Polynomial block_rewrite(const Polynomial& f, const std::vector<std::size_t>& block_sizes);
/// Concatenated per-block elementary symmetric generators.
std::vector<Polynomial> block_generators(const std::vector<std::size_t>& block_sizes);

/// (A_j h)(x) = int_0^1 [(d_j - d_{j+1}) h](t P x + (1 - t) x) dt, where P swaps
/// coordinates j and j+1 of the block starting at `first` (1-based j within
/// the block). block_size 0 means "to the last variable".
Polynomial bronshtein_A(const Polynomial& h, std::size_t j, std::size_t first = 0, std::size_t block_size = 0);

/// Operator order for the product A_1 ... A_{n-1}.
enum class OperatorOrder {
    AscendingProduct,   // A_1 (A_2 (... A_{n-1} g)): A_{n-1} applied first
    DescendingProduct,  // A_{n-1} (... (A_1 g)): A_1 applied first
};

std::string_view to_string(OperatorOrder o);

/// g_{kn} = ((-1)^{k+1}/k) e_{n-k}(x_1..x_{n-1}) d_{x_n} f.
Polynomial bronshtein_g(const Polynomial& f, std::size_t k);
/// Product of the A_j applied to g_{kn}; equals (d_{u_k} F) o p for the
/// Newton rewrite F of f. Throws NotSymmetric / IndexOutOfRange.
Polynomial bronshtein_partial(const Polynomial& f, std::size_t k,
                              OperatorOrder order = OperatorOrder::AscendingProduct);
/// (d_{u_k} F) o p with F = rewrite_symmetric(f, Newton).
Polynomial newton_partial_oracle(const Polynomial& f, std::size_t k);

struct BronshteinCheck {
    std::size_t n = 0;
    std::size_t k = 0;
    bool ascending_ok = false;
    bool descending_ok = false;
};

/// Compares bronshtein_partial with the oracle under both operator orders for every k.
std::vector<BronshteinCheck> bronshtein_check(const Polynomial& f);

struct NecessityRow {
    std::size_t m = 0;
    Interval truncated_sum;
    Interval lower_bound;
    bool certified = false;  // truncated_sum.lo >= lower_bound.hi

    std::string ratio_string(int digits = 12) const;
};

struct NecessityReport {
    std::string sequence;
    std::size_t n = 0;
    std::size_t m_max = 0;
    std::size_t truncation = 0;
    std::vector<NecessityRow> rows;

    bool all_certified() const;
};

inline constexpr std::size_t kDefaultNecessityTruncation = 40;

/// Rows m = 1..m_max of sum_{k=0}^{K} c_k rho_k^{mn} m! against m! M_{mn} / 2^m,
/// with rho_k = M_{kn+1}/M_{kn}, c_k = M_{kn}/(2^k rho_k^{kn}). Requires n >= 3,
/// K >= m_max and a log-convex M (NotLogConvex).
NecessityReport necessity_report(const WeightSequence& m, std::size_t n, std::size_t m_max,
                                 std::size_t truncation = kDefaultNecessityTruncation,
                                 mpfr_prec_t prec = default_precision());

nlohmann::json to_json(const NecessityReport& r);
std::string to_text(const NecessityReport& r);

}  // namespace carleman
