#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "carleman/matrix.hpp"
#include "carleman/rational.hpp"

namespace carleman {

using Exponents = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Exponents& e);

/// Graded lexicographic order: total degree first, then lexicographic with
/// x1 the most significant variable. Used everywhere a deterministic
/// ordering of monomials is needed.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map ordered by GrlexLess; no stored coefficient is
/// ever zero and the zero polynomial has no terms. All arithmetic between two
/// polynomials requires the same variable count.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational, GrlexLess>;

    Polynomial() = default;
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial constant(std::size_t nvars, const Rational& c);
    /// The coordinate function x_{i+1} (0-based index i).
    static Polynomial variable(std::size_t nvars, std::size_t i);
    static Polynomial monomial(const Exponents& e, const Rational& c = 1);

    std::size_t nvars() const noexcept { return nvars_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    /// -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    Rational coefficient(const Exponents& e) const;
    /// Grlex-largest exponent; requires a non-zero polynomial.
    const Exponents& leading_exponents() const;
    const Rational& leading_coefficient() const;

    /// Accumulates c * x^e, dropping the term if it cancels.
    void add_term(const Exponents& e, const Rational& c);

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    /// Total order used for deterministic sorting: compares term lists in
    /// descending grlex order, then coefficients.
    friend bool operator<(const Polynomial& a, const Polynomial& b);

private:
    void require_same_space(const Polynomial& other, const char* op) const;

    std::size_t nvars_ = 0;
    TermMap terms_;
};

Polynomial scale(const Polynomial& f, const Rational& c);
Polynomial pow(const Polynomial& f, unsigned exponent);
/// d f / d x_{i+1}.
Polynomial partial_derivative(const Polynomial& f, std::size_t i);
Rational evaluate(const Polynomial& f, std::span<const Rational> point);
/// f(g_1, ..., g_n); every g shares a common variable count.
Polynomial compose(const Polynomial& f, std::span<const Polynomial> gs);
/// f(A x) for a square matrix A acting on column vectors.
Polynomial substitute_linear(const Polynomial& f, const RationalMatrix& a);
/// Renames variables: x_i of f becomes x_{target[i]} in a space of new_nvars variables.
Polynomial relabel(const Polynomial& f, std::size_t new_nvars, std::span<const std::size_t> target);

/// Exact division f / g; std::nullopt when g does not divide f.
std::optional<Polynomial> try_divide(const Polynomial& f, const Polynomial& g);
/// Exact division; throws Error{NotDivisible}.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

/// Non-empty homogeneous parts, in increasing degree.
std::vector<std::pair<int, Polynomial>> homogeneous_components(const Polynomial& f);
Polynomial homogeneous_part(const Polynomial& f, int degree);

/// Scales f to integer coefficients with gcd 1 and positive leading coefficient.
Polynomial primitive_part(const Polynomial& f);

/// All exponent vectors of total degree d, in increasing grlex order.
std::vector<Exponents> monomials_of_degree(std::size_t nvars, unsigned degree);

struct LinearForm {
    std::vector<Rational> coefficients;

    Polynomial to_polynomial() const;
};

/// Throws Error{ParameterOutOfRange} when all coefficients vanish.
LinearForm make_linear_form(std::vector<Rational> coefficients);

/// Text form, e.g. "3/2*x1^2*x2 - x3". Terms in decreasing grlex order.
std::string to_string(const Polynomial& f, std::string_view prefix = "x");

/// Parses the text grammar. Variables are `<prefix><index>` with 1-based
/// indices. The variable count is `nvars` when given, otherwise the largest
/// index that occurs.
Polynomial parse_polynomial(std::string_view text, std::optional<std::size_t> nvars = std::nullopt,
                            std::string_view prefix = "x");

/// JSON form: list of {"coeff": "p/q", "exps": [..]}, terms in decreasing grlex order.
nlohmann::json to_json(const Polynomial& f);
Polynomial polynomial_from_json(const nlohmann::json& j, std::optional<std::size_t> nvars = std::nullopt);

/// Random polynomial with up to `terms` terms of total degree <= max_degree
/// and integer coefficients in [-coeff_bound, coeff_bound].
Polynomial random_polynomial(std::size_t nvars, unsigned max_degree, std::size_t terms, std::mt19937_64& rng,
                             int coeff_bound = 5);

}  // namespace carleman
