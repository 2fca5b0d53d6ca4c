#include "carleman/invariant_theory.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <set>

#include "carleman/error.hpp"
#include "carleman/linear_span.hpp"

namespace carleman {

Polynomial reynolds(const Polynomial& f, const FiniteMatrixGroup& group) {
    if (f.nvars() != group.dimension()) {
        throw Error(ErrorKind::DimensionMismatch, "polynomial has " + std::to_string(f.nvars()) +
                                                      " variables, group acts on R^" +
                                                      std::to_string(group.dimension()));
    }
    Polynomial sum(f.nvars());
    for (const auto& g : group.elements()) sum += act(f, g);
    sum *= Rational(1, static_cast<unsigned long>(group.order()));
    return sum;
}

bool is_invariant(const Polynomial& f, const FiniteMatrixGroup& group) {
    if (f.nvars() != group.dimension()) throw Error(ErrorKind::DimensionMismatch, "invariance check dimension");
    for (const auto& g : group.generators().empty() ? group.elements() : group.generators()) {
        if (act(f, g) != f) return false;
    }
    return true;
}

GeneratorSystem make_generator_system(std::vector<Polynomial> generators, const FiniteMatrixGroup& group) {
    GeneratorSystem s;
    for (const auto& g : generators) {
        if (g.nvars() != group.dimension()) throw Error(ErrorKind::DimensionMismatch, "generator dimension");
        if (g.is_zero() || g.is_constant() || !g.is_homogeneous()) {
            throw Error(ErrorKind::ParameterOutOfRange, "generators must be non-constant and homogeneous: " + to_string(g));
        }
        if (!is_invariant(g, group)) throw Error(ErrorKind::NotInvariant, "generator is not invariant: " + to_string(g));
        s.degrees.push_back(g.degree());
    }
    s.generators = std::move(generators);
    s.group = group;
    return s;
}

// ---------------------------------------------------------------------------
// Products of generators

std::vector<Exponents> weighted_monomials(const std::vector<int>& degrees, unsigned d) {
    std::vector<Exponents> out;
    Exponents beta(degrees.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i == degrees.size()) {
            if (left == 0) out.push_back(beta);
            return;
        }
        const unsigned w = static_cast<unsigned>(degrees[i]);
        for (unsigned e = 0; e * w <= left; ++e) {
            beta[i] = e;
            self(self, i + 1, left - e * w);
        }
        beta[i] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

GeneratorProducts::GeneratorProducts(std::vector<Polynomial> generators, std::size_t nvars)
    : gens_(std::move(generators)), nvars_(nvars) {}

const Polynomial& GeneratorProducts::operator()(const Exponents& beta) {
    if (auto it = cache_.find(beta); it != cache_.end()) return it->second;
    std::size_t last = beta.size();
    for (std::size_t i = beta.size(); i-- > 0;) {
        if (beta[i] != 0) {
            last = i;
            break;
        }
    }
    Polynomial value = Polynomial::constant(nvars_, 1);
    if (last != beta.size()) {
        Exponents smaller = beta;
        --smaller[last];
        value = (*this)(smaller) * gens_[last];
    }
    return cache_.emplace(beta, std::move(value)).first->second;
}

Polynomial express_in_generators(const Polynomial& f, const std::vector<Polynomial>& generators,
                                 const std::vector<int>& degrees) {
    const std::size_t p = generators.size();
    GeneratorProducts products(generators, f.nvars());
    Polynomial out(p);
    for (const auto& [d, part] : homogeneous_components(f)) {
        auto betas = weighted_monomials(degrees, static_cast<unsigned>(d));
        LinearReducer reducer;
        for (std::size_t t = 0; t < betas.size(); ++t) reducer.insert(products(betas[t]), t);
        auto red = reducer.reduce(part);
        if (!red.remainder.is_zero()) {
            throw Error(ErrorKind::NotInAlgebra, "degree " + std::to_string(d) +
                                                     " part is not a polynomial in the generators");
        }
        for (const auto& [tag, c] : red.combination) out.add_term(betas[tag], c);
    }
    return out;
}

Polynomial rewrite_invariant(const Polynomial& f, const GeneratorSystem& system) {
    if (f.nvars() != system.group.dimension()) throw Error(ErrorKind::DimensionMismatch, "rewrite dimension");
    if (!is_invariant(f, system.group)) throw Error(ErrorKind::NotInvariant, "input is not invariant under the group");
    return express_in_generators(f, system.generators, system.degrees);
}

GeneratorSystem invariant_generators(const FiniteMatrixGroup& group) {
    const std::size_t n = group.dimension();
    const unsigned bound = static_cast<unsigned>(group.order());
    GeneratorSystem s;
    s.group = group;
    GrlexLess less;
    for (unsigned d = 1; d <= bound; ++d) {
        std::set<Polynomial> seen;
        std::vector<Polynomial> candidates;
        for (const auto& e : monomials_of_degree(n, d)) {
            Polynomial r = reynolds(Polynomial::monomial(e), group);
            if (r.is_zero()) continue;
            r = primitive_part(r);
            if (seen.insert(r).second) candidates.push_back(std::move(r));
        }
        std::sort(candidates.begin(), candidates.end(), [&](const Polynomial& a, const Polynomial& b) {
            if (a.leading_exponents() != b.leading_exponents()) return less(a.leading_exponents(), b.leading_exponents());
            return a < b;
        });
        LinearReducer reducer;
        GeneratorProducts products(s.generators, n);
        std::size_t tag = 0;
        for (const auto& beta : weighted_monomials(s.degrees, d)) reducer.insert(products(beta), tag++);
        std::vector<Polynomial> kept;
        for (auto& c : candidates) {
            if (reducer.insert(c, tag++)) kept.push_back(std::move(c));
        }
        std::reverse(kept.begin(), kept.end());
        for (auto& k : kept) {
            s.generators.push_back(std::move(k));
            s.degrees.push_back(static_cast<int>(d));
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Weyl embedding

WeylEmbedding::WeylEmbedding(const FiniteMatrixGroup& group)
    : group_(group), l_(group.order() * group.dimension(), group.dimension()), m_(group.order()), n_(group.dimension()) {
    for (std::size_t i = 0; i < m_; ++i)
        for (std::size_t r = 0; r < n_; ++r)
            for (std::size_t c = 0; c < n_; ++c) l_(i * n_ + r, c) = group[i](r, c);
}

Polynomial WeylEmbedding::lift(const Polynomial& f) const {
    if (f.nvars() != n_) throw Error(ErrorKind::DimensionMismatch, "lift dimension");
    Polynomial sum(m_ * n_);
    std::vector<std::size_t> target(n_);
    for (std::size_t i = 0; i < m_; ++i) {
        for (std::size_t r = 0; r < n_; ++r) target[r] = i * n_ + r;
        sum += relabel(f, m_ * n_, target);
    }
    sum *= Rational(1, static_cast<unsigned long>(m_));
    return sum;
}

Polynomial WeylEmbedding::pullback(const Polynomial& big) const {
    if (big.nvars() != m_ * n_) throw Error(ErrorKind::DimensionMismatch, "pullback dimension");
    std::vector<Polynomial> rows;
    rows.reserve(m_ * n_);
    for (std::size_t r = 0; r < m_ * n_; ++r) {
        Polynomial row(n_);
        for (std::size_t c = 0; c < n_; ++c) {
            if (l_(r, c) != 0) row += scale(Polynomial::variable(n_, c), l_(r, c));
        }
        rows.push_back(std::move(row));
    }
    return compose(big, rows);
}

std::vector<std::size_t> WeylEmbedding::block_action(std::size_t element) const {
    std::vector<std::size_t> pi(m_);
    for (std::size_t i = 0; i < m_; ++i) pi[i] = group_.index_of(group_[i] * group_[element]);
    return pi;
}

bool WeylEmbedding::is_block_invariant(const Polynomial& big) const {
    if (big.nvars() != m_ * n_) throw Error(ErrorKind::DimensionMismatch, "block invariance dimension");
    std::vector<std::size_t> target(m_ * n_);
    for (std::size_t e = 0; e < m_; ++e) {
        auto pi = block_action(e);
        for (std::size_t i = 0; i < m_; ++i)
            for (std::size_t r = 0; r < n_; ++r) target[i * n_ + r] = pi[i] * n_ + r;
        if (relabel(big, m_ * n_, target) != big) return false;
    }
    return true;
}

WeylEmbedding weyl_embedding(const FiniteMatrixGroup& group) { return WeylEmbedding(group); }

// ---------------------------------------------------------------------------
// Norm constants

std::string_view to_string(NormBoundKind k) {
    switch (k) {
        case NormBoundKind::Exact: return "exact";
        case NormBoundKind::Spectral: return "spectral_upper_bound";
        case NormBoundKind::Frobenius: return "frobenius_upper_bound";
    }
    return "unknown";
}

namespace {

// Best rational approximation with denominator <= max_den (continued fractions).
Rational rationalize(double x, long max_den) {
    const bool negative = x < 0;
    x = std::fabs(x);
    Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double frac = x;
    for (int iter = 0; iter < 64; ++iter) {
        const double a = std::floor(frac);
        Integer ai = Integer(a);
        Integer h2 = ai * h1 + h0;
        Integer k2 = ai * k1 + k0;
        if (k2 > max_den) break;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        const double rest = frac - a;
        if (rest < 1e-15) break;
        frac = 1.0 / rest;
    }
    Rational r(h1, k1);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

bool certifies_upper(const RationalMatrix& a, const Rational& r) {
    RationalMatrix shifted = RationalMatrix::scalar(a.rows(), r);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) shifted(i, j) -= a(i, j);
    return is_positive_semidefinite(shifted);
}

NormBound element_norm(const RationalMatrix& g) {
    const RationalMatrix a = g.transpose() * g;
    const std::size_t n = a.rows();
    Eigen::MatrixXd dense(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) dense(i, j) = a(i, j).get_d();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense, Eigen::EigenvaluesOnly);
    const double lambda = solver.eigenvalues().maxCoeff();

    const Rational guess = rationalize(lambda, 1'000'000);
    if (certifies_upper(a, guess)) {
        RationalMatrix shifted = RationalMatrix::scalar(n, guess);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) shifted(i, j) -= a(i, j);
        if (shifted.determinant() == 0) {
            Rational root;
            if (exact_sqrt(guess, root)) return {root, NormBoundKind::Exact};
        }
        return {sqrt_upper(guess), NormBoundKind::Spectral};
    }
    const Rational padded = rationalize(lambda * (1.0 + 1e-9) + 1e-12, 1'000'000'000);
    if (padded >= guess && certifies_upper(a, padded)) return {sqrt_upper(padded), NormBoundKind::Spectral};
    return {sqrt_upper(a.trace()), NormBoundKind::Frobenius};
}

}  // namespace

NormBound operator_norm_mu(const FiniteMatrixGroup& group) {
    NormBound best{0, NormBoundKind::Exact};
    for (const auto& g : group.elements()) {
        NormBound b = element_norm(g);
        if (b.value > best.value) best.value = b.value;
        if (static_cast<int>(b.kind) > static_cast<int>(best.kind)) best.kind = b.kind;
    }
    return best;
}

Rational faa_di_bruno_radius(const Rational& rho, std::size_t n, const Rational& mu) {
    if (rho <= 0 || n == 0 || mu <= 0) throw Error(ErrorKind::ParameterOutOfRange, "radius inputs must be positive");
    const Rational nn(static_cast<unsigned long>(n * n));
    return nn * mu * rho;
}

}  // namespace carleman
