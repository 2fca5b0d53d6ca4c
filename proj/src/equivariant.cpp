#include "carleman/equivariant.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "carleman/error.hpp"
#include "carleman/linear_span.hpp"

namespace carleman {

namespace {

RationalMatrix sub_block(const RationalMatrix& m, std::size_t start, std::size_t size) {
    RationalMatrix out(size, size);
    for (std::size_t r = 0; r < size; ++r)
        for (std::size_t c = 0; c < size; ++c) out(r, c) = m(start + r, start + c);
    return out;
}

std::vector<std::size_t> identity_targets(std::size_t n) {
    std::vector<std::size_t> t(n);
    std::iota(t.begin(), t.end(), 0);
    return t;
}

}  // namespace

RepresentationPair RepresentationPair::from_generators(const std::vector<RationalMatrix>& gens1,
                                                       const std::vector<RationalMatrix>& gens2,
                                                       std::size_t max_order) {
    if (gens1.empty() || gens1.size() != gens2.size()) {
        throw Error(ErrorKind::DimensionMismatch, "both representations need the same number of generators");
    }
    RepresentationPair rep;
    rep.dim1_ = gens1.front().rows();
    rep.dim2_ = gens2.front().rows();
    std::vector<RationalMatrix> paired;
    for (std::size_t i = 0; i < gens1.size(); ++i) {
        if (!gens1[i].is_square() || gens1[i].rows() != rep.dim1_ || !gens2[i].is_square() ||
            gens2[i].rows() != rep.dim2_) {
            throw Error(ErrorKind::DimensionMismatch, "representation matrices differ in size");
        }
        paired.push_back(block_diagonal(gens1[i], gens2[i]));
    }
    rep.group_ = FiniteMatrixGroup::close(paired, max_order);
    rep.source_ = FiniteMatrixGroup::close(gens1, max_order);
    return rep;
}

RationalMatrix RepresentationPair::rho1(std::size_t element) const { return sub_block(group_[element], 0, dim1_); }
RationalMatrix RepresentationPair::rho2(std::size_t element) const {
    return sub_block(group_[element], dim1_, dim2_);
}

FiniteMatrixGroup RepresentationPair::dual_group(std::size_t max_order) const {
    std::vector<RationalMatrix> gens;
    for (const auto& g : group_.generators()) {
        RationalMatrix a = sub_block(g, 0, dim1_);
        RationalMatrix b = sub_block(g, dim1_, dim2_);
        gens.push_back(block_diagonal(a, b.inverse()->transpose()));
    }
    return FiniteMatrixGroup::close(gens, max_order);
}

bool is_equivariant(const EquivariantMap& f, const RepresentationPair& rep) {
    if (f.size() != rep.target_dim()) throw Error(ErrorKind::DimensionMismatch, "map has the wrong number of components");
    for (const auto& c : f)
        if (c.nvars() != rep.source_dim()) throw Error(ErrorKind::DimensionMismatch, "component has the wrong variable count");
    const auto& gens = rep.group().generators();
    for (const auto& g : gens) {
        RationalMatrix a = sub_block(g, 0, rep.source_dim());
        RationalMatrix b = sub_block(g, rep.source_dim(), rep.target_dim());
        for (std::size_t t = 0; t < f.size(); ++t) {
            Polynomial rhs(rep.source_dim());
            for (std::size_t s = 0; s < f.size(); ++s)
                if (b(t, s) != 0) rhs += scale(f[s], b(t, s));
            if (act(f[t], a) != rhs) return false;
        }
    }
    return true;
}

EquivariantMap twisted_reynolds(const EquivariantMap& f, const RepresentationPair& rep) {
    const std::size_t n = rep.source_dim();
    const std::size_t q = rep.target_dim();
    if (f.size() != q) throw Error(ErrorKind::DimensionMismatch, "map has the wrong number of components");
    EquivariantMap out(q, Polynomial(n));
    for (std::size_t e = 0; e < rep.group().order(); ++e) {
        const RationalMatrix a = rep.rho1(e);
        const RationalMatrix binv = *rep.rho2(e).inverse();
        std::vector<Polynomial> moved;
        for (const auto& c : f) moved.push_back(act(c, a));
        for (std::size_t t = 0; t < q; ++t)
            for (std::size_t s = 0; s < q; ++s)
                if (binv(t, s) != 0 && !moved[s].is_zero()) out[t] += scale(moved[s], binv(t, s));
    }
    const Rational inv_order(1, static_cast<unsigned long>(rep.group().order()));
    for (auto& c : out) c *= inv_order;
    return out;
}

Polynomial flatten(const EquivariantMap& f, std::size_t target_dim) {
    if (f.size() != target_dim || f.empty()) throw Error(ErrorKind::DimensionMismatch, "flatten: component count");
    const std::size_t n = f.front().nvars();
    const auto ids = identity_targets(n);
    Polynomial out(n + target_dim);
    for (std::size_t t = 0; t < target_dim; ++t) {
        if (f[t].is_zero()) continue;
        out += relabel(f[t], n + target_dim, ids) * Polynomial::variable(n + target_dim, n + t);
    }
    return out;
}

EquivariantMap multiply(const Polynomial& c, const EquivariantMap& f) {
    EquivariantMap out;
    out.reserve(f.size());
    for (const auto& comp : f) out.push_back(c * comp);
    return out;
}

namespace {

// Twisted averages of the monomial maps x^alpha e_t with |alpha| = d, flattened,
// primitive-scaled, deduplicated, sorted by decreasing leading monomial.
std::vector<std::pair<Polynomial, EquivariantMap>> averaged_monomial_maps(const RepresentationPair& rep, unsigned d) {
    const std::size_t n = rep.source_dim();
    const std::size_t q = rep.target_dim();
    std::set<Polynomial> seen;
    std::vector<std::pair<Polynomial, EquivariantMap>> out;
    for (const auto& alpha : monomials_of_degree(n, d)) {
        for (std::size_t t = 0; t < q; ++t) {
            EquivariantMap m(q, Polynomial(n));
            m[t] = Polynomial::monomial(alpha);
            EquivariantMap avg = twisted_reynolds(m, rep);
            Polynomial flat = flatten(avg, q);
            if (flat.is_zero()) continue;
            const Polynomial prim = primitive_part(flat);
            if (!seen.insert(prim).second) continue;
            const Rational factor = prim.leading_coefficient() / flat.leading_coefficient();
            for (auto& c : avg) c *= factor;
            out.emplace_back(prim, std::move(avg));
        }
    }
    GrlexLess less;
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        if (a.first.leading_exponents() != b.first.leading_exponents())
            return less(b.first.leading_exponents(), a.first.leading_exponents());
        return b.first < a.first;
    });
    return out;
}

struct ModuleColumn {
    std::size_t generator;
    Exponents beta;
};

// Columns sigma^beta P_j of x-degree d, in generator order then grlex order of beta.
void add_module_columns(LinearReducer& reducer, std::vector<ModuleColumn>* columns, unsigned d,
                        const GeneratorSystem& sigma, const std::vector<EquivariantMap>& maps,
                        const std::vector<int>& degrees, GeneratorProducts& products, std::size_t q,
                        std::size_t& tag) {
    const std::size_t n = products.nvars();
    const auto ids = identity_targets(n);
    for (std::size_t j = 0; j < maps.size(); ++j) {
        if (degrees[j] > static_cast<int>(d)) continue;
        const Polynomial flat = flatten(maps[j], q);
        for (const auto& beta : weighted_monomials(sigma.degrees, d - static_cast<unsigned>(degrees[j]))) {
            Polynomial col = relabel(products(beta), n + q, ids) * flat;
            reducer.insert(col, tag++);
            if (columns) columns->push_back({j, beta});
        }
    }
}

}  // namespace

ModuleGenerators equivariant_module_generators(const RepresentationPair& rep, const GeneratorSystem& sigma) {
    const std::size_t n = rep.source_dim();
    const std::size_t q = rep.target_dim();
    const unsigned bound = static_cast<unsigned>(rep.group().order());
    GeneratorProducts products(sigma.generators, n);
    ModuleGenerators out;
    for (unsigned d = 0; d <= bound; ++d) {
        LinearReducer reducer;
        std::size_t tag = 0;
        add_module_columns(reducer, nullptr, d, sigma, out.maps, out.degrees, products, q, tag);
        for (auto& [flat, map] : averaged_monomial_maps(rep, d)) {
            if (reducer.insert(flat, tag++)) {
                out.maps.push_back(std::move(map));
                out.degrees.push_back(static_cast<int>(d));
            }
        }
    }
    const int top = out.degrees.empty() ? 0 : *std::max_element(out.degrees.begin(), out.degrees.end());
    out.validated_degree = static_cast<int>(bound) + top;
    for (unsigned d = bound + 1; d <= static_cast<unsigned>(out.validated_degree); ++d) {
        LinearReducer reducer;
        std::size_t tag = 0;
        add_module_columns(reducer, nullptr, d, sigma, out.maps, out.degrees, products, q, tag);
        for (const auto& [flat, map] : averaged_monomial_maps(rep, d)) {
            if (!reducer.contains(flat)) {
                throw Error(ErrorKind::NotInModule, "an averaged monomial map of degree " + std::to_string(d) +
                                                        " is not generated by maps of degree <= " +
                                                        std::to_string(bound));
            }
        }
    }
    return out;
}

std::vector<Polynomial> decompose_equivariant(const EquivariantMap& f, const GeneratorSystem& sigma,
                                              const ModuleGenerators& module, const RepresentationPair& rep) {
    if (!is_equivariant(f, rep)) throw Error(ErrorKind::NotEquivariant, "map is not equivariant");
    const std::size_t n = rep.source_dim();
    const std::size_t q = rep.target_dim();
    const std::size_t p = sigma.size();
    GeneratorProducts products(sigma.generators, n);
    std::vector<Polynomial> out(module.maps.size(), Polynomial(p));
    const Polynomial flat = flatten(f, q);
    for (const auto& [total, part] : homogeneous_components(flat)) {
        const unsigned d = static_cast<unsigned>(total - 1);  // the z-variables add one degree
        LinearReducer reducer;
        std::vector<ModuleColumn> columns;
        std::size_t tag = 0;
        add_module_columns(reducer, &columns, d, sigma, module.maps, module.degrees, products, q, tag);
        auto red = reducer.reduce(part);
        if (!red.remainder.is_zero()) {
            throw Error(ErrorKind::NotInModule, "degree " + std::to_string(d) + " part is not in the module span");
        }
        for (const auto& [t, c] : red.combination) out[columns[t].generator].add_term(columns[t].beta, c);
    }
    return out;
}

std::vector<Polynomial> decompose_equivariant_dual(const EquivariantMap& f, const GeneratorSystem& sigma,
                                                   const ModuleGenerators& module, const RepresentationPair& rep) {
    if (!is_equivariant(f, rep)) throw Error(ErrorKind::NotEquivariant, "map is not equivariant");
    const std::size_t n = rep.source_dim();
    const std::size_t q = rep.target_dim();
    const std::size_t p = sigma.size();
    const GeneratorSystem tau = invariant_generators(rep.dual_group());
    const Polynomial h_f = flatten(f, q);
    const Polynomial l_f = rewrite_invariant(h_f, tau);

    // restriction to l = 0
    std::vector<Polynomial> at_zero;
    for (std::size_t i = 0; i < n; ++i) at_zero.push_back(Polynomial::variable(n, i));
    for (std::size_t t = 0; t < q; ++t) at_zero.push_back(Polynomial(n));

    std::vector<Polynomial> theta;
    std::vector<std::vector<Polynomial>> h;
    for (const auto& tau_i : tau.generators) {
        theta.push_back(express_in_generators(compose(tau_i, at_zero), sigma.generators, sigma.degrees));
        EquivariantMap d2;
        bool zero = true;
        for (std::size_t t = 0; t < q; ++t) {
            d2.push_back(compose(partial_derivative(tau_i, n + t), at_zero));
            zero = zero && d2.back().is_zero();
        }
        if (zero) h.emplace_back(module.maps.size(), Polynomial(p));
        else h.push_back(decompose_equivariant(d2, sigma, module, rep));
    }
    std::vector<Polynomial> out(module.maps.size(), Polynomial(p));
    for (std::size_t i = 0; i < tau.size(); ++i) {
        const Polynomial outer = compose(partial_derivative(l_f, i), theta);
        if (outer.is_zero()) continue;
        for (std::size_t j = 0; j < module.maps.size(); ++j)
            if (!h[i][j].is_zero()) out[j] += outer * h[i][j];
    }
    return out;
}

EquivariantMap reconstruct(const std::vector<Polynomial>& coefficients, const GeneratorSystem& sigma,
                           const ModuleGenerators& module) {
    if (coefficients.size() != module.maps.size()) throw Error(ErrorKind::DimensionMismatch, "coefficient count");
    if (module.maps.empty()) return {};
    const std::size_t n = module.maps.front().front().nvars();
    EquivariantMap out(module.maps.front().size(), Polynomial(n));
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
        if (coefficients[j].is_zero()) continue;
        const Polynomial c = compose(coefficients[j], sigma.generators);
        for (std::size_t t = 0; t < out.size(); ++t) out[t] += c * module.maps[j][t];
    }
    return out;
}

}  // namespace carleman
