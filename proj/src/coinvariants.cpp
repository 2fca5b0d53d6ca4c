#include "carleman/coinvariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "carleman/error.hpp"
#include "carleman/invariant_theory.hpp"
#include "carleman/linear_span.hpp"

namespace carleman {

std::string_view to_string(CoinvariantKind k) { return k == CoinvariantKind::Artin ? "artin" : "harmonic"; }

std::vector<Exponents> artin_exponents(const std::vector<std::size_t>& block_sizes) {
    const std::size_t nv = std::accumulate(block_sizes.begin(), block_sizes.end(), std::size_t{0});
    std::vector<std::uint32_t> bound(nv);
    std::size_t offset = 0;
    for (std::size_t s : block_sizes) {
        for (std::size_t j = 0; j < s; ++j) bound[offset + j] = static_cast<std::uint32_t>(j);
        offset += s;
    }
    std::vector<Exponents> out;
    Exponents e(nv, 0);
    while (true) {
        out.push_back(e);
        bool advanced = false;
        for (std::size_t i = nv; i-- > 0;) {
            if (e[i] < bound[i]) {
                ++e[i];
                advanced = true;
                break;
            }
            e[i] = 0;
        }
        if (!advanced) break;
    }
    std::sort(out.begin(), out.end(), GrlexLess{});
    return out;
}

namespace {

Integer group_order(const std::vector<std::size_t>& block_sizes) {
    Integer order = 1;
    for (std::size_t s : block_sizes) order *= factorial(s);
    return order;
}

CoinvariantBasis prepare(const std::vector<std::size_t>& block_sizes, std::size_t cap, CoinvariantKind kind) {
    if (block_sizes.empty()) throw Error(ErrorKind::ParameterOutOfRange, "at least one block is required");
    for (std::size_t s : block_sizes)
        if (s == 0) throw Error(ErrorKind::ParameterOutOfRange, "block sizes must be positive");
    if (group_order(block_sizes) > cap) {
        throw Error(ErrorKind::SizeBoundExceeded, "|W| = " + group_order(block_sizes).get_str() +
                                                      " exceeds the cap " + std::to_string(cap));
    }
    CoinvariantBasis b;
    b.block_sizes = block_sizes;
    b.nvars = std::accumulate(block_sizes.begin(), block_sizes.end(), std::size_t{0});
    b.kind = kind;
    b.elements = block_permutations(block_sizes);
    std::size_t offset = 0;
    for (std::size_t s : block_sizes) {
        for (std::size_t i = 0; i + 1 < s; ++i) {
            std::vector<std::size_t> perm(b.nvars);
            std::iota(perm.begin(), perm.end(), 0);
            std::swap(perm[offset + i], perm[offset + i + 1]);
            b.generators.push_back(RationalMatrix::permutation(perm));
        }
        offset += s;
    }
    return b;
}

void finish(CoinvariantBasis& b) {
    const std::size_t w = b.order();
    b.evaluation = PolyMatrix(w, b.nvars);
    for (std::size_t i = 0; i < w; ++i)
        for (std::size_t j = 0; j < w; ++j) b.evaluation(i, j) = act(b.basis[j], b.elements[i]);
    CofactorData cd = bareiss_cofactors(b.evaluation);
    if (cd.determinant.is_zero()) throw Error(ErrorKind::DeltaDivisionFailed, "Delta vanishes for this basis");
    b.delta = std::move(cd.determinant);
    b.adjugate = std::move(cd.adjugate);
}

bool is_block_permutation(const RationalMatrix& g, const std::vector<std::size_t>& block_sizes) {
    if (!g.is_permutation()) return false;
    auto perm = g.permutation_image();
    std::size_t offset = 0;
    for (std::size_t s : block_sizes) {
        for (std::size_t j = offset; j < offset + s; ++j)
            if (perm[j] < offset || perm[j] >= offset + s) return false;
        offset += s;
    }
    return true;
}

}  // namespace

CoinvariantBasis artin_basis(const std::vector<std::size_t>& block_sizes, std::size_t cap) {
    CoinvariantBasis b = prepare(block_sizes, cap, CoinvariantKind::Artin);
    for (const auto& e : artin_exponents(block_sizes)) b.basis.push_back(Polynomial::monomial(e));
    finish(b);
    return b;
}

CoinvariantBasis harmonic_basis(const std::vector<std::size_t>& block_sizes, std::size_t cap) {
    CoinvariantBasis b = prepare(block_sizes, cap, CoinvariantKind::Harmonic);
    Polynomial vandermonde = Polynomial::constant(b.nvars, 1);
    std::size_t offset = 0;
    for (std::size_t s : block_sizes) {
        for (std::size_t i = offset; i < offset + s; ++i)
            for (std::size_t j = i + 1; j < offset + s; ++j)
                vandermonde *= Polynomial::variable(b.nvars, i) - Polynomial::variable(b.nvars, j);
        offset += s;
    }
    for (const auto& alpha : artin_exponents(block_sizes)) {
        Polynomial h = vandermonde;
        for (std::size_t v = 0; v < b.nvars; ++v)
            for (std::uint32_t r = 0; r < alpha[v]; ++r) h = partial_derivative(h, v);
        b.basis.push_back(primitive_part(h));
    }
    GrlexLess less;
    std::sort(b.basis.begin(), b.basis.end(), [&](const Polynomial& x, const Polynomial& y) {
        if (x.degree() != y.degree()) return x.degree() < y.degree();
        if (x.leading_exponents() != y.leading_exponents()) return less(x.leading_exponents(), y.leading_exponents());
        return x < y;
    });
    finish(b);
    return b;
}

bool is_w_invariant(const Polynomial& f, const CoinvariantBasis& b) {
    if (f.nvars() != b.nvars) throw Error(ErrorKind::DimensionMismatch, "W-invariance dimension");
    for (const auto& g : b.generators)
        if (act(f, g) != f) return false;
    return true;
}

DeltaReport delta_divisibility_check(const CoinvariantBasis& b) {
    DeltaReport report;
    Polynomial rest = b.delta;
    bool every_form_divides = true;
    std::size_t offset = 0;
    for (std::size_t s : b.block_sizes) {
        for (std::size_t i = offset; i < offset + s; ++i) {
            for (std::size_t j = i + 1; j < offset + s; ++j) {
                const Polynomial form = Polynomial::variable(b.nvars, i) - Polynomial::variable(b.nvars, j);
                unsigned exponent = 0;
                while (auto q = try_divide(rest, form)) {
                    rest = std::move(*q);
                    ++exponent;
                }
                if (exponent == 0) every_form_divides = false;
                report.factors.push_back({i, j, exponent});
            }
        }
        offset += s;
    }
    report.cofactor = rest;
    report.pass = every_form_divides && !rest.is_zero() && rest.is_constant();
    return report;
}

int delta_sign_character(const CoinvariantBasis& b, std::size_t element) {
    std::map<RationalMatrix, std::size_t> index;
    for (std::size_t i = 0; i < b.order(); ++i) index.emplace(b.elements[i], i);
    std::vector<std::size_t> perm(b.order());
    for (std::size_t i = 0; i < b.order(); ++i) perm[i] = index.at(b.elements[i] * b.elements[element]);
    int sign = 1;
    std::vector<bool> seen(perm.size(), false);
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = perm[j]) {
            seen[j] = true;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

std::vector<Polynomial> cramer_decompose(const Polynomial& f, const CoinvariantBasis& b) {
    if (f.nvars() != b.nvars) {
        throw Error(ErrorKind::DimensionMismatch, "polynomial has " + std::to_string(f.nvars()) +
                                                      " variables, blocks need " + std::to_string(b.nvars));
    }
    const std::size_t w = b.order();
    std::vector<Polynomial> moved;
    moved.reserve(w);
    for (const auto& g : b.elements) moved.push_back(act(f, g));
    std::vector<Polynomial> out;
    out.reserve(w);
    for (std::size_t j = 0; j < w; ++j) {
        Polynomial numerator(b.nvars);
        for (std::size_t i = 0; i < w; ++i) {
            if (!b.adjugate(j, i).is_zero() && !moved[i].is_zero()) numerator += b.adjugate(j, i) * moved[i];
        }
        auto q = try_divide(numerator, b.delta);
        if (!q) throw Error(ErrorKind::DeltaDivisionFailed, "Delta does not divide the numerator of f_" + std::to_string(j + 1));
        out.push_back(std::move(*q));
    }
    return out;
}

namespace {

void require_subgroup(const CoinvariantBasis& b, const FiniteMatrixGroup& group) {
    if (!b.w_stable()) throw Error(ErrorKind::BasisNotStable, "the Artin span is not W-stable; use the harmonic basis");
    if (group.dimension() != b.nvars) throw Error(ErrorKind::NotASubgroup, "group acts on the wrong dimension");
    for (const auto& g : group.elements())
        if (!is_block_permutation(g, b.block_sizes)) {
            throw Error(ErrorKind::NotASubgroup, "element is not a block permutation:\n" + to_string(g));
        }
}

}  // namespace

std::vector<Polynomial> subgroup_basis(const CoinvariantBasis& b, const FiniteMatrixGroup& group) {
    require_subgroup(b, group);
    LinearReducer reducer;
    std::vector<Polynomial> out;
    for (const auto& h : b.basis) {
        Polynomial r = reynolds(h, group);
        if (r.is_zero()) continue;
        r = primitive_part(r);
        if (reducer.insert(r, out.size())) out.push_back(std::move(r));
    }
    return out;
}

std::vector<InvariantTerm> invariant_decompose(const Polynomial& f, const CoinvariantBasis& b,
                                               const FiniteMatrixGroup& group) {
    require_subgroup(b, group);
    if (!is_invariant(f, group)) throw Error(ErrorKind::NotInvariant, "input is not invariant under the subgroup");
    const auto coeffs = cramer_decompose(f, b);
    const auto hg = subgroup_basis(b, group);
    LinearReducer reducer;
    for (std::size_t l = 0; l < hg.size(); ++l) reducer.insert(hg[l], l);

    std::vector<InvariantTerm> out;
    for (const auto& h : hg) out.push_back({h, Polynomial(b.nvars)});
    for (std::size_t j = 0; j < b.basis.size(); ++j) {
        if (coeffs[j].is_zero()) continue;
        // f = R_G f = sum_j R_G(h_j) f_j since every f_j is W-invariant
        auto red = reducer.reduce(reynolds(b.basis[j], group));
        if (!red.remainder.is_zero()) throw Error(ErrorKind::BasisNotStable, "Reynolds image left span(H^G)");
        for (const auto& [l, c] : red.combination) out[l].coefficient += scale(coeffs[j], c);
    }
    return out;
}

}  // namespace carleman
