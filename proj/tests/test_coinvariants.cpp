#include <doctest.h>

#include <random>

#include "carleman/coinvariants.hpp"
#include "carleman/error.hpp"
#include "carleman/invariant_theory.hpp"
#include "carleman/linear_span.hpp"

using namespace carleman;

TEST_CASE("artin exponents") {
    const auto e = artin_exponents({3});
    CHECK(e.size() == 6);
    for (const auto& a : e) {
        CHECK(a[0] == 0);
        CHECK(a[1] <= 1);
        CHECK(a[2] <= 2);
    }
    CHECK(artin_exponents({2, 2}).size() == 4);
}

TEST_CASE("delta for S2 and its factorization") {
    const auto b = artin_basis({2});
    CHECK((b.delta == parse_polynomial("x1 - x2") || b.delta == parse_polynomial("x2 - x1")));
    const auto b3 = artin_basis({3});
    const auto rep = delta_divisibility_check(b3);
    CHECK(rep.pass);
    CHECK(rep.cofactor.is_constant());
    for (const auto& f : rep.factors) CHECK(f.exponent == 3);
}

TEST_CASE("delta transforms by the sign character") {
    for (const auto& blocks : {std::vector<std::size_t>{3}, std::vector<std::size_t>{2, 2}}) {
        const auto b = artin_basis(blocks);
        for (std::size_t e = 0; e < b.order(); ++e) {
            CHECK(act(b.delta, b.elements[e]) == scale(b.delta, delta_sign_character(b, e)));
        }
    }
}

TEST_CASE("cramer decomposition of random polynomials") {
    std::mt19937_64 rng(20240117);
    for (const auto& blocks : {std::vector<std::size_t>{2}, std::vector<std::size_t>{3}, std::vector<std::size_t>{2, 2}}) {
        for (const auto* kind : {"artin", "harmonic"}) {
            const auto b = std::string(kind) == "artin" ? artin_basis(blocks) : harmonic_basis(blocks);
            for (int t = 0; t < 4; ++t) {
                const Polynomial f = random_polynomial(b.nvars, 5, 6, rng);
                const auto parts = cramer_decompose(f, b);
                Polynomial sum(b.nvars);
                for (std::size_t j = 0; j < parts.size(); ++j) {
                    CHECK(is_w_invariant(parts[j], b));
                    sum += b.basis[j] * parts[j];
                }
                CHECK(sum == f);
            }
        }
    }
}

TEST_CASE("harmonic basis is W-stable and artin is not") {
    const auto h = harmonic_basis({3});
    LinearReducer red;
    for (std::size_t j = 0; j < h.basis.size(); ++j) red.insert(h.basis[j], j);
    for (const auto& g : h.generators)
        for (const auto& p : h.basis) CHECK(red.contains(act(p, g)));
    const auto a = artin_basis({3});
    CHECK_THROWS_AS(subgroup_basis(a, builtin_group("sym:3")), Error);
}

TEST_CASE("decomposition over a subgroup") {
    // diagonal swap (x1 x3)(x2 x4) is not a block permutation, the swap inside both blocks is
    const auto b = harmonic_basis({2, 2});
    const auto g = FiniteMatrixGroup::close({RationalMatrix::permutation({1, 0, 3, 2})});
    const auto hg = subgroup_basis(b, g);
    CHECK(hg.size() == 2);
    std::mt19937_64 rng(4);
    for (int t = 0; t < 5; ++t) {
        const Polynomial f = reynolds(random_polynomial(4, 4, 6, rng), g);
        const auto terms = invariant_decompose(f, b, g);
        Polynomial sum(4);
        for (const auto& term : terms) {
            CHECK(is_invariant(term.h, g));
            CHECK(is_w_invariant(term.coefficient, b));
            sum += term.h * term.coefficient;
        }
        CHECK(sum == f);
    }
    const auto bad = FiniteMatrixGroup::close({RationalMatrix::permutation({2, 3, 0, 1})});
    CHECK_THROWS_AS(subgroup_basis(b, bad), Error);
}

TEST_CASE("size cap") {
    try {
        artin_basis({6}, 100);
        FAIL("expected SizeBoundExceeded");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SizeBoundExceeded);
    }
}
