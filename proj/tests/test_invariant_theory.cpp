#include <doctest.h>

#include <random>

#include "carleman/error.hpp"
#include "carleman/invariant_theory.hpp"

using namespace carleman;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::NotDivisible;
}

}  // namespace

TEST_CASE("closure of built-in groups") {
    CHECK(builtin_group("sign:1").order() == 2);
    CHECK(builtin_group("sym:3").order() == 6);
    CHECK(builtin_group("rot4").order() == 4);
    CHECK(builtin_group("cyclic:4").order() == 4);
    CHECK(builtin_group("blocks:2,2").order() == 4);
    CHECK(builtin_group("sym:4").order() == 24);
    CHECK(kind_of([] { builtin_group("sym:5", 100); }) == ErrorKind::OrderBoundExceeded);
    CHECK(kind_of([] { FiniteMatrixGroup::close({RationalMatrix(2, 2, {1, 1, 1, 1})}); }) ==
          ErrorKind::SingularGenerator);
    // infinite order generator runs into the bound
    CHECK(kind_of([] { FiniteMatrixGroup::close({RationalMatrix(1, 1, {2})}, 50); }) == ErrorKind::OrderBoundExceeded);
}

TEST_CASE("group json") {
    const auto gens = builtin_generators("rot4");
    const auto j = nlohmann::json::array({to_json(gens[0])});
    CHECK(matrices_from_json(j) == gens);
    CHECK(matrix_from_json(nlohmann::json::parse(R"([["1/2", 0], [0, 2]])"))(0, 0) == make_rational(1, 2));
}

TEST_CASE("reynolds projects onto invariants") {
    const auto g = builtin_group("sym:3");
    std::mt19937_64 rng(1);
    for (int t = 0; t < 10; ++t) {
        const Polynomial f = random_polynomial(3, 4, 5, rng);
        const Polynomial r = reynolds(f, g);
        CHECK(is_invariant(r, g));
        CHECK(reynolds(r, g) == r);
    }
    CHECK(reynolds(parse_polynomial("x1"), builtin_group("sign:1")).is_zero());
}

TEST_CASE("hilbert generators of small groups") {
    auto s = invariant_generators(builtin_group("sign:1"));
    REQUIRE(s.size() == 1);
    CHECK(s.generators[0] == parse_polynomial("x1^2"));

    s = invariant_generators(builtin_group("sym:2"));
    REQUIRE(s.size() == 2);
    CHECK(s.generators[0] == parse_polynomial("x1 + x2"));
    CHECK(s.generators[1] == parse_polynomial("x1*x2"));

    s = invariant_generators(builtin_group("rot4"));
    CHECK(s.size() == 3);
    CHECK(s.degrees == std::vector<int>{2, 4, 4});
    for (const auto& p : s.generators) CHECK(is_invariant(p, builtin_group("rot4")));
}

TEST_CASE("rewrite round trip and failure modes") {
    const auto g = builtin_group("sym:2");
    const auto s = invariant_generators(g);
    const Polynomial big_f = rewrite_invariant(parse_polynomial("x1^2 + x2^2"), s);
    CHECK(to_string(big_f, "s") == "s1^2 - 2*s2");
    CHECK(kind_of([&] { rewrite_invariant(parse_polynomial("x1", 2), s); }) == ErrorKind::NotInvariant);
    CHECK(kind_of([&] { express_in_generators(parse_polynomial("x1 + x2", 2), {parse_polynomial("x1*x2", 2)}, {2}); }) ==
          ErrorKind::NotInAlgebra);
}

TEST_CASE("random invariants rewrite exactly") {
    std::mt19937_64 rng(20240117);
    for (const char* spec : {"sign:1", "sym:3", "rot4", "blocks:2,2"}) {
        const auto g = builtin_group(spec);
        const auto s = invariant_generators(g);
        for (int t = 0; t < 5; ++t) {
            const Polynomial f = reynolds(random_polynomial(g.dimension(), 6, 6, rng), g);
            CHECK(compose(rewrite_invariant(f, s), s.generators) == f);
        }
    }
}

TEST_CASE("weyl section identity") {
    const auto g = builtin_group("rot4");
    const WeylEmbedding w(g);
    CHECK(w.matrix().rows() == 8);
    const Polynomial f = parse_polynomial("x1^2*x2^2 + x1^4 + x2^4");
    const Polynomial big = w.lift(f);
    CHECK(w.pullback(big) == f);
    CHECK(w.is_block_invariant(big));
}

TEST_CASE("norm bound and radius") {
    const auto g = FiniteMatrixGroup::close({RationalMatrix(2, 2, {0, 2, make_rational(1, 2), 0})});
    const auto mu = operator_norm_mu(g);
    CHECK(mu.value == Rational(2));
    CHECK(mu.kind == NormBoundKind::Exact);
    CHECK(operator_norm_mu(builtin_group("sym:3")).value >= Rational(1));
    CHECK(faa_di_bruno_radius(make_rational(1, 2), 3, 2) == Rational(9));
    CHECK(kind_of([] { faa_di_bruno_radius(0, 3, 2); }) == ErrorKind::ParameterOutOfRange);
}
