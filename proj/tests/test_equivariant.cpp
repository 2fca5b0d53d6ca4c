#include <doctest.h>

#include <random>

#include "carleman/equivariant.hpp"
#include "carleman/error.hpp"

using namespace carleman;

namespace {

RepresentationPair same(const char* spec) {
    const auto gens = builtin_generators(spec);
    return RepresentationPair::from_generators(gens, gens);
}

}  // namespace

TEST_CASE("module generators of the standard examples") {
    auto rep = same("sign:1");
    auto sigma = invariant_generators(rep.source_group());
    auto mod = equivariant_module_generators(rep, sigma);
    REQUIRE(mod.maps.size() == 1);
    CHECK(mod.maps[0][0] == parse_polynomial("x1"));

    rep = same("sym:2");
    sigma = invariant_generators(rep.source_group());
    mod = equivariant_module_generators(rep, sigma);
    REQUIRE(mod.maps.size() == 2);
    CHECK(mod.degrees == std::vector<int>{0, 1});
    for (const auto& p : mod.maps) CHECK(is_equivariant(p, rep));
}

TEST_CASE("twisted reynolds gives equivariant maps") {
    const auto rep = same("sym:3");
    std::mt19937_64 rng(2);
    EquivariantMap f;
    for (int i = 0; i < 3; ++i) f.push_back(random_polynomial(3, 3, 4, rng));
    const auto avg = twisted_reynolds(f, rep);
    CHECK(is_equivariant(avg, rep));
    CHECK(twisted_reynolds(avg, rep) == avg);
}

TEST_CASE("random module combinations reconstruct through both paths") {
    std::mt19937_64 rng(20240117);
    for (const char* spec : {"sign:1", "sym:2"}) {
        const auto rep = same(spec);
        const auto sigma = invariant_generators(rep.source_group());
        const auto mod = equivariant_module_generators(rep, sigma);
        for (int t = 0; t < 5; ++t) {
            EquivariantMap f(rep.target_dim(), Polynomial(rep.source_dim()));
            for (const auto& p : mod.maps) {
                const Polynomial c = random_polynomial(sigma.size(), 2, 3, rng);
                const auto term = multiply(compose(c, sigma.generators), p);
                for (std::size_t i = 0; i < f.size(); ++i) f[i] += term[i];
            }
            const auto direct = decompose_equivariant(f, sigma, mod, rep);
            const auto dual = decompose_equivariant_dual(f, sigma, mod, rep);
            CHECK(reconstruct(direct, sigma, mod) == f);
            CHECK(reconstruct(dual, sigma, mod) == f);
        }
    }
}

TEST_CASE("non-equivariant map is rejected") {
    const auto rep = same("sym:2");
    const auto sigma = invariant_generators(rep.source_group());
    const auto mod = equivariant_module_generators(rep, sigma);
    const EquivariantMap f{parse_polynomial("x1", 2), parse_polynomial("x1", 2)};
    try {
        decompose_equivariant(f, sigma, mod, rep);
        FAIL("expected NotEquivariant");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotEquivariant);
    }
}

TEST_CASE("distinct target representation") {
    // sign on R acting trivially on the target: equivariant maps are the invariants
    const auto rep =
        RepresentationPair::from_generators(builtin_generators("sign:1"), {RationalMatrix::identity(1)});
    const auto sigma = invariant_generators(rep.source_group());
    const auto mod = equivariant_module_generators(rep, sigma);
    REQUIRE(mod.maps.size() == 1);
    CHECK(mod.maps[0][0].is_constant());
    const EquivariantMap f{parse_polynomial("x1^4 + 2")};
    const auto coeffs = decompose_equivariant(f, sigma, mod, rep);
    CHECK(reconstruct(coeffs, sigma, mod) == f);
}
