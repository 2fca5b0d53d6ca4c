#include <doctest.h>

#include <random>

#include "carleman/linear_span.hpp"
#include "carleman/matrix.hpp"
#include "carleman/poly_matrix.hpp"

using namespace carleman;

namespace {

PolyMatrix random_poly_matrix(std::size_t n, std::size_t nvars, unsigned deg, std::mt19937_64& rng) {
    PolyMatrix a(n, nvars);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) a(r, c) = random_polynomial(nvars, deg, 3, rng, 3);
    return a;
}

RationalMatrix evaluate_at(const PolyMatrix& a, const std::vector<Rational>& p) {
    RationalMatrix m(a.size(), a.size());
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < a.size(); ++c) m(r, c) = evaluate(a(r, c), p);
    return m;
}

// Leibniz expansion, an oracle independent of any elimination.
Rational leibniz(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    Rational total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        Rational prod = inversions % 2 ? -1 : 1;
        for (std::size_t i = 0; i < n; ++i) prod *= m(i, perm[i]);
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

}  // namespace

TEST_CASE("reducer expresses vectors in inserted tags") {
    LinearReducer red;
    const Polynomial a = parse_polynomial("x1 + x2", 2);
    const Polynomial b = parse_polynomial("x1 - x2", 2);
    CHECK(red.insert(a, 0));
    CHECK(red.insert(b, 1));
    CHECK_FALSE(red.insert(a + b, 2));
    const auto r = red.reduce(parse_polynomial("x1", 2));
    CHECK(r.remainder.is_zero());
    CHECK(r.combination.at(0) == make_rational(1, 2));
    CHECK(r.combination.at(1) == make_rational(1, 2));
    CHECK_FALSE(red.contains(parse_polynomial("x1^2", 2)));
}

TEST_CASE("reducer combinations reproduce the input") {
    std::mt19937_64 rng(3);
    std::vector<Polynomial> inputs;
    LinearReducer red;
    for (std::size_t i = 0; i < 12; ++i) {
        inputs.push_back(random_polynomial(2, 3, 3, rng));
        red.insert(inputs.back(), i);
    }
    for (int t = 0; t < 10; ++t) {
        const Polynomial v = random_polynomial(2, 3, 4, rng);
        const auto r = red.reduce(v);
        Polynomial rebuilt = r.remainder;
        for (const auto& [tag, c] : r.combination) rebuilt += scale(inputs[tag], c);
        CHECK(rebuilt == v);
    }
}

TEST_CASE("rational determinant and inverse") {
    RationalMatrix a(3, 3, {2, 0, 1, 1, 3, 0, 0, make_rational(1, 2), 1});
    CHECK(a.determinant() == leibniz(a));
    auto inv = a.inverse();
    REQUIRE(inv.has_value());
    CHECK(a * *inv == RationalMatrix::identity(3));
    RationalMatrix s(2, 2, {1, 2, 2, 4});
    CHECK_FALSE(s.inverse().has_value());
}

TEST_CASE("bareiss determinant and adjugate on random polynomial matrices") {
    std::mt19937_64 rng(20240117);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t n = 2 + trial % 3;
        const PolyMatrix a = random_poly_matrix(n, 2, 2, rng);
        const CofactorData cd = bareiss_cofactors(a);
        if (cd.determinant.is_zero()) continue;
        PolyMatrix scalar(n, 2);
        for (std::size_t i = 0; i < n; ++i) scalar(i, i) = cd.determinant;
        CHECK(cd.adjugate * a == scalar);
        CHECK(a * cd.adjugate == scalar);
        std::uniform_int_distribution<int> d(-6, 6);
        for (int t = 0; t < 3; ++t) {
            const std::vector<Rational> p{make_rational(d(rng), 3), make_rational(d(rng), 2)};
            CHECK(evaluate(cd.determinant, p) == leibniz(evaluate_at(a, p)));
        }
    }
}

TEST_CASE("bareiss handles a zero leading pivot") {
    PolyMatrix a(2, 1);
    a(0, 1) = Polynomial::constant(1, 1);
    a(1, 0) = Polynomial::variable(1, 0);
    const CofactorData cd = bareiss_cofactors(a);
    CHECK(cd.determinant == scale(Polynomial::variable(1, 0), -1));
}

TEST_CASE("singular matrix gives zero determinant") {
    PolyMatrix a(2, 1);
    const Polynomial x = Polynomial::variable(1, 0);
    a(0, 0) = x;
    a(0, 1) = x * x;
    a(1, 0) = Polynomial::constant(1, 1);
    a(1, 1) = x;
    CHECK(bareiss_cofactors(a).determinant.is_zero());
}
