#include <doctest.h>

#include <random>

#include "carleman/error.hpp"
#include "carleman/polynomial.hpp"

using namespace carleman;

namespace {

std::vector<Rational> random_point(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-7, 7), den(1, 5);
    std::vector<Rational> p;
    for (std::size_t i = 0; i < n; ++i) p.push_back(make_rational(num(rng), den(rng)));
    return p;
}

}  // namespace

TEST_CASE("parse and print") {
    const Polynomial f = parse_polynomial("3/2*x1^2*x2 - x3 + 4");
    CHECK(f.nvars() == 3);
    CHECK(to_string(f) == "3/2*x1^2*x2 - x3 + 4");
    CHECK(parse_polynomial("x2*x1 + x1*x2") == parse_polynomial("2*x1*x2"));
    CHECK_THROWS_AS(parse_polynomial("(x1 + x2)^2"), Error);
    CHECK(to_string(Polynomial(2)) == "0");
    CHECK_THROWS_AS(parse_polynomial("x1 +"), Error);
    CHECK_THROWS_AS(parse_polynomial("x4", 2), Error);
}

TEST_CASE("grlex order puts x1 first") {
    GrlexLess less;
    CHECK(less({0, 1}, {1, 0}));
    CHECK(less({1, 1}, {0, 3}));
    CHECK(parse_polynomial("x2 + x1^2").leading_exponents() == Exponents{2, 0});
}

TEST_CASE("json round trip") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        const Polynomial f = random_polynomial(3, 5, 8, rng);
        CHECK(polynomial_from_json(to_json(f), 3) == f);
        CHECK(parse_polynomial(to_string(f), 3) == f);
    }
}

TEST_CASE("ring operations agree with evaluation") {
    std::mt19937_64 rng(20240117);
    for (int trial = 0; trial < 40; ++trial) {
        const Polynomial f = random_polynomial(3, 4, 6, rng);
        const Polynomial g = random_polynomial(3, 4, 6, rng);
        const auto p = random_point(3, rng);
        const Rational fp = evaluate(f, p), gp = evaluate(g, p);
        CHECK(evaluate(f + g, p) == fp + gp);
        CHECK(evaluate(f - g, p) == fp - gp);
        CHECK(evaluate(f * g, p) == fp * gp);
        Rational cube = fp * fp * fp;
        CHECK(evaluate(pow(f, 3), p) == cube);
    }
}

TEST_CASE("exact division") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const Polynomial q = random_polynomial(2, 4, 5, rng);
        Polynomial g = random_polynomial(2, 3, 4, rng);
        if (g.is_zero()) continue;
        const Polynomial f = q * g;
        auto r = try_divide(f, g);
        REQUIRE(r.has_value());
        CHECK(*r == q);
    }
    const Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
    CHECK_FALSE(try_divide(x * x + y, x - y).has_value());
    CHECK_THROWS_AS(divide_exact(x + y, x - y), Error);
}

TEST_CASE("composition and linear substitution") {
    std::mt19937_64 rng(8);
    const Polynomial f = random_polynomial(2, 4, 6, rng);
    const std::vector<Polynomial> gs{parse_polynomial("x1 + x2", 2), parse_polynomial("x1*x2", 2)};
    const Polynomial h = compose(f, gs);
    for (int t = 0; t < 10; ++t) {
        auto p = random_point(2, rng);
        const std::vector<Rational> inner{p[0] + p[1], p[0] * p[1]};
        CHECK(evaluate(h, p) == evaluate(f, inner));
    }
    // (f o A)(v) = f(A v)
    RationalMatrix a(2, 2, {1, 2, make_rational(-1, 3), 0});
    const Polynomial fa = substitute_linear(f, a);
    for (int t = 0; t < 10; ++t) {
        auto p = random_point(2, rng);
        const std::vector<Rational> av{p[0] + 2 * p[1], make_rational(-1, 3) * p[0]};
        CHECK(evaluate(fa, p) == evaluate(f, av));
    }
}

TEST_CASE("derivatives and homogeneous parts") {
    const Polynomial f = parse_polynomial("x1^3*x2 + 5*x2^2 - x1");
    CHECK(partial_derivative(f, 0) == parse_polynomial("3*x1^2*x2 - 1", 2));
    CHECK(partial_derivative(f, 1) == parse_polynomial("x1^3 + 10*x2", 2));
    CHECK(homogeneous_part(f, 2) == parse_polynomial("5*x2^2", 2));
    CHECK(homogeneous_components(f).size() == 3);
    CHECK(primitive_part(parse_polynomial("-4/3*x1 + 2*x2")) == parse_polynomial("2*x1 - 3*x2"));
}

TEST_CASE("monomials of a degree") {
    // C(d + n - 1, n - 1)
    CHECK(monomials_of_degree(3, 4).size() == 15);
    CHECK(monomials_of_degree(2, 0).size() == 1);
}
