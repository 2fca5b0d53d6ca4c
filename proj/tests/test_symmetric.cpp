#include <doctest.h>

#include <random>

#include "carleman/error.hpp"
#include "carleman/invariant_theory.hpp"
#include "carleman/symmetric.hpp"

using namespace carleman;

namespace {

std::vector<Rational> random_point(std::size_t n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
    std::vector<Rational> p;
    for (std::size_t i = 0; i < n; ++i) p.push_back(make_rational(num(rng), den(rng)));
    return p;
}

// Elementary symmetric values at a point via the product prod (1 + x_i t).
std::vector<Rational> elementary_values(const std::vector<Rational>& p) {
    std::vector<Rational> e{1};
    for (const auto& x : p) {
        e.push_back(0);
        for (std::size_t i = e.size() - 1; i > 0; --i) e[i] += x * e[i - 1];
    }
    return {e.begin() + 1, e.end()};
}

}  // namespace

TEST_CASE("newton identity in three variables") {
    const Polynomial p3 = newton_power_sum(3, 3);
    CHECK(to_string(rewrite_symmetric(p3), "s") == "s1^3 - 3*s1*s2 + 3*s3");
    CHECK(to_string(rewrite_symmetric(p3, SymmetricBasis::Newton), "u") == "u3");
    CHECK(to_string(rewrite_symmetric(elementary_symmetric(3, 2), SymmetricBasis::Newton), "u") == "1/2*u1^2 - 1/2*u2");
}

TEST_CASE("rewrite agrees with pointwise evaluation") {
    std::mt19937_64 rng(20240117);
    const auto g = builtin_group("sym:4");
    for (int t = 0; t < 10; ++t) {
        const Polynomial f = reynolds(random_polynomial(4, 5, 5, rng), g);
        const Polynomial big_f = rewrite_symmetric(f);
        const auto p = random_point(4, rng);
        CHECK(evaluate(big_f, elementary_values(p)) == evaluate(f, p));
        const Polynomial big_u = rewrite_symmetric(f, SymmetricBasis::Newton);
        std::vector<Rational> powers;
        for (int k = 1; k <= 4; ++k) {
            Rational s = 0;
            for (const auto& x : p) {
                Rational xk = 1;
                for (int i = 0; i < k; ++i) xk *= x;
                s += xk;
            }
            powers.push_back(s);
        }
        CHECK(evaluate(big_u, powers) == evaluate(f, p));
        CHECK(change_basis(big_f, SymmetricBasis::Elementary, SymmetricBasis::Newton) == big_u);
    }
}

TEST_CASE("non-symmetric input is rejected") {
    CHECK_THROWS_AS(rewrite_symmetric(parse_polynomial("x1 + 2*x2")), Error);
    CHECK_THROWS_AS(elementary_symmetric(3, 4), Error);
    CHECK_THROWS_AS(block_rewrite(parse_polynomial("x1 + x3", 4), {2, 2}), Error);
}

TEST_CASE("block rewrite") {
    const Polynomial f = parse_polynomial("x1*x2 + x3^2 + x4^2");
    const Polynomial big_f = block_rewrite(f, {2, 2});
    CHECK(compose(big_f, block_generators({2, 2})) == f);
}

TEST_CASE("bronshtein operator identity holds for A_{n-1} applied first") {
    for (std::size_t n : {2u, 3u}) {
        const auto g = builtin_group("sym:" + std::to_string(n));
        std::mt19937_64 rng(n);
        for (int t = 0; t < 4; ++t) {
            const Polynomial f = reynolds(random_polynomial(n, 5, 4, rng), g);
            for (const auto& c : bronshtein_check(f)) CHECK(c.ascending_ok);
            for (std::size_t k = 1; k <= n; ++k)
                CHECK(bronshtein_partial(f, k, OperatorOrder::AscendingProduct) == newton_partial_oracle(f, k));
        }
    }
}

TEST_CASE("divided difference base case") {
    // A_1 h = (h(x1, x2) - h(x2, x1)) / (x1 - x2) up to the integral normalization
    const Polynomial h = parse_polynomial("x1^2", 2);
    const Polynomial a = bronshtein_A(h, 1);
    CHECK(a == parse_polynomial("x1 + x2", 2));
}

TEST_CASE("necessity report for gevrey 1") {
    const auto r = necessity_report(WeightSequence::gevrey(1), 3, 5, 40);
    REQUIRE(r.rows.size() == 5);
    CHECK(r.all_certified());
    // m! M_{3m} / 2^m at m = 1 is 3! / 2
    CHECK(r.rows[0].lower_bound.lower() <= 3.0L);
    CHECK(r.rows[0].lower_bound.upper() >= 3.0L);
    CHECK_THROWS_AS(necessity_report(WeightSequence::gevrey(1), 2, 3, 40), Error);
    const auto j = to_json(r);
    CHECK(j["rows"].size() == 5);
    CHECK(j["all_certified"] == true);
}
