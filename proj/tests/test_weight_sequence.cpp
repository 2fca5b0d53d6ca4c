#include <doctest.h>

#include <cmath>

#include "carleman/error.hpp"
#include "carleman/weight_sequence.hpp"

using namespace carleman;

TEST_CASE("parse grammar") {
    CHECK(parse_sequence("constant").family() == Family::Constant);
    CHECK(parse_sequence("gevrey:1/2").parameter() == make_rational(1, 2));
    CHECK(parse_sequence("logpow:2").family() == Family::LogPower);
    CHECK(parse_sequence("qgevrey:2").family() == Family::QGevrey);
    CHECK(parse_sequence("table:[1,2,4,8]").table_values().size() == 4);
    CHECK(parse_sequence("gevrey:3/2").describe() == "gevrey:3/2");
    CHECK_THROWS_AS(parse_sequence("gevrey:x"), Error);
    CHECK_THROWS_AS(parse_sequence("bessel:1"), Error);
}

TEST_CASE("factory validation") {
    auto kind_of = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::NotDivisible;
    };
    CHECK(kind_of([] { WeightSequence::gevrey(0); }) == ErrorKind::ParameterOutOfRange);
    CHECK(kind_of([] { WeightSequence::q_gevrey(1); }) == ErrorKind::ParameterOutOfRange);
    CHECK(kind_of([] { WeightSequence::table({2, 3}); }) == ErrorKind::TableNotNormalized);
    CHECK(kind_of([] { WeightSequence::table({1, 3, 2}); }) == ErrorKind::ParameterOutOfRange);
}

TEST_CASE("values match direct computation") {
    const auto g = WeightSequence::gevrey(1);
    CHECK(g.exact_rational(5) == Rational(120));
    const auto q = WeightSequence::q_gevrey(make_rational(3, 2));
    CHECK(q.exact_rational(2) == make_rational(81, 16));
    const auto half = WeightSequence::gevrey(make_rational(1, 2));
    for (std::size_t k : {1u, 7u, 30u, 150u}) {
        const long double expected = 0.5L * std::lgamma(static_cast<long double>(k) + 1);
        CHECK(std::fabs(half.log_value(k) - expected) < 1e-9L * (1 + expected));
        const Interval iv = half.log_interval(k);
        CHECK(iv.lower() <= expected + 1e-12L);
        CHECK(iv.upper() >= expected - 1e-12L);
    }
    const auto lp = WeightSequence::log_power(2);
    for (std::size_t k : {1u, 10u, 100u}) {
        const long double kk = static_cast<long double>(k);
        const long double expected = 2 * kk * std::log(std::log(kk + std::exp(1.0L)));
        CHECK(std::fabs(lp.log_value(k) - expected) < 1e-9L * (1 + expected));
        CHECK(std::fabs(lp.log_ratio(k) - (lp.log_value(k + 1) - lp.log_value(k))) < 1e-9L);
    }
}

TEST_CASE("classification of the standard families") {
    auto c = classify(WeightSequence::gevrey(1), 200, 100000);
    CHECK(c.log_convex.status == Status::Holds);
    CHECK(c.derivation_closed.status == Status::Holds);
    CHECK(c.quasianalytic.status == Status::Fails);
    CHECK(c.strongly_regular.status == Status::Holds);

    c = classify(WeightSequence::constant(), 200, 100000);
    CHECK(c.quasianalytic.status == Status::Holds);
    CHECK(c.strongly_regular.status == Status::Fails);

    c = classify(WeightSequence::log_power(1), 200, 100000);
    CHECK(c.quasianalytic.status == Status::Holds);
    c = classify(WeightSequence::log_power(2), 200, 100000);
    CHECK(c.quasianalytic.status == Status::Fails);
    CHECK(c.strong_nonquasianalytic.status == Status::Fails);

    c = classify(WeightSequence::q_gevrey(2), 200, 100000);
    CHECK(c.strong_nonquasianalytic.status == Status::Holds);
    CHECK(c.moderate_growth.status == Status::Fails);
}

TEST_CASE("gevrey loss law") {
    const auto m = WeightSequence::gevrey(1);
    CHECK(loss_condition(m, WeightSequence::gevrey(2), 2).status == Status::Holds);
    CHECK(loss_condition(m, WeightSequence::gevrey(make_rational(3, 2)), 2).status == Status::Fails);
    CHECK(loss_condition(m, WeightSequence::gevrey(3), 3).status == Status::Holds);
    const auto n = minimal_loss_sequence(WeightSequence::gevrey(make_rational(1, 2)), 3);
    CHECK(n.describe() == "gevrey:3/2");
    CHECK(loss_condition(m, m, 1).status == Status::Holds);
}

TEST_CASE("loss sup estimate for identical gevrey exponents is bounded") {
    // (M_{2k}/N_k)^{1/k} with M_k = k!, N_k = (k!)^2 is (2k choose k)^{1/k} < 4
    const auto v = loss_condition(WeightSequence::gevrey(1), WeightSequence::gevrey(2), 2, 200);
    REQUIRE(v.log_estimate.has_value());
    CHECK(*v.log_estimate < std::log(4.0L));
    CHECK(*v.log_estimate > std::log(3.5L));
}

TEST_CASE("inclusion") {
    CHECK(inclusion_index(WeightSequence::gevrey(1), WeightSequence::gevrey(2)).status == Status::Holds);
    CHECK(inclusion_index(WeightSequence::gevrey(2), WeightSequence::gevrey(1)).status == Status::Fails);
    CHECK(inclusion_index(WeightSequence::log_power(1), WeightSequence::gevrey(1)).status == Status::Holds);
}

TEST_CASE("tables give evidence only") {
    const auto t = WeightSequence::table({1, 1, 2, 6, 24, 120, 720});
    CHECK(is_log_convex(t, 6).status == Status::Holds);
    CHECK(moderate_growth(t, 3).status == Status::EvidenceOnly);
    CHECK_THROWS_AS(is_log_convex(t, 20), Error);
    const auto bad = WeightSequence::table({1, 3, 4, 5});
    CHECK(is_log_convex(bad, 3).status == Status::Fails);
}

TEST_CASE("verdict json round trip") {
    const auto v = loss_condition(WeightSequence::gevrey(1), WeightSequence::gevrey(1), 2, 64);
    const auto j = to_json(v);
    CHECK(j.contains("condition"));
    CHECK(j.contains("status"));
    CHECK(j.contains("witness"));
    CHECK(j.contains("sup_estimate"));
    CHECK(j.contains("prefix_K"));
    CHECK(to_json(verdict_from_json(j)) == j);
    CHECK(v.trend_strictly_increasing());
}
