#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "antinorm/sampling.hpp"
#include "antinorm/tconorm.hpp"

#include <cmath>

using namespace antinorm;

TEST_CASE("unit values reject out-of-range input") {
    CHECK_THROWS_AS(UnitValue(1.5), std::invalid_argument);
    CHECK_THROWS_AS(UnitValue(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(UnitValue(std::nan("")), std::invalid_argument);
    CHECK(UnitValue(0.0).value() == 0.0);
    CHECK(UnitValue(1.0).value() == 1.0);
}

TEST_CASE("worked values of the shipped rules") {
    TConorm mx(TConormKind::Maximum);
    TConorm ps(TConormKind::ProbabilisticSum);
    TConorm bs(TConormKind::BoundedSum);

    CHECK(mx.apply_raw(0.3, 0.7) == 0.7);
    // 0.5 + 0.5 - 0.25 is exact in binary
    CHECK(ps.apply_raw(0.5, 0.5) == 0.75);
    CHECK(bs.apply_raw(0.6, 0.7) == 1.0);
    CHECK(bs.apply_raw(0.25, 0.5) == 0.75);
}

TEST_CASE("zero is a bitwise identity") {
    Sampler rng(11);
    for (TConormKind k : {TConormKind::Maximum, TConormKind::ProbabilisticSum,
                          TConormKind::BoundedSum}) {
        TConorm c(k);
        for (int i = 0; i < 2000; ++i) {
            double a = rng.unit();
            CHECK(c.apply_raw(a, 0.0) == a);
            CHECK(c.apply_raw(0.0, a) == a);
        }
    }
}

TEST_CASE("every shipped rule dominates the maximum") {
    Sampler rng(12);
    for (TConormKind k : {TConormKind::Maximum, TConormKind::ProbabilisticSum,
                          TConormKind::BoundedSum}) {
        TConorm c(k);
        for (int i = 0; i < 2000; ++i) {
            double a = rng.unit(), b = rng.unit();
            CHECK(c.apply_raw(a, b) >= std::max(a, b));
        }
    }
}

TEST_CASE("axiom sweep passes for the shipped rules") {
    for (TConormKind k : {TConormKind::Maximum, TConormKind::ProbabilisticSum,
                          TConormKind::BoundedSum}) {
        TConorm c(k);
        AxiomReport report = verify_tconorm_axioms(c, 10000, 7);
        CHECK(report.all_pass());
        for (const auto& check : report.checks) {
            INFO(check.id);
            CHECK(check.worst_violation == 0.0);
        }
        // Only regrouping may drift, and only within its allowance.
        const CheckResult* assoc = report.find("tconorm/associativity");
        REQUIRE(assoc != nullptr);
        CHECK(assoc->worst_drift <= 1e-12);
        for (const auto& check : report.checks) {
            if (check.id == "tconorm/associativity") continue;
            INFO(check.id);
            CHECK(check.worst_drift == 0.0);
        }
    }
}

TEST_CASE("the broken product is convicted with a replayable witness") {
    TConorm c(TConormKind::BrokenProduct);
    AxiomReport report = verify_tconorm_axioms(c, 10000, 7);
    CHECK_FALSE(report.all_pass());
    const CheckResult* identity = report.find("tconorm/identity");
    REQUIRE(identity != nullptr);
    CHECK_FALSE(identity->pass);
    REQUIRE(identity->witness.size() == 2);
    double a = identity->witness[0].value;
    double b = identity->witness[1].value;
    CHECK(b == 0.0);
    // Replaying the witness reproduces the reported gap exactly.
    CHECK(std::fabs(c.apply_raw(a, b) - a) == identity->worst_drift);
}

TEST_CASE("largest idempotent-style bound under a cap") {
    // Oracles, solved by hand per rule:
    //   maximum:           r <> r = r,          largest r with r <= cap is cap
    //   probabilistic sum: 2r - r^2 <= cap  <=>  r <= 1 - sqrt(1 - cap)
    //   bounded sum:       2r <= cap        <=>  r <= cap / 2
    TConorm mx(TConormKind::Maximum);
    TConorm ps(TConormKind::ProbabilisticSum);
    TConorm bs(TConormKind::BoundedSum);

    CHECK(find_idempotent_bound(mx, UnitValue(0.6)) == doctest::Approx(0.6).epsilon(1e-9));
    CHECK(find_idempotent_bound(ps, UnitValue(0.75)) ==
          doctest::Approx(1.0 - std::sqrt(1.0 - 0.75)).epsilon(1e-9));
    CHECK(find_idempotent_bound(bs, UnitValue(0.5)) == doctest::Approx(0.25).epsilon(1e-9));

    CHECK(find_idempotent_bound(mx, UnitValue(1.0)) == 1.0);
    CHECK(find_idempotent_bound(bs, UnitValue(0.0)) == doctest::Approx(0.0).epsilon(1e-9));

    // The returned point is certified, not merely close.
    for (TConorm* c : {&mx, &ps, &bs}) {
        double r = find_idempotent_bound(*c, UnitValue(0.42));
        CHECK(c->apply_raw(r, r) <= 0.42);
    }
}

TEST_CASE("an operand dominated by a level exists below the crossing") {
    TConorm mx(TConormKind::Maximum);
    TConorm ps(TConormKind::ProbabilisticSum);

    auto r = find_dominated_operand(mx, UnitValue(0.8), UnitValue(0.5));
    REQUIRE(r.has_value());
    CHECK(mx.apply_raw(*r, 0.5) < 0.8);
    CHECK(*r == doctest::Approx(0.8).epsilon(1e-9));

    // Oracle: r + 0.6 - 0.6 r < 0.9  <=>  r < 0.75
    auto r2 = find_dominated_operand(ps, UnitValue(0.9), UnitValue(0.6));
    REQUIRE(r2.has_value());
    CHECK(ps.apply_raw(*r2, 0.6) < 0.9);
    CHECK(*r2 == doctest::Approx(0.75).epsilon(1e-9));

    CHECK_THROWS_AS(find_dominated_operand(mx, UnitValue(0.5), UnitValue(0.5)),
                    std::invalid_argument);
}

TEST_CASE("names round-trip") {
    for (TConormKind k : {TConormKind::Maximum, TConormKind::ProbabilisticSum,
                          TConormKind::BoundedSum, TConormKind::BrokenProduct}) {
        auto back = tconorm_from_name(tconorm_name(k));
        REQUIRE(back.has_value());
        CHECK(*back == k);
    }
    CHECK_FALSE(tconorm_from_name("einstein-sum").has_value());
}
