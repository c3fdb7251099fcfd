#include "antinorm/tconorm.hpp"

#include "antinorm/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace antinorm {

const char* tconorm_name(TConormKind k) noexcept {
    switch (k) {
    case TConormKind::Maximum:          return "maximum";
    case TConormKind::ProbabilisticSum: return "probabilistic-sum";
    case TConormKind::BoundedSum:       return "bounded-sum";
    case TConormKind::BrokenProduct:    return "broken-product";
    }
    return "unknown";
}

std::optional<TConormKind> tconorm_from_name(std::string_view name) noexcept {
    if (name == "maximum") return TConormKind::Maximum;
    if (name == "probabilistic-sum") return TConormKind::ProbabilisticSum;
    if (name == "bounded-sum") return TConormKind::BoundedSum;
    if (name == "broken-product") return TConormKind::BrokenProduct;
    return std::nullopt;
}

double TConorm::apply_raw(double a, double b) const noexcept {
    switch (kind_) {
    case TConormKind::Maximum:
        return a > b ? a : b;
    case TConormKind::ProbabilisticSum: {
        // a + b - a*b keeps apply(a, 0) == a bitwise, which the factored
        // form 1 - (1-a)(1-b) would not. The price is a possible one-step
        // overshoot past 1 from the final subtraction; fold it back.
        double r = a + b - a * b;
        return r > 1.0 ? 1.0 : r;
    }
    case TConormKind::BoundedSum: {
        double r = a + b;
        return r > 1.0 ? 1.0 : r;
    }
    case TConormKind::BrokenProduct:
        return a * b;
    }
    return 0.0;
}

UnitValue TConorm::apply(UnitValue a, UnitValue b) const {
    return UnitValue(apply_raw(a.value(), b.value()));
}

namespace {

std::vector<WitnessValue> witness2(double a, double b) {
    return {{"a", a}, {"b", b}};
}

std::vector<WitnessValue> witness3(double a, double b, double c) {
    return {{"a", a}, {"b", b}, {"c", c}};
}

} // namespace

AxiomReport verify_tconorm_axioms(const TConorm& c, long sample_count,
                                  std::uint64_t seed) {
    if (sample_count < 1)
        throw std::invalid_argument("verify_tconorm_axioms: sample_count must be >= 1");

    AxiomReport report;
    report.subject = std::string("t-conorm ") + c.name();
    report.seed = seed;
    Sampler base(seed);

    {
        CheckResult r;
        r.id = "tconorm/range";
        r.samples = sample_count;
        Sampler rng = base.fork(r.id);
        for (long i = 0; i < sample_count; ++i) {
            double a = rng.unit(), b = rng.unit();
            double v = c.apply_raw(a, b);
            double out = std::max(std::max(0.0 - v, v - 1.0), 0.0);
            if (out > r.worst_drift) {
                r.worst_drift = out;
                r.witness = witness2(a, b);
            }
        }
        r.worst_violation = r.worst_drift;
        r.pass = r.worst_violation == 0.0;
        report.checks.push_back(std::move(r));
    }

    {
        CheckResult r;
        r.id = "tconorm/commutativity";
        r.samples = sample_count;
        Sampler rng = base.fork(r.id);
        for (long i = 0; i < sample_count; ++i) {
            double a = rng.unit(), b = rng.unit();
            double gap = std::fabs(c.apply_raw(a, b) - c.apply_raw(b, a));
            if (gap > r.worst_drift) {
                r.worst_drift = gap;
                r.witness = witness2(a, b);
            }
        }
        r.worst_violation = r.worst_drift;
        r.pass = r.worst_violation == 0.0;
        report.checks.push_back(std::move(r));
    }

    {
        CheckResult r;
        r.id = "tconorm/associativity";
        r.samples = sample_count;
        Sampler rng = base.fork(r.id);
        for (long i = 0; i < sample_count; ++i) {
            double a = rng.unit(), b = rng.unit(), d = rng.unit();
            double lhs = c.apply_raw(c.apply_raw(a, b), d);
            double rhs = c.apply_raw(a, c.apply_raw(b, d));
            double gap = std::fabs(lhs - rhs);
            if (gap > r.worst_drift) {
                r.worst_drift = gap;
                r.witness = witness3(a, b, d);
            }
        }
        // Regrouping the probabilistic sum rounds differently; 1e-12
        // absolute drift is the documented allowance.
        r.worst_violation = std::max(0.0, r.worst_drift - 1e-12);
        r.pass = r.worst_violation == 0.0;
        report.checks.push_back(std::move(r));
    }

    {
        CheckResult r;
        r.id = "tconorm/identity";
        r.samples = sample_count;
        Sampler rng = base.fork(r.id);
        for (long i = 0; i < sample_count; ++i) {
            double a = rng.unit();
            double gap = std::fabs(c.apply_raw(a, 0.0) - a);
            if (gap > r.worst_drift) {
                r.worst_drift = gap;
                r.witness = witness2(a, 0.0);
            }
        }
        r.worst_violation = r.worst_drift;
        r.pass = r.worst_violation == 0.0;
        report.checks.push_back(std::move(r));
    }

    {
        CheckResult r;
        r.id = "tconorm/monotonicity";
        r.samples = sample_count;
        Sampler rng = base.fork(r.id);
        for (long i = 0; i < sample_count; ++i) {
            double a = rng.unit();
            double a2 = a + (1.0 - a) * rng.unit();  // a2 >= a
            double b = rng.unit();
            double dip = c.apply_raw(a, b) - c.apply_raw(a2, b);
            if (dip > r.worst_drift) {
                r.worst_drift = dip;
                r.witness = {{"a", a}, {"a2", a2}, {"b", b}};
            }
        }
        r.worst_violation = r.worst_drift;
        r.pass = r.worst_violation == 0.0;
        report.checks.push_back(std::move(r));
    }

    return report;
}

double find_idempotent_bound(const TConorm& c, UnitValue bound) {
    const double b = bound.value();
    if (c.apply_raw(1.0, 1.0) <= b) return 1.0;
    // Invariant: lo<>lo <= b < hi<>hi. r -> r<>r is monotone, so the
    // certified-from-below endpoint converges to the largest qualifying r.
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200 && hi - lo > 1e-13; ++i) {
        double mid = 0.5 * (lo + hi);
        if (c.apply_raw(mid, mid) <= b)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

std::optional<double> find_dominated_operand(const TConorm& c, UnitValue r1,
                                             UnitValue r2) {
    const double hi_level = r1.value();
    const double fixed = r2.value();
    if (!(fixed < hi_level))
        throw std::invalid_argument("find_dominated_operand: needs r2 < r1");
    // 0 <> r2 = r2 < r1 for any rule honoring the identity; a rule that
    // fails even that has no dominated operand to offer.
    if (!(c.apply_raw(0.0, fixed) < hi_level)) return std::nullopt;
    if (c.apply_raw(1.0, fixed) < hi_level) return 1.0;
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200 && hi - lo > 1e-13; ++i) {
        double mid = 0.5 * (lo + hi);
        if (c.apply_raw(mid, fixed) < hi_level)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

} // namespace antinorm
