#include "antinorm/fuzzy_antinorm.hpp"

#include "antinorm/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>

namespace antinorm {

FuzzyAntiNorm::FuzzyAntiNorm(VectorSpaceSpec space, DecayProfile profile, TConorm conorm)
    : space_(std::move(space)), profile_(std::move(profile)), conorm_(conorm) {}

double FuzzyAntiNorm::evaluate(const Vector& x, double t) const {
    space_.require_dimension(x, "evaluate");
    if (std::isnan(t))
        throw std::invalid_argument("evaluate: t is NaN");
    if (t <= 0.0) return 1.0;
    if (space_.is_zero(x)) return 0.0;
    return profile_(t / space_.norm(x));
}

std::string FuzzyAntiNorm::describe() const {
    return "membership on " + space_.describe() + " | profile " + profile_.describe() +
           " | conorm " + conorm_.name();
}

std::uint64_t FuzzyAntiNorm::fingerprint() const {
    return fnv1a64(describe());
}

namespace {

// Order-preserving integer image of a nonnegative finite double; adjacent
// representable values map to adjacent integers.
std::int64_t ordered_bits(double v) {
    std::int64_t b;
    std::memcpy(&b, &v, sizeof b);
    return b;
}

double ulp_distance(double a, double b) {
    std::int64_t ka = ordered_bits(a), kb = ordered_bits(b);
    return static_cast<double>(ka > kb ? ka - kb : kb - ka);
}

std::vector<WitnessValue> vector_witness(const Vector& x, const char* prefix) {
    std::vector<WitnessValue> out;
    for (Eigen::Index i = 0; i < x.size(); ++i)
        out.push_back({std::string(prefix) + std::to_string(i), x[i]});
    return out;
}

void append(std::vector<WitnessValue>& w, std::vector<WitnessValue> more) {
    for (auto& v : more) w.push_back(std::move(v));
}

} // namespace

AxiomReport verify_antinorm_axioms(const FuzzyAntiNorm& F, long sample_count,
                                   std::uint64_t seed) {
    if (sample_count < 1)
        throw std::invalid_argument("verify_antinorm_axioms: sample_count must be >= 1");

    AxiomReport report;
    report.subject = F.describe();
    report.seed = seed;
    Sampler base(seed);

    const int n = F.space().dimension();
    const DecayProfile& profile = F.profile();
    const bool pointwise_strict = profile.kind() == ProfileKind::Reciprocal ||
                                  profile.kind() == ProfileKind::Exponential;

    {
        CheckResult r;
        r.id = "antinorm/boundary";
        r.samples = sample_count;
        Sampler rng = base.fork(r.id);
        for (long i = 0; i < sample_count; ++i) {
            Vector x = sample_box(rng, n, 2.0);
            double t = (i % 7 == 0) ? 0.0 : -rng.log_range(1e-6, 1e6);
            double gap = std::fabs(F.evaluate(x, t) - 1.0);
            if (gap > r.worst_drift) {
                r.worst_drift = gap;
                r.witness = vector_witness(x, "x");
                r.witness.push_back({"t", t});
            }
        }
        r.worst_violation = r.worst_drift;
        r.pass = r.worst_violation == 0.0;
        report.checks.push_back(std::move(r));
    }

    {
        CheckResult r;
        r.id = "antinorm/zero-detection";
        r.samples = sample_count;
        Sampler rng = base.fork(r.id);
        const Vector theta = Vector::Zero(n);
        // The probe window keeps strict shapes representable-positive; the
        // exponential tail underflows past u ~ 700/lambda and would turn a
        // mathematically positive membership into a stored zero.
        double u_hi = 1e2;
        if (profile.kind() == ProfileKind::Exponential)
            u_hi = std::min(u_hi, 600.0 / profile.parameter());
        for (long i = 0; i < sample_count; ++i) {
            double t = rng.log_range(1e-9, 1e9);
            double at_zero = F.evaluate(theta, t);
            if (at_zero > r.worst_drift) {
                r.worst_drift = at_zero;
                r.witness = {{"t", t}};
            }
            if (pointwise_strict) {
                Vector x = sample_nonzero(rng, n, 2.0);
                double tp = rng.log_range(1e-3, u_hi) * F.space().norm(x);
                double v = F.evaluate(x, tp);
                if (v <= 0.0) {
                    r.worst_drift = std::max(r.worst_drift, 1.0);
                    r.witness = vector_witness(x, "x");
                    r.witness.push_back({"t", tp});
                }
            }
        }
        if (!pointwise_strict) {
            // Shapes that reach 0 at a finite threshold: only demand the
            // membership is not identically zero inside the support.
            double u_in = 0.5;
            auto knots = profile.natural_knots();
            if (!knots.empty()) u_in = std::min(u_in, knots.front() / 2.0);
            Vector x = sample_nonzero(rng, n, 2.0);
            double v = F.evaluate(x, u_in * F.space().norm(x));
            if (v <= 0.0) {
                r.worst_drift = std::max(r.worst_drift, 1.0);
                r.witness = vector_witness(x, "x");
                r.witness.push_back({"u", u_in});
            }
            r.caveat = "shape reaches zero at a finite threshold; positivity "
                       "checked inside the support only";
        }
        r.worst_violation = r.worst_drift;
        r.pass = r.worst_violation == 0.0;
        report.checks.push_back(std::move(r));
    }

    {
        CheckResult r;
        r.id = "antinorm/scaling";
        r.samples = sample_count;
        Sampler rng = base.fork(r.id);
        // Power-of-two scalars must commute bit-for-bit for the euclidean
        // and maximum base norms; everything else gets an ulp envelope. For
        // positive thresholds the drift is measured on the normalized
        // argument t / norm: equal arguments give equal memberships by
        // construction, while a steep profile would stretch a one-ulp
        // argument gap into arbitrarily many output ulps.
        const bool exact_kind = F.space().norm_kind() != BaseNormKind::PNorm;
        const double envelope = exact_kind ? 4.0 : 8.0;
        if (!exact_kind)
            r.caveat = "p-norm powers round scalar factors; the ulp envelope "
                       "applies to every scalar including powers of two";
        for (long i = 0; i < sample_count; ++i) {
            Vector x = sample_nonzero(rng, n, 2.0);
            double t = rng.log_range(1e-3, 1e3);
            if (i % 11 == 0) t = -t;
            bool pow2 = rng.coin();
            double mag = pow2 ? std::ldexp(1.0, static_cast<int>(rng.below(17)) - 8)
                              : rng.log_range(1e-3, 1e3);
            double c = rng.coin() ? mag : -mag;
            const Vector cx = c * x;
            double lhs, rhs;
            if (t > 0.0) {
                lhs = t / F.space().norm(cx);
                rhs = (t / std::fabs(c)) / F.space().norm(x);
            } else {
                lhs = F.evaluate(cx, t);
                rhs = F.evaluate(x, t / std::fabs(c));
            }
            double dist = ulp_distance(lhs, rhs);
            double allowed = (pow2 && exact_kind) ? 0.0 : envelope;
            double excess = std::max(0.0, dist - allowed);
            if (dist > r.worst_drift) r.worst_drift = dist;
            if (excess > r.worst_violation) {
                r.worst_violation = excess;
                r.witness = vector_witness(x, "x");
                r.witness.push_back({"c", c});
                r.witness.push_back({"t", t});
            }
        }
        r.pass = r.worst_violation == 0.0;
        report.checks.push_back(std::move(r));
    }

    {
        CheckResult r;
        r.id = "antinorm/subadditivity";
        r.samples = sample_count;
        Sampler rng = base.fork(r.id);
        const TConorm& c = F.conorm();
        // Both sides are rounded independently (the probabilistic sum in
        // particular re-rounds a near-1 aggregate), so the inequality gets
        // the same 1e-12 absolute allowance as associativity.
        const double allowed = 1e-12;
        for (long i = 0; i < sample_count; ++i) {
            Vector x = sample_box(rng, n, 2.0);
            Vector y = sample_box(rng, n, 2.0);
            double s = rng.log_range(1e-3, 1e3);
            double t = rng.log_range(1e-3, 1e3);
            if (i % 10 == 0) s = -s;
            double lhs = F.evaluate(x + y, s + t);
            double rhs = c.apply_raw(F.evaluate(x, s), F.evaluate(y, t));
            double gap = std::max(lhs - rhs, 0.0);
            if (gap > r.worst_drift) r.worst_drift = gap;
            double excess = std::max(gap - allowed, 0.0);
            if (excess > r.worst_violation) {
                r.worst_violation = excess;
                r.witness = vector_witness(x, "x");
                append(r.witness, vector_witness(y, "y"));
                r.witness.push_back({"s", s});
                r.witness.push_back({"t", t});
            }
        }
        r.pass = r.worst_violation == 0.0;
        report.checks.push_back(std::move(r));
    }

    {
        CheckResult r;
        r.id = "antinorm/vanishing";
        r.samples = sample_count;
        Sampler rng = base.fork(r.id);
        for (long i = 0; i < sample_count; ++i) {
            Vector x = sample_nonzero(rng, n, 2.0);
            double nx = F.space().norm(x);
            double v10 = F.evaluate(x, std::ldexp(nx, 10));
            double v20 = F.evaluate(x, std::ldexp(nx, 20));
            double v30 = F.evaluate(x, std::ldexp(nx, 30));
            double worst = std::max({v20 - 1e-3, v30 - 1e-6, v20 - v10, v30 - v20, 0.0});
            if (worst > r.worst_drift) {
                r.worst_drift = worst;
                r.witness = vector_witness(x, "x");
                r.witness.push_back({"v10", v10});
                r.witness.push_back({"v20", v20});
                r.witness.push_back({"v30", v30});
            }
        }
        r.worst_violation = r.worst_drift;
        r.pass = r.worst_violation == 0.0;
        report.checks.push_back(std::move(r));
    }

    {
        CheckResult r;
        r.id = "antinorm/monotone-in-t";
        r.samples = sample_count;
        Sampler rng = base.fork(r.id);
        for (long i = 0; i < sample_count; ++i) {
            Vector x = sample_nonzero(rng, n, 2.0);
            double nx = F.space().norm(x);
            double u1 = rng.log_range(1e-3, 1e3);
            double u2 = rng.log_range(1e-3, 1e3);
            if (u2 < u1) std::swap(u1, u2);
            double t1 = u1 * nx, t2 = u2 * nx;
            double rise = F.evaluate(x, t2) - F.evaluate(x, t1);
            if (rise > r.worst_drift) {
                r.worst_drift = rise;
                r.witness = vector_witness(x, "x");
                r.witness.push_back({"t1", t1});
                r.witness.push_back({"t2", t2});
            }
        }
        r.worst_drift = std::max(r.worst_drift, 0.0);
        r.worst_violation = r.worst_drift;
        r.pass = r.worst_violation == 0.0;
        report.checks.push_back(std::move(r));
    }

    {
        ConditionFlag f;
        f.id = "condition/membership-reaches-one";
        double f10 = profile(std::ldexp(1.0, -10));
        double f20 = profile(std::ldexp(1.0, -20));
        double f30 = profile(std::ldexp(1.0, -30));
        f.satisfied = f30 > 1.0 - 1e-6 && f10 <= f20 && f20 <= f30;
        f.witness = {{"f(2^-10)", f10}, {"f(2^-20)", f20}, {"f(2^-30)", f30}};
        if (!f.satisfied)
            f.note = "membership does not approach 1 toward small thresholds; "
                     "sub-unit membership then fails to single out the zero vector";
        report.flags.push_back(std::move(f));
    }

    {
        ConditionFlag f;
        f.id = "condition/strict-inversion";
        f.satisfied = profile.strictly_invertible();
        if (!f.satisfied) {
            f.note = "shape is not continuous and strictly decreasing across "
                     "fuzzy levels; threshold inversion is unavailable";
            auto knots = profile.natural_knots();
            if (!knots.empty()) {
                double u = knots.front();
                f.witness = {{"u", u},
                             {"f(u)", profile(u)},
                             {"f(u+)", profile(std::nextafter(u, 2.0 * u))}};
            }
        }
        report.flags.push_back(std::move(f));
    }

    return report;
}

FuzzyAntiNorm combine_max(const FuzzyAntiNorm& a, const FuzzyAntiNorm& b,
                          int grid_points) {
    if (!(a.space() == b.space()))
        throw std::invalid_argument("combine_max: memberships live on different spaces");
    if (a.conorm().kind() != b.conorm().kind())
        throw std::invalid_argument("combine_max: aggregation rules differ");
    if (grid_points < 2)
        throw std::invalid_argument("combine_max: need at least 2 grid points");

    // Geometric cover of the working range. Kink abscissas of both shapes
    // enter twice, the point and its right neighbor, so a jump survives
    // tabulation as a one-ulp-wide segment instead of a long ramp.
    const double lo = 1e-6, hi = 1e6;
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(grid_points) + 16);
    for (int i = 0; i < grid_points; ++i)
        grid.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (grid_points - 1)));
    for (const DecayProfile* p : {&a.profile(), &b.profile()})
        for (double u : p->natural_knots()) {
            if (u <= 0.0) continue;
            grid.push_back(u);
            grid.push_back(std::nextafter(u, hi > u ? hi : 2.0 * u));
        }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    std::vector<ProfileKnot> knots;
    knots.reserve(grid.size());
    for (double u : grid)
        knots.push_back({u, std::max(a.profile()(u), b.profile()(u))});

    return FuzzyAntiNorm(a.space(), DecayProfile::tabulated(std::move(knots)), a.conorm());
}

} // namespace antinorm
