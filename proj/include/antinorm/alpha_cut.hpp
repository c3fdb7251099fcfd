#pragma once

#include "antinorm/fuzzy_antinorm.hpp"

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace antinorm {

// Nonnegative real extended with a genuine +infinity. Comparisons go through
// IEEE infinity semantics (exact), never through large-float sentinels.
class ExtendedNonnegReal {
public:
    ExtendedNonnegReal() = default;  // zero

    static ExtendedNonnegReal finite(double v) {
        if (!(v >= 0.0) || v == std::numeric_limits<double>::infinity())
            throw std::invalid_argument("ExtendedNonnegReal: finite value must be >= 0");
        return ExtendedNonnegReal(v);
    }
    static ExtendedNonnegReal infinity() noexcept {
        return ExtendedNonnegReal(std::numeric_limits<double>::infinity());
    }

    bool is_finite() const noexcept { return v_ != std::numeric_limits<double>::infinity(); }

    // Possibly infinite; safe to compare, unsafe to feed arithmetic blindly.
    double value() const noexcept { return v_; }

    // Throws instead of leaking an infinity into plain arithmetic.
    double finite_value() const {
        if (!is_finite())
            throw std::domain_error("ExtendedNonnegReal: value is infinite");
        return v_;
    }

    friend auto operator<=>(ExtendedNonnegReal a, ExtendedNonnegReal b) = default;

private:
    explicit ExtendedNonnegReal(double v) : v_(v) {}
    double v_ = 0.0;
};

// The ascending family of crisp norms hiding inside a membership: at level
// alpha in (0,1), the infimum threshold where membership has dropped to
// 1-alpha. For profile-built memberships this is scale(alpha) * norm(x),
// with scale the generalized inverse of the profile at level 1-alpha:
//
//   reciprocal(k):  k alpha / (1 - alpha)
//   step:           1
//   exponential(l): -log1p(-alpha) / l
//   tabulated:      table walk
//
// Requires a monotone profile; a non-monotone table has no coherent
// threshold family and is rejected here (the axiom checker is the place
// that convicts it with a witness).
class AlphaNormFamily {
public:
    explicit AlphaNormFamily(FuzzyAntiNorm F);

    const FuzzyAntiNorm& source() const noexcept { return F_; }

    // Closed form (or table walk). Throws for alpha outside the open (0,1).
    double scale(double alpha) const;

    // Same quantity via bracketed bisection on the profile itself; the dual
    // route used to cross-check the closed form. 1e-10 relative bracket.
    double scale_by_bisection(double alpha) const;

    ExtendedNonnegReal alpha_norm(const Vector& x, double alpha) const;

    // Convenience: finite or throw. Profiles that decay to 0 always give
    // finite values; the throw is a guard, not a reachable path here.
    double alpha_norm_value(const Vector& x, double alpha) const;

    // Membership rebuilt from the family: infimum of 1-alpha over levels
    // whose norm is within t. Returns 1 for t <= 0 (and so for (theta, 0))
    // or when no level qualifies; 0 for the zero vector at t > 0. Bisection
    // on alpha, machine-converged (width caps at 200 iterations).
    double reconstruct(const Vector& x, double t) const;

    // Norm re-extracted from the rebuilt membership by bisection in t.
    double alpha_norm_via_reconstruction(const Vector& x, double alpha) const;

private:
    FuzzyAntiNorm F_;
};

// Threshold lemma evidence at one (x, alpha), x nonzero: membership at the
// extracted norm sits at the complementary level, and solving membership =
// 1-alpha in t recovers the norm. Requires a continuous strictly-decreasing
// shape; step-like profiles are refused (the inversion has no meaning).
struct LemmaCheck {
    double alpha = 0.0;
    double norm_value = 0.0;          // extracted threshold norm
    double membership_at_norm = 0.0;  // must equal 1-alpha within 1e-8
    double solved_threshold = 0.0;    // t with membership = 1-alpha, bisected
    double equality_gap = 0.0;        // |membership_at_norm - (1-alpha)|
    double inversion_gap = 0.0;       // |solved_threshold - norm_value|
    bool pass = false;
};
LemmaCheck verify_alpha_lemmas(const AlphaNormFamily& A, const Vector& x,
                               double alpha);

struct RoundTripSample {
    int x_id = 0;
    double t = 0.0;
    double nu = 0.0;
    double nu_rebuilt = 0.0;
    double error = 0.0;
};

// Rebuild membership from the family on a sampled (x, t) grid and compare
// with the original. Jump shapes are admitted but flagged: equality can
// break exactly at the jump threshold, a measure-zero set the sampler
// avoids almost surely.
struct RoundTripResult {
    double sup_error = 0.0;
    bool continuity_caveat = false;
    std::vector<RoundTripSample> grid;
};
RoundTripResult round_trip_error(const AlphaNormFamily& A, int x_samples,
                                 int t_samples, std::uint64_t seed);

// Norms along a monotone level schedule closing on alpha:
// alpha_n = alpha -/+ alpha(1-/+alpha)/n^2, staying inside (0,1).
// error_at_n_max = |norm at alpha_{n_max} - norm at alpha|.
struct ContinuityProbe {
    double alpha = 0.0;
    bool increasing = false;
    long n_max = 0;
    double error_at_n_max = 0.0;
    bool trivial = false;  // constant-scale families (step): error is identically 0
    std::vector<std::pair<long, double>> trace;  // (n, error) at decade marks
};
ContinuityProbe alpha_continuity_probe(const AlphaNormFamily& A, const Vector& x,
                                       double alpha, long n_max, bool increasing);

// Family -> membership -> family: re-extract norms through reconstruct and
// report the worst absolute gap over sampled (x, alpha). Levels are drawn
// from [0.01, 0.99]: as alpha -> 1 the profile tail flattens and the
// comparison would measure only bisection noise amplified by 1/|f'|.
struct FamilyRoundTrip {
    long samples = 0;
    double sup_error = 0.0;
    double worst_alpha = 0.0;
    bool pass = false;  // sup_error <= 1e-6
};
FamilyRoundTrip family_round_trip(const AlphaNormFamily& A, int samples,
                                  std::uint64_t seed);

// The sub-level set of membership at threshold 1 and level 1-alpha equals
// the closed ball of the level norm with radius 1: box samples agree on the
// two indicator functions outside a 1e-8 boundary band, and directional
// boundary probes measure the bounding radius 1/scale(alpha).
struct UnitBallCheck {
    long samples = 0;
    long disagreements = 0;       // outside the boundary band; must be 0
    double measured_radius = 0.0; // largest base norm among in-set samples
    double expected_radius = 0.0; // 1 / scale(alpha)
    double radius_gap = 0.0;
    bool pass = false;
};
UnitBallCheck unit_anti_ball_identity(const AlphaNormFamily& A, double alpha,
                                      long samples, std::uint64_t seed);

} // namespace antinorm
