#pragma once

#include "antinorm/decay_profile.hpp"
#include "antinorm/report.hpp"
#include "antinorm/tconorm.hpp"
#include "antinorm/vector_space.hpp"

#include <cstdint>
#include <string>

namespace antinorm {

// Graded assertion "x is at least t-large": membership 1 for t <= 0, 0 for
// the zero vector at positive t, and profile(t / norm(x)) otherwise. Small
// membership at t means the vector's size is confidently below t.
//
// Building the membership from a profile of t / norm(x) makes the scaling
// law nu(c x, t) = nu(x, t / |c|) structural rather than approximate: both
// sides reduce to one division feeding the same profile.
class FuzzyAntiNorm {
public:
    FuzzyAntiNorm(VectorSpaceSpec space, DecayProfile profile, TConorm conorm);

    const VectorSpaceSpec& space() const noexcept { return space_; }
    const DecayProfile& profile() const noexcept { return profile_; }
    const TConorm& conorm() const noexcept { return conorm_; }

    double evaluate(const Vector& x, double t) const;

    std::string describe() const;
    std::uint64_t fingerprint() const;  // digest of describe(), for plumbing checks

private:
    VectorSpaceSpec space_;
    DecayProfile profile_;
    TConorm conorm_;
};

// Seeded sweep over the membership axioms plus the auxiliary hypotheses.
//
// Checks (counted in all_pass):
//   boundary:          nu(x, t) = 1 for t <= 0, exactly
//   zero-detection:    nu(theta, t) = 0 for t > 0 exactly; nonzero vectors
//                      keep positive membership (pointwise for strict
//                      shapes, not-identically-zero with a caveat for
//                      shapes that reach 0 at a finite threshold)
//   scaling:           nu(cx, t) against nu(x, t/|c|), compared through the
//                      normalized profile argument: bit-for-bit under
//                      power-of-two scalars, 4-ulp envelope otherwise
//                      (8 ulps for every scalar on p-norm spaces)
//   subadditivity:     nu(x+y, s+t) <= nu(x,s) <> nu(y,t), 1e-12 absolute
//                      allowance (both sides round independently)
//   vanishing:         monotone decay along t = 2^10, 2^20, 2^30 * norm(x)
//                      with f(2^20 norm) < 1e-3 and f(2^30 norm) < 1e-6
//   monotone-in-t:     nu(x, .) non-increasing on sampled pairs
//
// Flags (informational): membership-reaches-one (vi), strict-inversion (vii).
AxiomReport verify_antinorm_axioms(const FuzzyAntiNorm& F, long sample_count,
                                   std::uint64_t seed);

// Pointwise maximum of two memberships over the same space and aggregation
// rule, realized as a tabulated profile on a merged grid (natural knots of
// both shapes plus a geometric cover). Exact at grid points, linear between.
FuzzyAntiNorm combine_max(const FuzzyAntiNorm& a, const FuzzyAntiNorm& b,
                          int grid_points = 513);

} // namespace antinorm
