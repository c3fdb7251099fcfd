#pragma once

#include "antinorm/alpha_cut.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

namespace antinorm {

// Span of an explicitly independent basis inside R^n. Rank is certified by
// column-pivoted QR at threshold 1e-10; a dependent basis is a construction
// error. The empty basis is the zero subspace. Subspace membership is a
// euclidean residual test regardless of which norm the ambient space wears:
// span geometry does not depend on the norm.
class Subspace {
public:
    Subspace(int ambient_dimension, std::vector<Vector> basis);

    int ambient_dimension() const noexcept { return n_; }
    int rank() const noexcept { return static_cast<int>(basis_.cols()); }
    bool proper() const noexcept { return rank() < n_; }

    const Eigen::MatrixXd& basis_matrix() const noexcept { return basis_; }

    bool contains(const Vector& v, double tol = 1e-10) const;

    // Coefficients of the euclidean least-squares projection of v.
    Vector least_squares_coefficients(const Vector& v) const;

private:
    int n_;
    Eigen::MatrixXd basis_;  // n x rank
};

// Level-norm distance from v to W with the minimizing subspace point.
// Euclidean resolves through QR least squares; other norms run a descent
// over subspace coordinates (smoothed where the norm has kinks), warm
// started at the euclidean projection, keep-best so the reported objective
// never increases, stopping at decrease < 1e-10 or 10^4 iterations.
struct DistanceResult {
    double distance = 0.0;       // scale(alpha) * base_distance
    double base_distance = 0.0;
    Vector minimizer;            // point of W, not coefficients
    long iterations = 0;         // 0 marks the closed-form path
};
DistanceResult distance_to_subspace(const AlphaNormFamily& A, double alpha,
                                    const Vector& v, const Subspace& W);

// Near-unit vector far from a proper subspace: norm(y) = 1 within 1e-8 and
// level-norm distance to W above 1 - eps. Construction picks the first
// standard basis vector outside the span, removes its best subspace
// approximation and normalizes; the constructor re-verifies both bounds
// before returning. Requires a continuous strictly-decreasing profile.
struct RieszWitness {
    Vector y;
    double alpha = 0.0;
    double eps = 0.0;
    double unit_norm = 0.0;                      // |unit_norm - 1| <= 1e-8
    double distance_lower_bound = 0.0;           // > 1 - eps - 1e-6
    int picked_axis = -1;                        // index of the seed basis vector
};
RieszWitness riesz_witness(const AlphaNormFamily& A, double alpha, double eps,
                           const Subspace& W);

// Membership-form witness audit:
//   unit ball:  nu(y, 1) <= 1-alpha + 1e-8
//   distance:   nu(y - w, 1-eps) >= 1-alpha - 1e-8 for sampled w (uniform
//               coefficients in [-10, 10]) plus the analytic minimizer
// An over-scaled y fails the unit-ball line; a y pulled toward W fails the
// distance line at the minimizer. The zero vector is flagged degenerate.
struct WitnessAudit {
    bool unit_norm_ok = false;
    double unit_norm = 0.0;
    bool membership_at_one_ok = false;
    double membership_at_one = 0.0;
    bool distance_form_ok = false;
    double worst_membership_margin = 0.0;  // min over w of nu(y-w,1-eps) - (1-alpha)
    Vector worst_w;
    double crisp_distance = 0.0;           // level-norm distance of y to W
    bool degenerate = false;
    long samples = 0;
    bool pass = false;
};
WitnessAudit verify_witness(const AlphaNormFamily& A, double alpha, double eps,
                            const Vector& y, const Subspace& W, long samples,
                            std::uint64_t seed);

// Sampled look at the unit anti-ball's compactness evidence: every in-set
// sample sits within base radius 1/scale(alpha) + 1e-8, directional probes
// put the boundary within resolution 1e-4, and boundary points are in-set
// (closedness). For n = 1 this degenerates to the interval check.
struct CompactnessProbe {
    long samples = 0;
    double radius_bound = 0.0;
    double worst_in_set_radius = 0.0;
    bool bounded_ok = false;
    bool closed_ok = false;
    double boundary_resolution = 0.0;
    bool pass = false;
};
CompactnessProbe compactness_probe(const AlphaNormFamily& A, double alpha,
                                   long samples, std::uint64_t seed);

} // namespace antinorm
