#include "antinorm/riesz.hpp"

#include "antinorm/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace antinorm {

Subspace::Subspace(int ambient_dimension, std::vector<Vector> basis)
    : n_(ambient_dimension) {
    if (n_ < 1)
        throw std::invalid_argument("Subspace: ambient dimension must be >= 1");
    for (const auto& b : basis)
        if (static_cast<int>(b.size()) != n_)
            throw std::invalid_argument("Subspace: basis vector dimension mismatch");
    basis_.resize(n_, static_cast<Eigen::Index>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j)
        basis_.col(static_cast<Eigen::Index>(j)) = basis[j];
    if (basis_.cols() > 0) {
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(basis_);
        qr.setThreshold(1e-10);
        if (qr.rank() < basis_.cols())
            throw std::invalid_argument("Subspace: basis is dependent at threshold 1e-10");
    }
}

bool Subspace::contains(const Vector& v, double tol) const {
    if (static_cast<int>(v.size()) != n_)
        throw std::invalid_argument("Subspace::contains: dimension mismatch");
    if (rank() == 0) {
        for (Eigen::Index i = 0; i < v.size(); ++i)
            if (v[i] != 0.0) return false;
        return true;
    }
    Vector c = least_squares_coefficients(v);
    double resid = (v - basis_ * c).norm();
    return resid <= tol * std::max(1.0, v.norm());
}

Vector Subspace::least_squares_coefficients(const Vector& v) const {
    if (static_cast<int>(v.size()) != n_)
        throw std::invalid_argument("Subspace::least_squares_coefficients: dimension mismatch");
    if (rank() == 0) return Vector::Zero(0);
    return basis_.householderQr().solve(v);
}

namespace {

void require_open_unit(double v, const char* what) {
    if (!(v > 0.0 && v < 1.0))
        throw std::invalid_argument(std::string(what) + " must lie in (0,1)");
}

// Coordinate pattern search on g(c) = base_norm(v - B c). The probe
// directions +-e_j positively span the coefficient space, so for a convex
// objective the search cannot stall away from the minimum; each sweep is
// non-increasing by construction. Stops when a sweep improves by less than
// 1e-10, the step falls below 1e-12 * scale, or the probe budget 10^4 runs
// out.
std::pair<Vector, long> minimize_over_subspace(const VectorSpaceSpec& space,
                                               const Vector& v,
                                               const Eigen::MatrixXd& B,
                                               Vector c) {
    const Eigen::Index k = B.cols();
    auto objective = [&](const Vector& coeff) { return space.norm(v - B * coeff); };
    double best = objective(c);
    const double scale0 = std::max(1.0, c.cwiseAbs().maxCoeff());
    double step = 0.25 * scale0;
    long sweeps = 0;
    long probes = 0;
    while (step > 1e-12 * scale0 && probes < 10000) {
        ++sweeps;
        double before = best;
        for (Eigen::Index j = 0; j < k; ++j) {
            for (double sign : {+1.0, -1.0}) {
                Vector cand = c;
                cand[j] += sign * step;
                ++probes;
                double val = objective(cand);
                if (val < best) {
                    best = val;
                    c = cand;
                    break;
                }
            }
        }
        if (best == before)
            step *= 0.5;
        else if (before - best < 1e-10)
            break;
    }
    return {c, sweeps};
}

} // namespace

DistanceResult distance_to_subspace(const AlphaNormFamily& A, double alpha,
                                    const Vector& v, const Subspace& W) {
    const VectorSpaceSpec& space = A.source().space();
    space.require_dimension(v, "distance_to_subspace");
    if (W.ambient_dimension() != space.dimension())
        throw std::invalid_argument("distance_to_subspace: subspace lives in a different dimension");
    const double q = A.scale(alpha);

    DistanceResult out;
    if (W.rank() == 0) {
        out.minimizer = Vector::Zero(space.dimension());
        out.base_distance = space.norm(v);
        out.distance = q * out.base_distance;
        return out;
    }

    Vector c = W.least_squares_coefficients(v);
    if (space.norm_kind() == BaseNormKind::Euclidean) {
        out.minimizer = W.basis_matrix() * c;
        out.base_distance = space.norm(v - out.minimizer);
        out.distance = q * out.base_distance;
        return out;
    }

    auto [coeff, iterations] = minimize_over_subspace(space, v, W.basis_matrix(), c);
    out.minimizer = W.basis_matrix() * coeff;
    out.base_distance = space.norm(v - out.minimizer);
    out.distance = q * out.base_distance;
    out.iterations = iterations;
    return out;
}

RieszWitness riesz_witness(const AlphaNormFamily& A, double alpha, double eps,
                           const Subspace& W) {
    const FuzzyAntiNorm& F = A.source();
    const VectorSpaceSpec& space = F.space();
    require_open_unit(eps, "riesz_witness: eps");
    if (W.ambient_dimension() != space.dimension())
        throw std::invalid_argument("riesz_witness: subspace lives in a different dimension");
    if (!W.proper())
        throw std::invalid_argument("riesz_witness: subspace must be proper");
    if (!F.profile().strictly_invertible())
        throw std::domain_error(
            "riesz_witness: the shape admits no strict threshold inversion");

    // A proper subspace misses at least one coordinate axis: containing all
    // of them would mean containing their span, the whole space.
    int axis = -1;
    Vector seed;
    for (int i = 0; i < space.dimension(); ++i) {
        Vector e = Vector::Zero(space.dimension());
        e[i] = 1.0;
        if (!W.contains(e)) {
            axis = i;
            seed = e;
            break;
        }
    }
    if (axis < 0)
        throw std::logic_error("riesz_witness: proper subspace claims every axis");

    DistanceResult d = distance_to_subspace(A, alpha, seed, W);
    Vector z = seed - d.minimizer;
    double znorm = A.alpha_norm_value(z, alpha);

    RieszWitness w;
    w.y = z / znorm;
    w.alpha = alpha;
    w.eps = eps;
    w.picked_axis = axis;
    w.unit_norm = A.alpha_norm_value(w.y, alpha);
    w.distance_lower_bound = distance_to_subspace(A, alpha, w.y, W).distance;
    if (std::fabs(w.unit_norm - 1.0) > 1e-8)
        throw std::runtime_error("riesz_witness: normalization drifted past tolerance");
    if (!(w.distance_lower_bound > 1.0 - eps - 1e-6))
        throw std::runtime_error("riesz_witness: distance bound failed re-verification");
    return w;
}

WitnessAudit verify_witness(const AlphaNormFamily& A, double alpha, double eps,
                            const Vector& y, const Subspace& W, long samples,
                            std::uint64_t seed) {
    const FuzzyAntiNorm& F = A.source();
    const VectorSpaceSpec& space = F.space();
    space.require_dimension(y, "verify_witness");
    require_open_unit(eps, "verify_witness: eps");
    if (W.ambient_dimension() != space.dimension())
        throw std::invalid_argument("verify_witness: subspace lives in a different dimension");
    if (samples < 1)
        throw std::invalid_argument("verify_witness: samples must be >= 1");

    WitnessAudit out;
    out.samples = samples;
    if (space.is_zero(y)) {
        out.degenerate = true;
        return out;
    }

    out.unit_norm = A.alpha_norm_value(y, alpha);
    out.unit_norm_ok = std::fabs(out.unit_norm - 1.0) <= 1e-8;
    out.membership_at_one = F.evaluate(y, 1.0);
    out.membership_at_one_ok = out.membership_at_one <= 1.0 - alpha + 1e-8;

    const double level = 1.0 - alpha;
    const double t_eps = 1.0 - eps;
    double worst = std::numeric_limits<double>::infinity();
    auto consider = [&](const Vector& w) {
        double margin = F.evaluate(y - w, t_eps) - level;
        if (margin < worst) {
            worst = margin;
            out.worst_w = w;
        }
    };

    Sampler rng(seed);
    const int k = W.rank();
    for (long i = 0; i < samples; ++i) {
        if (k == 0) {
            consider(Vector::Zero(space.dimension()));
            break;
        }
        Vector coeff(k);
        for (int j = 0; j < k; ++j) coeff[j] = rng.symmetric(10.0);
        consider(Vector(W.basis_matrix() * coeff));
    }
    DistanceResult d = distance_to_subspace(A, alpha, y, W);
    consider(d.minimizer);
    out.crisp_distance = d.distance;
    out.worst_membership_margin = worst;
    out.distance_form_ok = worst >= -1e-8;
    out.pass = out.unit_norm_ok && out.membership_at_one_ok && out.distance_form_ok &&
               !out.degenerate;
    return out;
}

CompactnessProbe compactness_probe(const AlphaNormFamily& A, double alpha,
                                   long samples, std::uint64_t seed) {
    if (samples < 1)
        throw std::invalid_argument("compactness_probe: samples must be >= 1");
    CompactnessProbe out;
    out.samples = samples;
    out.boundary_resolution = 1e-4;
    const FuzzyAntiNorm& F = A.source();
    const VectorSpaceSpec& space = F.space();
    const int n = space.dimension();
    const double level = 1.0 - alpha;
    const double radius = 1.0 / A.scale(alpha);
    out.radius_bound = radius + 1e-8;
    Sampler rng(seed);

    for (long i = 0; i < samples; ++i) {
        Vector x = sample_box(rng, n, 1.5 * radius);
        if (F.evaluate(x, 1.0) <= level) {
            double r = space.norm(x);
            if (r > out.worst_in_set_radius) out.worst_in_set_radius = r;
        }
    }
    out.bounded_ok = out.worst_in_set_radius <= out.radius_bound;

    out.closed_ok = true;
    const long dirs = std::min<long>(64, samples);
    for (long i = 0; i < dirs; ++i) {
        Vector u = sample_nonzero(rng, n, 1.0);
        Vector b = u * (radius / space.norm(u));
        bool boundary_in = F.evaluate(b, 1.0) <= level + 1e-12;
        bool inside_in = F.evaluate(Vector(b * (1.0 - out.boundary_resolution)), 1.0) <= level;
        bool outside_out = F.evaluate(Vector(b * (1.0 + out.boundary_resolution)), 1.0) > level;
        if (!(boundary_in && inside_in && outside_out)) out.closed_ok = false;
    }
    out.pass = out.bounded_ok && out.closed_ok;
    return out;
}

} // namespace antinorm
