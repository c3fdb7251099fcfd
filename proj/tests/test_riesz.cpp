#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "antinorm/riesz.hpp"
#include "antinorm/sampling.hpp"

#include "oracles.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace antinorm;

namespace {

Vector vec(std::initializer_list<double> xs) {
    Vector v(static_cast<Eigen::Index>(xs.size()));
    Eigen::Index i = 0;
    for (double x : xs) v[i++] = x;
    return v;
}

Vector axis_vector(int n, int i) {
    Vector e = Vector::Zero(n);
    e[i] = 1.0;
    return e;
}

AlphaNormFamily family(int n, BaseNormKind base = BaseNormKind::Euclidean,
                       DecayProfile profile = DecayProfile::reciprocal(1.0)) {
    return AlphaNormFamily(FuzzyAntiNorm(VectorSpaceSpec(n, base), std::move(profile),
                                         TConorm(TConormKind::Maximum)));
}

std::vector<Vector> random_basis(Sampler& rng, int n, int rank) {
    std::vector<Vector> basis;
    basis.reserve(static_cast<std::size_t>(rank));
    for (int j = 0; j < rank; ++j) basis.push_back(sample_box(rng, n, 1.0));
    return basis;
}

} // namespace

TEST_CASE("subspace construction and membership") {
    CHECK_THROWS_AS(Subspace(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Subspace(2, {Vector(Vector::Zero(3))}), std::invalid_argument);
    CHECK_THROWS_AS(Subspace(2, {vec({1.0, 0.0}), vec({2.0, 0.0})}), std::invalid_argument);

    Subspace zero(3, {});
    CHECK(zero.rank() == 0);
    CHECK(zero.proper());
    CHECK(zero.contains(Vector::Zero(3)));
    CHECK_FALSE(zero.contains(vec({0.0, 1e-14, 0.0})));

    Subspace diag(2, {vec({1.0, 1.0})});
    CHECK(diag.rank() == 1);
    CHECK(diag.contains(vec({2.0, 2.0})));
    CHECK_FALSE(diag.contains(vec({1.0, 0.0})));
    CHECK_THROWS_AS(diag.contains(Vector::Zero(3)), std::invalid_argument);

    Subspace line(2, {vec({1.0, 0.0})});
    Vector c = line.least_squares_coefficients(vec({3.0, 4.0}));
    REQUIRE(c.size() == 1);
    CHECK(c[0] == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("euclidean distance at a worked example") {
    auto A = family(2);
    Subspace W(2, {vec({1.0, 0.0})});

    auto d = distance_to_subspace(A, 0.5, vec({3.0, 4.0}), W);
    CHECK(d.iterations == 0);
    CHECK(d.base_distance == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(d.distance == doctest::Approx(A.scale(0.5) * 4.0).epsilon(1e-14));
    CHECK((d.minimizer - vec({3.0, 0.0})).norm() <= 1e-12);

    auto inside = distance_to_subspace(A, 0.5, vec({5.0, 0.0}), W);
    CHECK(inside.base_distance <= 1e-12);

    // Distance to the zero subspace is the level norm itself.
    Subspace Z(2, {});
    auto dz = distance_to_subspace(A, 0.25, vec({3.0, 4.0}), Z);
    CHECK(dz.base_distance == 5.0);
    CHECK(dz.distance == doctest::Approx(A.scale(0.25) * 5.0).epsilon(1e-14));

    CHECK_THROWS_AS(distance_to_subspace(A, 0.5, vec({1.0, 0.0, 0.0}), W),
                    std::invalid_argument);
    Subspace W3(3, {axis_vector(3, 0)});
    CHECK_THROWS_AS(distance_to_subspace(A, 0.5, vec({1.0, 0.0}), W3),
                    std::invalid_argument);
}

TEST_CASE("euclidean distances match the normal-equations route") {
    Sampler rng(101);
    for (int n : {2, 3, 5}) {
        auto A = family(n);
        for (int rank = 1; rank < n; ++rank) {
            Subspace W(n, random_basis(rng, n, rank));
            for (int rep = 0; rep < 20; ++rep) {
                Vector v = sample_box(rng, n, 2.0);
                auto d = distance_to_subspace(A, 0.5, v, W);
                CHECK(d.iterations == 0);
                double expected = oracles::euclidean_distance(W.basis_matrix(), v);
                CHECK(std::fabs(d.base_distance - expected) <=
                      1e-9 * std::max(1.0, expected));
                CHECK(W.contains(d.minimizer, 1e-8));
            }
        }
    }
}

TEST_CASE("euclidean distance is translation invariant and scale covariant") {
    Sampler rng(55);
    auto A = family(3);
    Subspace W(3, random_basis(rng, 3, 2));
    for (int rep = 0; rep < 50; ++rep) {
        Vector v = sample_box(rng, 3, 2.0);
        Vector w0 = W.basis_matrix() * vec({rng.symmetric(3.0), rng.symmetric(3.0)});
        double d = distance_to_subspace(A, 0.5, v, W).base_distance;
        double dt = distance_to_subspace(A, 0.5, Vector(v + w0), W).base_distance;
        double ds = distance_to_subspace(A, 0.5, Vector(2.0 * v), W).base_distance;
        CHECK(std::fabs(dt - d) <= 1e-9 * std::max(1.0, d));
        CHECK(std::fabs(ds - 2.0 * d) <= 1e-9 * std::max(1.0, d));
    }
}

TEST_CASE("max-norm distances agree with closed forms") {
    auto A = family(2, BaseNormKind::Maximum);

    // W = span{e0}: only the second coordinate resists, dist = |v1|.
    Subspace W(2, {vec({1.0, 0.0})});
    auto d1 = distance_to_subspace(A, 0.5, vec({3.0, -4.0}), W);
    CHECK(d1.iterations > 0);
    CHECK(d1.base_distance == doctest::Approx(4.0).epsilon(1e-8));

    // W = span{(1,1)}: minimize max(|v0-c|, |v1-c|), met at the midpoint.
    Subspace D(2, {vec({1.0, 1.0})});
    auto d2 = distance_to_subspace(A, 0.5, vec({3.0, -4.0}), D);
    CHECK(d2.base_distance == doctest::Approx(3.5).epsilon(1e-8));

    auto d3 = distance_to_subspace(A, 0.5, vec({2.0, 2.0}), D);
    CHECK(d3.base_distance <= 1e-8);
}

TEST_CASE("an almost-unit vector far from the subspace exists") {
    auto A = family(2);
    Subspace W(2, {vec({1.0, 0.0})});

    auto w = riesz_witness(A, 0.5, 0.1, W);
    CHECK(w.picked_axis == 1);
    CHECK(std::fabs(w.unit_norm - 1.0) <= 1e-8);
    CHECK(w.distance_lower_bound > 1.0 - 0.1 - 1e-6);
    // Seeded at e1 with projection zero: y is e1 itself at this level.
    CHECK((w.y - axis_vector(2, 1)).norm() <= 1e-12);

    // At a smaller level the scale shrinks and y stretches to compensate.
    auto w2 = riesz_witness(A, 0.25, 0.1, W);
    CHECK(std::fabs(w2.unit_norm - 1.0) <= 1e-8);
    CHECK(A.source().space().norm(w2.y) == doctest::Approx(3.0).epsilon(1e-12));

    // One-dimensional ambient space against the zero subspace.
    auto A1 = family(1);
    auto w1 = riesz_witness(A1, 0.5, 0.3, Subspace(1, {}));
    CHECK(std::fabs(w1.unit_norm - 1.0) <= 1e-8);
    CHECK(w1.picked_axis == 0);
}

TEST_CASE("witness construction refuses bad input") {
    auto A = family(2);
    Subspace W(2, {vec({1.0, 0.0})});
    Subspace full(2, {vec({1.0, 0.0}), vec({0.0, 1.0})});
    CHECK_THROWS_AS(riesz_witness(A, 0.5, 0.0, W), std::invalid_argument);
    CHECK_THROWS_AS(riesz_witness(A, 0.5, 1.0, W), std::invalid_argument);
    CHECK_THROWS_AS(riesz_witness(A, 0.5, 0.1, full), std::invalid_argument);
    CHECK_THROWS_AS(riesz_witness(A, 0.5, 0.1, Subspace(3, {axis_vector(3, 0)})),
                    std::invalid_argument);

    auto As = family(2, BaseNormKind::Euclidean, DecayProfile::step());
    CHECK_THROWS_AS(riesz_witness(As, 0.5, 0.1, W), std::domain_error);
}

TEST_CASE("the audit accepts the construction and rejects a doubled vector") {
    auto A = family(2);
    Subspace W(2, {vec({1.0, 0.0})});
    auto w = riesz_witness(A, 0.5, 0.1, W);

    auto audit = verify_witness(A, 0.5, 0.1, w.y, W, 2000, 9);
    CHECK(audit.pass);
    CHECK(audit.unit_norm_ok);
    CHECK(audit.membership_at_one_ok);
    CHECK(audit.distance_form_ok);
    CHECK_FALSE(audit.degenerate);
    CHECK(audit.worst_membership_margin >= -1e-8);
    CHECK(audit.crisp_distance > 1.0 - 0.1 - 1e-6);

    // Doubling blows the unit line and the membership line; the distance
    // line only improves, so it must stay green.
    auto bad = verify_witness(A, 0.5, 0.1, Vector(2.0 * w.y), W, 500, 9);
    CHECK_FALSE(bad.pass);
    CHECK_FALSE(bad.unit_norm_ok);
    CHECK(bad.unit_norm == doctest::Approx(2.0).epsilon(1e-12));
    CHECK_FALSE(bad.membership_at_one_ok);
    CHECK(bad.distance_form_ok);

    auto degenerate = verify_witness(A, 0.5, 0.1, Vector::Zero(2), W, 10, 9);
    CHECK(degenerate.degenerate);
    CHECK_FALSE(degenerate.pass);
}

TEST_CASE("witness sweep across dimensions, ranks and levels") {
    Sampler rng(77);
    for (int n : {2, 3, 5}) {
        auto A = family(n);
        for (int rank = 0; rank < n; ++rank) {
            Subspace W(n, random_basis(rng, n, rank));
            for (double alpha : {0.25, 0.75})
                for (double eps : {0.05, 0.3}) {
                    auto w = riesz_witness(A, alpha, eps, W);
                    CHECK(std::fabs(w.unit_norm - 1.0) <= 1e-8);
                    CHECK(w.distance_lower_bound > 1.0 - eps - 1e-6);
                    CHECK(verify_witness(A, alpha, eps, w.y, W, 500, 13).pass);
                }
        }
    }
}

TEST_CASE("the unit sub-level set looks compact") {
    for (double alpha : {0.25, 0.5, 0.75}) {
        auto A = family(2);
        auto probe = compactness_probe(A, alpha, 2000, 5);
        CHECK(probe.pass);
        CHECK(probe.bounded_ok);
        CHECK(probe.closed_ok);
        CHECK(probe.boundary_resolution == 1e-4);
        CHECK(probe.worst_in_set_radius <= probe.radius_bound);
    }

    auto Ae = family(3, BaseNormKind::Euclidean, DecayProfile::exponential(2.0));
    CHECK(compactness_probe(Ae, 0.5, 2000, 5).pass);

    auto A1 = family(1);
    CHECK(compactness_probe(A1, 0.5, 500, 5).pass);
}
