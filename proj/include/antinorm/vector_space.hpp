#pragma once

#include "antinorm/sampling.hpp"

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <string_view>

namespace antinorm {

using Vector = Eigen::VectorXd;

enum class BaseNormKind { Euclidean, Maximum, PNorm };

const char* base_norm_name(BaseNormKind k) noexcept;
std::optional<BaseNormKind> base_norm_from_name(std::string_view name) noexcept;

// Ambient space R^n, n >= 1, carrying one of the classical norms. p >= 1 is
// required for PNorm and ignored otherwise.
class VectorSpaceSpec {
public:
    VectorSpaceSpec(int dimension, BaseNormKind kind, double p = 2.0);

    int dimension() const noexcept { return n_; }
    BaseNormKind norm_kind() const noexcept { return kind_; }
    double p() const noexcept { return p_; }

    // Euclidean is computed with exactly-squared compensated summation, so
    // scaling a vector by a power of two scales the result bit-exactly and
    // general scalings stay within a couple of ulp of the scalar multiply.
    double norm(const Vector& x) const;

    bool is_zero(const Vector& x) const noexcept;  // exact component test

    void require_dimension(const Vector& x, const char* where) const;

    bool operator==(const VectorSpaceSpec&) const = default;

    std::string describe() const;

private:
    int n_;
    BaseNormKind kind_;
    double p_;
};

// Uniform draw from the box [-r, r]^n.
Vector sample_box(Sampler& rng, int n, double r);

// Same, rejecting the exact zero vector.
Vector sample_nonzero(Sampler& rng, int n, double r);

} // namespace antinorm
