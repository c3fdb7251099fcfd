#include "antinorm/vector_space.hpp"

#include "antinorm/report.hpp"

#include <cmath>
#include <stdexcept>

namespace antinorm {

const char* base_norm_name(BaseNormKind k) noexcept {
    switch (k) {
    case BaseNormKind::Euclidean: return "euclidean";
    case BaseNormKind::Maximum:   return "maximum";
    case BaseNormKind::PNorm:     return "p-norm";
    }
    return "unknown";
}

std::optional<BaseNormKind> base_norm_from_name(std::string_view name) noexcept {
    if (name == "euclidean") return BaseNormKind::Euclidean;
    if (name == "maximum") return BaseNormKind::Maximum;
    if (name == "p-norm") return BaseNormKind::PNorm;
    return std::nullopt;
}

VectorSpaceSpec::VectorSpaceSpec(int dimension, BaseNormKind kind, double p)
    : n_(dimension), kind_(kind), p_(p) {
    if (dimension < 1)
        throw std::invalid_argument("VectorSpaceSpec: dimension must be >= 1");
    if (kind == BaseNormKind::PNorm) {
        if (!std::isfinite(p) || !(p >= 1.0))
            throw std::invalid_argument("VectorSpaceSpec: p-norm needs finite p >= 1");
    } else {
        p_ = 2.0;  // normalized so operator== ignores a stale exponent
    }
}

namespace {

// Sum of x_i^2 with each square split exactly (fma) and accumulated with a
// Neumaier running compensation. The result is the correctly rounded sum for
// any realistic dimension; combined with correctly rounded sqrt this is what
// makes power-of-two scaling of the euclidean norm bit-exact.
double sum_of_squares(const Vector& x) {
    double sum = 0.0, comp = 0.0;
    auto add = [&](double v) {
        double t = sum + v;
        if (std::fabs(sum) >= std::fabs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    };
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        double hi = x[i] * x[i];
        double lo = std::fma(x[i], x[i], -hi);
        add(hi);
        add(lo);
    }
    return sum + comp;
}

} // namespace

double VectorSpaceSpec::norm(const Vector& x) const {
    require_dimension(x, "norm");
    switch (kind_) {
    case BaseNormKind::Euclidean:
        return std::sqrt(sum_of_squares(x));
    case BaseNormKind::Maximum:
        return x.cwiseAbs().maxCoeff();
    case BaseNormKind::PNorm: {
        double s = 0.0;
        for (Eigen::Index i = 0; i < x.size(); ++i)
            s += std::pow(std::fabs(x[i]), p_);
        return std::pow(s, 1.0 / p_);
    }
    }
    return 0.0;
}

bool VectorSpaceSpec::is_zero(const Vector& x) const noexcept {
    for (Eigen::Index i = 0; i < x.size(); ++i)
        if (x[i] != 0.0) return false;
    return true;
}

void VectorSpaceSpec::require_dimension(const Vector& x, const char* where) const {
    if (static_cast<int>(x.size()) != n_)
        throw std::invalid_argument(std::string(where) + ": vector of dimension " +
                                    std::to_string(x.size()) + " in a space of dimension " +
                                    std::to_string(n_));
}

std::string VectorSpaceSpec::describe() const {
    std::string out = "R^" + std::to_string(n_) + " with ";
    out += base_norm_name(kind_);
    if (kind_ == BaseNormKind::PNorm)
        out += " p=" + format_double(p_);
    out += " norm";
    return out;
}

Vector sample_box(Sampler& rng, int n, double r) {
    Vector x(n);
    for (int i = 0; i < n; ++i) x[i] = rng.symmetric(r);
    return x;
}

Vector sample_nonzero(Sampler& rng, int n, double r) {
    for (;;) {
        Vector x = sample_box(rng, n, r);
        for (int i = 0; i < n; ++i)
            if (x[i] != 0.0) return x;
    }
}

} // namespace antinorm
