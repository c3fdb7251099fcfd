#include "antinorm/decay_profile.hpp"

#include "antinorm/report.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace antinorm {

DecayProfile::DecayProfile(ProfileKind k, double param, std::vector<ProfileKnot> knots)
    : kind_(k), param_(param), knots_(std::move(knots)) {}

DecayProfile DecayProfile::reciprocal(double k) {
    if (!std::isfinite(k) || !(k > 0.0))
        throw std::invalid_argument("DecayProfile::reciprocal: k must be positive and finite");
    return DecayProfile(ProfileKind::Reciprocal, k, {});
}

DecayProfile DecayProfile::step() {
    return DecayProfile(ProfileKind::Step, 0.0, {});
}

DecayProfile DecayProfile::exponential(double lambda) {
    if (!std::isfinite(lambda) || !(lambda > 0.0))
        throw std::invalid_argument("DecayProfile::exponential: lambda must be positive and finite");
    return DecayProfile(ProfileKind::Exponential, lambda, {});
}

DecayProfile DecayProfile::tabulated(std::vector<ProfileKnot> knots) {
    if (knots.empty())
        throw std::invalid_argument("DecayProfile::tabulated: table must not be empty");
    double prev = 0.0;
    for (const auto& kn : knots) {
        if (!std::isfinite(kn.u) || !(kn.u > prev))
            throw std::invalid_argument(
                "DecayProfile::tabulated: abscissas must be positive, finite and strictly ascending");
        if (!(kn.f >= 0.0 && kn.f <= 1.0))
            throw std::invalid_argument("DecayProfile::tabulated: values must lie in [0,1]");
        prev = kn.u;
    }
    return DecayProfile(ProfileKind::Tabulated, 0.0, std::move(knots));
}

double DecayProfile::operator()(double u) const {
    switch (kind_) {
    case ProfileKind::Reciprocal:
        return param_ / (param_ + u);
    case ProfileKind::Step:
        return u <= 1.0 ? 1.0 : 0.0;
    case ProfileKind::Exponential:
        return std::exp(-param_ * u);
    case ProfileKind::Tabulated: {
        if (u < knots_.front().u) return 1.0;
        if (u > knots_.back().u) return 0.0;
        auto it = std::lower_bound(knots_.begin(), knots_.end(), u,
                                   [](const ProfileKnot& kn, double v) { return kn.u < v; });
        if (it->u == u) return it->f;
        const ProfileKnot& right = *it;
        const ProfileKnot& left = *(it - 1);
        double theta = (u - left.u) / (right.u - left.u);
        return left.f + theta * (right.f - left.f);
    }
    }
    return 0.0;
}

bool DecayProfile::monotone() const noexcept {
    if (kind_ != ProfileKind::Tabulated) return true;
    for (std::size_t i = 1; i < knots_.size(); ++i)
        if (knots_[i].f > knots_[i - 1].f) return false;
    return true;
}

bool DecayProfile::limit_one_at_zero() const noexcept {
    // Every shape built here carries value 1 toward u = 0: the closed forms
    // analytically, tables by the left-of-first-knot convention.
    return true;
}

bool DecayProfile::strictly_invertible() const noexcept {
    switch (kind_) {
    case ProfileKind::Reciprocal:
    case ProfileKind::Exponential:
        return true;
    case ProfileKind::Step:
        return false;
    case ProfileKind::Tabulated: {
        if (!monotone()) return false;
        // Ends must meet the conventions continuously, and no interior
        // plateau may sit at a fuzzy level.
        if (knots_.front().f != 1.0 || knots_.back().f != 0.0) return false;
        for (std::size_t i = 1; i < knots_.size(); ++i) {
            double f = knots_[i].f;
            if (f == knots_[i - 1].f && f > 0.0 && f < 1.0) return false;
        }
        return true;
    }
    }
    return false;
}

std::vector<double> DecayProfile::natural_knots() const {
    switch (kind_) {
    case ProfileKind::Step:
        return {1.0};
    case ProfileKind::Tabulated: {
        std::vector<double> out;
        out.reserve(knots_.size());
        for (const auto& kn : knots_) out.push_back(kn.u);
        return out;
    }
    default:
        return {};
    }
}

double DecayProfile::inverse_level(double level) const {
    if (!(level > 0.0 && level < 1.0))
        throw std::domain_error("DecayProfile::inverse_level: level must lie in (0,1)");
    if (!monotone())
        throw std::domain_error("DecayProfile::inverse_level: profile is not non-increasing");
    switch (kind_) {
    case ProfileKind::Reciprocal:
        // k/(k+u) <= level exactly when u >= k (1-level)/level
        return param_ * (1.0 - level) / level;
    case ProfileKind::Step:
        return 1.0;
    case ProfileKind::Exponential:
        return -std::log(level) / param_;
    case ProfileKind::Tabulated: {
        for (std::size_t i = 0; i < knots_.size(); ++i) {
            if (knots_[i].f <= level) {
                if (i == 0) return knots_[0].u;
                const ProfileKnot& a = knots_[i - 1];
                const ProfileKnot& b = knots_[i];
                // a.f > level >= b.f on a non-increasing table
                return a.u + (a.f - level) * (b.u - a.u) / (a.f - b.f);
            }
        }
        // Still above level at the last knot; the drop to 0 happens there.
        return knots_.back().u;
    }
    }
    return 0.0;
}

std::string DecayProfile::describe() const {
    switch (kind_) {
    case ProfileKind::Reciprocal:
        return "reciprocal k=" + format_double(param_);
    case ProfileKind::Step:
        return "step";
    case ProfileKind::Exponential:
        return "exponential lambda=" + format_double(param_);
    case ProfileKind::Tabulated: {
        std::string out = "tabulated";
        for (const auto& kn : knots_) {
            out += ' ';
            out += format_double(kn.u);
            out += ':';
            out += format_double(kn.f);
        }
        return out;
    }
    }
    return "unknown";
}

} // namespace antinorm
