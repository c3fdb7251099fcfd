#pragma once

#include <string>
#include <vector>

namespace antinorm {

enum class ProfileKind { Reciprocal, Step, Exponential, Tabulated };

struct ProfileKnot {
    double u = 0.0;  // abscissa, > 0, strictly ascending across the table
    double f = 0.0;  // value in [0,1]
};

// Scalar decay shape f of the normalized argument u = t / norm(x):
//
//   reciprocal(k):  k / (k + u)
//   step:           1 on (0,1], 0 beyond
//   exponential(l): exp(-l u)
//   tabulated:      linear interpolation through the knots, value 1 left of
//                   the first knot and 0 right of the last
//
// Construction enforces positive ascending abscissas and values in [0,1].
// Monotonicity of a table is deliberately NOT a construction error: a
// non-monotone table is accepted here and convicted by the axiom checker
// with a witness. monotone() tells which case applies.
class DecayProfile {
public:
    static DecayProfile reciprocal(double k);
    static DecayProfile step();
    static DecayProfile exponential(double lambda);
    static DecayProfile tabulated(std::vector<ProfileKnot> knots);

    ProfileKind kind() const noexcept { return kind_; }
    double parameter() const noexcept { return param_; }    // k or lambda
    const std::vector<ProfileKnot>& knots() const noexcept { return knots_; }

    double operator()(double u) const;  // u > 0

    // Non-increasing everywhere.
    bool monotone() const noexcept;

    // f(u) -> 1 as u -> 0+. Needed so that membership bounded below one can
    // only happen for the zero vector. Holds for every shape built here.
    bool limit_one_at_zero() const noexcept;

    // Continuous and strictly decreasing across the band 0 < f < 1, which
    // threshold inversion needs. Step fails (jump); tables fail when they
    // carry a jump or an interior plateau at a fuzzy level.
    bool strictly_invertible() const noexcept;

    // Abscissas where the shape changes non-smoothly; merge grids for
    // pointwise-max combination must contain them.
    std::vector<double> natural_knots() const;

    // Generalized inverse: smallest u with f(u) <= level, level in (0,1).
    // Closed form per kind; the piecewise-linear case walks the table.
    // Requires monotone().
    double inverse_level(double level) const;

    std::string describe() const;

private:
    DecayProfile(ProfileKind k, double param, std::vector<ProfileKnot> knots);

    ProfileKind kind_;
    double param_;
    std::vector<ProfileKnot> knots_;
};

} // namespace antinorm
