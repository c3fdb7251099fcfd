#pragma once

#include "antinorm/report.hpp"
#include "antinorm/unit_value.hpp"

#include <cstdint>
#include <optional>
#include <string_view>

namespace antinorm {

// Binary aggregation rule on [0,1]: commutative, associative, 0 as identity,
// monotone in each argument. BrokenProduct (a*b) violates the identity axiom
// on purpose and exists only as a negative-control subject for the checker.
enum class TConormKind { Maximum, ProbabilisticSum, BoundedSum, BrokenProduct };

const char* tconorm_name(TConormKind k) noexcept;
std::optional<TConormKind> tconorm_from_name(std::string_view name) noexcept;

class TConorm {
public:
    explicit TConorm(TConormKind kind) noexcept : kind_(kind) {}

    TConormKind kind() const noexcept { return kind_; }
    const char* name() const noexcept { return tconorm_name(kind_); }

    UnitValue apply(UnitValue a, UnitValue b) const;

    // Same rule without range re-validation; callers guarantee [0,1] inputs.
    double apply_raw(double a, double b) const noexcept;

private:
    TConormKind kind_;
};

// Seeded numeric sweep. Commutativity, identity and monotonicity must hold
// exactly; associativity is allowed 1e-12 absolute drift (the probabilistic
// sum rounds differently per grouping).
AxiomReport verify_tconorm_axioms(const TConorm& c, long sample_count,
                                  std::uint64_t seed);

// Largest r in [0,1] with r<>r <= bound, located by bisection on the
// monotone map r -> r<>r. Returns 0 when only r = 0 qualifies.
double find_idempotent_bound(const TConorm& c, UnitValue bound);

// Some r with r<>r2 < r1, given r2 < r1: bisection from below toward the
// crossing of r -> r<>r2, returning a point certified strictly under r1.
// Comes back empty only for rules that break the axioms.
std::optional<double> find_dominated_operand(const TConorm& c, UnitValue r1,
                                             UnitValue r2);

} // namespace antinorm
