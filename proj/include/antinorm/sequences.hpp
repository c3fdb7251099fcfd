#pragma once

#include "antinorm/alpha_cut.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace antinorm {

// Decay schedule of a generated sequence. Constant keeps the offset fixed
// (direction itself), which is how "wrong limit" and trivial constant
// sequences are expressed.
enum class RateRule { Harmonic, InverseSquare, Geometric, Constant };

const char* rate_rule_name(RateRule r) noexcept;
double rate_value(RateRule r, double ratio, long n);

struct SequenceGenerator {
    Vector base;
    Vector direction;
    RateRule rule = RateRule::Harmonic;
    double ratio = 0.5;  // Geometric only, in (0,1)
};

// Either a finite list of points or a generator base + direction * rate(n),
// n >= 1. Generators admit closed-form tail analysis; lists only windowed
// estimates.
class VectorSequence {
public:
    VectorSequence(std::vector<Vector> points, std::optional<Vector> limit);
    VectorSequence(SequenceGenerator gen, std::optional<Vector> limit);

    bool is_generator() const noexcept;
    const SequenceGenerator& generator() const;
    const std::vector<Vector>& points() const;
    long size() const;  // list only

    const std::optional<Vector>& candidate_limit() const noexcept { return limit_; }
    int dimension() const;

    Vector term(long n) const;  // n >= 1; list indexing is term(1) = points[0]

private:
    std::variant<std::vector<Vector>, SequenceGenerator> data_;
    std::optional<Vector> limit_;
};

enum class Verdict { Holds, Fails, Inconclusive };
const char* verdict_name(Verdict v) noexcept;

// Outcome of one tail diagnosis. For generator input the verdict is decided
// in closed form over all thresholds (sound); grid values are still recorded
// as evidence. For lists the verdict comes from the last-window maximum plus
// a monotone-trend guard and may come back Inconclusive.
struct SequenceVerdict {
    Verdict verdict = Verdict::Inconclusive;
    double alpha = 0.0;
    std::vector<double> t_grid;
    long tail = 0;
    double worst_tail_value = 0.0;
    // Refuting sample (t, n); n = 0 marks a closed-form limit statement.
    std::optional<std::pair<double, long>> witness;
    bool analytic = false;
    std::string note;
};

std::vector<double> default_t_grid();  // {1e-3, ..., 1e3}, decade steps

// Tail membership of x_n - limit must fall strictly below 1-alpha (margin
// 1e-9) at every threshold. Requires a candidate limit.
SequenceVerdict fuzzy_alpha_converges(const FuzzyAntiNorm& F, const VectorSequence& s,
                                      double alpha,
                                      const std::vector<double>& t_grid = default_t_grid(),
                                      long tail = 100);

// Tail membership of x_n - x_{n+p}, p = 1..p_max, may reach 1-alpha
// (non-strict, margin 1e-9). No candidate limit needed.
SequenceVerdict fuzzy_alpha_cauchy(const FuzzyAntiNorm& F, const VectorSequence& s,
                                   double alpha,
                                   const std::vector<double>& t_grid = default_t_grid(),
                                   long tail = 100, int p_max = 8);

// Tail of the level norm of x_n - limit against tolerance 1e-6.
SequenceVerdict alpha_norm_converges(const AlphaNormFamily& A, const VectorSequence& s,
                                     double alpha, long tail = 100);

// Membership-based and norm-based verdicts side by side, per level.
struct EquivalenceRow {
    double alpha = 0.0;
    Verdict fuzzy = Verdict::Inconclusive;
    Verdict norm = Verdict::Inconclusive;
    bool agree = false;        // equal verdicts; Inconclusive never disagrees
    bool inconclusive = false;
};
struct EquivalenceReport {
    std::vector<EquivalenceRow> rows;
    bool all_agree = false;
};
EquivalenceReport equivalence_check(const FuzzyAntiNorm& F, const AlphaNormFamily& A,
                                    const VectorSequence& s,
                                    const std::vector<double>& alphas,
                                    const std::vector<double>& t_grid = default_t_grid(),
                                    long tail = 100);

// (a) convergence forces the Cauchy property; (b) a norm-Cauchy tail forces
// the membership-Cauchy tail; (c) two candidate limits that both pass must
// coincide within 1e-8. The second candidate is the given limit shifted by
// the generator direction (for lists: by the final offset), which a
// genuinely convergent sequence must reject.
struct ImplicationReport {
    bool converges = false;
    bool cauchy = false;
    bool converge_implies_cauchy = true;
    bool norm_cauchy = false;
    bool norm_cauchy_implies_fuzzy = true;
    bool second_limit_accepted = false;
    double limit_gap = 0.0;    // distance between accepted limits, 0 when unique
    bool uniqueness_holds = true;
    bool pass = false;
};
ImplicationReport implication_suite(const FuzzyAntiNorm& F, const AlphaNormFamily& A,
                                    const VectorSequence& s, double alpha,
                                    const std::vector<double>& t_grid = default_t_grid(),
                                    long tail = 100, int p_max = 8);

} // namespace antinorm
