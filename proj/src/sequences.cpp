#include "antinorm/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace antinorm {

const char* rate_rule_name(RateRule r) noexcept {
    switch (r) {
    case RateRule::Harmonic:      return "harmonic";
    case RateRule::InverseSquare: return "inverse-square";
    case RateRule::Geometric:     return "geometric";
    case RateRule::Constant:      return "constant";
    }
    return "unknown";
}

double rate_value(RateRule r, double ratio, long n) {
    if (n < 1)
        throw std::invalid_argument("rate_value: index starts at 1");
    switch (r) {
    case RateRule::Harmonic:
        return 1.0 / static_cast<double>(n);
    case RateRule::InverseSquare:
        return 1.0 / (static_cast<double>(n) * static_cast<double>(n));
    case RateRule::Geometric:
        return std::pow(ratio, static_cast<double>(n));
    case RateRule::Constant:
        return 1.0;
    }
    return 0.0;
}

VectorSequence::VectorSequence(std::vector<Vector> points, std::optional<Vector> limit)
    : data_(std::move(points)), limit_(std::move(limit)) {
    const auto& pts = std::get<std::vector<Vector>>(data_);
    if (pts.empty())
        throw std::invalid_argument("VectorSequence: point list must not be empty");
    const auto dim = pts.front().size();
    for (const auto& p : pts)
        if (p.size() != dim)
            throw std::invalid_argument("VectorSequence: points of mixed dimension");
    if (limit_ && limit_->size() != dim)
        throw std::invalid_argument("VectorSequence: limit dimension mismatch");
}

VectorSequence::VectorSequence(SequenceGenerator gen, std::optional<Vector> limit)
    : data_(std::move(gen)), limit_(std::move(limit)) {
    const auto& g = std::get<SequenceGenerator>(data_);
    if (g.base.size() < 1)
        throw std::invalid_argument("VectorSequence: generator base is empty");
    if (g.base.size() != g.direction.size())
        throw std::invalid_argument("VectorSequence: base and direction dimension mismatch");
    if (g.rule == RateRule::Geometric && !(g.ratio > 0.0 && g.ratio < 1.0))
        throw std::invalid_argument("VectorSequence: geometric ratio must lie in (0,1)");
    if (limit_ && limit_->size() != g.base.size())
        throw std::invalid_argument("VectorSequence: limit dimension mismatch");
}

bool VectorSequence::is_generator() const noexcept {
    return std::holds_alternative<SequenceGenerator>(data_);
}

const SequenceGenerator& VectorSequence::generator() const {
    if (!is_generator())
        throw std::logic_error("VectorSequence: not a generated sequence");
    return std::get<SequenceGenerator>(data_);
}

const std::vector<Vector>& VectorSequence::points() const {
    if (is_generator())
        throw std::logic_error("VectorSequence: not an explicit list");
    return std::get<std::vector<Vector>>(data_);
}

long VectorSequence::size() const {
    return static_cast<long>(points().size());
}

int VectorSequence::dimension() const {
    if (is_generator()) return static_cast<int>(generator().base.size());
    return static_cast<int>(points().front().size());
}

Vector VectorSequence::term(long n) const {
    if (n < 1)
        throw std::invalid_argument("term: index starts at 1");
    if (is_generator()) {
        const auto& g = generator();
        return g.base + rate_value(g.rule, g.ratio, n) * g.direction;
    }
    const auto& pts = points();
    if (n > static_cast<long>(pts.size()))
        throw std::out_of_range("term: past the end of the list");
    return pts[static_cast<std::size_t>(n - 1)];
}

const char* verdict_name(Verdict v) noexcept {
    switch (v) {
    case Verdict::Holds:        return "holds";
    case Verdict::Fails:        return "fails";
    case Verdict::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

std::vector<double> default_t_grid() {
    return {1e-3, 1e-2, 1e-1, 1.0, 1e1, 1e2, 1e3};
}

namespace {

constexpr double kMargin = 1e-9;
constexpr double kNormTol = 1e-6;

void require_open_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("alpha must lie inside the open interval (0,1)");
}

void require_grid(const std::vector<double>& t_grid) {
    if (t_grid.empty())
        throw std::invalid_argument("threshold grid must not be empty");
    for (double t : t_grid)
        if (!(t > 0.0))
            throw std::invalid_argument("threshold grid entries must be positive");
}

// Residual offset once the decaying part of a generator has died out.
Vector limit_offset(const SequenceGenerator& g, const Vector& limit) {
    Vector off = g.base - limit;
    if (g.rule == RateRule::Constant) off += g.direction;
    return off;
}

struct WindowStats {
    double overall = 0.0;
    long argmax = 0;
    double first_half = 0.0;
    double second_half = 0.0;
    // Improving tails excuse a high estimate; flat or rising ones convict.
    bool improving() const { return second_half < first_half - kMargin; }
};

template <typename ValueAt>
WindowStats window_scan(long n_begin, long n_end, ValueAt&& value_at) {
    WindowStats w;
    w.argmax = n_begin;
    long mid = n_begin + (n_end - n_begin) / 2;
    for (long n = n_begin; n <= n_end; ++n) {
        double v = value_at(n);
        if (v > w.overall) {
            w.overall = v;
            w.argmax = n;
        }
        if (n <= mid)
            w.first_half = std::max(w.first_half, v);
        else
            w.second_half = std::max(w.second_half, v);
    }
    if (n_end == n_begin) w.second_half = w.first_half;
    return w;
}

enum class TailCall { Accepted, Refuted, Undecided };

// One windowed threshold decision. `strict` marks the convergence reading
// (estimate must fall below the level); the Cauchy reading accepts equality.
TailCall classify(const WindowStats& w, double level, bool strict) {
    if (strict) {
        if (w.overall < level - kMargin)
            return w.second_half <= w.first_half + kMargin ? TailCall::Accepted
                                                           : TailCall::Undecided;
        if (w.overall > level + kMargin && !w.improving()) return TailCall::Refuted;
        return TailCall::Undecided;
    }
    if (w.overall <= level + kMargin) return TailCall::Accepted;
    return w.improving() ? TailCall::Undecided : TailCall::Refuted;
}

// Threshold small enough that the limiting membership of a nonzero offset
// provably exceeds the level: walk t = norm * 2^-j until the profile value
// crosses. Terminates because the shape carries value 1 toward u = 0.
double refuting_threshold(const DecayProfile& f, double offset_norm, double level) {
    double u = 1.0;
    for (int j = 0; j < 1100; ++j) {
        if (f(u) > level + kMargin) return u * offset_norm;
        u *= 0.5;
    }
    return offset_norm * 1e-300;
}

} // namespace

SequenceVerdict fuzzy_alpha_converges(const FuzzyAntiNorm& F, const VectorSequence& s,
                                      double alpha, const std::vector<double>& t_grid,
                                      long tail) {
    require_open_alpha(alpha);
    require_grid(t_grid);
    if (tail < 1)
        throw std::invalid_argument("fuzzy_alpha_converges: tail must be >= 1");
    if (!s.candidate_limit())
        throw std::invalid_argument("fuzzy_alpha_converges: sequence has no candidate limit");
    if (static_cast<int>(s.candidate_limit()->size()) != F.space().dimension())
        throw std::invalid_argument("fuzzy_alpha_converges: dimension mismatch");

    SequenceVerdict out;
    out.alpha = alpha;
    out.t_grid = t_grid;
    out.tail = tail;
    const double level = 1.0 - alpha;
    const Vector& limit = *s.candidate_limit();

    if (s.is_generator()) {
        out.analytic = true;
        const Vector off = limit_offset(s.generator(), limit);
        if (F.space().is_zero(off)) {
            // Tail membership dies at every threshold: the moving part
            // shrinks the normalized argument's denominator to zero.
            out.verdict = Verdict::Holds;
            out.worst_tail_value = 0.0;
            out.note = "closed form: tail membership is 0 at every threshold";
            return out;
        }
        const double off_norm = F.space().norm(off);
        out.verdict = Verdict::Fails;
        double worst = 0.0, worst_t = t_grid.front();
        for (double t : t_grid) {
            double v = F.profile()(t / off_norm);
            if (v > worst) {
                worst = v;
                worst_t = t;
            }
        }
        if (worst <= level + kMargin) {
            // No grid threshold refutes; pick one small enough that it does.
            worst_t = refuting_threshold(F.profile(), off_norm, level);
            worst = F.profile()(worst_t / off_norm);
        }
        out.worst_tail_value = worst;
        out.witness = std::make_pair(worst_t, 0L);
        out.note = "closed form: tail membership stays at the offset's profile value";
        return out;
    }

    const auto& pts = s.points();
    const long N = static_cast<long>(pts.size());
    if (tail > N)
        throw std::invalid_argument("fuzzy_alpha_converges: window longer than the list");
    const long n_begin = N - tail + 1;

    bool all_accepted = true;
    for (double t : t_grid) {
        WindowStats w = window_scan(n_begin, N, [&](long n) {
            return F.evaluate(pts[static_cast<std::size_t>(n - 1)] - limit, t);
        });
        out.worst_tail_value = std::max(out.worst_tail_value, w.overall);
        switch (classify(w, level, /*strict=*/true)) {
        case TailCall::Refuted:
            out.verdict = Verdict::Fails;
            out.witness = std::make_pair(t, w.argmax);
            out.note = "window maximum sits above the level with no improving trend";
            return out;
        case TailCall::Undecided:
            all_accepted = false;
            break;
        case TailCall::Accepted:
            break;
        }
    }
    out.verdict = all_accepted ? Verdict::Holds : Verdict::Inconclusive;
    if (!all_accepted)
        out.note = "window estimates straddle the level or trend is still moving";
    return out;
}

SequenceVerdict fuzzy_alpha_cauchy(const FuzzyAntiNorm& F, const VectorSequence& s,
                                   double alpha, const std::vector<double>& t_grid,
                                   long tail, int p_max) {
    require_open_alpha(alpha);
    require_grid(t_grid);
    if (tail < 1 || p_max < 1)
        throw std::invalid_argument("fuzzy_alpha_cauchy: tail and p_max must be >= 1");
    if (s.dimension() != F.space().dimension())
        throw std::invalid_argument("fuzzy_alpha_cauchy: dimension mismatch");

    SequenceVerdict out;
    out.alpha = alpha;
    out.t_grid = t_grid;
    out.tail = tail;

    if (s.is_generator()) {
        // Pair differences shrink to the zero vector under every rule
        // (identically zero for the constant rule), so the tail membership
        // of x_n - x_{n+p} dies at every threshold and every level.
        out.analytic = true;
        out.verdict = Verdict::Holds;
        out.worst_tail_value = 0.0;
        out.note = "closed form: pair differences vanish, tail membership is 0";
        return out;
    }

    const double level = 1.0 - alpha;
    const auto& pts = s.points();
    const long N = static_cast<long>(pts.size());
    if (N < tail + p_max)
        throw std::invalid_argument("fuzzy_alpha_cauchy: list too short for the window");
    const long n_begin = N - p_max - tail + 1;
    const long n_end = N - p_max;

    bool all_accepted = true;
    for (double t : t_grid) {
        WindowStats w = window_scan(n_begin, n_end, [&](long n) {
            double v = 0.0;
            for (int p = 1; p <= p_max; ++p) {
                const Vector& a = pts[static_cast<std::size_t>(n - 1)];
                const Vector& b = pts[static_cast<std::size_t>(n + p - 1)];
                v = std::max(v, F.evaluate(a - b, t));
            }
            return v;
        });
        out.worst_tail_value = std::max(out.worst_tail_value, w.overall);
        switch (classify(w, level, /*strict=*/false)) {
        case TailCall::Refuted:
            out.verdict = Verdict::Fails;
            out.witness = std::make_pair(t, w.argmax);
            out.note = "pair membership exceeds the level with no improving trend";
            return out;
        case TailCall::Undecided:
            all_accepted = false;
            break;
        case TailCall::Accepted:
            break;
        }
    }
    out.verdict = all_accepted ? Verdict::Holds : Verdict::Inconclusive;
    if (!all_accepted)
        out.note = "pair estimates straddle the level or trend is still moving";
    return out;
}

SequenceVerdict alpha_norm_converges(const AlphaNormFamily& A, const VectorSequence& s,
                                     double alpha, long tail) {
    require_open_alpha(alpha);
    if (tail < 1)
        throw std::invalid_argument("alpha_norm_converges: tail must be >= 1");
    if (!s.candidate_limit())
        throw std::invalid_argument("alpha_norm_converges: sequence has no candidate limit");
    const FuzzyAntiNorm& F = A.source();
    if (static_cast<int>(s.candidate_limit()->size()) != F.space().dimension())
        throw std::invalid_argument("alpha_norm_converges: dimension mismatch");

    SequenceVerdict out;
    out.alpha = alpha;
    out.tail = tail;
    const Vector& limit = *s.candidate_limit();

    if (s.is_generator()) {
        out.analytic = true;
        const Vector off = limit_offset(s.generator(), limit);
        double residual = F.space().is_zero(off) ? 0.0 : A.alpha_norm_value(off, alpha);
        out.worst_tail_value = residual;
        if (residual <= kNormTol) {
            out.verdict = Verdict::Holds;
            out.note = "closed form: tail level norm settles at the offset norm";
        } else {
            out.verdict = Verdict::Fails;
            out.witness = std::make_pair(residual, 0L);
            out.note = "closed form: tail level norm settles above tolerance";
        }
        return out;
    }

    const auto& pts = s.points();
    const long N = static_cast<long>(pts.size());
    if (tail > N)
        throw std::invalid_argument("alpha_norm_converges: window longer than the list");
    WindowStats w = window_scan(N - tail + 1, N, [&](long n) {
        const Vector d = pts[static_cast<std::size_t>(n - 1)] - limit;
        return F.space().is_zero(d) ? 0.0 : A.alpha_norm_value(d, alpha);
    });
    out.worst_tail_value = w.overall;
    if (w.overall <= kNormTol) {
        out.verdict = Verdict::Holds;
    } else if (w.improving()) {
        out.verdict = Verdict::Inconclusive;
        out.note = "tail norms above tolerance but still falling";
    } else {
        out.verdict = Verdict::Fails;
        out.witness = std::make_pair(w.overall, w.argmax);
    }
    return out;
}

EquivalenceReport equivalence_check(const FuzzyAntiNorm& F, const AlphaNormFamily& A,
                                    const VectorSequence& s,
                                    const std::vector<double>& alphas,
                                    const std::vector<double>& t_grid, long tail) {
    if (A.source().fingerprint() != F.fingerprint())
        throw std::invalid_argument(
            "equivalence_check: family was built from a different membership");
    if (alphas.empty())
        throw std::invalid_argument("equivalence_check: need at least one level");
    EquivalenceReport out;
    out.all_agree = true;
    for (double alpha : alphas) {
        EquivalenceRow row;
        row.alpha = alpha;
        row.fuzzy = fuzzy_alpha_converges(F, s, alpha, t_grid, tail).verdict;
        row.norm = alpha_norm_converges(A, s, alpha, tail).verdict;
        row.inconclusive =
            row.fuzzy == Verdict::Inconclusive || row.norm == Verdict::Inconclusive;
        row.agree = row.inconclusive || row.fuzzy == row.norm;
        out.all_agree = out.all_agree && row.agree;
        out.rows.push_back(row);
    }
    return out;
}

ImplicationReport implication_suite(const FuzzyAntiNorm& F, const AlphaNormFamily& A,
                                    const VectorSequence& s, double alpha,
                                    const std::vector<double>& t_grid, long tail,
                                    int p_max) {
    if (!s.candidate_limit())
        throw std::invalid_argument("implication_suite: sequence has no candidate limit");
    if (A.source().fingerprint() != F.fingerprint())
        throw std::invalid_argument(
            "implication_suite: family was built from a different membership");

    ImplicationReport out;
    SequenceVerdict conv = fuzzy_alpha_converges(F, s, alpha, t_grid, tail);
    SequenceVerdict cau = fuzzy_alpha_cauchy(F, s, alpha, t_grid, tail, p_max);
    out.converges = conv.verdict == Verdict::Holds;
    out.cauchy = cau.verdict == Verdict::Holds;
    // An implication is only refuted by a positive premise and a refuted
    // conclusion; an inconclusive conclusion neither helps nor convicts.
    out.converge_implies_cauchy = !(out.converges && cau.verdict == Verdict::Fails);

    if (s.is_generator()) {
        out.norm_cauchy = true;  // pair differences vanish in every level norm
    } else {
        const auto& pts = s.points();
        const long N = static_cast<long>(pts.size());
        if (N < tail + p_max)
            throw std::invalid_argument("implication_suite: list too short for the window");
        WindowStats w = window_scan(N - p_max - tail + 1, N - p_max, [&](long n) {
            double v = 0.0;
            for (int p = 1; p <= p_max; ++p) {
                const Vector d = pts[static_cast<std::size_t>(n - 1)] -
                                 pts[static_cast<std::size_t>(n + p - 1)];
                v = std::max(v, F.space().is_zero(d) ? 0.0 : A.alpha_norm_value(d, alpha));
            }
            return v;
        });
        out.norm_cauchy = w.overall <= kNormTol;
    }
    out.norm_cauchy_implies_fuzzy = !(out.norm_cauchy && cau.verdict == Verdict::Fails);

    // Second candidate limit: shift by the direction (lists: by the final
    // offset); a genuinely convergent sequence must reject it.
    const Vector& limit = *s.candidate_limit();
    Vector shift;
    if (s.is_generator())
        shift = s.generator().direction;
    else
        shift = s.points().back() - limit;
    if (F.space().is_zero(shift)) {
        shift = Vector::Zero(limit.size());
        shift[0] = 1.0;
    }
    Vector second = limit + shift;
    SequenceVerdict conv2 =
        s.is_generator()
            ? fuzzy_alpha_converges(F, VectorSequence(s.generator(), second), alpha,
                                    t_grid, tail)
            : fuzzy_alpha_converges(F, VectorSequence(s.points(), second), alpha,
                                    t_grid, tail);
    out.second_limit_accepted = conv2.verdict == Verdict::Holds;
    if (out.converges && out.second_limit_accepted) {
        out.limit_gap = F.space().norm(second - limit);
        out.uniqueness_holds = out.limit_gap <= 1e-8;
    }
    out.pass = out.converge_implies_cauchy && out.norm_cauchy_implies_fuzzy &&
               out.uniqueness_holds;
    return out;
}

} // namespace antinorm
