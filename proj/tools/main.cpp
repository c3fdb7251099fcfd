// Command-line front end. Every run is a pure function of its arguments and
// the input file: reports carry the tool version and an input digest but no
// timestamps or environment, so identical invocations produce identical
// bytes. Exit code 0 means every mathematical check passed, 1 means some
// check failed, 2 means the input or usage was invalid.

#include "antinorm/alpha_cut.hpp"
#include "antinorm/fuzzy_antinorm.hpp"
#include "antinorm/report.hpp"
#include "antinorm/riesz.hpp"
#include "antinorm/sequences.hpp"
#include "antinorm/spec_file.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr const char* kVersion = "0.1.0";

using antinorm::format_double;
using antinorm::Vector;

struct CommonArgs {
    std::string spec_path;
    std::uint64_t seed = 7;
    std::string out_path;
    std::string csv_dir;
};

void add_common(CLI::App* cmd, CommonArgs& c) {
    cmd->add_option("spec", c.spec_path, "space description file")->required();
    cmd->add_option("--seed", c.seed, "sampling seed");
    cmd->add_option("--out", c.out_path, "write the report to this file instead of stdout");
    cmd->add_option("--csv", c.csv_dir, "directory receiving CSV artifacts");
}

std::vector<double> parse_double_list(const std::string& text, const char* what) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string tok = text.substr(pos, comma - pos);
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument(std::string("malformed ") + what + " '" + tok + "'");
        out.push_back(v);
        pos = comma + 1;
    }
    if (out.empty())
        throw std::invalid_argument(std::string(what) + " list is empty");
    return out;
}

Vector parse_vector_arg(const std::string& text, int dimension) {
    auto vals = parse_double_list(text, "vector component");
    if (static_cast<int>(vals.size()) != dimension)
        throw std::invalid_argument("--x expects " + std::to_string(dimension) +
                                    " components, got " + std::to_string(vals.size()));
    Vector x(dimension);
    for (int i = 0; i < dimension; ++i) x[i] = vals[static_cast<std::size_t>(i)];
    return x;
}

void emit_report(const CommonArgs& c, const std::string& report) {
    if (c.out_path.empty()) {
        std::cout << report;
        return;
    }
    std::ofstream f(c.out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + c.out_path + "'");
    f << report;
}

void write_csv(const CommonArgs& c, const std::string& name, const std::string& body) {
    if (c.csv_dir.empty()) return;
    std::filesystem::create_directories(c.csv_dir);
    auto path = std::filesystem::path(c.csv_dir) / name;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open '" + path.string() + "'");
    f << body;
}

std::string report_header(const CommonArgs& c, const char* command) {
    std::string out = "antinorm-report\n";
    out += "version: ";
    out += kVersion;
    out += "\ncommand: ";
    out += command;
    out += "\ninput: " + c.spec_path;
    out += "\ninput_digest: " + antinorm::digest_file(c.spec_path);
    out += "\nseed: " + std::to_string(c.seed);
    out += '\n';
    return out;
}

std::string describe_subject(const antinorm::FuzzyAntiNorm& F) {
    std::string out = "space: " + F.space().describe() + '\n';
    out += "profile: " + F.profile().describe() + '\n';
    out += "conorm: ";
    out += F.conorm().name();
    out += '\n';
    return out;
}

int finish(const CommonArgs& c, std::string report, bool ok) {
    report += "exit: ";
    report += ok ? "pass" : "FAIL";
    report += '\n';
    emit_report(c, report);
    return ok ? 0 : 1;
}

int run_check_axioms(const CommonArgs& c, long samples) {
    auto spec = antinorm::load_space_spec(c.spec_path);
    auto F = spec.build_antinorm();
    std::string rep = report_header(c, "check-axioms");
    rep += describe_subject(F);
    rep += "samples: " + std::to_string(samples) + '\n';
    auto conorms = antinorm::verify_tconorm_axioms(F.conorm(), samples, c.seed);
    auto memberships = antinorm::verify_antinorm_axioms(F, samples, c.seed);
    rep += "--- aggregation axioms ---\n";
    antinorm::render_axiom_report(rep, conorms);
    rep += "--- membership axioms ---\n";
    antinorm::render_axiom_report(rep, memberships);
    return finish(c, std::move(rep), conorms.all_pass() && memberships.all_pass());
}

int run_alpha_table(const CommonArgs& c, const std::string& x_text,
                    const std::string& alpha_text) {
    auto spec = antinorm::load_space_spec(c.spec_path);
    auto F = spec.build_antinorm();
    antinorm::AlphaNormFamily A(F);
    Vector x = parse_vector_arg(x_text, spec.dimension);
    auto alphas = parse_double_list(alpha_text, "alpha");

    std::string rep = report_header(c, "alpha-table");
    rep += describe_subject(F);
    rep += "x:";
    for (int i = 0; i < x.size(); ++i) rep += ' ' + format_double(x[i]);
    rep += '\n';

    std::string csv = "alpha,scale,alpha_norm,bisection_rel_gap\n";
    bool ok = true;
    double worst_rel = 0.0;
    for (double alpha : alphas) {
        double q = A.scale(alpha);
        double qb = A.scale_by_bisection(alpha);
        double rel = std::fabs(qb - q) / std::max(q, 1e-300);
        worst_rel = std::max(worst_rel, rel);
        double norm = A.alpha_norm_value(x, alpha);
        rep += "alpha " + format_double(alpha) + ": scale " + format_double(q) +
               ", norm " + format_double(norm) + ", bisection_rel_gap " +
               format_double(rel) + '\n';
        csv += format_double(alpha) + ',' + format_double(q) + ',' +
               format_double(norm) + ',' + format_double(rel) + '\n';
        if (rel > 1e-9) ok = false;
    }

    // The family must be ascending in alpha with no tolerance at all.
    std::vector<double> sorted(alphas);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (A.alpha_norm_value(x, sorted[i - 1]) > A.alpha_norm_value(x, sorted[i])) {
            rep += "ordering violated between " + format_double(sorted[i - 1]) +
                   " and " + format_double(sorted[i]) + '\n';
            ok = false;
        }
    }
    rep += "ascending: " + std::string(ok ? "yes" : "no") + '\n';
    rep += "worst_bisection_rel_gap: " + format_double(worst_rel) + '\n';
    write_csv(c, "alpha_table.csv", csv);
    return finish(c, std::move(rep), ok);
}

int run_roundtrip(const CommonArgs& c, int x_samples, int t_samples) {
    auto spec = antinorm::load_space_spec(c.spec_path);
    auto F = spec.build_antinorm();
    antinorm::AlphaNormFamily A(F);
    auto result = antinorm::round_trip_error(A, x_samples, t_samples, c.seed);

    std::string rep = report_header(c, "roundtrip");
    rep += describe_subject(F);
    rep += "x_samples: " + std::to_string(x_samples) + '\n';
    rep += "t_samples: " + std::to_string(t_samples) + '\n';
    rep += "sup_error: " + format_double(result.sup_error) + '\n';
    if (result.continuity_caveat)
        rep += "caveat: shape has jumps; equality can break exactly at a jump "
               "threshold\n";

    std::string csv = "x_id,t,nu,nu_rebuilt,error\n";
    for (const auto& row : result.grid)
        csv += std::to_string(row.x_id) + ',' + format_double(row.t) + ',' +
               format_double(row.nu) + ',' + format_double(row.nu_rebuilt) + ',' +
               format_double(row.error) + '\n';
    write_csv(c, "roundtrip.csv", csv);
    return finish(c, std::move(rep), result.sup_error <= 1e-6);
}

int run_converge(const CommonArgs& c, const std::string& sequence_name,
                 const std::string& alpha_text, const std::string& t_grid_text,
                 long tail, int p_max) {
    auto spec = antinorm::load_space_spec(c.spec_path);
    auto F = spec.build_antinorm();
    antinorm::AlphaNormFamily A(F);
    const antinorm::VectorSequence& s = spec.find_sequence(sequence_name);
    auto alphas = parse_double_list(alpha_text, "alpha");
    auto t_grid = t_grid_text.empty() ? antinorm::default_t_grid()
                                      : parse_double_list(t_grid_text, "threshold");

    std::string rep = report_header(c, "converge");
    rep += describe_subject(F);
    rep += "sequence: " + sequence_name + '\n';
    rep += "tail: " + std::to_string(tail) + '\n';
    rep += "p_max: " + std::to_string(p_max) + '\n';

    bool ok = true;
    for (double alpha : alphas) {
        auto conv = antinorm::fuzzy_alpha_converges(F, s, alpha, t_grid, tail);
        auto cauchy = antinorm::fuzzy_alpha_cauchy(F, s, alpha, t_grid, tail, p_max);
        auto norm = antinorm::alpha_norm_converges(A, s, alpha, tail);
        auto impl = antinorm::implication_suite(F, A, s, alpha, t_grid, tail, p_max);
        bool agree = conv.verdict == antinorm::Verdict::Inconclusive ||
                     norm.verdict == antinorm::Verdict::Inconclusive ||
                     conv.verdict == norm.verdict;
        rep += "--- level " + format_double(alpha) + " ---\n";
        rep += std::string("fuzzy-convergence: ") + antinorm::verdict_name(conv.verdict) +
               " (tail max " + format_double(conv.worst_tail_value) + ")";
        if (conv.analytic) rep += " [closed form]";
        rep += '\n';
        if (conv.witness)
            rep += "  refuted at t=" + format_double(conv.witness->first) + " n=" +
                   std::to_string(conv.witness->second) + '\n';
        rep += std::string("fuzzy-cauchy: ") + antinorm::verdict_name(cauchy.verdict) +
               " (tail max " + format_double(cauchy.worst_tail_value) + ")\n";
        rep += std::string("norm-convergence: ") + antinorm::verdict_name(norm.verdict) +
               " (tail max " + format_double(norm.worst_tail_value) + ")\n";
        rep += std::string("verdict-agreement: ") + (agree ? "yes" : "NO") + '\n';
        rep += std::string("implications: ") + (impl.pass ? "pass" : "FAIL") +
               " (converge=>cauchy " + (impl.converge_implies_cauchy ? "ok" : "BROKEN") +
               ", norm-cauchy=>fuzzy " + (impl.norm_cauchy_implies_fuzzy ? "ok" : "BROKEN") +
               ", unique-limit " + (impl.uniqueness_holds ? "ok" : "BROKEN") + ")\n";
        ok = ok && agree && impl.pass;
    }

    // Tail trace: the window the verdicts actually looked at (a horizon
    // window for generated sequences).
    if (!c.csv_dir.empty() && s.candidate_limit()) {
        const Vector& limit = *s.candidate_limit();
        long n_end = s.is_generator() ? 10000 : s.size();
        long n_begin = std::max<long>(1, n_end - tail + 1);
        std::string csv = "t,n,membership\n";
        for (double t : t_grid)
            for (long n = n_begin; n <= n_end; ++n) {
                double v = F.evaluate(s.term(n) - limit, t);
                csv += format_double(t) + ',' + std::to_string(n) + ',' +
                       format_double(v) + '\n';
            }
        write_csv(c, "converge_trace.csv", csv);
    }
    return finish(c, std::move(rep), ok);
}

int run_riesz(const CommonArgs& c, const std::string& subspace_name, double alpha,
              double eps, long samples) {
    auto spec = antinorm::load_space_spec(c.spec_path);
    auto F = spec.build_antinorm();
    antinorm::AlphaNormFamily A(F);
    antinorm::Subspace W = spec.build_subspace(subspace_name);

    std::string rep = report_header(c, "riesz");
    rep += describe_subject(F);
    rep += "subspace: " + subspace_name + " (rank " + std::to_string(W.rank()) + ")\n";
    rep += "alpha: " + format_double(alpha) + '\n';
    rep += "eps: " + format_double(eps) + '\n';

    antinorm::RieszWitness w;
    try {
        w = antinorm::riesz_witness(A, alpha, eps, W);
    } catch (const std::runtime_error& e) {
        rep += std::string("construction: FAILED (") + e.what() + ")\n";
        return finish(c, std::move(rep), false);
    }
    rep += "witness:";
    for (int i = 0; i < w.y.size(); ++i) rep += ' ' + format_double(w.y[i]);
    rep += '\n';
    rep += "picked_axis: " + std::to_string(w.picked_axis) + '\n';
    rep += "unit_norm: " + format_double(w.unit_norm) + '\n';
    rep += "distance_lower_bound: " + format_double(w.distance_lower_bound) + '\n';

    auto audit = antinorm::verify_witness(A, alpha, eps, w.y, W, samples, c.seed);
    rep += std::string("unit-ball line: ") + (audit.membership_at_one_ok ? "ok" : "FAIL") +
           " (membership at 1 = " + format_double(audit.membership_at_one) + ")\n";
    rep += std::string("distance line: ") + (audit.distance_form_ok ? "ok" : "FAIL") +
           " (worst margin " + format_double(audit.worst_membership_margin) + " over " +
           std::to_string(audit.samples) + " samples)\n";
    rep += "crisp_distance: " + format_double(audit.crisp_distance) + '\n';

    auto probe = antinorm::compactness_probe(A, alpha, samples, c.seed);
    rep += std::string("unit-ball bounded: ") + (probe.bounded_ok ? "ok" : "FAIL") +
           " (worst in-set radius " + format_double(probe.worst_in_set_radius) +
           " against bound " + format_double(probe.radius_bound) + ")\n";
    rep += std::string("unit-ball closed: ") + (probe.closed_ok ? "ok" : "FAIL") + '\n';

    std::string csv = "component,value\n";
    for (int i = 0; i < w.y.size(); ++i)
        csv += std::to_string(i) + ',' + format_double(w.y[i]) + '\n';
    write_csv(c, "riesz_witness.csv", csv);
    return finish(c, std::move(rep), audit.pass && probe.pass);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"fuzzy anti-norm toolkit"};
    app.require_subcommand(1);

    CommonArgs check_args;
    long check_samples = 10000;
    auto* check = app.add_subcommand("check-axioms", "verify the axiom suite numerically");
    add_common(check, check_args);
    check->add_option("--samples", check_samples, "draws per check");

    CommonArgs table_args;
    std::string table_x, table_alphas = "0.25,0.5,0.75";
    auto* table = app.add_subcommand("alpha-table", "threshold norms across levels");
    add_common(table, table_args);
    table->add_option("--x", table_x, "vector, comma separated")->required();
    table->add_option("--alpha", table_alphas, "levels, comma separated");

    CommonArgs round_args;
    int round_x = 100, round_t = 100;
    auto* round = app.add_subcommand("roundtrip", "membership reconstruction error");
    add_common(round, round_args);
    round->add_option("--x-samples", round_x, "sampled vectors");
    round->add_option("--t-samples", round_t, "thresholds per vector");

    CommonArgs conv_args;
    std::string conv_sequence, conv_alphas = "0.1,0.5,0.9", conv_grid;
    long conv_tail = 100;
    int conv_pmax = 8;
    auto* conv = app.add_subcommand("converge", "tail diagnosis of a named sequence");
    add_common(conv, conv_args);
    conv->add_option("--sequence", conv_sequence, "sequence name")->required();
    conv->add_option("--alpha", conv_alphas, "levels, comma separated");
    conv->add_option("--t-grid", conv_grid, "thresholds, comma separated");
    conv->add_option("--tail", conv_tail, "window length");
    conv->add_option("--p-max", conv_pmax, "gap bound for the pair check");

    CommonArgs riesz_args;
    std::string riesz_subspace;
    double riesz_alpha = 0.5, riesz_eps = 0.1;
    long riesz_samples = 1000;
    auto* riesz = app.add_subcommand("riesz", "near-unit witness far from a subspace");
    add_common(riesz, riesz_args);
    riesz->add_option("--subspace", riesz_subspace, "subspace name")->required();
    riesz->add_option("--alpha", riesz_alpha, "level in (0,1)");
    riesz->add_option("--eps", riesz_eps, "separation slack in (0,1)");
    riesz->add_option("--samples", riesz_samples, "audit draws");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return run_check_axioms(check_args, check_samples);
        if (table->parsed()) return run_alpha_table(table_args, table_x, table_alphas);
        if (round->parsed()) return run_roundtrip(round_args, round_x, round_t);
        if (conv->parsed())
            return run_converge(conv_args, conv_sequence, conv_alphas, conv_grid,
                                conv_tail, conv_pmax);
        if (riesz->parsed())
            return run_riesz(riesz_args, riesz_subspace, riesz_alpha, riesz_eps,
                             riesz_samples);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
