#include "antinorm/spec_file.hpp"

#include "antinorm/sampling.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

namespace antinorm {

SpecParseError::SpecParseError(const std::string& file, int line, const std::string& message)
    : std::runtime_error(file + ":" + std::to_string(line) + ": " + message), line_(line) {}

namespace {

struct Cursor {
    const std::string& file;
    int line = 0;
};

[[noreturn]] void fail(const Cursor& cur, const std::string& message) {
    throw SpecParseError(cur.file, cur.line, message);
}

std::vector<std::string> tokenize(const std::string& raw) {
    std::string line = raw;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

double parse_number(const Cursor& cur, const std::string& tok, const char* what) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        fail(cur, std::string("malformed ") + what + " '" + tok + "'");
    return v;
}

int parse_int(const Cursor& cur, const std::string& tok, const char* what) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        fail(cur, std::string("malformed ") + what + " '" + tok + "'");
    return v;
}

// Components of a vector-valued line; the dimension must already be known.
Vector parse_vector(const Cursor& cur, const std::vector<std::string>& tokens,
                    std::size_t first, int dimension, const char* what) {
    if (dimension <= 0)
        fail(cur, "dimension must be declared before any vector line");
    if (tokens.size() - first != static_cast<std::size_t>(dimension))
        fail(cur, std::string(what) + " expects " + std::to_string(dimension) +
                      " components, got " + std::to_string(tokens.size() - first));
    Vector v(dimension);
    for (int i = 0; i < dimension; ++i)
        v[i] = parse_number(cur, tokens[first + static_cast<std::size_t>(i)], what);
    return v;
}

struct OpenSequence {
    std::string name;
    std::optional<SequenceGenerator> gen;
    bool have_base = false, have_direction = false;
    std::vector<Vector> points;
    std::optional<Vector> limit;
    int declared_line = 0;
};

struct OpenSubspace {
    std::string name;
    std::vector<Vector> basis;
    int declared_line = 0;
};

} // namespace

SpaceSpecFile parse_space_spec(std::istream& in, const std::string& filename) {
    SpaceSpecFile out;
    Cursor cur{filename, 0};
    bool have_dim = false, have_norm = false, have_profile = false, have_conorm = false;
    std::optional<OpenSubspace> sub;
    std::optional<OpenSequence> seq;

    auto close_subspace = [&]() {
        // An empty basis block is legal: it names the zero subspace.
        for (const auto& s : out.subspaces)
            if (s.name == sub->name) fail(cur, "duplicate subspace '" + sub->name + "'");
        out.subspaces.push_back({sub->name, std::move(sub->basis)});
        sub.reset();
    };
    auto close_sequence = [&]() {
        for (const auto& s : out.sequences)
            if (s.name == seq->name) fail(cur, "duplicate sequence '" + seq->name + "'");
        if (seq->gen && !seq->points.empty())
            fail(cur, "sequence '" + seq->name + "' mixes a generator with explicit points");
        if (seq->gen) {
            if (!seq->have_base || !seq->have_direction)
                fail(cur, "sequence '" + seq->name + "' needs base and direction");
            out.sequences.push_back({seq->name, VectorSequence(*seq->gen, seq->limit)});
        } else if (!seq->points.empty()) {
            if (seq->have_base || seq->have_direction)
                fail(cur, "sequence '" + seq->name + "' has base/direction without a generator");
            out.sequences.push_back({seq->name, VectorSequence(seq->points, seq->limit)});
        } else {
            fail(cur, "sequence '" + seq->name + "' is empty");
        }
        seq.reset();
    };

    std::string raw;
    while (std::getline(in, raw)) {
        ++cur.line;
        auto tokens = tokenize(raw);
        if (tokens.empty()) continue;
        const std::string& key = tokens[0];

        if (sub) {
            if (key == "}") {
                if (tokens.size() != 1) fail(cur, "unexpected tokens after '}'");
                close_subspace();
            } else if (key == "basis") {
                sub->basis.push_back(parse_vector(cur, tokens, 1, out.dimension, "basis"));
            } else {
                fail(cur, "unknown key '" + key + "' inside subspace block");
            }
            continue;
        }

        if (seq) {
            if (key == "}") {
                if (tokens.size() != 1) fail(cur, "unexpected tokens after '}'");
                close_sequence();
            } else if (key == "generator") {
                if (seq->gen) fail(cur, "duplicate generator line");
                if (tokens.size() < 2) fail(cur, "generator needs a rule name");
                SequenceGenerator g;
                g.base = Vector::Zero(out.dimension);
                g.direction = Vector::Zero(out.dimension);
                const std::string& rule = tokens[1];
                if (rule == "harmonic") {
                    g.rule = RateRule::Harmonic;
                } else if (rule == "inverse-square") {
                    g.rule = RateRule::InverseSquare;
                } else if (rule == "geometric") {
                    g.rule = RateRule::Geometric;
                    if (tokens.size() != 3) fail(cur, "geometric needs a ratio");
                    g.ratio = parse_number(cur, tokens[2], "ratio");
                    if (!(g.ratio > 0.0 && g.ratio < 1.0))
                        fail(cur, "geometric ratio must lie in (0,1)");
                } else if (rule == "constant") {
                    g.rule = RateRule::Constant;
                } else {
                    fail(cur, "unknown generator rule '" + rule + "'");
                }
                if (rule != "geometric" && tokens.size() != 2)
                    fail(cur, "unexpected tokens after generator rule");
                seq->gen = g;
            } else if (key == "base") {
                if (seq->have_base) fail(cur, "duplicate base line");
                Vector v = parse_vector(cur, tokens, 1, out.dimension, "base");
                if (!seq->gen) fail(cur, "base must follow a generator line");
                seq->gen->base = v;
                seq->have_base = true;
            } else if (key == "direction") {
                if (seq->have_direction) fail(cur, "duplicate direction line");
                Vector v = parse_vector(cur, tokens, 1, out.dimension, "direction");
                if (!seq->gen) fail(cur, "direction must follow a generator line");
                seq->gen->direction = v;
                seq->have_direction = true;
            } else if (key == "limit") {
                if (seq->limit) fail(cur, "duplicate limit line");
                seq->limit = parse_vector(cur, tokens, 1, out.dimension, "limit");
            } else if (key == "point") {
                seq->points.push_back(parse_vector(cur, tokens, 1, out.dimension, "point"));
            } else {
                fail(cur, "unknown key '" + key + "' inside sequence block");
            }
            continue;
        }

        if (key == "dimension") {
            if (have_dim) fail(cur, "duplicate dimension");
            if (tokens.size() != 2) fail(cur, "dimension expects one integer");
            out.dimension = parse_int(cur, tokens[1], "dimension");
            if (out.dimension < 1) fail(cur, "dimension must be >= 1");
            have_dim = true;
        } else if (key == "base_norm") {
            if (have_norm) fail(cur, "duplicate base_norm");
            if (tokens.size() < 2) fail(cur, "base_norm expects a name");
            auto kind = base_norm_from_name(tokens[1]);
            if (!kind) fail(cur, "unknown base norm '" + tokens[1] + "'");
            out.norm_kind = *kind;
            if (*kind == BaseNormKind::PNorm) {
                if (tokens.size() != 3) fail(cur, "p-norm expects an exponent");
                out.p = parse_number(cur, tokens[2], "exponent");
                if (!(out.p >= 1.0)) fail(cur, "p-norm exponent must be >= 1");
            } else if (tokens.size() != 2) {
                fail(cur, "unexpected tokens after base norm name");
            }
            have_norm = true;
        } else if (key == "profile") {
            if (have_profile) fail(cur, "duplicate profile");
            if (tokens.size() < 2) fail(cur, "profile expects a shape name");
            const std::string& shape = tokens[1];
            if (shape == "reciprocal" || shape == "exponential") {
                if (tokens.size() != 3) fail(cur, shape + " expects one parameter");
                out.profile_kind = shape == "reciprocal" ? ProfileKind::Reciprocal
                                                         : ProfileKind::Exponential;
                out.profile_param = parse_number(cur, tokens[2], "parameter");
                if (!(out.profile_param > 0.0)) fail(cur, shape + " parameter must be > 0");
            } else if (shape == "step") {
                if (tokens.size() != 2) fail(cur, "unexpected tokens after 'step'");
                out.profile_kind = ProfileKind::Step;
            } else if (shape == "tabulated") {
                if (tokens.size() < 3) fail(cur, "tabulated expects u:f pairs");
                out.profile_kind = ProfileKind::Tabulated;
                for (std::size_t i = 2; i < tokens.size(); ++i) {
                    auto colon = tokens[i].find(':');
                    if (colon == std::string::npos)
                        fail(cur, "knot '" + tokens[i] + "' is not of the form u:f");
                    ProfileKnot kn;
                    kn.u = parse_number(cur, tokens[i].substr(0, colon), "knot abscissa");
                    kn.f = parse_number(cur, tokens[i].substr(colon + 1), "knot value");
                    out.profile_knots.push_back(kn);
                }
            } else {
                fail(cur, "unknown profile shape '" + shape + "'");
            }
            have_profile = true;
        } else if (key == "conorm") {
            if (have_conorm) fail(cur, "duplicate conorm");
            if (tokens.size() != 2) fail(cur, "conorm expects a name");
            auto kind = tconorm_from_name(tokens[1]);
            if (!kind) fail(cur, "unknown conorm '" + tokens[1] + "'");
            out.conorm = *kind;
            have_conorm = true;
        } else if (key == "subspace") {
            if (tokens.size() != 3 || tokens[2] != "{")
                fail(cur, "subspace expects: subspace NAME {");
            if (!have_dim) fail(cur, "dimension must be declared before any subspace");
            sub = OpenSubspace{tokens[1], {}, cur.line};
        } else if (key == "sequence") {
            if (tokens.size() != 3 || tokens[2] != "{")
                fail(cur, "sequence expects: sequence NAME {");
            if (!have_dim) fail(cur, "dimension must be declared before any sequence");
            seq = OpenSequence{};
            seq->name = tokens[1];
            seq->declared_line = cur.line;
        } else {
            fail(cur, "unknown key '" + key + "'");
        }
    }

    if (sub) fail(cur, "unterminated subspace '" + sub->name + "'");
    if (seq) fail(cur, "unterminated sequence '" + seq->name + "'");
    if (!have_dim) fail(cur, "missing required key 'dimension'");
    if (!have_norm) fail(cur, "missing required key 'base_norm'");
    if (!have_profile) fail(cur, "missing required key 'profile'");
    if (!have_conorm) fail(cur, "missing required key 'conorm'");
    return out;
}

SpaceSpecFile load_space_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    return parse_space_spec(in, path);
}

std::string digest_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string bytes = buf.str();
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return hex;
}

VectorSpaceSpec SpaceSpecFile::build_space() const {
    return VectorSpaceSpec(dimension, norm_kind, p);
}

DecayProfile SpaceSpecFile::build_profile() const {
    switch (profile_kind) {
    case ProfileKind::Reciprocal:  return DecayProfile::reciprocal(profile_param);
    case ProfileKind::Step:        return DecayProfile::step();
    case ProfileKind::Exponential: return DecayProfile::exponential(profile_param);
    case ProfileKind::Tabulated:   return DecayProfile::tabulated(profile_knots);
    }
    throw std::logic_error("SpaceSpecFile: unknown profile kind");
}

FuzzyAntiNorm SpaceSpecFile::build_antinorm() const {
    return FuzzyAntiNorm(build_space(), build_profile(), TConorm(conorm));
}

Subspace SpaceSpecFile::build_subspace(const std::string& name) const {
    for (const auto& s : subspaces)
        if (s.name == name) return Subspace(dimension, s.basis);
    throw std::invalid_argument("unknown subspace '" + name + "'");
}

const VectorSequence& SpaceSpecFile::find_sequence(const std::string& name) const {
    for (const auto& s : sequences)
        if (s.name == name) return s.sequence;
    throw std::invalid_argument("unknown sequence '" + name + "'");
}

} // namespace antinorm
