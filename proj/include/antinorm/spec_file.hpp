#pragma once

#include "antinorm/fuzzy_antinorm.hpp"
#include "antinorm/riesz.hpp"
#include "antinorm/sequences.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace antinorm {

// Parse failure with file:line context. what() carries the full message.
class SpecParseError : public std::runtime_error {
public:
    SpecParseError(const std::string& file, int line, const std::string& message);
    int line() const noexcept { return line_; }

private:
    int line_;
};

// Plain-text space description:
//
//   # comment
//   dimension 2
//   base_norm euclidean            (or: maximum | p-norm 2.5)
//   profile reciprocal 1           (or: step | exponential 2 |
//                                       tabulated 0.5:1 1:0.5 4:0)
//   conorm maximum                 (or: probabilistic-sum | bounded-sum |
//                                       broken-product)
//   subspace W {
//     basis 1 0
//   }
//   sequence s {
//     generator harmonic           (or: inverse-square | geometric 0.5 |
//                                       constant)
//     base 0 0
//     direction 1 1
//     limit 0 0
//   }
//   sequence explicit_list {
//     point 1 0
//     point 0.5 0
//     limit 0 0
//   }
//
// dimension must precede any vector-valued line. Unknown keys, duplicate
// scalars, arity mismatches and malformed numbers all fail with the
// offending line.
struct NamedSubspace {
    std::string name;
    std::vector<Vector> basis;
};
struct NamedSequence {
    std::string name;
    VectorSequence sequence;
};

struct SpaceSpecFile {
    int dimension = 0;
    BaseNormKind norm_kind = BaseNormKind::Euclidean;
    double p = 2.0;
    ProfileKind profile_kind = ProfileKind::Reciprocal;
    double profile_param = 1.0;
    std::vector<ProfileKnot> profile_knots;
    TConormKind conorm = TConormKind::Maximum;
    std::vector<NamedSubspace> subspaces;
    std::vector<NamedSequence> sequences;

    VectorSpaceSpec build_space() const;
    DecayProfile build_profile() const;
    FuzzyAntiNorm build_antinorm() const;
    Subspace build_subspace(const std::string& name) const;
    const VectorSequence& find_sequence(const std::string& name) const;
};

SpaceSpecFile parse_space_spec(std::istream& in, const std::string& filename);
SpaceSpecFile load_space_spec(const std::string& path);

// FNV-1a of the raw file bytes, rendered as 16 hex digits.
std::string digest_file(const std::string& path);

} // namespace antinorm
