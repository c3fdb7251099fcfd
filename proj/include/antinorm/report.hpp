#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace antinorm {

// One named scalar of a replay witness, e.g. {"a", 0.42}. A witness carries
// every input needed to re-evaluate the reported violation.
struct WitnessValue {
    std::string name;
    double value = 0.0;
};

struct CheckResult {
    std::string id;                     // e.g. "tconorm/identity"
    bool pass = false;
    long samples = 0;
    // Excess over the check's documented contract; pass == (worst_violation
    // is 0), uniformly across checks whatever slack the contract grants.
    double worst_violation = 0.0;
    // Raw measured deviation (drift, ulp count, gap) before the contract is
    // applied; informational.
    double worst_drift = 0.0;
    std::vector<WitnessValue> witness;  // empty when nothing was violated
    std::string caveat;                 // non-fatal qualification, "" if none
};

// Auxiliary hypothesis flag. Not counted against all_pass(): a shape may be
// admitted while failing a hypothesis some downstream op needs.
struct ConditionFlag {
    std::string id;
    bool satisfied = false;
    std::string note;
    std::vector<WitnessValue> witness;
};

struct AxiomReport {
    std::string subject;
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;
    std::vector<ConditionFlag> flags;

    bool all_pass() const noexcept;
    const CheckResult* find(std::string_view id) const noexcept;
    const ConditionFlag* find_flag(std::string_view id) const noexcept;
};

// Shortest round-trip decimal form via std::to_chars: locale-independent,
// deterministic, re-parses to the identical bits.
std::string format_double(double v);

// Fixed-order plain-text rendering used by the CLI and by report files.
void render_axiom_report(std::string& out, const AxiomReport& report);

} // namespace antinorm
