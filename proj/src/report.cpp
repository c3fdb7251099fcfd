#include "antinorm/report.hpp"

#include <algorithm>
#include <charconv>

namespace antinorm {

bool AxiomReport::all_pass() const noexcept {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

const CheckResult* AxiomReport::find(std::string_view id) const noexcept {
    for (const auto& c : checks)
        if (c.id == id) return &c;
    return nullptr;
}

const ConditionFlag* AxiomReport::find_flag(std::string_view id) const noexcept {
    for (const auto& f : flags)
        if (f.id == id) return &f;
    return nullptr;
}

std::string format_double(double v) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) return "?";
    return std::string(buf, end);
}

namespace {

void render_witness(std::string& out, const std::vector<WitnessValue>& witness) {
    if (witness.empty()) return;
    out += "  witness:";
    for (const auto& w : witness) {
        out += ' ';
        out += w.name;
        out += '=';
        out += format_double(w.value);
    }
    out += '\n';
}

} // namespace

void render_axiom_report(std::string& out, const AxiomReport& report) {
    out += "subject: ";
    out += report.subject;
    out += "\nseed: ";
    out += std::to_string(report.seed);
    out += '\n';
    for (const auto& c : report.checks) {
        out += "check: ";
        out += c.id;
        out += "\n  result: ";
        out += c.pass ? "pass" : "FAIL";
        out += "\n  samples: ";
        out += std::to_string(c.samples);
        out += "\n  violation: ";
        out += format_double(c.worst_violation);
        out += "\n  drift: ";
        out += format_double(c.worst_drift);
        out += '\n';
        render_witness(out, c.witness);
        if (!c.caveat.empty()) {
            out += "  caveat: ";
            out += c.caveat;
            out += '\n';
        }
    }
    for (const auto& f : report.flags) {
        out += "flag: ";
        out += f.id;
        out += "\n  satisfied: ";
        out += f.satisfied ? "yes" : "no";
        out += '\n';
        if (!f.note.empty()) {
            out += "  note: ";
            out += f.note;
            out += '\n';
        }
        render_witness(out, f.witness);
    }
    out += "overall: ";
    out += report.all_pass() ? "pass" : "FAIL";
    out += '\n';
}

} // namespace antinorm
