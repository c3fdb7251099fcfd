#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(ANTINORM_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe))
        r.output.append(buf, got);
    int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    r.code = WEXITSTATUS(status);
    return r;
}

fs::path scratch_dir() {
    auto dir = fs::temp_directory_path() / "antinorm_cli_test";
    fs::create_directories(dir);
    return dir;
}

std::string write_spec(const std::string& name, const std::string& content) {
    auto path = scratch_dir() / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path.string();
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int count_occurrences(const std::string& text, const std::string& needle) {
    int count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size()))
        ++count;
    return count;
}

const std::string kGoodSpec =
    "dimension 2\n"
    "base_norm euclidean\n"
    "profile reciprocal 1\n"
    "conorm maximum\n"
    "subspace W {\n"
    "  basis 1 0\n"
    "}\n"
    "sequence good {\n"
    "  generator harmonic\n"
    "  base 1 1\n"
    "  direction 3 4\n"
    "  limit 1 1\n"
    "}\n"
    "sequence stuck {\n"
    "  generator constant\n"
    "  base 1 1\n"
    "  direction 1 0\n"
    "  limit 1 1\n"
    "}\n"
    "sequence list {\n"
    "  point 1 0\n"
    "  point 0.5 0\n"
    "  point 0.25 0\n"
    "  point 0.125 0\n"
    "  point 0.0625 0\n"
    "  point 0.03125 0\n"
    "  limit 0 0\n"
    "}\n";

std::string good_spec() { return write_spec("good.space", kGoodSpec); }

} // namespace

TEST_CASE("usage and help paths") {
    CHECK(run("--help").code == 0);
    CHECK(run("--help").output.find("check-axioms") != std::string::npos);
    CHECK(run("").code == 2);
    CHECK(run("check-axioms").code == 2);  // missing the description file argument
    CHECK(run("no-such-command x").code == 2);
}

TEST_CASE("axiom checking passes a sound space and rejects broken parts") {
    auto good = good_spec();
    auto r = run("check-axioms " + good + " --samples 2000");
    CHECK(r.code == 0);
    CHECK(count_occurrences(r.output, "overall: pass") == 2);
    CHECK(r.output.find("exit: pass") != std::string::npos);
    CHECK(r.output.find("version: 0.1.0") != std::string::npos);
    CHECK(r.output.find("input_digest: ") != std::string::npos);

    auto broken = write_spec("broken.space",
                             "dimension 2\nbase_norm euclidean\n"
                             "profile reciprocal 1\nconorm broken-product\n");
    auto rb = run("check-axioms " + broken + " --samples 2000");
    CHECK(rb.code == 1);
    CHECK(rb.output.find("check: tconorm/identity") != std::string::npos);
    CHECK(rb.output.find("exit: FAIL") != std::string::npos);

    auto table = write_spec("nonmono.space",
                            "dimension 2\nbase_norm euclidean\n"
                            "profile tabulated 1:0.5 2:0.9 3:0\nconorm maximum\n");
    auto rt = run("check-axioms " + table + " --samples 2000");
    CHECK(rt.code == 1);
    CHECK(rt.output.find("antinorm/monotone-in-t") != std::string::npos);
}

TEST_CASE("alpha-table prints worked norms and enforces ordering") {
    auto good = good_spec();
    auto r = run("alpha-table " + good + " --x 3,4");
    CHECK(r.code == 0);
    CHECK(r.output.find("alpha 0.5: scale 1, norm 5, bisection_rel_gap") !=
          std::string::npos);
    CHECK(r.output.find("alpha 0.75: scale 3, norm 15, bisection_rel_gap") !=
          std::string::npos);
    CHECK(r.output.find("ascending: yes") != std::string::npos);
    CHECK(r.output.find("exit: pass") != std::string::npos);

    // A non-monotone table admits no threshold family at all.
    auto table = write_spec("nonmono.space",
                            "dimension 2\nbase_norm euclidean\n"
                            "profile tabulated 1:0.5 2:0.9 3:0\nconorm maximum\n");
    CHECK(run("alpha-table " + table + " --x 3,4").code == 2);

    CHECK(run("alpha-table " + good + " --x 1,2,3").code == 2);
    CHECK(run("alpha-table " + good).code == 2);
    CHECK(run("alpha-table " + good + " --x 3,4 --alpha 0.5,nope").code == 2);
}

TEST_CASE("roundtrip reports a bounded reconstruction error") {
    auto good = good_spec();
    auto r = run("roundtrip " + good + " --x-samples 20 --t-samples 20");
    CHECK(r.code == 0);
    CHECK(r.output.find("sup_error: ") != std::string::npos);
    CHECK(r.output.find("exit: pass") != std::string::npos);
}

TEST_CASE("converge diagnoses generated and listed sequences") {
    auto good = good_spec();

    auto r = run("converge " + good + " --sequence good");
    CHECK(r.code == 0);
    CHECK(r.output.find("fuzzy-convergence: holds") != std::string::npos);
    CHECK(r.output.find("[closed form]") != std::string::npos);
    CHECK(r.output.find("verdict-agreement: yes") != std::string::npos);
    CHECK(r.output.find("implications: pass") != std::string::npos);

    // A constant offset fails both readings; they agree, so the run passes.
    auto rs = run("converge " + good + " --sequence stuck");
    CHECK(rs.code == 0);
    CHECK(rs.output.find("fuzzy-convergence: fails") != std::string::npos);
    CHECK(rs.output.find("refuted at t=") != std::string::npos);
    CHECK(rs.output.find("norm-convergence: fails") != std::string::npos);
    CHECK(rs.output.find("verdict-agreement: yes") != std::string::npos);

    auto rl = run("converge " + good + " --sequence list --tail 3 --p-max 2");
    CHECK(rl.code == 0);
    CHECK(rl.output.find("fuzzy-convergence: inconclusive") != std::string::npos);

    // The default window is longer than this list.
    CHECK(run("converge " + good + " --sequence list").code == 2);
    CHECK(run("converge " + good + " --sequence missing").code == 2);
}

TEST_CASE("riesz constructs and audits a witness") {
    auto good = good_spec();
    auto r = run("riesz " + good + " --subspace W --samples 500");
    CHECK(r.code == 0);
    CHECK(r.output.find("picked_axis: 1") != std::string::npos);
    CHECK(r.output.find("unit-ball line: ok") != std::string::npos);
    CHECK(r.output.find("distance line: ok") != std::string::npos);
    CHECK(r.output.find("unit-ball bounded: ok") != std::string::npos);
    CHECK(r.output.find("unit-ball closed: ok") != std::string::npos);
    CHECK(r.output.find("exit: pass") != std::string::npos);

    CHECK(run("riesz " + good + " --subspace missing").code == 2);

    // Step shapes admit no strict threshold inversion.
    auto step = write_spec("step.space",
                           "dimension 2\nbase_norm euclidean\nprofile step\n"
                           "conorm maximum\nsubspace W {\n  basis 1 0\n}\n");
    CHECK(run("riesz " + step + " --subspace W").code == 2);
}

TEST_CASE("bad input files exit with usage errors") {
    auto malformed = write_spec("malformed.space", "dimension 2\nwhatever 3\n");
    auto r = run("check-axioms " + malformed);
    CHECK(r.code == 2);
    CHECK(r.output.find("error: ") != std::string::npos);
    CHECK(r.output.find("unknown key 'whatever'") != std::string::npos);

    CHECK(run("check-axioms " + (scratch_dir() / "missing.space").string()).code == 2);
}

TEST_CASE("identical invocations produce identical bytes") {
    auto good = good_spec();
    auto dir = scratch_dir();

    auto compare_twice = [&](const std::string& tag, const std::string& args,
                             const std::vector<std::string>& csv_names) {
        fs::path out_a = dir / (tag + "_a.txt");
        fs::path out_b = dir / (tag + "_b.txt");
        fs::path csv_a = dir / (tag + "_csv_a");
        fs::path csv_b = dir / (tag + "_csv_b");
        auto ra = run(args + " --out " + out_a.string() + " --csv " + csv_a.string());
        auto rb = run(args + " --out " + out_b.string() + " --csv " + csv_b.string());
        CHECK(ra.code == rb.code);
        std::string report_a = read_file(out_a);
        CHECK(report_a == read_file(out_b));
        CHECK(report_a.find("antinorm-report") == 0);
        for (const auto& name : csv_names)
            CHECK(read_file(csv_a / name) == read_file(csv_b / name));
    };

    compare_twice("check", "check-axioms " + good + " --samples 1000", {});
    compare_twice("table", "alpha-table " + good + " --x 3,4", {"alpha_table.csv"});
    compare_twice("round", "roundtrip " + good + " --x-samples 10 --t-samples 10",
                  {"roundtrip.csv"});
    compare_twice("conv", "converge " + good + " --sequence good",
                  {"converge_trace.csv"});
    compare_twice("riesz", "riesz " + good + " --subspace W --samples 200",
                  {"riesz_witness.csv"});
}
