#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rigged/cartan.hpp"
#include "rigged/crystal.hpp"
#include "rigged/graph_io.hpp"
#include "rigged/rc.hpp"

// ---------------------------------------------------------------------------
// Harness: run the installed CLI binary (path injected by the build) with a
// shell command line and capture exit status plus interleaved stdout/stderr.
// ---------------------------------------------------------------------------

namespace {

struct CliResult {
    int status = -1;
    std::string output;
};

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd;
    if (!env_prefix.empty()) {
        cmd += env_prefix + " ";
    }
    cmd += std::string(RIGGED_CLI_PATH) + " " + args + " 2>&1";
    CliResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) {
        return result;
    }
    char buffer[4096];
    size_t got = 0;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        result.output.append(buffer, got);
    }
    const int raw = pclose(pipe);
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return result;
}

std::string last_line(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    return lines.empty() ? std::string() : lines.back();
}

bool contains(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

std::filesystem::path scratch_dir() {
    const std::filesystem::path dir =
        std::filesystem::temp_directory_path() / "rigged-cli-tests";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_file(const std::string& name, const std::string& content) {
    const std::filesystem::path path = scratch_dir() / name;
    std::ofstream out(path);
    out << content;
    out.close();
    return path.string();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Three single boxes in rank 2, with the content tuple (2,1,0).
std::string cube_instance() {
    static const std::string path = write_file("cube.json", R"({
  "algebra": {"family": "A", "rank": 2},
  "L": [{"node": 1, "width": 1, "multiplicity": 3}],
  "lambda": [2, 1, 0]
})");
    return path;
}

// A single box in rank 2, carrying the empty rigged configuration.
std::string single_box_instance() {
    static const std::string path = write_file("single_box.json", R"({
  "algebra": {"family": "A", "rank": 2},
  "L": [{"node": 1, "width": 1, "multiplicity": 1}],
  "rc": [[], []]
})");
    return path;
}

// The worked two-by-two promotion example in rank 3.
std::string promote_instance() {
    static const std::string path = write_file("promote.json", R"({
  "algebra": {"family": "A", "rank": 3},
  "L": [{"node": 2, "width": 2, "multiplicity": 1}],
  "lambda": [1, 0, 1, 2],
  "rc": [[[1, 0]], [[2, -1], [1, -1]], [[2, -1]]]
})");
    return path;
}

// The worked lower-bound membership example: six boxes in rank 3.
std::string extended_instance() {
    static const std::string path = write_file("extended.json", R"({
  "algebra": {"family": "A", "rank": 3},
  "L": [{"node": 1, "width": 1, "multiplicity": 6}],
  "lambda": [2, 2, 1, 1],
  "rc": [[[3, -2], [1, 0]], [[2, 0]], [[1, -1]]]
})");
    return path;
}

std::string d4_instance() {
    static const std::string path = write_file("d4.json", R"({
  "algebra": {"family": "D", "rank": 4},
  "L": [{"node": 2, "width": 1, "multiplicity": 1}],
  "lambda": [1, 1]
})");
    return path;
}

} // namespace

// ---------------------------------------------------------------------------
// Happy-path goldens
// ---------------------------------------------------------------------------

TEST_CASE("cli closure reports the set size, components, and fibers") {
    const CliResult res = run_cli("closure " + cube_instance());
    CHECK(res.status == 0);
    CHECK(contains(res.output, "|RC(L)| = 27\n"));
    CHECK(contains(res.output, "components: 4\n"));
    CHECK(contains(res.output, "fiber (0,0): 6\n"));
    CHECK(contains(res.output, "fiber (3,0): 1\n"));
    CHECK(contains(res.output, "fiber (1,1): 3\n"));

    // Byte-for-byte determinism across runs.
    const CliResult again = run_cli("closure " + cube_instance());
    CHECK(again.status == 0);
    CHECK(res.output == again.output);
}

TEST_CASE("cli hw lists the highest-weight elements for the instance weight") {
    const CliResult res = run_cli("hw " + cube_instance());
    CHECK(res.status == 0);
    CHECK(contains(res.output, "count: 2\n"));
    CHECK(contains(res.output, "rc: 1,0|\n"));
    CHECK(contains(res.output, "rc: 1,1|\n"));
}

TEST_CASE("cli verify prints the axiom report and the exact summary line") {
    const CliResult res = run_cli("verify " + cube_instance());
    CHECK(res.status == 0);
    CHECK(contains(res.output, "structure: pass\n"));
    CHECK(contains(res.output, "P1: pass\n"));
    CHECK(contains(res.output, "colabel floor: pass\n"));
    CHECK(contains(res.output, "weight decorations: pass\n"));
    CHECK(contains(res.output, "cocharge constancy: pass\n"));
    CHECK(last_line(res.output) == "axioms: all pass; components: 4; |RC(L)| = 27");
}

TEST_CASE("cli fermionic --both compares the formula against the crystal sum") {
    const CliResult res = run_cli("fermionic --both " + cube_instance());
    CHECK(res.status == 0);
    CHECK(res.output ==
          "fermionic:\n"
          "q^0: 1\n"
          "q^1: 1\n"
          "q^2: 1\n"
          "direct:\n"
          "q^0: 1\n"
          "q^1: 1\n"
          "q^2: 1\n"
          "match: yes\n");

    // --literal walks the subsets one by one and must agree.
    const CliResult literal = run_cli("fermionic --literal --both " + cube_instance());
    CHECK(literal.status == 0);
    CHECK(literal.output == res.output);

    const CliResult direct = run_cli("direct " + cube_instance());
    CHECK(direct.status == 0);
    CHECK(direct.output == "q^0: 1\nq^1: 1\nq^2: 1\n");
}

TEST_CASE("cli extended prints membership, witness, and its rows") {
    const CliResult res = run_cli("extended " + extended_instance());
    CHECK(res.status == 0);
    CHECK(contains(res.output, "member: yes\n"));
    CHECK(contains(res.output, "witness: 4,3,2,1|4,1|1\n"));
    CHECK(contains(res.output, "rows: [[4,4,1],[3,1],[2],[1]]\n"));
}

TEST_CASE("cli promote --trace shows the lowering and shortening stages") {
    const CliResult res = run_cli("promote --trace " + promote_instance());
    CHECK(res.status == 0);
    CHECK(contains(res.output, "after lowering: 2,-1|2,1;1,0|2,-1;1,-1|2,-1\n"));
    CHECK(contains(res.output, "after pass 1: "));
    CHECK(contains(res.output, "after pass 2: |1,0|1,-1|\n"));
    CHECK(contains(res.output, "pr: |1,0|1,-1\n"));
}

TEST_CASE("cli f0 and e0 report the affine operators on the single box") {
    const CliResult lowered = run_cli("f0 " + single_box_instance());
    CHECK(lowered.status == 0);
    CHECK(lowered.output == "f0: undefined\n");

    const CliResult raised = run_cli("e0 " + single_box_instance());
    CHECK(raised.status == 0);
    CHECK(contains(raised.output, "e0: 1,0|1,-1\n"));
}

TEST_CASE("cli oracle cross-checks the tableaux crystal on the cube") {
    const CliResult res = run_cli("oracle " + cube_instance());
    CHECK(res.status == 0);
    CHECK(contains(res.output, "paths: 27\n"));
    CHECK(contains(res.output, "rcs: 27\n"));
    CHECK(contains(res.output, "hw pairs: 4\n"));
    CHECK(contains(res.output, "isomorphic: 4/4\n"));
    CHECK(contains(res.output, "sizes match ssyt oracle: 4/4\n"));
    CHECK(last_line(res.output) == "oracle: pass");
}

// ---------------------------------------------------------------------------
// Graph emission and file output
// ---------------------------------------------------------------------------

TEST_CASE("cli graph emits dot to stdout and writes the same bytes to a file") {
    const CliResult dot = run_cli("graph --format dot " + single_box_instance());
    CHECK(dot.status == 0);
    CHECK(contains(dot.output, "digraph crystal {"));
    CHECK(contains(dot.output, "[label=\"|\"]"));

    const std::string out_path = (scratch_dir() / "component.dot").string();
    const CliResult to_file =
        run_cli("graph --format dot --output " + out_path + " " + single_box_instance());
    CHECK(to_file.status == 0);
    CHECK(to_file.output.empty());
    CHECK(read_file(out_path) == dot.output);
}

TEST_CASE("cli graph --format json round-trips through the parser") {
    const std::string out_path = (scratch_dir() / "cube.graph.json").string();
    const CliResult res =
        run_cli("graph --format json --output " + out_path + " " + cube_instance());
    CHECK(res.status == 0);

    nlohmann::json j = nlohmann::json::parse(read_file(out_path));
    const rigged::CrystalGraph graph = rigged::graph_from_json(j);
    CHECK(graph.size() == 27);
    CHECK(graph.rank == 2);
    CHECK(graph.components().size() == 4);
}

TEST_CASE("cli verify --graph accepts a sound graph and rejects a broken one") {
    // Build the displayed eight-element component and serialize it.
    const rigged::AlgebraData alg(rigged::Family::A, 2);
    rigged::MultiplicityArray L;
    L.set(1, 1, 3);
    const rigged::RcCrystal component = rigged::generate_component(
        alg, L, rigged::RiggedConfiguration::decode("1,0|", 2), rigged::GenerationLimits{});
    const nlohmann::json good = rigged::graph_to_json(component.graph);
    const std::string good_path = write_file("component.json", good.dump(2) + "\n");

    const CliResult ok = run_cli("verify --graph " + good_path + " --family A");
    CHECK(ok.status == 0);
    CHECK(last_line(ok.output) == "axioms: all pass; components: 1; |V| = 8");

    // Drop the color-2 edge out of the vertex encoding "2,-2;1,-1|1,0".
    nlohmann::json bad = good;
    int source = -1;
    for (const auto& vertex : bad["vertices"]) {
        if (vertex["key"].get<std::string>() == "2,-2;1,-1|1,0") {
            source = vertex["id"].get<int>();
        }
    }
    REQUIRE(source >= 0);
    nlohmann::json kept = nlohmann::json::array();
    for (const auto& edge : bad["edges"]) {
        if (!(edge[0].get<int>() == source && edge[1].get<int>() == 2)) {
            kept.push_back(edge);
        }
    }
    REQUIRE(kept.size() + 1 == bad["edges"].size());
    bad["edges"] = kept;
    const std::string bad_path = write_file("broken.json", bad.dump(2) + "\n");

    const CliResult broken = run_cli("verify --graph " + bad_path + " --family A");
    CHECK(broken.status == 1);
    CHECK(contains(broken.output, "FAIL"));
}

// ---------------------------------------------------------------------------
// Failure modes and exit codes
// ---------------------------------------------------------------------------

TEST_CASE("cli exits with 2 on malformed input") {
    const std::string bad = write_file("bad.json", R"({
  "algebra": {"family": "A", "rank": 2},
  "L": [],
  "extra": 1
})");
    const CliResult unknown_key = run_cli("closure " + bad);
    CHECK(unknown_key.status == 2);
    CHECK(contains(unknown_key.output, "input error:"));

    const CliResult missing = run_cli("closure /nonexistent/instance.json");
    CHECK(missing.status == 2);

    const std::string garbage = write_file("garbage.json", "not json at all\n");
    const CliResult parse = run_cli("closure " + garbage);
    CHECK(parse.status == 2);

    const CliResult subcommand = run_cli("frobnicate " + cube_instance());
    CHECK(subcommand.status == 2);

    const CliResult no_instance = run_cli("verify");
    CHECK(no_instance.status == 2);
}

TEST_CASE("cli fermionic rejects algebras outside type A") {
    const CliResult res = run_cli("fermionic " + d4_instance());
    CHECK(res.status == 2);
    CHECK(contains(res.output, "input error:"));
}

TEST_CASE("cli vertex caps come from the flag or the environment") {
    const CliResult flag = run_cli("--max-vertices 2 closure " + cube_instance());
    CHECK(flag.status == 2);
    CHECK(contains(flag.output, "input error:"));

    const CliResult env = run_cli("closure " + cube_instance(), "RIGGED_MAX_VERTICES=2");
    CHECK(env.status == 2);

    // The flag wins over the environment.
    const CliResult both =
        run_cli("--max-vertices 100000 closure " + cube_instance(), "RIGGED_MAX_VERTICES=2");
    CHECK(both.status == 0);
    CHECK(contains(both.output, "|RC(L)| = 27\n"));

    const CliResult junk = run_cli("closure " + cube_instance(), "RIGGED_MAX_VERTICES=apple");
    CHECK(junk.status == 2);
}
