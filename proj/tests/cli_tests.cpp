// Integration tests driving the installed CLI binary end to end through
// temp files.  Usage: cli_tests <path-to-cli>; exits nonzero on any failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

int failures = 0;
std::string cli;
fs::path dir;

void check(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAIL: " << what << "\n";
    }
}

int run(const std::string& args, const std::string& stdout_file = "") {
    std::string cmd = "\"" + cli + "\" " + args;
    if (!stdout_file.empty()) cmd += " > " + (dir / stdout_file).string();
    cmd += " 2> " + (dir / "stderr.txt").string();
    int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string path(const std::string& name) { return (dir / name).string(); }

void write_file(const std::string& name, const std::string& text) {
    std::ofstream out(path(name));
    out << text;
}

std::string read_file(const std::string& name) {
    std::ifstream in(path(name));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json read_json(const std::string& name) { return Json::parse(read_file(name)); }

void test_design_and_verify() {
    check(run("design --nodes 6 --failures 2", "code6.json") == 0,
          "design 6/2 exits 0");
    Json code = read_json("code6.json");
    check(code["n"] == 6 && code["r"] == 2 && code["q"] == 7,
          "design 6/2 emits n=6 r=2 q=7");
    check(code["a_tilde"].size() == 4 && code["a_tilde"][0].size() == 2,
          "design 6/2 coefficient matrix is 4x2");

    check(run("design --nodes 8 --failures 3 --out " + path("code8.json")) == 0,
          "design --out exits 0");
    Json code8 = read_json("code8.json");
    check(code8["q"] == 11, "default field for 8 nodes is 11");

    check(run("verify --code " + path("code6.json"), "rep6.json") == 0,
          "verify exits 0 on a designed code");
    Json rep = read_json("rep6.json");
    check(rep["is_mds"] == true && rep["is_lowest_density"] == true &&
              rep["exhaustive"] == true,
          "verify report affirms both properties exhaustively");
    check(rep["patterns_total"] == 15, "6 choose 2 patterns");
    check(rep["kappa"]["num"] == 4 && rep["kappa"]["den"] == 1,
          "kappa equals the data dimension");

    // A field too small for the coefficient construction is a usage error.
    check(run("design --nodes 8 --failures 3 --field 7") == 2,
          "design with a too-small field exits 2");
    check(run("design --nodes 8 --failures 3 --field 12") == 2,
          "design with a composite field exits 2");
}

void test_verify_failure_path() {
    write_file("bad.json", R"({"n":4,"r":2,"q":3,"a_tilde":[[1,1],[1,1]]})");
    check(run("verify --code " + path("bad.json"), "repbad.json") == 1,
          "verify exits 1 on a non-MDS spec");
    Json rep = read_json("repbad.json");
    check(rep["is_mds"] == false, "report says not MDS");
    check(rep["failing_pattern"] == Json::array({0, 2}),
          "first failing pattern in colex order is reported");

    check(run("verify --code " + path("bad.json") + " --sample 50 --seed 3",
              "repsamp.json") == 1,
          "sampled verify still finds the failure");
    check(run("verify --code " + path("code8.json") + " --budget 5") == 2,
          "exhausted budget is a usage error");
}

void test_encode_decode_roundtrip() {
    write_file("data6.json", R"([[1,2,3,4,5,6],[0,1,2,3,4,5]])");
    check(run("encode --code " + path("code6.json") + " --data " +
                  path("data6.json") + " --out " + path("cw6.json")) == 0,
          "encode exits 0");
    Json cw = read_json("cw6.json");
    check(cw["cells"].size() == 3 && cw["cells"][0].size() == 6,
          "codeword grid is (m+p) x n");

    check(run("decode --code " + path("code6.json") + " --codeword " +
                  path("cw6.json"), "dec0.json") == 0,
          "decode with no failures exits 0");
    check(read_json("dec0.json")["d"] == read_json("data6.json"),
          "decode with no failures returns the data");

    check(run("decode --code " + path("code6.json") + " --codeword " +
                  path("cw6.json") + " --failed 1,4", "dec14.json") == 0,
          "decode --failed 1,4 exits 0");
    check(read_json("dec14.json")["d"] == read_json("data6.json"),
          "decode --failed 1,4 recovers the data");

    // Null columns in the document mark erasures without the flag.
    Json holey = cw;
    for (auto& row : holey["cells"]) {
        row[2] = nullptr;
        row[5] = nullptr;
    }
    write_file("cw6holey.json", holey.dump());
    check(run("decode --code " + path("code6.json") + " --codeword " +
                  path("cw6holey.json"), "dec25.json") == 0,
          "decode with null columns exits 0");
    check(read_json("dec25.json")["d"] == read_json("data6.json"),
          "decode with null columns recovers the data");

    // Nulls plus the flag can exceed the budget: three failures for r = 2.
    check(run("decode --code " + path("code6.json") + " --codeword " +
              path("cw6holey.json") + " --failed 0") == 3,
          "too many failures exits 3");

    // A corrupted surviving cell is a recovery failure, not silence.
    Json corrupt = cw;
    corrupt["cells"][0][0] = (corrupt["cells"][0][0].get<int>() + 1) % 7;
    write_file("cw6corrupt.json", corrupt.dump());
    check(run("decode --code " + path("code6.json") + " --codeword " +
              path("cw6corrupt.json") + " --failed 3") == 3,
          "inconsistent survivors exit 3");
}

void test_malformed_inputs() {
    write_file("mangled.json", "{this is not json");
    check(run("encode --code " + path("mangled.json") + " --data " +
              path("data6.json")) == 2,
          "malformed code spec exits 2");
    check(run("decode --code " + path("code6.json") + " --codeword " +
              path("mangled.json")) == 2,
          "malformed codeword exits 2");
    check(run("encode --code " + path("code6.json") + " --data " +
              path("mangled.json")) == 2,
          "malformed data exits 2");
    check(run("verify --code " + path("missing.json")) == 2,
          "missing file exits 2");
    check(run("design --nodes 6") == 2, "missing required flag exits 2");
    check(run("frobnicate") == 2, "unknown subcommand exits 2");
    check(run("design --nodes 4 --failures 4") == 2,
          "impossible parameters exit 2");

    write_file("data_bad.json", R"([[9,2,3,4,5,6],[0,1,2,3,4,5]])");
    check(run("encode --code " + path("code6.json") + " --data " +
              path("data_bad.json")) == 2,
          "data symbol outside the field exits 2");
}

void test_graph_check() {
    Json k6;
    k6["n"] = 6;
    k6["edges"] = Json::array();
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v) k6["edges"].push_back({u, v});
    write_file("k6.json", k6.dump());
    check(run("graph-check --graph " + path("k6.json") + " --failures 2",
              "plan_k6.json") == 0,
          "graph-check on a complete graph exits 0");
    Json plan = read_json("plan_k6.json");
    check(plan["result"] == "plan", "complete graph yields a plan");
    check(plan["relabeling"] == Json::array({0, 1, 2, 3, 4, 5}),
          "complete graph keeps the identity relabeling");
    check(plan["code"]["n"] == 6, "plan embeds the code spec");

    write_file("path4.json", R"({"n":4,"edges":[[0,1],[1,2],[2,3]]})");
    check(run("graph-check --graph " + path("path4.json") + " --failures 2",
              "plan_path.json") == 1,
          "too-sparse topology exits 1");
    check(read_json("plan_path.json")["result"] == "impossible",
          "too-sparse topology is impossible, with a reason");

    // 4-regular 8-node topology with a provable obstruction.
    write_file("blocked8.json",
               R"({"n":8,"edges":[[0,1],[0,2],[0,3],[0,4],[1,2],[1,3],[1,4],)"
               R"([2,5],[2,6],[3,5],[3,7],[4,6],[4,7],[5,6],[5,7],[6,7]]})");
    check(run("graph-check --graph " + path("blocked8.json") + " --failures 4",
              "plan_blocked.json") == 1,
          "obstructed topology exits 1");
    Json blocked = read_json("plan_blocked.json");
    check(blocked["result"] == "impossible", "obstruction is reported");
    check(blocked["witness"] == Json::array({0, 1, 2, 3}),
          "obstruction witness is the colex-first failure set");

    // Complete bipartite 4+4: embeddable.
    Json bip;
    bip["n"] = 8;
    bip["edges"] = Json::array();
    for (int u : {0, 3, 5, 6})
        for (int v : {1, 2, 4, 7})
            bip["edges"].push_back({std::min(u, v), std::max(u, v)});
    write_file("bip8.json", bip.dump());
    check(run("graph-check --graph " + path("bip8.json") + " --failures 4",
              "plan_bip.json") == 0,
          "bipartite topology exits 0");
    check(read_json("plan_bip.json")["result"] == "plan",
          "bipartite topology yields a plan");

    check(run("graph-check --graph " + path("k6.json") + " --failures 6") == 2,
          "failures >= n is a usage error");
}

void test_simulate() {
    write_file("cycle4.json", R"({"n":4,"edges":[[0,1],[1,2],[2,3],[0,3]]})");
    check(run("simulate --graph " + path("cycle4.json") +
                  " --failures 2 --rounds 10 --seed 5 --fail-prob 0",
              "sim0.json") == 0,
          "simulate with no failures exits 0");
    Json rep = read_json("sim0.json");
    check(rep["rounds_run"] == 10 && rep["recoveries_attempted"] == 10 &&
              rep["recoveries_ok"] == 10,
          "every round recovers when nothing fails");
    check(rep["failures_injected"] == 0, "no failures injected at probability 0");
    check(rep["symbols_exchanged"] == 10 * 4 * 2,
          "each round ships n*m*r symbols");

    // Deterministic: same seed, same report text.
    check(run("simulate --graph " + path("cycle4.json") +
                  " --failures 2 --rounds 25 --seed 9 --fail-prob 0.3",
              "sim_a.json") == 0,
          "seeded lossy simulation exits 0");
    run("simulate --graph " + path("cycle4.json") +
            " --failures 2 --rounds 25 --seed 9 --fail-prob 0.3",
        "sim_b.json");
    check(read_file("sim_a.json") == read_file("sim_b.json"),
          "identical seed gives identical report");

    // Externally supplied readings, reduced mod q = 5.
    write_file("readings.json", R"([[[7,1,2,3]],[[0,11,2,3]]])");
    check(run("simulate --graph " + path("cycle4.json") +
                  " --failures 2 --rounds 2 --seed 1 --fail-prob 0 --data-file " +
                  path("readings.json"),
              "sim_data.json") == 0,
          "simulate with scripted readings exits 0");
    Json repd = read_json("sim_data.json");
    check(repd["recoveries_ok"] == 2, "scripted readings recover");

    check(run("simulate --graph " + path("cycle4.json") +
              " --failures 2 --rounds 3 --seed 1 --fail-prob 0 --data-file " +
              path("readings.json")) == 2,
          "scripted readings shorter than the run exit 2");

    check(run("simulate --graph " + path("path4.json") +
              " --failures 2 --rounds 5 --seed 1 --fail-prob 0") == 1,
          "simulate without a plan exits 1");
    check(run("simulate --graph " + path("cycle4.json") +
              " --failures 2 --rounds 5 --seed 1 --fail-prob 1.5") == 2,
          "failure probability outside [0, 1] exits 2");
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli_tests <path-to-cli>\n";
        return 2;
    }
    cli = argv[1];
    dir = fs::temp_directory_path() / "ldmds_cli_tests";
    fs::remove_all(dir);
    fs::create_directories(dir);

    test_design_and_verify();
    test_verify_failure_path();
    test_encode_decode_roundtrip();
    test_malformed_inputs();
    test_graph_check();
    test_simulate();

    fs::remove_all(dir);
    if (failures == 0) {
        std::cout << "cli_tests: all checks passed\n";
        return 0;
    }
    std::cerr << "cli_tests: " << failures << " check(s) failed\n";
    return 1;
}
