// Command-line front end: design, encode, decode, verify, graph-check, and
// simulate subcommands over the JSON formats described in the README.
//
// Exit codes: 0 success, 1 verification failure or no plan found, 2 usage or
// input error, 3 recovery failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ldmds/codec.hpp"
#include "ldmds/construct.hpp"
#include "ldmds/errors.hpp"
#include "ldmds/graph.hpp"
#include "ldmds/netsim.hpp"
#include "ldmds/serial.hpp"
#include "ldmds/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRecoveryFail = 3;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ldmds::ParseError("cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void emit(const ldmds::Json& j, const std::string& out_path) {
    std::string text = j.dump(2);
    text.push_back('\n');
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        throw ldmds::ParseError("cannot write file: " + out_path);
    }
    out << text;
}

ldmds::Json load_json(const std::string& path, const std::string& what) {
    return ldmds::parse_json_text(slurp(path), what + " (" + path + ")");
}

// How a topology gets its code: a construction when one applies, an
// impossibility witness when the shape admits a proof, or no answer.
struct PlanResolution {
    std::optional<ldmds::GraphCodePlan> plan;
    ldmds::Json detail = ldmds::Json::object();
};

PlanResolution resolve_plan(const ldmds::Graph& g, std::uint32_t r) {
    const std::uint32_t n = g.node_count();
    PlanResolution res;
    if (r < 1 || r >= n) {
        throw ldmds::InvalidParamsError("need 1 <= failures < n");
    }
    const std::uint32_t k = n - r;
    if (!ldmds::min_degree_ok(g, k, r)) {
        res.detail["result"] = "impossible";
        res.detail["reason"] = "a node has fewer neighbors than max(k, r), so it "
                               "cannot place its data or parities";
        return res;
    }
    bool complete = g.edge_count() ==
                    static_cast<std::size_t>(n) * (n - 1) / 2;
    if (complete) {
        ldmds::CodeParams cp = ldmds::derive_params(n, r);
        ldmds::Matrix a_tilde = ldmds::cauchy_totally_nonsingular(
            cp.k, cp.r, ldmds::PrimeField(cp.q));
        std::vector<std::uint32_t> identity(n);
        for (std::uint32_t v = 0; v < n; ++v) identity[v] = v;
        res.plan = ldmds::GraphCodePlan{std::move(identity), {},
                                        ldmds::build_generator(cp, a_tilde)};
        res.detail["result"] = "plan";
        return res;
    }
    if (r == 2 && n % 2 == 0 && g.min_degree() + 2 >= n) {
        res.plan = ldmds::plan_r2_code(g);
        res.detail["result"] = "plan";
        return res;
    }
    if (n % r == 0) {
        try {
            auto plan = ldmds::plan_divisible_code(g, r);
            if (plan.has_value()) {
                res.plan = std::move(plan);
                res.detail["result"] = "plan";
                return res;
            }
            if (k == r) {
                auto witness = ldmds::graph_admits_no_ld_mds(g, k, r);
                if (witness.has_value()) {
                    res.detail["result"] = "impossible";
                    res.detail["reason"] =
                        "for this failure set the topology leaves no usable "
                        "support, whatever the code";
                    res.detail["witness"] = *witness;
                    return res;
                }
            }
            res.detail["result"] = "inconclusive";
            res.detail["reason"] = "no embedding of the canonical support was "
                                   "found and no impossibility witness applies";
            return res;
        } catch (const ldmds::BudgetExceededError& e) {
            res.detail["result"] = "inconclusive";
            res.detail["reason"] = std::string("search budget: ") + e.what();
            return res;
        }
    }
    res.detail["result"] = "inconclusive";
    res.detail["reason"] = "no construction in this tool covers these parameters "
                           "on an incomplete topology";
    return res;
}

int cmd_design(std::uint32_t nodes, std::uint32_t failures, std::uint32_t field,
               const std::string& out_path) {
    ldmds::CodeParams cp = field == 0
                               ? ldmds::derive_params(nodes, failures)
                               : ldmds::CodeParams::create(nodes, failures, field);
    ldmds::Matrix a_tilde = ldmds::cauchy_totally_nonsingular(
        cp.k, cp.r, ldmds::PrimeField(cp.q));
    ldmds::GeneratorA gen = ldmds::build_generator(cp, a_tilde);
    emit(ldmds::code_spec_to_json(gen), out_path);
    return kExitOk;
}

int cmd_encode(const std::string& code_path, const std::string& data_path,
               const std::string& out_path) {
    ldmds::GeneratorA gen = ldmds::code_spec_from_json(load_json(code_path, "code spec"));
    ldmds::DataBlock data =
        ldmds::datablock_from_json(load_json(data_path, "data block"), gen.params);
    ldmds::ArrayLayout layout(gen.params);
    ldmds::CodewordArray cw = ldmds::encode(gen, layout, data);
    emit(ldmds::codeword_to_json(cw), out_path);
    return kExitOk;
}

int cmd_decode(const std::string& code_path, const std::string& cw_path,
               const std::vector<std::uint32_t>& failed, const std::string& out_path) {
    ldmds::GeneratorA gen = ldmds::code_spec_from_json(load_json(code_path, "code spec"));
    auto [cw, from_nulls] = ldmds::codeword_from_json(load_json(cw_path, "codeword"));
    if (!(cw.params == gen.params)) {
        throw ldmds::ParseError("codeword params do not match the code spec");
    }
    std::vector<std::uint32_t> all_failed = from_nulls.failed;
    all_failed.insert(all_failed.end(), failed.begin(), failed.end());
    ldmds::ErasurePattern erased = ldmds::ErasurePattern::of(all_failed, gen.params.n);
    ldmds::ArrayLayout layout(gen.params);
    ldmds::DataBlock data = ldmds::decode(gen, layout, cw, erased);
    emit(ldmds::datablock_to_json(data), out_path);
    return kExitOk;
}

int cmd_verify(const std::string& code_path, std::uint64_t sample,
               std::uint64_t seed, std::uint64_t budget) {
    ldmds::GeneratorA gen = ldmds::code_spec_from_json(load_json(code_path, "code spec"));
    ldmds::VerificationReport report =
        sample > 0 ? ldmds::check_mds_sampled(gen, sample, seed)
                   : ldmds::check_mds_exhaustive(gen, budget);
    emit(ldmds::report_to_json(report), "");
    if (!report.exhaustive) {
        std::cerr << "note: sampled check (" << report.patterns_checked << " of "
                  << report.patterns_total
                  << " patterns); a clean result is not a proof\n";
    }
    return (report.is_mds && report.is_lowest_density) ? kExitOk : kExitVerifyFail;
}

int cmd_graph_check(const std::string& graph_path, std::uint32_t failures) {
    ldmds::Graph g = ldmds::graph_from_json(load_json(graph_path, "graph"));
    PlanResolution res = resolve_plan(g, failures);
    if (res.plan.has_value()) {
        ldmds::Json j = res.detail;
        ldmds::Json plan = ldmds::plan_to_json(*res.plan);
        for (auto& [key, value] : plan.items()) {
            j[key] = value;
        }
        emit(j, "");
        return kExitOk;
    }
    emit(res.detail, "");
    return kExitVerifyFail;
}

int cmd_simulate(const std::string& graph_path, std::uint32_t failures,
                 std::uint32_t rounds, std::uint64_t seed, double fail_prob,
                 const std::string& data_file) {
    ldmds::Graph g = ldmds::graph_from_json(load_json(graph_path, "graph"));
    PlanResolution res = resolve_plan(g, failures);
    if (!res.plan.has_value()) {
        std::cerr << "no code assignment for this topology: "
                  << res.detail.dump() << "\n";
        return kExitVerifyFail;
    }
    ldmds::NetworkConfig config = ldmds::NetworkConfig::create(
        g, std::move(*res.plan), rounds, seed, fail_prob);
    const ldmds::CodeParams& cp = config.plan.code.params;

    std::optional<std::vector<ldmds::Readings>> scripted;
    if (!data_file.empty()) {
        ldmds::Json j = load_json(data_file, "readings file");
        if (!j.is_array()) {
            throw ldmds::ParseError("readings file must be an array of per-round grids");
        }
        scripted.emplace();
        for (const ldmds::Json& grid : j) {
            // External readings land in GF(q) by reduction mod q (lossy).
            if (!grid.is_array() || grid.size() != cp.m) {
                throw ldmds::ParseError("each reading grid needs m rows");
            }
            ldmds::Readings block = ldmds::DataBlock::zero(cp);
            for (std::uint32_t i = 0; i < cp.m; ++i) {
                if (!grid[i].is_array() || grid[i].size() != cp.n) {
                    throw ldmds::ParseError("each reading grid row needs n entries");
                }
                for (std::uint32_t v = 0; v < cp.n; ++v) {
                    if (!grid[i][v].is_number_integer() &&
                        !grid[i][v].is_number_unsigned()) {
                        throw ldmds::ParseError("readings must be integers");
                    }
                    std::int64_t raw = grid[i][v].get<std::int64_t>();
                    std::int64_t red = raw % static_cast<std::int64_t>(cp.q);
                    if (red < 0) red += cp.q;
                    block.set(i, v, static_cast<std::uint32_t>(red));
                }
            }
            scripted->push_back(std::move(block));
        }
    }
    ldmds::SimReport report =
        ldmds::run_simulation(config, scripted ? &*scripted : nullptr);
    emit(ldmds::sim_report_to_json(report), "");
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lowest-density MDS array codes: design, code, and simulate"};
    app.require_subcommand(1);

    std::uint32_t nodes = 0, failures = 0, field = 0, rounds = 0;
    std::uint64_t sample = 0, seed = 0, budget = 1000000;
    double fail_prob = 0.0;
    std::string code_path, data_path, cw_path, graph_path, out_path, data_file;
    std::vector<std::uint32_t> failed;

    CLI::App* design = app.add_subcommand("design", "construct a code spec");
    design->add_option("--nodes", nodes, "total node count n")->required();
    design->add_option("--failures", failures, "repairable node failures r")->required();
    design->add_option("--field", field, "prime field order (default: smallest prime >= n)");
    design->add_option("--out", out_path, "output path (default: stdout)");

    CLI::App* encode = app.add_subcommand("encode", "encode a data block");
    encode->add_option("--code", code_path, "code spec JSON")->required();
    encode->add_option("--data", data_path, "data block JSON")->required();
    encode->add_option("--out", out_path, "output path (default: stdout)");

    CLI::App* decode = app.add_subcommand("decode", "recover data from a codeword");
    decode->add_option("--code", code_path, "code spec JSON")->required();
    decode->add_option("--codeword", cw_path, "codeword JSON")->required();
    decode->add_option("--failed", failed, "comma-separated failed node indices")
        ->delimiter(',');
    decode->add_option("--out", out_path, "output path (default: stdout)");

    CLI::App* verify = app.add_subcommand("verify", "check a code spec");
    verify->add_option("--code", code_path, "code spec JSON")->required();
    verify->add_option("--sample", sample, "sample this many patterns instead of all");
    verify->add_option("--seed", seed, "RNG seed for sampling");
    verify->add_option("--budget", budget, "max patterns for the exhaustive check");

    CLI::App* graph_check =
        app.add_subcommand("graph-check", "find a code assignment for a topology");
    graph_check->add_option("--graph", graph_path, "graph JSON")->required();
    graph_check->add_option("--failures", failures, "repairable node failures r")
        ->required();

    CLI::App* simulate =
        app.add_subcommand("simulate", "run collection epochs over a topology");
    simulate->add_option("--graph", graph_path, "graph JSON")->required();
    simulate->add_option("--failures", failures, "repairable node failures r")
        ->required();
    simulate->add_option("--rounds", rounds, "collection epochs to run")->required();
    simulate->add_option("--seed", seed, "RNG seed");
    simulate->add_option("--fail-prob", fail_prob, "per-node failure probability")
        ->required();
    simulate->add_option("--data-file", data_file,
                         "JSON array of per-round reading grids (values reduced mod q)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (design->parsed()) return cmd_design(nodes, failures, field, out_path);
        if (encode->parsed()) return cmd_encode(code_path, data_path, out_path);
        if (decode->parsed()) return cmd_decode(code_path, cw_path, failed, out_path);
        if (verify->parsed()) return cmd_verify(code_path, sample, seed, budget);
        if (graph_check->parsed()) return cmd_graph_check(graph_path, failures);
        if (simulate->parsed())
            return cmd_simulate(graph_path, failures, rounds, seed, fail_prob, data_file);
    } catch (const ldmds::TooManyErasuresError& e) {
        std::cerr << "recovery failure: " << e.what() << "\n";
        return kExitRecoveryFail;
    } catch (const ldmds::UnrecoverableError& e) {
        std::cerr << "recovery failure: " << e.what() << "\n";
        return kExitRecoveryFail;
    } catch (const ldmds::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
