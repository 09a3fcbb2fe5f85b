#include "ldmds/serial.hpp"

#include <cstdint>
#include <limits>

namespace ldmds {

namespace {

const Json& member(const Json& j, const char* key, const char* what) {
    if (!j.is_object()) {
        throw ParseError(std::string(what) + " must be a JSON object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw ParseError(std::string(what) + " is missing field \"" + key + "\"");
    }
    return *it;
}

std::uint32_t read_u32(const Json& j, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
        throw ParseError(std::string(what) + " must be a non-negative integer");
    }
    std::uint64_t v = j.get<std::uint64_t>();
    if (v > std::numeric_limits<std::uint32_t>::max()) {
        throw ParseError(std::string(what) + " is out of range");
    }
    return static_cast<std::uint32_t>(v);
}

std::vector<std::vector<std::uint32_t>> read_grid(const Json& j, const char* what) {
    if (!j.is_array()) {
        throw ParseError(std::string(what) + " must be an array of arrays");
    }
    std::vector<std::vector<std::uint32_t>> grid;
    for (const Json& row : j) {
        if (!row.is_array()) {
            throw ParseError(std::string(what) + " must be an array of arrays");
        }
        std::vector<std::uint32_t> r;
        for (const Json& cell : row) r.push_back(read_u32(cell, what));
        grid.push_back(std::move(r));
    }
    return grid;
}

} // namespace

Json parse_json_text(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(what + ": " + e.what());
    }
}

Json code_spec_to_json(const GeneratorA& gen) {
    Json j;
    j["n"] = gen.params.n;
    j["r"] = gen.params.r;
    j["q"] = gen.params.q;
    Json rows = Json::array();
    for (std::size_t i = 0; i < gen.a_tilde.rows(); ++i) {
        rows.push_back(gen.a_tilde.row(i));
    }
    j["a_tilde"] = std::move(rows);
    return j;
}

GeneratorA code_spec_from_json(const Json& j) {
    std::uint32_t n = read_u32(member(j, "n", "code spec"), "code spec n");
    std::uint32_t r = read_u32(member(j, "r", "code spec"), "code spec r");
    std::uint32_t q = read_u32(member(j, "q", "code spec"), "code spec q");
    auto grid = read_grid(member(j, "a_tilde", "code spec"), "code spec a_tilde");
    try {
        CodeParams cp = CodeParams::create(n, r, q);
        Matrix a_tilde = Matrix::from_rows(PrimeField(q), grid);
        return build_generator(cp, a_tilde);
    } catch (const Error& e) {
        throw ParseError(std::string("code spec invalid: ") + e.what());
    }
}

Json params_to_json(const CodeParams& params) {
    Json j;
    j["n"] = params.n;
    j["k"] = params.k;
    j["r"] = params.r;
    j["m"] = params.m;
    j["p"] = params.p;
    j["q"] = params.q;
    return j;
}

CodeParams params_from_json(const Json& j) {
    CodeParams cp;
    cp.n = read_u32(member(j, "n", "params"), "params n");
    cp.k = read_u32(member(j, "k", "params"), "params k");
    cp.r = read_u32(member(j, "r", "params"), "params r");
    cp.m = read_u32(member(j, "m", "params"), "params m");
    cp.p = read_u32(member(j, "p", "params"), "params p");
    cp.q = read_u32(member(j, "q", "params"), "params q");
    try {
        cp.validate();
    } catch (const Error& e) {
        throw ParseError(std::string("params invalid: ") + e.what());
    }
    return cp;
}

Json datablock_to_json(const DataBlock& data) {
    Json j;
    j["params"] = params_to_json(data.params);
    Json rows = Json::array();
    for (std::uint32_t i = 0; i < data.params.m; ++i) {
        Json row = Json::array();
        for (std::uint32_t col = 0; col < data.params.n; ++col) {
            row.push_back(data.get(i, col));
        }
        rows.push_back(std::move(row));
    }
    j["d"] = std::move(rows);
    return j;
}

DataBlock datablock_from_json(const Json& j, const CodeParams& params) {
    const Json* grid_json = &j;
    if (j.is_object()) {
        CodeParams stated = params_from_json(member(j, "params", "data block"));
        if (!(stated == params)) {
            throw ParseError("data block params do not match the code");
        }
        grid_json = &member(j, "d", "data block");
    }
    auto grid = read_grid(*grid_json, "data grid");
    if (grid.size() != params.m) {
        throw ParseError("data grid must have m = " + std::to_string(params.m) +
                         " rows");
    }
    DataBlock out = DataBlock::zero(params);
    for (std::uint32_t i = 0; i < params.m; ++i) {
        if (grid[i].size() != params.n) {
            throw ParseError("data grid rows must have n = " +
                             std::to_string(params.n) + " entries");
        }
        for (std::uint32_t col = 0; col < params.n; ++col) {
            if (grid[i][col] >= params.q) {
                throw ParseError("data symbol " + std::to_string(grid[i][col]) +
                                 " is not a residue mod " + std::to_string(params.q));
            }
            out.set(i, col, grid[i][col]);
        }
    }
    return out;
}

Json codeword_to_json(const CodewordArray& cw, const ErasurePattern* erased) {
    Json j;
    j["params"] = params_to_json(cw.params);
    Json rows = Json::array();
    for (std::uint32_t row = 0; row < cw.params.column_height(); ++row) {
        Json r = Json::array();
        for (std::uint32_t col = 0; col < cw.params.n; ++col) {
            if (erased != nullptr && erased->contains(col)) {
                r.push_back(nullptr);
            } else {
                r.push_back(cw.get(row, col));
            }
        }
        rows.push_back(std::move(r));
    }
    j["cells"] = std::move(rows);
    return j;
}

std::pair<CodewordArray, ErasurePattern> codeword_from_json(const Json& j) {
    CodeParams cp = params_from_json(member(j, "params", "codeword"));
    const Json& cells = member(j, "cells", "codeword");
    if (!cells.is_array() || cells.size() != cp.column_height()) {
        throw ParseError("codeword cells must have m + p = " +
                         std::to_string(cp.column_height()) + " rows");
    }
    CodewordArray cw = CodewordArray::zero(cp);
    std::vector<char> column_erased(cp.n, 0), column_present(cp.n, 0);
    for (std::uint32_t row = 0; row < cp.column_height(); ++row) {
        const Json& r = cells[row];
        if (!r.is_array() || r.size() != cp.n) {
            throw ParseError("codeword rows must have n = " + std::to_string(cp.n) +
                             " entries");
        }
        for (std::uint32_t col = 0; col < cp.n; ++col) {
            if (r[col].is_null()) {
                column_erased[col] = 1;
                continue;
            }
            std::uint32_t v = read_u32(r[col], "codeword cell");
            if (v >= cp.q) {
                throw ParseError("codeword cell " + std::to_string(v) +
                                 " is not a residue mod " + std::to_string(cp.q));
            }
            column_present[col] = 1;
            cw.set(row, col, v);
        }
    }
    std::vector<std::uint32_t> failed;
    for (std::uint32_t col = 0; col < cp.n; ++col) {
        if (column_erased[col] && column_present[col]) {
            throw ParseError("column " + std::to_string(col) +
                             " mixes null and present cells; erasures are per column");
        }
        if (column_erased[col]) failed.push_back(col);
    }
    return {std::move(cw), ErasurePattern::of(std::move(failed), cp.n)};
}

Json graph_to_json(const Graph& g) {
    Json j;
    j["n"] = g.node_count();
    Json edges = Json::array();
    for (auto [u, v] : g.edges()) {
        edges.push_back(Json::array({u, v}));
    }
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from_json(const Json& j) {
    std::uint32_t n = read_u32(member(j, "n", "graph"), "graph n");
    const Json& edges = member(j, "edges", "graph");
    if (!edges.is_array()) {
        throw ParseError("graph edges must be an array of [u, v] pairs");
    }
    try {
        Graph g(n);
        for (const Json& e : edges) {
            if (!e.is_array() || e.size() != 2) {
                throw ParseError("graph edges must be an array of [u, v] pairs");
            }
            g.add_edge(read_u32(e[0], "graph edge endpoint"),
                       read_u32(e[1], "graph edge endpoint"));
        }
        return g;
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(std::string("graph invalid: ") + e.what());
    }
}

Json plan_to_json(const GraphCodePlan& plan) {
    Json j;
    j["relabeling"] = plan.relabeling;
    Json removed = Json::array();
    for (auto [u, v] : plan.removed_edges) {
        removed.push_back(Json::array({u, v}));
    }
    j["removed_edges"] = std::move(removed);
    j["code"] = code_spec_to_json(plan.code);
    return j;
}

GraphCodePlan plan_from_json(const Json& j) {
    const Json& relabel = member(j, "relabeling", "plan");
    if (!relabel.is_array()) {
        throw ParseError("plan relabeling must be an array");
    }
    GraphCodePlan plan{std::vector<std::uint32_t>{},
                       {},
                       code_spec_from_json(member(j, "code", "plan"))};
    for (const Json& v : relabel) {
        plan.relabeling.push_back(read_u32(v, "plan relabeling entry"));
    }
    const Json& removed = member(j, "removed_edges", "plan");
    if (!removed.is_array()) {
        throw ParseError("plan removed_edges must be an array of [u, v] pairs");
    }
    for (const Json& e : removed) {
        if (!e.is_array() || e.size() != 2) {
            throw ParseError("plan removed_edges must be an array of [u, v] pairs");
        }
        plan.removed_edges.emplace_back(read_u32(e[0], "plan removed edge"),
                                        read_u32(e[1], "plan removed edge"));
    }
    return plan;
}

Json report_to_json(const VerificationReport& report) {
    Json j;
    j["is_mds"] = report.is_mds;
    if (report.failing_pattern.has_value()) {
        j["failing_pattern"] = *report.failing_pattern;
    }
    j["row_weights"] = report.row_weights;
    j["col_weights"] = report.col_weights;
    j["is_lowest_density"] = report.is_lowest_density;
    j["kappa"] = Json{{"num", report.kappa.num}, {"den", report.kappa.den}};
    j["exhaustive"] = report.exhaustive;
    j["patterns_checked"] = report.patterns_checked;
    j["patterns_total"] = report.patterns_total;
    return j;
}

Json sim_report_to_json(const SimReport& report) {
    Json j;
    j["rounds_run"] = report.rounds_run;
    j["failures_injected"] = report.failures_injected;
    j["recoveries_attempted"] = report.recoveries_attempted;
    j["recoveries_ok"] = report.recoveries_ok;
    j["symbols_exchanged"] = report.symbols_exchanged;
    return j;
}

} // namespace ldmds
