#pragma once

// Frozen expected values for the n = 8, r = 3 reference code and the graph
// examples the tests revolve around.  The layout grid and the 40 x 24
// generator matrix were transcribed mechanically from their printed source,
// not recomputed from the formulas they are used to check.

#include <cstdint>
#include <string>
#include <vector>

#include "ldmds/construct.hpp"
#include "ldmds/graph.hpp"
#include "ldmds/matrix.hpp"

namespace fixtures {

// 8 x 8 cell grid of the n = 8, r = 3, m = 5, p = 3 code: {is_parity,
// symbol index}, row-major; the column equals the node index everywhere.
inline std::vector<std::vector<ldmds::CellRef>> reference_layout_n8_r3() {
    using C = ldmds::CellRef;
    return {
        {C{false, 0}, C{false, 3}, C{true, 1}, C{false, 1}, C{false, 4}, C{true, 0}, C{false, 2}, C{true, 2}},
        {C{false, 1}, C{false, 4}, C{true, 0}, C{false, 2}, C{true, 2}, C{false, 0}, C{false, 3}, C{true, 1}},
        {C{false, 2}, C{true, 2}, C{false, 0}, C{false, 3}, C{true, 1}, C{false, 1}, C{false, 4}, C{true, 0}},
        {C{false, 3}, C{true, 1}, C{false, 1}, C{false, 4}, C{true, 0}, C{false, 2}, C{true, 2}, C{false, 0}},
        {C{false, 4}, C{true, 0}, C{false, 2}, C{true, 2}, C{false, 0}, C{false, 3}, C{true, 1}, C{false, 1}},
        {C{true, 2}, C{false, 0}, C{false, 3}, C{true, 1}, C{false, 1}, C{false, 4}, C{true, 0}, C{false, 2}},
        {C{true, 1}, C{false, 1}, C{false, 4}, C{true, 0}, C{false, 2}, C{true, 2}, C{false, 0}, C{false, 3}},
        {C{true, 0}, C{false, 2}, C{true, 2}, C{false, 0}, C{false, 3}, C{true, 1}, C{false, 1}, C{false, 4}},
    };
}

// The full 40 x 24 nonsystematic generator part of the same code over
// GF(7), one digit per entry.
inline ldmds::Matrix reference_a_full_n8_r3() {
    static const std::vector<std::string> rows = {
        "000000010000000100000001",
        "000000100000001000000010",
        "000001000000010000000100",
        "000010000000100000001000",
        "000100000001000000010000",
        "001000000010000000100000",
        "010000000100000001000000",
        "100000001000000010000000",
        "000000010000000300000006",
        "000000100000003000000060",
        "000001000000030000000600",
        "000010000000300000006000",
        "000100000003000000060000",
        "001000000030000000600000",
        "010000000300000006000000",
        "100000003000000060000000",
        "000000010000000400000002",
        "000000100000004000000020",
        "000001000000040000000200",
        "000010000000400000002000",
        "000100000004000000020000",
        "001000000040000000200000",
        "010000000400000002000000",
        "100000004000000020000000",
        "000000010000000600000004",
        "000000100000006000000040",
        "000001000000060000000400",
        "000010000000600000004000",
        "000100000006000000040000",
        "001000000060000000400000",
        "010000000600000004000000",
        "100000006000000040000000",
        "000000010000000200000005",
        "000000100000002000000050",
        "000001000000020000000500",
        "000010000000200000005000",
        "000100000002000000050000",
        "001000000020000000500000",
        "010000000200000005000000",
        "100000002000000050000000",
    };
    ldmds::Matrix a(ldmds::PrimeField(7), 40, 24);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < rows[i].size(); ++j) {
            a.set(i, j, static_cast<std::uint32_t>(rows[i][j] - '0'));
        }
    }
    return a;
}

// 4 x 4 nonsystematic part of the n = 4 code over GF(3) built from the
// 2 x 2 coefficient matrix [[1,1],[1,2]].
inline ldmds::Matrix reference_a_full_n4_r2() {
    return ldmds::Matrix::from_rows(ldmds::PrimeField(3), {{0, 1, 0, 1},
                                                           {1, 0, 1, 0},
                                                           {0, 1, 0, 2},
                                                           {1, 0, 2, 0}});
}

// Comparison point from an earlier two-erasure family: same size and field
// as the matrix above, but with full (complete-graph) support.
inline ldmds::Matrix comparison_a_full_dense_n4() {
    return ldmds::Matrix::from_rows(ldmds::PrimeField(3), {{0, 1, 1, 0},
                                                           {1, 0, 0, 1},
                                                           {0, 1, 0, 1},
                                                           {1, 0, 1, 0}});
}

// 8-node, 4-regular topology that provably carries no code of the k = r = 4
// shape: nodes 0 and 1 share all four neighbors.
inline ldmds::Graph obstructed_graph_n8() {
    ldmds::Graph g(8);
    const std::vector<std::pair<std::uint32_t, std::uint32_t>> edges = {
        {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 5},
        {2, 6}, {3, 5}, {3, 7}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7},
    };
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

// 8-node, 4-regular topology that does carry the k = r = 4 code: the
// complete bipartite graph on parts {0,3,5,6} and {1,2,4,7}.
inline ldmds::Graph embeddable_graph_n8() {
    ldmds::Graph g(8);
    const std::vector<std::uint32_t> part = {0, 3, 5, 6};
    const std::vector<std::uint32_t> other = {1, 2, 4, 7};
    for (std::uint32_t u : part) {
        for (std::uint32_t v : other) g.add_edge(u, v);
    }
    return g;
}

} // namespace fixtures
