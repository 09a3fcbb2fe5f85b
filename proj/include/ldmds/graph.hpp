#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ldmds/construct.hpp"
#include "ldmds/verify.hpp"

namespace ldmds {

// Simple undirected graph on nodes 0..n-1; the communication topology.
// Edges are stored normalized with u < v; loops are rejected.
class Graph {
public:
    explicit Graph(std::uint32_t n);

    static Graph complete(std::uint32_t n);

    std::uint32_t node_count() const { return n_; }
    std::size_t edge_count() const;

    void add_edge(std::uint32_t u, std::uint32_t v);
    bool has_edge(std::uint32_t u, std::uint32_t v) const;
    std::uint32_t degree(std::uint32_t v) const;
    std::uint32_t min_degree() const;

    // Sorted (u, v) pairs with u < v.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

    bool operator==(const Graph& rhs) const = default;

private:
    std::uint32_t n_;
    std::vector<std::uint8_t> adj_; // n*n symmetric 0/1
};

// A code assignment for a concrete topology.  relabeling[graph_node] is the
// code column the node plays; removed_edges lists topology edges the
// assignment leaves unused by the reduction step.
struct GraphCodePlan {
    std::vector<std::uint32_t> relabeling;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> removed_edges;
    GeneratorA code;

    // Inverse map: code column -> graph node.
    std::vector<std::uint32_t> node_of() const;
};

// Necessary degree condition: every node needs at least max(k, r) neighbors
// to ship its data and collect the parities it stores.
bool min_degree_ok(const Graph& g, std::uint32_t k, std::uint32_t r);

// Graph whose edge {i, j} is present iff node i's data feeds node j's parity
// or vice versa, read off the generator's block supports.  Throws Error when
// the block support is not symmetric.
Graph support_graph(const GeneratorA& gen);

// Peels nodes of full degree n-1 by pairing them greedily (lowest index
// first) and removing the pairing edges until the graph is (n-2)-regular.
// Applies to even n with min degree >= n-2; otherwise NotApplicableError.
std::pair<Graph, std::vector<std::pair<std::uint32_t, std::uint32_t>>>
reduce_to_regular(const Graph& g);

// Code assignment for r = 2 on even-n graphs with min degree >= n-2: after
// reduction the missing edges form a perfect matching, and matched pairs
// take code columns t and t + n/2.  The resulting support misses exactly
// the missing edges.
GraphCodePlan plan_r2_code(const Graph& g);

// Code assignment for r dividing n by embedding the canonical support graph
// (complete minus the cliques on residue classes mod n/r) into g with a
// backtracking search.  Node counts beyond 12 exceed the search budget.
std::optional<GraphCodePlan> plan_divisible_code(const Graph& g, std::uint32_t r);

// For k = r = n/2: searches all C(n, r) failure sets for one where the
// topology alone makes recovery impossible for every code of this shape
// (the bipartite failed-to-surviving pattern allowed by g has no perfect
// matching).  Returns the first such set in colex order, or nothing.
std::optional<std::vector<std::uint32_t>> graph_admits_no_ld_mds(
    const Graph& g, std::uint32_t k, std::uint32_t r,
    std::uint64_t budget = 1000000);

} // namespace ldmds
