#include "ldmds/graph.hpp"

#include <algorithm>
#include <string>

#include "ldmds/combinatorics.hpp"

namespace ldmds {

Graph::Graph(std::uint32_t n) : n_(n) {
    if (n < 1) throw InvalidParamsError("graph needs at least one node");
    adj_.assign(static_cast<std::size_t>(n) * n, 0);
}

Graph Graph::complete(std::uint32_t n) {
    Graph g(n);
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

void Graph::add_edge(std::uint32_t u, std::uint32_t v) {
    if (u >= n_ || v >= n_) {
        throw InvalidParamsError("edge endpoint out of range");
    }
    if (u == v) {
        throw InvalidParamsError("self-loop at node " + std::to_string(u));
    }
    adj_[static_cast<std::size_t>(u) * n_ + v] = 1;
    adj_[static_cast<std::size_t>(v) * n_ + u] = 1;
}

bool Graph::has_edge(std::uint32_t u, std::uint32_t v) const {
    if (u >= n_ || v >= n_) {
        throw InvalidParamsError("edge endpoint out of range");
    }
    return adj_[static_cast<std::size_t>(u) * n_ + v] != 0;
}

std::uint32_t Graph::degree(std::uint32_t v) const {
    if (v >= n_) throw InvalidParamsError("node out of range");
    std::uint32_t d = 0;
    for (std::uint32_t u = 0; u < n_; ++u) d += adj_[static_cast<std::size_t>(v) * n_ + u];
    return d;
}

std::uint32_t Graph::min_degree() const {
    std::uint32_t best = n_;
    for (std::uint32_t v = 0; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

std::size_t Graph::edge_count() const {
    std::size_t total = 0;
    for (std::uint8_t bit : adj_) total += bit;
    return total / 2;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Graph::edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t u = 0; u < n_; ++u)
        for (std::uint32_t v = u + 1; v < n_; ++v)
            if (adj_[static_cast<std::size_t>(u) * n_ + v]) out.emplace_back(u, v);
    return out;
}

std::vector<std::uint32_t> GraphCodePlan::node_of() const {
    std::vector<std::uint32_t> inv(relabeling.size(), 0);
    for (std::uint32_t v = 0; v < relabeling.size(); ++v) inv[relabeling[v]] = v;
    return inv;
}

bool min_degree_ok(const Graph& g, std::uint32_t k, std::uint32_t r) {
    return g.min_degree() >= std::max(k, r);
}

Graph support_graph(const GeneratorA& gen) {
    const std::uint32_t n = gen.params.n;
    Graph g(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            bool ij = !gen.block_is_zero(i, j);
            bool ji = !gen.block_is_zero(j, i);
            if (ij != ji) {
                throw Error("block support is not symmetric between nodes " +
                            std::to_string(i) + " and " + std::to_string(j));
            }
            if (ij) g.add_edge(i, j);
        }
    }
    return g;
}

std::pair<Graph, std::vector<std::pair<std::uint32_t, std::uint32_t>>>
reduce_to_regular(const Graph& g) {
    const std::uint32_t n = g.node_count();
    if (n % 2 != 0) {
        throw NotApplicableError("reduction needs an even node count");
    }
    if (g.min_degree() + 2 < n) {
        throw NotApplicableError("reduction needs min degree >= n - 2");
    }
    Graph reduced = g;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> removed;
    // Nodes of full degree are mutually adjacent, and their count is even,
    // so pairing the two lowest-index ones always removes a real edge.
    std::vector<std::uint32_t> full;
    for (std::uint32_t v = 0; v < n; ++v) {
        if (g.degree(v) == n - 1) full.push_back(v);
    }
    for (std::size_t t = 0; t + 1 < full.size(); t += 2) {
        removed.emplace_back(full[t], full[t + 1]);
    }
    if (!removed.empty()) {
        Graph pruned(n);
        for (auto [u, v] : g.edges()) {
            bool drop = false;
            for (auto [a, b] : removed) {
                if (a == u && b == v) drop = true;
            }
            if (!drop) pruned.add_edge(u, v);
        }
        reduced = pruned;
    }
    for (std::uint32_t v = 0; v < n; ++v) {
        if (reduced.degree(v) != n - 2) {
            throw NotApplicableError("graph does not reduce to (n-2)-regular form");
        }
    }
    return {reduced, removed};
}

GraphCodePlan plan_r2_code(const Graph& g) {
    const std::uint32_t n = g.node_count();
    if (n < 4 || n % 2 != 0) {
        throw NotApplicableError("this assignment needs an even node count >= 4");
    }
    if (g.min_degree() + 2 < n) {
        throw NotApplicableError("this assignment needs min degree >= n - 2");
    }
    auto [reduced, removed] = reduce_to_regular(g);
    // In an (n-2)-regular graph every node misses exactly one other node;
    // the missing pairs form a perfect matching.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> matching;
    for (std::uint32_t u = 0; u < n; ++u) {
        for (std::uint32_t v = u + 1; v < n; ++v) {
            if (!reduced.has_edge(u, v)) matching.emplace_back(u, v);
        }
    }
    if (matching.size() != n / 2) {
        throw NotApplicableError("reduced graph is not complete minus a matching");
    }
    // Matched pairs become code columns t and t + n/2, whose blocks are the
    // zero blocks of the canonical support.
    std::vector<std::uint32_t> relabeling(n, 0);
    for (std::uint32_t t = 0; t < matching.size(); ++t) {
        relabeling[matching[t].first] = t;
        relabeling[matching[t].second] = t + n / 2;
    }
    CodeParams cp = derive_params(n, 2);
    Matrix a_tilde = cauchy_totally_nonsingular(cp.k, cp.r, PrimeField(cp.q));
    return GraphCodePlan{std::move(relabeling), std::move(removed),
                         build_generator(cp, a_tilde)};
}

namespace {

// Backtracking injection of the canonical support graph into g; code column
// `a` may sit on graph node `v` only if previously placed support neighbors
// of `a` are g-neighbors of `v` (and non-neighbors stay non-adjacent is not
// required: extra edges of g are simply unused).
bool embed_support(const Graph& support, const Graph& g,
                   std::vector<std::uint32_t>& node_for_col,
                   std::vector<char>& used, std::uint32_t col,
                   std::uint64_t& steps, std::uint64_t step_budget) {
    const std::uint32_t n = g.node_count();
    if (col == n) return true;
    for (std::uint32_t v = 0; v < n; ++v) {
        if (used[v]) continue;
        if (++steps > step_budget) {
            throw BudgetExceededError("embedding search exceeded its step budget");
        }
        if (g.degree(v) < support.degree(col)) continue;
        bool ok = true;
        for (std::uint32_t b = 0; b < col; ++b) {
            if (support.has_edge(b, col) && !g.has_edge(node_for_col[b], v)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        used[v] = 1;
        node_for_col[col] = v;
        if (embed_support(support, g, node_for_col, used, col + 1, steps, step_budget)) {
            return true;
        }
        used[v] = 0;
    }
    return false;
}

} // namespace

std::optional<GraphCodePlan> plan_divisible_code(const Graph& g, std::uint32_t r) {
    const std::uint32_t n = g.node_count();
    if (r < 1 || r >= n || n % r != 0) {
        throw NotApplicableError("this assignment needs r >= 1 dividing n");
    }
    if (n > 12) {
        throw BudgetExceededError("embedding search is budgeted for n <= 12");
    }
    CodeParams cp = derive_params(n, r);
    Matrix a_tilde = cauchy_totally_nonsingular(cp.k, cp.r, PrimeField(cp.q));
    GeneratorA gen = build_generator(cp, a_tilde);
    Graph support = support_graph(gen);

    std::vector<std::uint32_t> node_for_col(n, 0);
    std::vector<char> used(n, 0);
    std::uint64_t steps = 0;
    if (!embed_support(support, g, node_for_col, used, 0, steps, 10000000ull)) {
        return std::nullopt;
    }
    std::vector<std::uint32_t> relabeling(n, 0);
    for (std::uint32_t a = 0; a < n; ++a) relabeling[node_for_col[a]] = a;
    return GraphCodePlan{std::move(relabeling), {}, std::move(gen)};
}

std::optional<std::vector<std::uint32_t>> graph_admits_no_ld_mds(
    const Graph& g, std::uint32_t k, std::uint32_t r, std::uint64_t budget) {
    const std::uint32_t n = g.node_count();
    if (k != r || n != 2 * k || k < 1) {
        throw NotApplicableError(
            "topology obstruction search covers the k = r = n/2 shape only");
    }
    const std::uint64_t total = binomial(n, r);
    if (total > budget) {
        throw BudgetExceededError("enumerating " + std::to_string(total) +
                                  " failure sets exceeds budget " +
                                  std::to_string(budget));
    }
    // For each failure set, the widest support any code could use between
    // failed and surviving nodes is cut down by the missing links of g; if
    // that pattern has no perfect matching, every such code is structurally
    // singular on this set.
    std::vector<std::uint32_t> failed = first_subset(r);
    do {
        std::vector<std::uint32_t> survivors;
        survivors.reserve(k);
        {
            std::size_t t = 0;
            for (std::uint32_t j = 0; j < n; ++j) {
                if (t < failed.size() && failed[t] == j) {
                    ++t;
                } else {
                    survivors.push_back(j);
                }
            }
        }
        SupportPattern pattern = SupportPattern::zero(r, k);
        for (std::uint32_t a = 0; a < r; ++a)
            for (std::uint32_t b = 0; b < k; ++b)
                if (g.has_edge(failed[a], survivors[b])) pattern.set(a, b, true);
        if (max_bipartite_matching(pattern) < r) {
            return failed;
        }
    } while (next_subset_colex(failed, n));
    return std::nullopt;
}

} // namespace ldmds
