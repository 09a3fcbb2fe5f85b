#include "ldmds/netsim.hpp"

#include <algorithm>
#include <string>

#include "ldmds/rng.hpp"

namespace ldmds {

NetworkConfig NetworkConfig::create(Graph topology, GraphCodePlan plan,
                                    std::uint32_t rounds, std::uint64_t rng_seed,
                                    double fail_prob) {
    const std::uint32_t n = plan.code.params.n;
    if (topology.node_count() != n) {
        throw InvalidParamsError("topology has " +
                                 std::to_string(topology.node_count()) +
                                 " nodes, code needs " + std::to_string(n));
    }
    if (plan.relabeling.size() != n) {
        throw InvalidParamsError("plan relabeling has wrong length");
    }
    std::vector<char> seen(n, 0);
    for (std::uint32_t c : plan.relabeling) {
        if (c >= n || seen[c]) {
            throw InvalidParamsError("plan relabeling is not a permutation");
        }
        seen[c] = 1;
    }
    if (!(fail_prob >= 0.0 && fail_prob <= 1.0)) {
        throw InvalidParamsError("failure probability must lie in [0, 1]");
    }
    if (rounds < 1) {
        throw InvalidParamsError("simulation needs at least one round");
    }
    return NetworkConfig{std::move(topology), std::move(plan), rounds, rng_seed,
                         fail_prob};
}

NetworkState NetworkState::initial(const NetworkConfig& config) {
    const CodeParams& cp = config.plan.code.params;
    NetworkState st;
    st.round = 0;
    st.node_store.assign(cp.n,
                         std::vector<std::uint32_t>(cp.column_height(), 0));
    return st;
}

std::vector<std::uint32_t> parity_targets(const GeneratorA& gen,
                                          std::uint32_t column,
                                          std::uint32_t symbol) {
    const CodeParams& cp = gen.params;
    if (column >= cp.n || symbol >= cp.m) {
        throw InvalidParamsError("data symbol out of range");
    }
    const std::size_t row = static_cast<std::size_t>(column) * cp.m + symbol;
    std::vector<std::uint32_t> targets;
    for (std::uint32_t j = 0; j < cp.n; ++j) {
        for (std::uint32_t v = 0; v < cp.p; ++v) {
            if (gen.a_full.raw(row, static_cast<std::size_t>(j) * cp.p + v) != 0) {
                targets.push_back(j);
                break;
            }
        }
    }
    return targets;
}

NetworkState run_round(const NetworkState& state, const NetworkConfig& config,
                       const Readings& readings, std::uint64_t* symbols_exchanged) {
    const GeneratorA& gen = config.plan.code;
    const CodeParams& cp = gen.params;
    if (!(readings.params == cp)) {
        throw InvalidParamsError("readings built for different code parameters");
    }
    const std::vector<std::uint32_t>& relabel = config.plan.relabeling;
    const std::vector<std::uint32_t> node_of = config.plan.node_of();

    // Readings are indexed by graph node; the code works on code columns.
    DataBlock code_data = DataBlock::zero(cp);
    for (std::uint32_t c = 0; c < cp.n; ++c)
        for (std::uint32_t i = 0; i < cp.m; ++i)
            code_data.set(i, c, readings.get(i, node_of[c]));

    ArrayLayout layout(cp);
    CodewordArray cw = encode(gen, layout, code_data);

    // Each fresh data symbol travels once to every node holding one of its
    // parities; the zero diagonal of A keeps those nodes distinct from the
    // sender.
    std::uint64_t sent = 0;
    for (std::uint32_t v = 0; v < cp.n; ++v) {
        const std::uint32_t col = relabel[v];
        for (std::uint32_t i = 0; i < cp.m; ++i) {
            for (std::uint32_t target_col : parity_targets(gen, col, i)) {
                std::uint32_t target_node = node_of[target_col];
                if (!config.topology.has_edge(v, target_node)) {
                    throw TopologyViolationError(
                        "node " + std::to_string(v) + " has no link to node " +
                        std::to_string(target_node) + " for its parity update");
                }
                ++sent;
            }
        }
    }
    if (symbols_exchanged != nullptr) *symbols_exchanged += sent;

    NetworkState next;
    next.round = state.round + 1;
    next.node_store.assign(cp.n,
                           std::vector<std::uint32_t>(cp.column_height(), 0));
    for (std::uint32_t v = 0; v < cp.n; ++v) {
        for (std::uint32_t row = 0; row < cp.column_height(); ++row) {
            next.node_store[v][row] = cw.get(row, relabel[v]);
        }
    }
    return next;
}

NetworkState inject_failures(const NetworkState& state,
                             const std::vector<std::uint32_t>& nodes) {
    const std::uint32_t n = static_cast<std::uint32_t>(state.node_store.size());
    NetworkState next = state;
    for (std::uint32_t v : nodes) {
        if (v >= n) {
            throw InvalidParamsError("failed node " + std::to_string(v) +
                                     " out of range");
        }
        next.failed.push_back(v);
    }
    std::sort(next.failed.begin(), next.failed.end());
    next.failed.erase(std::unique(next.failed.begin(), next.failed.end()),
                      next.failed.end());
    return next;
}

Readings concentrator_collect(const NetworkState& state,
                              const NetworkConfig& config) {
    const GeneratorA& gen = config.plan.code;
    const CodeParams& cp = gen.params;
    const std::vector<std::uint32_t>& relabel = config.plan.relabeling;
    const std::vector<std::uint32_t> node_of = config.plan.node_of();

    CodewordArray cw = CodewordArray::zero(cp);
    std::vector<std::uint32_t> failed_cols;
    for (std::uint32_t v = 0; v < cp.n; ++v) {
        if (std::binary_search(state.failed.begin(), state.failed.end(), v)) {
            failed_cols.push_back(relabel[v]);
            continue;
        }
        for (std::uint32_t row = 0; row < cp.column_height(); ++row) {
            cw.set(row, relabel[v], state.node_store[v][row]);
        }
    }
    ErasurePattern erased = ErasurePattern::of(std::move(failed_cols), cp.n);
    ArrayLayout layout(cp);
    DataBlock code_data = decode(gen, layout, cw, erased);

    Readings out = DataBlock::zero(cp);
    for (std::uint32_t c = 0; c < cp.n; ++c)
        for (std::uint32_t i = 0; i < cp.m; ++i)
            out.set(i, node_of[c], code_data.get(i, c));
    return out;
}

SimReport run_simulation(const NetworkConfig& config,
                         const std::vector<Readings>* scripted) {
    const CodeParams& cp = config.plan.code.params;
    if (scripted != nullptr && scripted->size() < config.rounds) {
        throw InvalidParamsError("scripted readings cover " +
                                 std::to_string(scripted->size()) + " rounds, need " +
                                 std::to_string(config.rounds));
    }
    DetRng rng(config.rng_seed);
    NetworkState state = NetworkState::initial(config);
    SimReport report;
    for (std::uint32_t t = 0; t < config.rounds; ++t) {
        Readings readings = DataBlock::zero(cp);
        if (scripted != nullptr) {
            readings = (*scripted)[t];
        } else {
            for (std::uint32_t i = 0; i < cp.m; ++i)
                for (std::uint32_t v = 0; v < cp.n; ++v)
                    readings.set(i, v, rng.below(cp.q));
        }
        state = run_round(state, config, readings, &report.symbols_exchanged);

        std::vector<std::uint32_t> dead;
        for (std::uint32_t v = 0; v < cp.n; ++v) {
            if (rng.bernoulli(config.fail_prob)) dead.push_back(v);
        }
        state = inject_failures(state, dead);
        report.failures_injected += dead.size();

        ++report.recoveries_attempted;
        try {
            Readings collected = concentrator_collect(state, config);
            if (collected == readings) ++report.recoveries_ok;
        } catch (const TooManyErasuresError&) {
        } catch (const UnrecoverableError&) {
        }
        ++report.rounds_run;
    }
    return report;
}

} // namespace ldmds
