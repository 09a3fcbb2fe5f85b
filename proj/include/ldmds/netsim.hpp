#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ldmds/codec.hpp"
#include "ldmds/graph.hpp"

namespace ldmds {

// One deployment: a topology, the code the nodes run (via a plan mapping
// graph nodes to code columns), and the failure model.
struct NetworkConfig {
    Graph topology;
    GraphCodePlan plan;
    std::uint32_t rounds = 0;
    std::uint64_t rng_seed = 0;
    double fail_prob = 0.0;

    static NetworkConfig create(Graph topology, GraphCodePlan plan,
                                std::uint32_t rounds, std::uint64_t rng_seed,
                                double fail_prob);
};

// Snapshot between steps.  node_store[v] is graph node v's column of m+p
// cells (top to bottom); failed lists this epoch's dead nodes, sorted.
struct NetworkState {
    std::uint32_t round = 0;
    std::vector<std::vector<std::uint32_t>> node_store;
    std::vector<std::uint32_t> failed;

    static NetworkState initial(const NetworkConfig& config);
};

struct SimReport {
    std::uint32_t rounds_run = 0;
    std::uint64_t failures_injected = 0;
    std::uint32_t recoveries_attempted = 0;
    std::uint32_t recoveries_ok = 0;
    std::uint64_t symbols_exchanged = 0;

    bool operator==(const SimReport& rhs) const = default;
};

// Readings for one collection epoch: symbol i of graph node v is entry
// (i, v).  Column order follows graph node indices, not code columns.
using Readings = DataBlock;

// Code columns whose parities depend on the given data symbol of code
// column `column`; sorted, never includes `column` itself (zero diagonal).
// Exposed for tests and the simulator's send accounting.
std::vector<std::uint32_t> parity_targets(const GeneratorA& gen,
                                          std::uint32_t column,
                                          std::uint32_t symbol);

// One collection epoch: every node takes its m readings, ships each to the
// nodes storing the affected parities (TopologyViolationError when such a
// link is missing), and stores its own column.  Failure flags reset; the
// round counter advances.  When symbols_exchanged is non-null the count of
// shipped symbols is added to it.
NetworkState run_round(const NetworkState& state, const NetworkConfig& config,
                       const Readings& readings,
                       std::uint64_t* symbols_exchanged = nullptr);

// Marks nodes dead for the current epoch.
NetworkState inject_failures(const NetworkState& state,
                             const std::vector<std::uint32_t>& nodes);

// The concentrator reads every surviving column and rebuilds all readings.
// Throws TooManyErasuresError / UnrecoverableError as decode does.
Readings concentrator_collect(const NetworkState& state, const NetworkConfig& config);

// Full deterministic run: per epoch, draw readings from the seeded RNG
// (or take them from `scripted`, one block per round), run the round,
// draw per-node failures, collect, and compare against the readings.
SimReport run_simulation(const NetworkConfig& config,
                         const std::vector<Readings>* scripted = nullptr);

} // namespace ldmds
