#pragma once

#include <string>
#include <utility>

#include "json.hpp"

#include "ldmds/codec.hpp"
#include "ldmds/graph.hpp"
#include "ldmds/netsim.hpp"
#include "ldmds/verify.hpp"

namespace ldmds {

// All emitters use ordered JSON so documents keep their documented field
// order.  All readers validate types and ranges and throw ParseError with
// the offending field named.
using Json = nlohmann::ordered_json;

// {"n":…, "r":…, "q":…, "a_tilde": [[…]]}; round-trips a code exactly.
Json code_spec_to_json(const GeneratorA& gen);
GeneratorA code_spec_from_json(const Json& j);

// {"n":…, "k":…, "r":…, "m":…, "p":…, "q":…}
Json params_to_json(const CodeParams& params);
CodeParams params_from_json(const Json& j);

// {"params":…, "d": [[…]]}; a bare 2D array is also accepted on input when
// params are supplied by the caller.
Json datablock_to_json(const DataBlock& data);
DataBlock datablock_from_json(const Json& j, const CodeParams& params);

// {"params":…, "cells": [[…]]} row-major; cells of erased columns are null.
Json codeword_to_json(const CodewordArray& cw,
                      const ErasurePattern* erased = nullptr);
std::pair<CodewordArray, ErasurePattern> codeword_from_json(const Json& j);

// {"n":…, "edges": [[u,v],…]} with u < v.
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// {"relabeling": […], "removed_edges": [[u,v],…], "code": code spec}
Json plan_to_json(const GraphCodePlan& plan);
GraphCodePlan plan_from_json(const Json& j);

Json report_to_json(const VerificationReport& report);
Json sim_report_to_json(const SimReport& report);

// Strict parse of a whole JSON text; wraps parser diagnostics in ParseError.
Json parse_json_text(const std::string& text, const std::string& what);

} // namespace ldmds
