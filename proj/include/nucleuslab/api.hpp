#pragma once

#include <json.hpp>

#include "nucleuslab/projgeom.hpp"

namespace nlab {

using Json = nlohmann::ordered_json;

struct RunConfig {
    std::optional<FamilySpec> family;
    std::string graph_json;  // alternative input: a generated graph document
    int base_vertex = 0;
    std::vector<std::string> only;  // check-name filters for verify
    bool large = false;
};

struct RunResult {
    int exit_code = 0;  // 0 ok, 1 verification/analysis failure, 2 usage error
    Json output;
};

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& doc);

/// Parse family/q/D/N command-line style values; throws std::invalid_argument
/// with a user-facing message on bad input.
FamilySpec parse_family_spec(const std::string& family, int D, long q, int N);

RunResult run_generate(const RunConfig& config);
RunResult run_analyze(const RunConfig& config);
RunResult run_nucleus(const RunConfig& config);
RunResult run_verify(const RunConfig& config);

Json checks_to_json(const CheckList& checks);

}  // namespace nlab
