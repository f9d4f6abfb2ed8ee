#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "fracdec/packing.hpp"

namespace fracdec {

inline constexpr const char* kToolVersion = "fracdec 1.0.0";

nlohmann::json graph_to_json(const Hypergraph& g);

// Accepts {"n","r","edges":[...]} or generator shorthand
// {"gen":"complete"|"complete_minus_edge"|"complete_minus_matching"|
//  "complete_minus_matchings", "n":..., "r":..., "edge"/"matching"/"matchings":...}.
Hypergraph graph_from_json(const nlohmann::json& j);

Matching matching_from_json(const nlohmann::json& j);  // {"edges":[...]} or [...]
nlohmann::json matching_to_json(const Matching& m);

nlohmann::json packing_to_json(const PackingView& p);
PackingView packing_from_json(const nlohmann::json& j);

// edge_rank,numerator,denominator
std::string boundary_csv(const std::map<std::uint64_t, Rat>& per_edge);

std::uint64_t fnv1a(const std::string& s);

// Canonical-serialization digest: changes iff the semantic content changes.
std::string config_digest(const nlohmann::json& config);

// Wraps an artifact body with tool version, config digest, and generator
// identity, so every output is reproducible from its own header.
nlohmann::json make_artifact(nlohmann::json body, const nlohmann::json& config,
                             std::optional<std::uint64_t> seed = std::nullopt,
                             const std::string& generator = "");

}  // namespace fracdec
