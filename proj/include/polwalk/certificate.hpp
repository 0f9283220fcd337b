#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "polwalk/constructions.hpp"
#include "polwalk/graph.hpp"

namespace polwalk {

// Self-verifying JSON certificate: embeds the polgraph text plus every
// derived quantity, so feeding the text back through the library must
// reproduce all fields.
nlohmann::json make_certificate(const PolarizedGraph& g,
                                const FamilyRecipe* recipe = nullptr);

// Recomputes everything from the embedded polgraph text; returns the list
// of mismatching fields (empty = verified).
std::vector<std::string> verify_certificate(const nlohmann::json& cert);

// Vertex itinerary of a walk: origins of its darts, closed by repeating
// the first vertex.
std::vector<int> walk_itinerary(const PolarizedGraph& g, const Walk& w);

}  // namespace polwalk
