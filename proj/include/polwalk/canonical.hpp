#pragma once

#include <vector>

#include "polwalk/graph.hpp"

namespace polwalk {

// Canonical form of a connected rotation system under dart relabeling.
// Two polarized graphs are isomorphic (as polarized graphs, orientation
// preserved) iff their codes are equal.
std::vector<int> canonical_code(const PolarizedGraph& g);

bool isomorphic(const PolarizedGraph& a, const PolarizedGraph& b);

}  // namespace polwalk
