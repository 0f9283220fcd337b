#pragma once

// Brute-force oracles: exhaustive polarization enumeration on small
// multigraphs, reduced-valence maximization, and seeded random instances.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polwalk/graph.hpp"
#include "polwalk/rational.hpp"

namespace polwalk {

struct Multigraph {
    int vertices = 0;
    std::vector<std::pair<VertexId, VertexId>> edges;  // unordered, loops allowed

    bool connected() const;
};

struct SearchBudget {
    int max_s = 3;
    int max_a = 4;
    long long node_limit = 50'000'000;
    std::uint64_t seed = 0;
};

// Visits every assignment of cyclic orders (one per vertex, up to
// rotation) exactly once, in deterministic order. The callback may return
// false to stop. Returns false when the node budget ran out.
bool enumerate_polarizations(const Multigraph& mg, long long node_limit,
                             const std::function<bool(const PolarizedGraph&)>& visit);

struct MaxVrResult {
    std::optional<Rat> best;
    std::string witness;  // polgraph text of a maximizer
    bool completed = false;
    long long nodes = 0;
};

// Maximum reduced valence over all connected polarized multigraphs with
// genus g and a complete walk, within the budget. Honors POLWALK_THREADS.
// When cache_dir is nonempty, results are stored there keyed by budget.
MaxVrResult brute_force_max_vr(long long g, const SearchBudget& budget,
                               const std::string& cache_dir = "");

// Seeded random connected multigraph with random rotations (A >= S-1).
PolarizedGraph random_polarized(int s, int a, std::uint64_t seed);

}  // namespace polwalk
