#pragma once

// Rotation systems (polarized graphs) and the left-walk dynamics.
//
// A dart is one of the two directed versions of an edge; dart 2e is the
// "plus" side of edge e, dart 2e+1 the "minus" side, so reversal is ^1.
// The rotation at a vertex is a cyclic order on the darts based there,
// stored as a successor map (dart -> next dart with the same origin).
// The step map tau sends an incoming dart to the next outgoing one in
// cyclic order ("turn left"); its orbits are the walks.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polwalk/rational.hpp"

namespace polwalk {

using Dart = int;
using EdgeId = int;
using VertexId = int;

inline Dart reverse(Dart d) { return d ^ 1; }
inline EdgeId edge_of(Dart d) { return d >> 1; }
inline Dart plus_dart(EdgeId e) { return 2 * e; }
inline Dart minus_dart(EdgeId e) { return 2 * e + 1; }

struct PolarizedGraph {
    int vertices = 0;
    std::vector<VertexId> origin;  // dart -> base vertex, size 2A
    std::vector<Dart> next;        // dart -> rotation successor at its origin

    int edge_count() const { return static_cast<int>(origin.size()) / 2; }
    int dart_count() const { return static_cast<int>(origin.size()); }

    VertexId head(Dart d) const { return origin[reverse(d)]; }

    // The left-walk step: successor, at the head of d, of reverse(d).
    Dart tau(Dart d) const;

    int degree(VertexId v) const;

    // Rotation at v as a list, normalized to start at the smallest dart.
    std::vector<Dart> rotation_of(VertexId v) const;
    std::vector<std::vector<Dart>> rotations() const;

    bool connected() const;

    // Validates and builds from one cyclic dart list per vertex.
    static PolarizedGraph from_rotations(int vertex_count,
                                         const std::vector<std::vector<Dart>>& rot);
};

struct Walk {
    std::vector<Dart> darts;  // cyclic, starts at the smallest dart
    int length() const { return static_cast<int>(darts.size()); }
};

struct WalkDecomposition {
    std::vector<Walk> walks;            // sorted by smallest contained dart
    std::optional<int> complete_index;  // walk covering every edge, if any

    const Walk& complete() const;
    bool covers_all_edges(const Walk& w, int edge_count) const;
};

struct GraphStats {
    long long S = 0;
    long long A = 0;
    long long A_r = 0;  // adjacent vertex pairs (loops and multiplicity ignored)
    long long F = 0;
    long long chi = 0;
    long long gamma = 0;
    Rat V;    // 2A/S
    Rat V_r;  // 2A_r/S
    std::map<long long, long long> ell;  // walk length -> count
    int parity = 0;                      // pi(S)
    bool is_ordinary = false;
    bool satisfies_C = false;
};

// All tau-orbits. Requires a connected graph with at least one edge.
WalkDecomposition trace_walks(const PolarizedGraph& g);

GraphStats graph_stats(const PolarizedGraph& g, const WalkDecomposition& w);
GraphStats graph_stats(const PolarizedGraph& g);

struct CompleteWalkResult {
    std::optional<Walk> walk;
    long long tau_steps = 0;  // never exceeds 4A
};

// Decides existence of a complete walk by tracing only the two orbits
// through edge 0 (any complete walk must traverse that edge).
CompleteWalkResult find_complete_walk(const PolarizedGraph& g);

// Lemma-style reduction: removes the edge of every length-1 walk and one
// edge of every length-2 walk until no short walk remains. Keeps the
// vertex set, the genus, the per-vertex reduced valences, and a complete
// walk. Requires a complete walk and S >= 3.
PolarizedGraph reduce_to_condition_c(const PolarizedGraph& g);

// Inverse of trace_walks: rebuilds the rotation system from a face list.
// Every dart 0..2A-1 must appear exactly once across the faces and carry
// a declared origin. Throws input_error («not a polarization») when the
// induced permutation at some vertex is not a single cycle.
PolarizedGraph from_faces(int vertex_count,
                          const std::vector<std::vector<Dart>>& faces,
                          const std::vector<VertexId>& dart_origin);

// Per-vertex reduced valence: number of distinct neighbours != v.
std::vector<long long> reduced_valences(const PolarizedGraph& g);

bool has_loops(const PolarizedGraph& g);
bool is_ordinary(const PolarizedGraph& g);

}  // namespace polwalk
