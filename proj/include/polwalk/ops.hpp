#pragma once

// Surgeries on polarized graphs. Every operation is pure: inputs are left
// untouched and a new graph is returned together with an edge-id mapping
// (result edges are renumbered densely).

#include <vector>

#include "polwalk/graph.hpp"

namespace polwalk {

struct OpResult {
    PolarizedGraph graph;
    std::vector<EdgeId> edge_map;  // input edge id -> output edge id, -1 if removed
    EdgeId new_edge = -1;          // id of the created edge, if the op creates one
};

// Merges the endpoints of a non-loop edge, splicing the two rotations at
// the positions of its darts. Keeps F and the genus; keeps a complete
// walk if there was one.
OpResult contract_edge(const PolarizedGraph& g, EdgeId e);

// Splits vertex v: the cyclic arc of positions [cut_from, cut_to) of v's
// normalized rotation moves to a fresh vertex, joined to v by a fresh
// edge. The moved arc must start with a dart the complete walk leaves
// through and end with a dart it arrives through, which makes the new
// edge traversed in both directions by the complete walk.
OpResult blow_up_elementary(const PolarizedGraph& g, VertexId v, int cut_from, int cut_to);

// Joins the edges of e_in and f_out into one edge bypassing v, where the
// complete walk enters v via e_in and leaves via f_out (f_out is the
// rotation successor of reverse(e_in)). Neither edge may be traversed in
// both directions by the complete walk. Drops v if it is left isolated.
OpResult surgery(const PolarizedGraph& g, VertexId v, Dart e_in, Dart f_out);

// Puts a vertex in the middle of edge e. The half keeping e's id runs
// from e's plus-side origin to the new vertex.
OpResult subdivide(const PolarizedGraph& g, EdgeId e);

// Adds an edge just left of a chain of darts the complete walk follows
// consecutively; the reverses of the chain darts must also lie on the
// complete walk. The chain becomes a new walk (chain..., reverse(new)),
// and the complete walk takes the new edge instead of the chain.
OpResult add_parallel_edge(const PolarizedGraph& g, const std::vector<Dart>& chain);

// Doubling trick: add_parallel_edge with chain {minus_dart(e)}; e must be
// traversed in both directions by the complete walk.
OpResult double_edge(const PolarizedGraph& g, EdgeId e);

struct ConnectedSumResult {
    PolarizedGraph graph;
    VertexId merged_vertex = -1;
    std::vector<EdgeId> edge_map_first;   // edges of the first summand
    std::vector<EdgeId> edge_map_second;  // edges of the second summand
};

// Glues two graphs with complete walks at v1 ~ v2 (join by a fresh edge
// at the complete-walk face, then contract it). Genus adds; both
// complete walks concatenate into one.
ConnectedSumResult connected_sum(const PolarizedGraph& g1, VertexId v1,
                                 const PolarizedGraph& g2, VertexId v2);

}  // namespace polwalk
