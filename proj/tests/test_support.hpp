#pragma once

// Shared fixtures and instance generators for the tests.

#include <vector>

#include "polwalk/graph.hpp"
#include "polwalk/ops.hpp"

namespace polwalk::testing {

// Single vertex, one loop: rotation (0+, 0-).
inline PolarizedGraph loop_monograph() {
    return PolarizedGraph::from_rotations(1, {{0, 1}});
}

// Two vertices, one edge.
inline PolarizedGraph single_edge() {
    return PolarizedGraph::from_rotations(2, {{0}, {1}});
}

// Path on three vertices (edges 0: 0-1, 1: 1-2).
inline PolarizedGraph path3() {
    return PolarizedGraph::from_rotations(3, {{0}, {1, 2}, {3}});
}

// Triangle 0-1-2 (edges 0: 0-1, 1: 1-2, 2: 2-0); degree-2 rotations are
// forced, so this is "the" planar triangle.
inline PolarizedGraph triangle() {
    return PolarizedGraph::from_rotations(3, {{0, 5}, {1, 2}, {3, 4}});
}

// One vertex, two loops, interleaved as in the square quotient (torus).
inline PolarizedGraph torus_two_loops() {
    return PolarizedGraph::from_rotations(1, {{0, 2, 1, 3}});
}

// One vertex, two loops, nested (planar).
inline PolarizedGraph nested_two_loops() {
    return PolarizedGraph::from_rotations(1, {{0, 1, 2, 3}});
}

// Adds a loop forming a length-1 walk. The pair is inserted right after
// `anchor` in its vertex's rotation; when reverse(anchor) lies on the
// complete walk, the walk absorbs the loop's other dart and stays
// complete.
inline PolarizedGraph plant_short_loop(const PolarizedGraph& g, Dart anchor) {
    int a = g.edge_count();
    auto rot = g.rotations();
    auto& line = rot[g.origin[anchor]];
    auto it = std::find(line.begin(), line.end(), anchor);
    it = line.insert(std::next(it), plus_dart(a));
    line.insert(it, minus_dart(a));
    return PolarizedGraph::from_rotations(g.vertices, rot);
}

// Attaches a pendant edge whose hub-side dart sits right after `anchor`;
// pendant edges are always traversed in both directions by the walk
// through that corner.
inline PolarizedGraph attach_pendant(const PolarizedGraph& g, Dart anchor) {
    int a = g.edge_count();
    auto rot = g.rotations();
    auto& line = rot[g.origin[anchor]];
    auto it = std::find(line.begin(), line.end(), anchor);
    line.insert(std::next(it), plus_dart(a));
    rot.push_back({minus_dart(a)});
    return PolarizedGraph::from_rotations(g.vertices + 1, rot);
}

}  // namespace polwalk::testing
