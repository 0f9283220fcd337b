#pragma once

// The numeric bounds on valences of graphs with a complete walk, all in
// exact integer/rational arithmetic (floating point only for display).

#include <array>
#include <optional>

#include "polwalk/graph.hpp"
#include "polwalk/rational.hpp"

namespace polwalk {

// b(g) = 1 + sqrt(6g+1), for display only.
double bound_b_display(long long g);

// Decides V <= b(g) exactly via (V-1)^2 <= 6g+1; valid for V > 1.
bool bound_b_holds(const Rat& v, long long g);

struct BrBound {
    Rat value;
    std::array<Rat, 4> terms;       // even-floor, odd-floor, even-ceil, odd-ceil term
    std::array<bool, 4> attained;   // which terms reach the maximum
};

// b_r(g): the four-term parity-refined maximum, exact.
BrBound bound_br(long long g);

struct HomotopicBound {
    long long edge_cap;  // 3g + floor(3(S-1)/2)
    Rat valence_cap;     // 3 + (6g-4+pi(S))/S
};

HomotopicBound homotopic_bound(long long s, long long g);

// 12g/(3g+1), the star-graph lower bound for V_c(g).
Rat lower_bound_valence(long long g);

struct BoundLine {
    bool applicable = false;
    bool ok = false;
    Rat slack;  // bound minus value, when applicable
};

struct BoundReport {
    BoundLine spade;      // identity 2A == sum of valences (consistency)
    BoundLine heart;      // F <= 1 + A/3              (needs condition C)
    BoundLine diamond;    // V <= 3 + (6g-4+pi(S))/S   (needs condition C)
    BoundLine club_r;     // V_r <= S-1
    BoundLine diamond_r;  // V_r <= 3 + (6g-4+pi(S))/S (needs condition C)

    bool all_applicable_ok() const;
};

// Exact audit of the inequalities for stats of a connected graph with a
// complete walk. Inequalities whose derivation needs condition (C) are
// reported as not applicable when the graph violates it.
BoundReport audit_bounds(const GraphStats& st);

struct AppendixBounds {
    long long B;   // max pairwise-disjoint embedded loops in distinct free classes
    long long C;   // same, based at one point
    long long C2;  // curves between two base points
};

AppendixBounds appendix_bounds(long long g);

}  // namespace polwalk
