#pragma once

// Explicit graph families: polygon-quotient monographs, the homotopic
// optima, the star lower-bound graphs, the genus 1..5 optima, Skolem
// triples and the K_S synthesis, and the recursive connected-sum family.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "polwalk/graph.hpp"
#include "polwalk/rational.hpp"

namespace polwalk {

// A 4f-gon in rectangle form. The bottom carries sides a_1..a_{2f}
// consecutively (left to right) with a half-moon diagonal d_j spanning
// the corners of (a_{2j-1}, a_{2j}); the top carries the partner copies:
// top[m-1] = k means the copy of a_k occupies top position m. Bottom and
// top sides are glued orientation-compatibly (translation style).
struct GluingPolygon {
    int half_moons = 0;    // f
    std::vector<int> top;  // permutation of 1..2f

    GluingPolygon(int f, std::vector<int> top_seq);

    // Consecutive copies (abar_k, abar_{k+1}) on top; the K_S synthesis
    // must avoid these, other quotients may use them.
    bool has_adjacent_pair() const;
};

struct GluingResult {
    PolarizedGraph graph;
    int corner_classes = 0;  // S'
};

// Glues the polygon: edges e_1..e_{2f} then d_1..d_f, faces = the f
// half-moon triangles plus the big face (d_1..d_f, then the top read
// backwards), vertices = corner classes.
GluingResult gluing_quotient(const GluingPolygon& p);

// Monograph from the 4g-gon a_1 b_1 .. a_g b_g abar_1 bbar_1 .. with a
// diagonal parallel to each chain (a_j, b_j): one vertex, 3g loops, one
// complete walk and g triangle walks.
PolarizedGraph standard_monograph(long long g);

// S-vertex homotopic graph with 3g + floor(3(S-1)/2) edges and a
// complete walk (saturates the homotopic edge cap).
PolarizedGraph homotopic_optimal(long long s, long long g);

// Ordinary graph with one valence-3g vertex and 3g valence-3 vertices:
// V = 12g/(3g+1), genus g, complete walk.
PolarizedGraph lower_bound_graph(long long g);

// The optimal graphs of genus 1..5: ordinary, cellular, complete walk,
// V = V_r = 24/7, 13/3, 36/7, 6, 25/4.
PolarizedGraph genus_optimal(int g);

struct SkolemTriples {
    int k = 0;
    std::vector<std::array<long long, 3>> triples;  // (alpha_j, beta_j, gamma_j)
    long long alpha_sum = 0, beta_sum = 0, gamma_sum = 0;
};

// Deterministic (lexicographically first) Skolem-style triples:
// alpha_j = j, alpha_j + beta_j = gamma_j, all 3k values distinct in
// 1..3k+1, no two summing to 6k+1.
SkolemTriples skolem_triples(int k);

using SteinerTriple = std::array<int, 3>;

// Checks that the triples partition all unordered pairs of 0..S-1.
bool is_steiner_system(int s, const std::vector<SteinerTriple>& triples);

// Extracts the vertex triples of the length-3 walks.
std::vector<SteinerTriple> triangle_walks(const PolarizedGraph& g, const WalkDecomposition& dec);

// The K_S polarization with an Euler complete walk and Steiner-triple
// short walks; admissible S: 7, 9, and primes congruent to 7 mod 12.
PolarizedGraph ks_polarization(int s);

bool ks_admissible(int s);

// Genera (S-1)(S-3)/6 over admissible S up to the bound, ascending.
std::vector<long long> ks_genera_up_to(long long max_genus);

struct FamilyRecipe {
    // A leaf ("ks", "optimal", "star") or a connected sum of parts.
    std::string kind;
    long long param = 0;  // S for ks, g for the other leaves
    std::vector<FamilyRecipe> parts;

    long long genus() const;
    std::string describe() const;
};

struct FamilyResult {
    PolarizedGraph graph;
    FamilyRecipe recipe;
};

// The desk-scale recursive family: for each genus, the connected sum of
// catalogue leaves maximizing the reduced valence (exact rational
// optimum over leaf multisets via formula (#)).
FamilyResult asymptotic_family(long long g);

// Bounded searches behind the frozen genus 1..3 certificates. They
// return the first acceptable graph in deterministic enumeration order;
// used by tests to re-derive the frozen data.
PolarizedGraph search_genus1_optimal();
PolarizedGraph search_genus2_optimal();
std::vector<int> search_genus3_polygon();  // top sequence for a 24-gon, S' = 7

}  // namespace polwalk
