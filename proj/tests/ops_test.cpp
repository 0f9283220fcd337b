#include <doctest.h>

#include <set>

#include "polwalk/canonical.hpp"
#include "polwalk/constructions.hpp"
#include "polwalk/errors.hpp"
#include "polwalk/graph.hpp"
#include "polwalk/ops.hpp"
#include "polwalk/search.hpp"
#include "test_support.hpp"

using namespace polwalk;
using namespace polwalk::testing;

namespace {

// Planar pair of triangles joined by a bridge, built from its three faces.
PolarizedGraph two_triangles_with_bridge() {
    // Edges: 0,1,2 = triangle A (0-1,1-2,2-0); 3,4,5 = triangle B
    // (3-4,4-5,5-3); 6 = bridge 0-3.
    std::vector<VertexId> origin = {0, 1, 1, 2, 2, 0, 3, 4, 4, 5, 5, 3, 0, 3};
    std::vector<std::vector<Dart>> faces = {
        {0, 2, 4},
        {6, 8, 10},
        {5, 3, 1, 12, 11, 9, 7, 13},
    };
    return from_faces(6, faces, origin);
}

}  // namespace

TEST_CASE("contract the bridge of two joined triangles: bowtie, genus 0") {
    auto g = two_triangles_with_bridge();
    auto before = graph_stats(g);
    CHECK(before.gamma == 0);
    REQUIRE(trace_walks(g).complete_index.has_value());

    auto res = contract_edge(g, 6);
    auto after = graph_stats(res.graph);
    CHECK(after.S == before.S - 1);
    CHECK(after.A == before.A - 1);
    CHECK(after.F == before.F);
    CHECK(after.gamma == 0);
    CHECK(trace_walks(res.graph).complete_index.has_value());
    CHECK(res.edge_map[6] == -1);
    CHECK(res.edge_map[0] == 0);
}

TEST_CASE("contract refuses loops") {
    CHECK_THROWS_AS(contract_edge(loop_monograph(), 0), precondition_error);
}

TEST_CASE("contracting a tree edge of the genus-1 optimum keeps gamma and the walk") {
    auto g = genus_optimal(1);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (g.origin[plus_dart(e)] == g.origin[minus_dart(e)]) continue;
        auto res = contract_edge(g, e);
        auto st = graph_stats(res.graph);
        CHECK(st.gamma == 1);
        CHECK(trace_walks(res.graph).complete_index.has_value());
        break;
    }
}

TEST_CASE("contracting all six tree edges of the genus-1 optimum gives a monograph") {
    auto g = genus_optimal(1);
    int contracted = 0;
    for (;;) {
        EdgeId target = -1;
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (g.origin[plus_dart(e)] != g.origin[minus_dart(e)]) {
                target = e;
                break;
            }
        if (target < 0) break;
        g = contract_edge(g, target).graph;
        ++contracted;
    }
    CHECK(contracted == 6);
    CHECK(g.vertices == 1);
    CHECK(g.edge_count() == 6);
    auto st = graph_stats(g);
    CHECK(st.gamma == 1);
    CHECK(trace_walks(g).complete_index.has_value());
}

TEST_CASE("blow-up then contract is the identity up to relabeling") {
    auto g = standard_monograph(2);
    auto dec = trace_walks(g);
    std::vector<char> in_mc(g.dart_count(), 0);
    for (Dart d : dec.complete().darts) in_mc[d] = 1;
    auto rot = g.rotation_of(0);
    int deg = static_cast<int>(rot.size());
    int tried = 0;
    for (int from = 0; from < deg; ++from)
        for (int len = 1; len < deg; ++len) {
            int to = (from + len) % deg;
            if (!in_mc[rot[from]]) continue;
            if (!in_mc[reverse(rot[(to + deg - 1) % deg])]) continue;
            auto blown = blow_up_elementary(g, 0, from, to);
            auto st = graph_stats(blown.graph);
            CHECK(st.S == 2);
            CHECK(st.A == 7);
            CHECK(st.gamma == 2);
            CHECK(st.F == graph_stats(g).F);
            // The fresh edge is traversed in both directions by the walk.
            auto bdec = trace_walks(blown.graph);
            std::vector<char> bmc(blown.graph.dart_count(), 0);
            for (Dart d : bdec.complete().darts) bmc[d] = 1;
            CHECK(bmc[plus_dart(blown.new_edge)]);
            CHECK(bmc[minus_dart(blown.new_edge)]);
            auto back = contract_edge(blown.graph, blown.new_edge);
            CHECK(isomorphic(back.graph, g));
            ++tried;
        }
    CHECK(tried > 0);
}

TEST_CASE("blow-up rejects cuts violating the walk condition") {
    // At a degree-2 subdivision vertex of an Euler-walk graph, a single
    // moved dart can never be both left and arrived through by the
    // complete walk.
    auto g = subdivide(ks_polarization(7), 0).graph;
    VertexId mid = g.vertices - 1;
    CHECK(g.degree(mid) == 2);
    CHECK_THROWS_AS(blow_up_elementary(g, mid, 0, 1), precondition_error);
    CHECK_THROWS_AS(blow_up_elementary(g, mid, 1, 0), precondition_error);
}

TEST_CASE("three blow-ups on the genus-1 monograph reach S=4, A=6 with a walk") {
    auto g = standard_monograph(1);
    for (int i = 0; i < 3; ++i) {
        auto dec = trace_walks(g);
        std::vector<char> in_mc(g.dart_count(), 0);
        for (Dart d : dec.complete().darts) in_mc[d] = 1;
        auto rot = g.rotation_of(0);
        int deg = static_cast<int>(rot.size());
        bool done = false;
        for (int from = 0; from < deg && !done; ++from)
            for (int len = 1; len < deg && !done; ++len) {
                int to = (from + len) % deg;
                if (!in_mc[rot[from]]) continue;
                if (!in_mc[reverse(rot[(to + deg - 1) % deg])]) continue;
                g = blow_up_elementary(g, 0, from, to).graph;
                done = true;
            }
        REQUIRE(done);
    }
    CHECK(g.vertices == 4);
    CHECK(g.edge_count() == 6);
    CHECK(trace_walks(g).complete_index.has_value());
}

TEST_CASE("surgery undoes subdivision") {
    auto g = ks_polarization(7);
    auto sub = subdivide(g, 5);
    VertexId mid = sub.graph.vertices - 1;
    // At a degree-2 vertex with rotation (r0, r1) a walk arrives via
    // reverse(r0) and leaves via r1.
    auto rot = sub.graph.rotation_of(mid);
    REQUIRE(rot.size() == 2);
    Dart e_in = reverse(rot[0]);
    Dart f_out = rot[1];
    REQUIRE(sub.graph.tau(e_in) == f_out);
    auto res = surgery(sub.graph, mid, e_in, f_out);
    CHECK(res.graph.vertices == g.vertices);
    CHECK(res.graph.edge_count() == g.edge_count());
    CHECK(isomorphic(res.graph, g));
}

TEST_CASE("surgery across a degree-4 vertex of a bigon with chord keeps the walk") {
    // Two vertices joined by a parallel pair, plus a loop at vertex 0:
    // search the polarizations for an instance where surgery applies.
    Multigraph mg;
    mg.vertices = 2;
    mg.edges = {{0, 1}, {0, 1}, {0, 0}};
    bool exercised = false;
    enumerate_polarizations(mg, 100000, [&](const PolarizedGraph& pg) {
        auto dec = trace_walks(pg);
        if (!dec.complete_index) return true;
        std::vector<char> in_mc(pg.dart_count(), 0);
        for (Dart d : dec.complete().darts) in_mc[d] = 1;
        for (Dart e_in = 0; e_in < pg.dart_count(); ++e_in) {
            if (pg.head(e_in) != 0 || !in_mc[e_in]) continue;
            Dart f_out = pg.tau(e_in);
            if (!in_mc[f_out]) continue;
            if (in_mc[reverse(e_in)] || in_mc[reverse(f_out)]) continue;
            if (edge_of(e_in) == edge_of(f_out)) continue;
            auto res = surgery(pg, 0, e_in, f_out);
            CHECK(res.graph.edge_count() == pg.edge_count() - 1);
            CHECK(trace_walks(res.graph).complete_index.has_value());
            exercised = true;
            return false;
        }
        return true;
    });
    CHECK(exercised);
}

TEST_CASE("surgery rejects a pendant rebound") {
    auto g = path3();
    // The walk arrives at leaf 2 via edge 1 and rebounds.
    Dart e_in = plus_dart(1);
    REQUIRE(g.head(e_in) == 2);
    CHECK_THROWS_AS(surgery(g, 2, e_in, g.tau(e_in)), precondition_error);
}

TEST_CASE("subdividing the loop monograph gives the 2-cycle with walks (2,2)") {
    auto res = subdivide(loop_monograph(), 0);
    auto dec = trace_walks(res.graph);
    REQUIRE(dec.walks.size() == 2);
    CHECK(dec.walks[0].length() == 2);
    CHECK(dec.walks[1].length() == 2);
    CHECK(graph_stats(res.graph, dec).gamma == 0);
}

TEST_CASE("subdivide then contract the fresh edge is the identity") {
    auto g = genus_optimal(2);
    auto sub = subdivide(g, 4);
    auto back = contract_edge(sub.graph, sub.new_edge);
    CHECK(isomorphic(back.graph, g));
}

TEST_CASE("bouquet loops subdivided into three edges give the planar family") {
    for (int n = 1; n <= 4; ++n) {
        // Nested planar bouquet of n loops.
        std::vector<Dart> rot;
        for (int l = 0; l < n; ++l) {
            rot.push_back(plus_dart(l));
            rot.push_back(minus_dart(l));
        }
        auto g = PolarizedGraph::from_rotations(1, {rot});
        for (int l = 0; l < n; ++l) {
            auto r1 = subdivide(g, l);
            g = subdivide(r1.graph, r1.new_edge).graph;
        }
        auto st = graph_stats(g);
        CHECK(st.S == 2 * n + 1);
        CHECK(st.A == 3 * n);
        CHECK(st.gamma == 0);
        CHECK(st.is_ordinary);
        CHECK(st.V == Rat(6 * n, 2 * n + 1));
        CHECK(trace_walks(g).complete_index.has_value());
    }
}

TEST_CASE("doubling adds a walk of length 2") {
    auto g = path3();
    auto res = double_edge(g, 0);
    auto dec = trace_walks(res.graph);
    std::multiset<int> lengths;
    for (const auto& w : dec.walks) lengths.insert(w.length());
    CHECK(lengths.count(2) == 1);
    CHECK(graph_stats(res.graph, dec).gamma == graph_stats(g).gamma);
    // The fresh walk is exactly (chain, reverse(new edge)).
    bool found = false;
    for (const auto& w : dec.walks)
        if (w.length() == 2) {
            std::set<Dart> darts(w.darts.begin(), w.darts.end());
            CHECK(darts.count(minus_dart(0)) == 1);
            CHECK(darts.count(minus_dart(res.new_edge)) == 1);
            found = true;
        }
    CHECK(found);
}

TEST_CASE("doubling requires the edge to be traversed both ways") {
    CHECK_THROWS_AS(double_edge(triangle(), 0), precondition_error);
}

TEST_CASE("parallel edge over a chain through a degree-2 vertex") {
    auto g = path3();
    std::vector<Dart> chain = {plus_dart(0), plus_dart(1)};
    auto res = add_parallel_edge(g, chain);
    auto dec = trace_walks(res.graph);
    auto before = trace_walks(g);
    CHECK(static_cast<int>(dec.walks.size()) == static_cast<int>(before.walks.size()) + 1);
    bool found = false;
    for (const auto& w : dec.walks) {
        auto it = std::find(w.darts.begin(), w.darts.end(), minus_dart(res.new_edge));
        if (it == w.darts.end()) continue;
        // Exactly (chain..., reverse(new edge)), up to rotation.
        CHECK(w.length() == 3);
        std::vector<Dart> want = {plus_dart(0), plus_dart(1), minus_dart(res.new_edge)};
        auto ws = w.darts;
        std::rotate(ws.begin(), std::find(ws.begin(), ws.end(), plus_dart(0)), ws.end());
        CHECK(ws == want);
        found = true;
    }
    CHECK(found);
    auto st = graph_stats(res.graph, dec);
    CHECK(st.gamma == 0);
}

TEST_CASE("parallel edge rejects chains that are not walk segments") {
    auto g = triangle();
    // Consecutive on the walk but the reverses belong to the other walk.
    auto dec = trace_walks(g);
    auto mc = dec.complete().darts;
    CHECK_THROWS_AS(add_parallel_edge(g, {mc[0], mc[1]}), precondition_error);
    // Not consecutive at all.
    auto p = path3();
    CHECK_THROWS_AS(add_parallel_edge(p, {plus_dart(1), plus_dart(0)}), precondition_error);
}

TEST_CASE("connected sum of two K7 optima") {
    auto k7 = ks_polarization(7);
    auto res = connected_sum(k7, 0, k7, 0);
    auto st = graph_stats(res.graph);
    CHECK(st.S == 13);
    CHECK(st.gamma == 8);
    CHECK(st.V_r == Rat(84, 13));
    CHECK(trace_walks(res.graph).complete_index.has_value());
    // Short walks of both summands persist: 14 triangles.
    auto dec = trace_walks(res.graph);
    int triangles = 0;
    for (const auto& w : dec.walks) triangles += (w.length() == 3);
    CHECK(triangles == 14);
}

TEST_CASE("connected sum with the single-edge graph follows formula (#)") {
    auto g = genus_optimal(3);
    auto st_g = graph_stats(g);
    auto res = connected_sum(g, 2, single_edge(), 0);
    auto st = graph_stats(res.graph);
    CHECK(st.S == st_g.S + 1);
    CHECK(st.gamma == st_g.gamma);
    Rat expected = st_g.V_r * Rat(st_g.S, st.S) + Rat(1) * Rat(2, st.S);
    CHECK(st.V_r == expected);
}

TEST_CASE("connected sum requires complete walks") {
    // The triangle-with-two-pendants instance has rotations without a
    // complete walk; find one and check the error.
    Multigraph mg;
    mg.vertices = 5;
    mg.edges = {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {0, 4}};
    PolarizedGraph bad;
    bool found = false;
    enumerate_polarizations(mg, 100000, [&](const PolarizedGraph& pg) {
        if (!trace_walks(pg).complete_index) {
            bad = pg;
            found = true;
            return false;
        }
        return true;
    });
    REQUIRE(found);
    CHECK_THROWS_AS(connected_sum(bad, 0, triangle(), 0), precondition_error);
}
