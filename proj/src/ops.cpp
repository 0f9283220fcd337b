#include "polwalk/ops.hpp"

#include <algorithm>

#include "polwalk/errors.hpp"

namespace polwalk {

namespace {

std::vector<char> mc_membership(const PolarizedGraph& g, const WalkDecomposition& dec) {
    std::vector<char> in_mc(g.dart_count(), 0);
    for (Dart d : dec.complete().darts) in_mc[d] = 1;
    return in_mc;
}

void insert_before(std::vector<Dart>& rot, Dart anchor, Dart val) {
    auto it = std::find(rot.begin(), rot.end(), anchor);
    if (it == rot.end()) throw internal_error("anchor dart not in rotation");
    rot.insert(it, val);
}

void insert_after(std::vector<Dart>& rot, Dart anchor, Dart val) {
    auto it = std::find(rot.begin(), rot.end(), anchor);
    if (it == rot.end()) throw internal_error("anchor dart not in rotation");
    rot.insert(std::next(it), val);
}

// Dense renumbering that drops `removed` edges; `added` fresh edges get
// the ids right after the kept ones, in the order given.
struct EdgeRenumber {
    std::vector<EdgeId> map;  // old -> new, -1 for removed
    int kept = 0;

    EdgeRenumber(int old_count, std::vector<EdgeId> removed) {
        map.assign(old_count, -1);
        std::sort(removed.begin(), removed.end());
        int skip = 0;
        for (EdgeId e = 0; e < old_count; ++e) {
            if (skip < static_cast<int>(removed.size()) && removed[skip] == e) {
                ++skip;
                continue;
            }
            map[e] = e - skip;
        }
        kept = old_count - static_cast<int>(removed.size());
    }

    Dart dart(Dart d) const {
        EdgeId ne = map[edge_of(d)];
        if (ne < 0) throw internal_error("renumbering a removed edge's dart");
        return 2 * ne + (d & 1);
    }
};

PolarizedGraph rebuild(int vertices, const std::vector<std::vector<Dart>>& rot) {
    return PolarizedGraph::from_rotations(vertices, rot);
}

}  // namespace

OpResult contract_edge(const PolarizedGraph& g, EdgeId e) {
    if (e < 0 || e >= g.edge_count()) throw input_error("unknown edge " + std::to_string(e));
    VertexId u = g.origin[plus_dart(e)];
    VertexId w = g.origin[minus_dart(e)];
    if (u == w) throw precondition_error("cannot contract a loop");

    auto rots = g.rotations();
    // Splice w's rotation (read from after the minus dart) into u's at the
    // position of the plus dart.
    std::vector<Dart> merged;
    for (Dart d : rots[u]) {
        if (d != plus_dart(e)) {
            merged.push_back(d);
            continue;
        }
        Dart cur = g.next[minus_dart(e)];
        while (cur != minus_dart(e)) {
            merged.push_back(cur);
            cur = g.next[cur];
        }
    }

    EdgeRenumber ren(g.edge_count(), {e});
    std::vector<std::vector<Dart>> out;
    out.reserve(g.vertices - 1);
    for (VertexId v = 0; v < g.vertices; ++v) {
        if (v == w) continue;
        const auto& src = (v == u) ? merged : rots[v];
        std::vector<Dart> line;
        line.reserve(src.size());
        for (Dart d : src) line.push_back(ren.dart(d));
        out.push_back(std::move(line));
    }
    OpResult res{rebuild(g.vertices - 1, out), ren.map, -1};
    return res;
}

OpResult blow_up_elementary(const PolarizedGraph& g, VertexId v, int cut_from, int cut_to) {
    if (v < 0 || v >= g.vertices) throw input_error("unknown vertex " + std::to_string(v));
    auto rot = g.rotation_of(v);
    int deg = static_cast<int>(rot.size());
    if (deg < 2) throw precondition_error("blow-up needs a vertex of degree at least 2");
    if (cut_from < 0 || cut_from >= deg || cut_to < 0 || cut_to >= deg || cut_from == cut_to)
        throw input_error("cut positions must be two distinct rotation positions");

    std::vector<Dart> moved, staying;
    for (int i = cut_from; i != cut_to; i = (i + 1) % deg) moved.push_back(rot[i]);
    for (int i = cut_to; i != cut_from; i = (i + 1) % deg) staying.push_back(rot[i]);

    auto dec = trace_walks(g);
    if (!dec.complete_index)
        throw precondition_error("blow-up requires a complete walk");
    auto in_mc = mc_membership(g, dec);
    if (!in_mc[moved.front()])
        throw precondition_error("first dart of the moved arc must be left through by the complete walk");
    if (!in_mc[reverse(moved.back())])
        throw precondition_error("last dart of the moved arc must be arrived through by the complete walk");

    int A = g.edge_count();
    Dart e_plus = 2 * A, e_minus = 2 * A + 1;  // v -> new vertex
    auto rots = g.rotations();
    std::vector<std::vector<Dart>> out(rots.begin(), rots.end());
    out[v].clear();
    out[v].push_back(e_plus);
    out[v].insert(out[v].end(), staying.begin(), staying.end());
    std::vector<Dart> fresh = moved;
    fresh.push_back(e_minus);
    out.push_back(std::move(fresh));

    EdgeRenumber ren(A, {});
    OpResult res{rebuild(g.vertices + 1, out), ren.map, A};
    return res;
}

OpResult surgery(const PolarizedGraph& g, VertexId v, Dart e_in, Dart f_out) {
    if (v < 0 || v >= g.vertices) throw input_error("unknown vertex " + std::to_string(v));
    if (e_in < 0 || e_in >= g.dart_count() || f_out < 0 || f_out >= g.dart_count())
        throw input_error("unknown dart");
    if (g.head(e_in) != v) throw precondition_error("e_in must point at v");
    if (g.origin[f_out] != v) throw precondition_error("f_out must be based at v");
    if (g.next[reverse(e_in)] != f_out)
        throw precondition_error("f_out must immediately follow reverse(e_in) at v");

    auto dec = trace_walks(g);
    if (!dec.complete_index) throw precondition_error("surgery requires a complete walk");
    auto in_mc = mc_membership(g, dec);
    for (Dart d : {e_in, f_out})
        if (in_mc[d] && in_mc[reverse(d)])
            throw precondition_error("edge " + std::to_string(edge_of(d)) +
                                     " is traversed in both directions by the complete walk");
    if (edge_of(e_in) == edge_of(f_out))
        throw precondition_error("surgery needs two distinct edges");

    int A = g.edge_count();
    EdgeRenumber ren(A, {edge_of(e_in), edge_of(f_out)});
    EdgeId joined = ren.kept;  // new edge gets the last id
    Dart j_plus = 2 * joined, j_minus = 2 * joined + 1;

    auto rots = g.rotations();
    std::vector<std::vector<Dart>> out;
    std::vector<VertexId> kept_vertices;
    for (VertexId x = 0; x < g.vertices; ++x) {
        std::vector<Dart> line;
        for (Dart d : rots[x]) {
            if (d == reverse(e_in) || d == f_out) continue;  // both based at v
            if (d == e_in)
                line.push_back(j_plus);
            else if (d == reverse(f_out))
                line.push_back(j_minus);
            else
                line.push_back(ren.dart(d));
        }
        if (x == v && line.empty()) continue;  // un-subdivide: drop the vertex
        out.push_back(std::move(line));
        kept_vertices.push_back(x);
    }
    OpResult res{rebuild(static_cast<int>(out.size()), out), ren.map, joined};
    return res;
}

OpResult subdivide(const PolarizedGraph& g, EdgeId e) {
    if (e < 0 || e >= g.edge_count()) throw input_error("unknown edge " + std::to_string(e));
    int A = g.edge_count();
    Dart second_plus = 2 * A, second_minus = 2 * A + 1;  // new mid-vertex -> old head

    auto rots = g.rotations();
    std::vector<std::vector<Dart>> out(rots.begin(), rots.end());
    // Plus dart of e keeps its place (now ends at mid); the old minus-side
    // position gets the fresh minus dart.
    for (auto& line : out)
        for (Dart& d : line)
            if (d == minus_dart(e)) d = second_minus;
    out.push_back({minus_dart(e), second_plus});

    EdgeRenumber ren(A, {});
    OpResult res{rebuild(g.vertices + 1, out), ren.map, A};
    return res;
}

OpResult add_parallel_edge(const PolarizedGraph& g, const std::vector<Dart>& chain) {
    if (chain.empty()) throw precondition_error("empty chain");
    auto dec = trace_walks(g);
    if (!dec.complete_index) throw precondition_error("parallel edge requires a complete walk");
    auto in_mc = mc_membership(g, dec);
    for (size_t i = 0; i < chain.size(); ++i) {
        Dart d = chain[i];
        if (d < 0 || d >= g.dart_count()) throw input_error("unknown dart in chain");
        if (!in_mc[d]) throw precondition_error("chain dart not on the complete walk");
        if (!in_mc[reverse(d)])
            throw precondition_error("reverse of chain dart not on the complete walk");
        if (i + 1 < chain.size() && g.tau(d) != chain[i + 1])
            throw precondition_error("chain darts are not consecutive on the complete walk");
    }

    int A = g.edge_count();
    Dart e_plus = 2 * A, e_minus = 2 * A + 1;
    VertexId p1 = g.origin[chain.front()];
    VertexId pk = g.head(chain.back());

    auto out = g.rotations();
    insert_before(out[p1], chain.front(), e_plus);
    insert_after(out[pk], reverse(chain.back()), e_minus);

    EdgeRenumber ren(A, {});
    OpResult res{rebuild(g.vertices, out), ren.map, A};
    return res;
}

OpResult double_edge(const PolarizedGraph& g, EdgeId e) {
    if (e < 0 || e >= g.edge_count()) throw input_error("unknown edge " + std::to_string(e));
    return add_parallel_edge(g, {minus_dart(e)});
}

ConnectedSumResult connected_sum(const PolarizedGraph& g1, VertexId v1,
                                 const PolarizedGraph& g2, VertexId v2) {
    if (v1 < 0 || v1 >= g1.vertices) throw input_error("unknown vertex in first summand");
    if (v2 < 0 || v2 >= g2.vertices) throw input_error("unknown vertex in second summand");
    auto dec1 = trace_walks(g1);
    auto dec2 = trace_walks(g2);
    if (!dec1.complete_index || !dec2.complete_index)
        throw precondition_error("connected sum requires complete walks in both summands");

    // Last dart of each complete walk (in canonical walk order) arriving
    // at the chosen vertex; the fresh edge goes right after its reverse.
    auto last_arrival = [](const PolarizedGraph& g, const Walk& mc, VertexId v) -> Dart {
        Dart found = -1;
        for (Dart d : mc.darts)
            if (g.head(d) == v) found = d;
        if (found < 0) throw internal_error("complete walk never reaches the chosen vertex");
        return found;
    };
    Dart arr1 = last_arrival(g1, dec1.complete(), v1);
    Dart arr2 = last_arrival(g2, dec2.complete(), v2);

    int A1 = g1.edge_count(), A2 = g2.edge_count();
    int S1 = g1.vertices;
    auto shift_dart = [&](Dart d) { return d + 2 * A1; };

    std::vector<std::vector<Dart>> rots;
    rots.reserve(S1 + g2.vertices);
    for (VertexId v = 0; v < S1; ++v) rots.push_back(g1.rotation_of(v));
    for (VertexId v = 0; v < g2.vertices; ++v) {
        std::vector<Dart> line;
        for (Dart d : g2.rotation_of(v)) line.push_back(shift_dart(d));
        rots.push_back(std::move(line));
    }
    Dart e_plus = 2 * (A1 + A2), e_minus = e_plus + 1;  // v1 -> shifted v2
    insert_after(rots[v1], reverse(arr1), e_plus);
    insert_after(rots[S1 + v2], reverse(shift_dart(arr2)), e_minus);

    PolarizedGraph joined = PolarizedGraph::from_rotations(S1 + g2.vertices, rots);
    OpResult contracted = contract_edge(joined, A1 + A2);

    ConnectedSumResult res;
    res.graph = std::move(contracted.graph);
    res.merged_vertex = v1;  // v2's copy had the higher id and was dropped
    res.edge_map_first.resize(A1);
    res.edge_map_second.resize(A2);
    for (EdgeId e = 0; e < A1; ++e) res.edge_map_first[e] = contracted.edge_map[e];
    for (EdgeId e = 0; e < A2; ++e) res.edge_map_second[e] = contracted.edge_map[A1 + e];
    return res;
}

}  // namespace polwalk
