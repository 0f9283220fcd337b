#include "polwalk/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "polwalk/errors.hpp"

namespace polwalk {

Dart PolarizedGraph::tau(Dart d) const {
    if (d < 0 || d >= dart_count()) throw input_error("unknown dart " + std::to_string(d));
    return next[reverse(d)];
}

int PolarizedGraph::degree(VertexId v) const {
    int deg = 0;
    for (VertexId o : origin)
        if (o == v) ++deg;
    return deg;
}

std::vector<Dart> PolarizedGraph::rotation_of(VertexId v) const {
    if (v < 0 || v >= vertices) throw input_error("unknown vertex " + std::to_string(v));
    Dart start = -1;
    for (Dart d = 0; d < dart_count(); ++d)
        if (origin[d] == v) {
            start = d;
            break;
        }
    std::vector<Dart> rot;
    if (start < 0) return rot;
    Dart cur = start;
    do {
        rot.push_back(cur);
        cur = next[cur];
    } while (cur != start);
    return rot;
}

std::vector<std::vector<Dart>> PolarizedGraph::rotations() const {
    std::vector<std::vector<Dart>> all(vertices);
    for (VertexId v = 0; v < vertices; ++v) all[v] = rotation_of(v);
    return all;
}

bool PolarizedGraph::connected() const {
    if (vertices <= 0) return false;
    if (vertices == 1) return true;
    std::vector<char> seen(vertices, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int found = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (Dart d = 0; d < dart_count(); ++d) {
            if (origin[d] != v) continue;
            VertexId w = head(d);
            if (!seen[w]) {
                seen[w] = 1;
                ++found;
                stack.push_back(w);
            }
        }
    }
    return found == vertices;
}

PolarizedGraph PolarizedGraph::from_rotations(int vertex_count,
                                              const std::vector<std::vector<Dart>>& rot) {
    if (vertex_count <= 0) throw input_error("vertex count must be positive");
    if (static_cast<int>(rot.size()) != vertex_count)
        throw input_error("expected one rotation per vertex");
    size_t dart_total = 0;
    for (const auto& r : rot) dart_total += r.size();
    if (dart_total % 2 != 0) throw input_error("odd number of darts");

    PolarizedGraph g;
    g.vertices = vertex_count;
    g.origin.assign(dart_total, -1);
    g.next.assign(dart_total, -1);
    for (VertexId v = 0; v < vertex_count; ++v) {
        const auto& r = rot[v];
        for (size_t i = 0; i < r.size(); ++i) {
            Dart d = r[i];
            if (d < 0 || d >= static_cast<Dart>(dart_total))
                throw input_error("dart " + std::to_string(d) + " out of range");
            if (g.origin[d] != -1)
                throw input_error("dart " + std::to_string(d) + " appears twice");
            g.origin[d] = v;
            g.next[d] = r[(i + 1) % r.size()];
        }
    }
    for (size_t d = 0; d < dart_total; ++d)
        if (g.origin[d] == -1)
            throw input_error("dart " + std::to_string(d) + " missing from rotations");
    return g;
}

const Walk& WalkDecomposition::complete() const {
    if (!complete_index) throw precondition_error("graph has no complete walk");
    return walks[*complete_index];
}

bool WalkDecomposition::covers_all_edges(const Walk& w, int edge_count) const {
    std::vector<char> covered(edge_count, 0);
    int n = 0;
    for (Dart d : w.darts)
        if (!covered[edge_of(d)]) {
            covered[edge_of(d)] = 1;
            ++n;
        }
    return n == edge_count;
}

WalkDecomposition trace_walks(const PolarizedGraph& g) {
    if (g.edge_count() < 1) throw precondition_error("graph has no edges");
    if (!g.connected()) throw structural_error("graph is disconnected");

    WalkDecomposition dec;
    std::vector<char> visited(g.dart_count(), 0);
    for (Dart d = 0; d < g.dart_count(); ++d) {
        if (visited[d]) continue;
        Walk w;
        Dart cur = d;
        do {
            visited[cur] = 1;
            w.darts.push_back(cur);
            cur = g.tau(cur);
        } while (cur != d);
        dec.walks.push_back(std::move(w));
    }
    for (size_t i = 0; i < dec.walks.size(); ++i)
        if (dec.covers_all_edges(dec.walks[i], g.edge_count())) {
            dec.complete_index = static_cast<int>(i);
            break;
        }
    return dec;
}

std::vector<long long> reduced_valences(const PolarizedGraph& g) {
    std::vector<std::set<VertexId>> nbrs(g.vertices);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        VertexId u = g.origin[plus_dart(e)];
        VertexId v = g.origin[minus_dart(e)];
        if (u == v) continue;
        nbrs[u].insert(v);
        nbrs[v].insert(u);
    }
    std::vector<long long> out(g.vertices);
    for (VertexId v = 0; v < g.vertices; ++v) out[v] = static_cast<long long>(nbrs[v].size());
    return out;
}

bool has_loops(const PolarizedGraph& g) {
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (g.origin[plus_dart(e)] == g.origin[minus_dart(e)]) return true;
    return false;
}

bool is_ordinary(const PolarizedGraph& g) {
    std::set<std::pair<VertexId, VertexId>> pairs;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        VertexId u = g.origin[plus_dart(e)];
        VertexId v = g.origin[minus_dart(e)];
        if (u == v) return false;
        auto p = std::minmax(u, v);
        if (!pairs.insert({p.first, p.second}).second) return false;
    }
    return true;
}

GraphStats graph_stats(const PolarizedGraph& g, const WalkDecomposition& w) {
    GraphStats st;
    st.S = g.vertices;
    st.A = g.edge_count();
    std::set<std::pair<VertexId, VertexId>> pairs;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        VertexId u = g.origin[plus_dart(e)];
        VertexId v = g.origin[minus_dart(e)];
        if (u == v) continue;
        auto p = std::minmax(u, v);
        pairs.insert({p.first, p.second});
    }
    st.A_r = static_cast<long long>(pairs.size());
    st.F = static_cast<long long>(w.walks.size());
    st.chi = st.S - st.A + st.F;
    if (st.chi % 2 != 0 || st.chi > 2)
        throw internal_error("Euler characteristic " + std::to_string(st.chi) +
                             " is not even and at most 2");
    st.gamma = 1 - st.chi / 2;
    st.V = Rat(2 * st.A, st.S);
    st.V_r = Rat(2 * st.A_r, st.S);
    for (const Walk& walk : w.walks) ++st.ell[walk.length()];
    st.parity = static_cast<int>(st.S % 2);
    st.is_ordinary = is_ordinary(g);
    st.satisfies_C = st.ell.count(1) == 0 && st.ell.count(2) == 0;
    return st;
}

GraphStats graph_stats(const PolarizedGraph& g) { return graph_stats(g, trace_walks(g)); }

CompleteWalkResult find_complete_walk(const PolarizedGraph& g) {
    if (g.edge_count() < 1) throw precondition_error("graph has no edges");
    if (!g.connected()) throw structural_error("graph is disconnected");

    CompleteWalkResult res;
    auto trace_from = [&](Dart start) -> std::optional<Walk> {
        Walk w;
        std::vector<char> covered(g.edge_count(), 0);
        int distinct = 0;
        Dart cur = start;
        do {
            w.darts.push_back(cur);
            if (!covered[edge_of(cur)]) {
                covered[edge_of(cur)] = 1;
                ++distinct;
            }
            cur = g.tau(cur);
            ++res.tau_steps;
        } while (cur != start);
        if (distinct != g.edge_count()) return std::nullopt;
        // Canonical representative: rotate to the smallest dart.
        auto mn = std::min_element(w.darts.begin(), w.darts.end());
        std::rotate(w.darts.begin(), mn, w.darts.end());
        return w;
    };

    auto first = trace_from(0);
    if (first) {
        res.walk = std::move(first);
        return res;
    }
    // Dart 1 may lie on the same orbit; if so there is nothing left to try.
    Dart cur = 0;
    bool same_orbit = false;
    do {
        if (cur == 1) {
            same_orbit = true;
            break;
        }
        cur = g.tau(cur);
    } while (cur != 0);
    if (!same_orbit) res.walk = trace_from(1);
    return res;
}

namespace {

// Removes one edge, renumbering the remaining edges densely.
PolarizedGraph delete_edge(const PolarizedGraph& g, EdgeId e) {
    auto rots = g.rotations();
    std::vector<std::vector<Dart>> out(rots.size());
    for (size_t v = 0; v < rots.size(); ++v)
        for (Dart d : rots[v]) {
            if (edge_of(d) == e) continue;
            EdgeId ne = edge_of(d) > e ? edge_of(d) - 1 : edge_of(d);
            out[v].push_back(2 * ne + (d & 1));
        }
    return PolarizedGraph::from_rotations(g.vertices, out);
}

}  // namespace

PolarizedGraph reduce_to_condition_c(const PolarizedGraph& g) {
    if (g.vertices < 3) throw precondition_error("reduction requires S >= 3");
    PolarizedGraph cur = g;
    auto dec = trace_walks(cur);
    if (!dec.complete_index) throw precondition_error("reduction requires a complete walk");
    for (;;) {
        const Walk* shortw = nullptr;
        for (const Walk& w : dec.walks)
            if (w.length() <= 2) {
                shortw = &w;
                break;
            }
        if (!shortw) return cur;
        cur = delete_edge(cur, edge_of(shortw->darts.front()));
        dec = trace_walks(cur);
        if (!dec.complete_index)
            throw internal_error("reduction lost the complete walk");
    }
}

PolarizedGraph from_faces(int vertex_count, const std::vector<std::vector<Dart>>& faces,
                          const std::vector<VertexId>& dart_origin) {
    size_t dart_total = dart_origin.size();
    if (dart_total % 2 != 0) throw input_error("odd number of darts");
    for (VertexId v : dart_origin)
        if (v < 0 || v >= vertex_count) throw input_error("dart origin out of range");

    std::vector<Dart> succ(dart_total, -1);
    std::vector<char> used(dart_total, 0);
    for (const auto& face : faces) {
        if (face.empty()) throw input_error("empty face");
        for (size_t i = 0; i < face.size(); ++i) {
            Dart d = face[i];
            Dart nxt = face[(i + 1) % face.size()];
            if (d < 0 || d >= static_cast<Dart>(dart_total))
                throw input_error("dart " + std::to_string(d) + " out of range");
            if (used[d]) throw input_error("dart " + std::to_string(d) + " used twice in faces");
            used[d] = 1;
            // Face-successor rule: at head(d), the rotation successor of
            // reverse(d) is the next face dart.
            if (dart_origin[reverse(d)] != dart_origin[nxt])
                throw input_error("face is not closed at dart " + std::to_string(d));
            succ[reverse(d)] = nxt;
        }
    }
    for (size_t d = 0; d < dart_total; ++d)
        if (!used[d]) throw input_error("dart " + std::to_string(d) + " missing from faces");

    PolarizedGraph g;
    g.vertices = vertex_count;
    g.origin = dart_origin;
    g.next = succ;
    // The induced permutation must be one cycle per vertex.
    std::vector<char> seen(dart_total, 0);
    std::vector<char> vertex_done(vertex_count, 0);
    for (Dart d = 0; d < static_cast<Dart>(dart_total); ++d) {
        if (seen[d]) continue;
        VertexId v = dart_origin[d];
        if (vertex_done[v])
            throw input_error("not a polarization: rotation at vertex " + std::to_string(v) +
                              " splits into several cycles");
        Dart cur = d;
        do {
            seen[cur] = 1;
            cur = succ[cur];
        } while (cur != d);
        vertex_done[v] = 1;
    }
    return g;
}

}  // namespace polwalk
