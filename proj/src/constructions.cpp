#include "polwalk/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "polwalk/errors.hpp"
#include "polwalk/io.hpp"
#include "polwalk/ops.hpp"

namespace polwalk {

// ---------------------------------------------------------------- gluing

GluingPolygon::GluingPolygon(int f, std::vector<int> top_seq)
    : half_moons(f), top(std::move(top_seq)) {
    if (f < 1) throw input_error("polygon needs at least one half-moon");
    if (static_cast<int>(top.size()) != 2 * f)
        throw input_error("top sequence must have 2f entries");
    std::vector<char> seen(2 * f + 1, 0);
    for (int k : top) {
        if (k < 1 || k > 2 * f || seen[k])
            throw input_error("top sequence is not a permutation of 1..2f");
        seen[k] = 1;
    }
}

bool GluingPolygon::has_adjacent_pair() const {
    for (int m = 0; m + 1 < 2 * half_moons; ++m)
        if (top[m + 1] == top[m] + 1) return true;
    return false;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

GluingResult gluing_quotient(const GluingPolygon& p) {
    int f = p.half_moons;
    int n = 2 * f + 1;  // corners per horizontal side, endpoints shared
    // Slots 0..n-1 = bottom corners, n..2n-1 = top corners.
    UnionFind uf(2 * n);
    uf.unite(0, n);
    uf.unite(n - 1, 2 * n - 1);
    std::vector<int> pos_of(2 * f + 1, 0);  // side k -> its top position (1-based)
    for (int m = 1; m <= 2 * f; ++m) pos_of[p.top[m - 1]] = m;
    for (int m = 1; m <= 2 * f; ++m) {
        int t = pos_of[m];
        uf.unite(m - 1, n + t - 1);  // sources
        uf.unite(m, n + t);          // targets
    }

    std::vector<int> cls(2 * n, -1);
    int classes = 0;
    for (int c = 0; c < 2 * n; ++c) {
        int r = uf.find(c);
        if (cls[r] < 0) cls[r] = classes++;
        cls[c] = cls[r];
    }
    auto bottom_class = [&](int corner) { return cls[uf.find(corner)]; };

    // Edges: e_m (ids 0..2f-1) from the bottom sides, d_n (ids 2f..3f-1).
    int A = 3 * f;
    std::vector<VertexId> origin(2 * A, -1);
    for (int m = 1; m <= 2 * f; ++m) {
        origin[plus_dart(m - 1)] = bottom_class(m - 1);
        origin[minus_dart(m - 1)] = bottom_class(m);
    }
    for (int j = 1; j <= f; ++j) {
        origin[plus_dart(2 * f + j - 1)] = bottom_class(2 * j - 2);
        origin[minus_dart(2 * f + j - 1)] = bottom_class(2 * j);
    }

    std::vector<std::vector<Dart>> faces;
    for (int j = 1; j <= f; ++j)
        faces.push_back({plus_dart(2 * j - 2), plus_dart(2 * j - 1), minus_dart(2 * f + j - 1)});
    std::vector<Dart> big;
    for (int j = 1; j <= f; ++j) big.push_back(plus_dart(2 * f + j - 1));
    for (int m = 2 * f; m >= 1; --m) big.push_back(minus_dart(p.top[m - 1] - 1));
    faces.push_back(std::move(big));

    GluingResult res{from_faces(classes, faces, origin), classes};
    return res;
}

// ------------------------------------------------- monographs & homotopic

namespace {

// Quotient of the 4g-gon a_1 b_1 .. a_g b_g abar_1 bbar_1 .. abar_g bbar_g:
// a monograph with 2g loops and a single walk.
PolarizedGraph base_polygon_monograph(long long g) {
    std::vector<Dart> face;
    for (long long e = 0; e < 2 * g; ++e) face.push_back(plus_dart(static_cast<EdgeId>(e)));
    for (long long e = 0; e < 2 * g; ++e) face.push_back(minus_dart(static_cast<EdgeId>(e)));
    std::vector<VertexId> origin(4 * g, 0);
    return from_faces(1, {face}, origin);
}

}  // namespace

PolarizedGraph standard_monograph(long long g) {
    if (g < 1) throw input_error("monograph needs genus >= 1");
    PolarizedGraph cur = base_polygon_monograph(g);
    for (long long j = 0; j < g; ++j) {
        // d_{j+1} parallel to the chain (a_{j+1}, b_{j+1}).
        std::vector<Dart> chain{plus_dart(static_cast<EdgeId>(2 * j)),
                                plus_dart(static_cast<EdgeId>(2 * j + 1))};
        cur = add_parallel_edge(cur, chain).graph;
    }
    return cur;
}

PolarizedGraph homotopic_optimal(long long s, long long g) {
    if (s < 1 || g < 1) throw input_error("homotopic optimum needs S >= 1 and g >= 1");
    long long s_odd = (s % 2 == 1) ? s : s - 1;
    PolarizedGraph cur = base_polygon_monograph(g);

    // Subdivide a_1 (edge 0) into s_odd pieces; piece i+ darts point right.
    std::vector<EdgeId> pieces{0};
    for (long long i = 1; i < s_odd; ++i) {
        auto r = subdivide(cur, pieces.back());
        pieces.push_back(r.new_edge);
        cur = std::move(r.graph);
    }
    // Parallel edge over each chain of two consecutive pieces, the last
    // chain being (final piece, b_1).
    for (long long j = 0; 2 * j < s_odd; ++j) {
        Dart first = plus_dart(pieces[2 * j]);
        Dart second = (2 * j + 1 < s_odd) ? plus_dart(pieces[2 * j + 1]) : plus_dart(1);
        cur = add_parallel_edge(cur, {first, second}).graph;
    }
    // Diagonals parallel to (a_{k+1}, b_{k+1}).
    for (long long k = 1; k < g; ++k)
        cur = add_parallel_edge(cur, {plus_dart(static_cast<EdgeId>(2 * k)),
                                      plus_dart(static_cast<EdgeId>(2 * k + 1))})
                  .graph;
    if (s % 2 == 0) cur = subdivide(cur, 0).graph;
    return cur;
}

PolarizedGraph lower_bound_graph(long long g) {
    if (g < 1) throw input_error("star graph needs genus >= 1");
    // Vertices: 0 = hub, then the 3g triangle corners. Edges: per triangle
    // (a, b, d) then the 3g spokes.
    auto tip = [&](long long j, int i) { return static_cast<VertexId>(1 + 3 * j + i); };
    auto tri_edge = [&](long long j, int i) { return static_cast<EdgeId>(3 * j + i); };
    auto spoke = [&](long long j, int i) { return static_cast<EdgeId>(3 * g + 3 * j + i); };

    int A = static_cast<int>(6 * g);
    std::vector<VertexId> origin(2 * A, -1);
    for (long long j = 0; j < g; ++j) {
        origin[plus_dart(tri_edge(j, 0))] = tip(j, 0);   // a: t1 -> t2
        origin[minus_dart(tri_edge(j, 0))] = tip(j, 1);
        origin[plus_dart(tri_edge(j, 1))] = tip(j, 1);   // b: t2 -> t3
        origin[minus_dart(tri_edge(j, 1))] = tip(j, 2);
        origin[plus_dart(tri_edge(j, 2))] = tip(j, 0);   // d: t1 -> t3
        origin[minus_dart(tri_edge(j, 2))] = tip(j, 2);
        for (int i = 0; i < 3; ++i) {
            origin[plus_dart(spoke(j, i))] = 0;  // hub -> tip
            origin[minus_dart(spoke(j, i))] = tip(j, i);
        }
    }
    std::vector<std::vector<Dart>> faces;
    for (long long j = 0; j < g; ++j)
        faces.push_back({plus_dart(tri_edge(j, 0)), plus_dart(tri_edge(j, 1)),
                         minus_dart(tri_edge(j, 2))});
    // The big face walks each triangle side once and each spoke twice,
    // mirroring the walk of the standard monograph.
    std::vector<Dart> big;
    for (long long j = 0; j < g; ++j) {
        big.push_back(plus_dart(spoke(j, 0)));
        big.push_back(plus_dart(tri_edge(j, 2)));
        big.push_back(minus_dart(spoke(j, 2)));
    }
    for (long long j = 0; j < g; ++j) {
        big.push_back(plus_dart(spoke(j, 1)));
        big.push_back(minus_dart(tri_edge(j, 0)));
        big.push_back(minus_dart(spoke(j, 0)));
        big.push_back(plus_dart(spoke(j, 2)));
        big.push_back(minus_dart(tri_edge(j, 1)));
        big.push_back(minus_dart(spoke(j, 1)));
    }
    faces.push_back(std::move(big));
    return from_faces(static_cast<int>(3 * g + 1), faces, origin);
}

// ------------------------------------------------------------ Skolem & K_S

SkolemTriples skolem_triples(int k) {
    if (k < 1) throw input_error("skolem triples need k >= 1");
    // Split form: find distinct b_j < c_j = b_j + j in 1..2k+1 avoiding one
    // sentinel value (2k+1 or 2k depending on k mod 4). Deterministic
    // first solution: differences placed largest first (most constrained),
    // smallest start value first, i.e. lexicographically smallest in
    // (b_k, b_{k-1}, ..., b_1).
    int limit = 2 * k + 1;
    int banned = (k % 4 == 0 || k % 4 == 1) ? 2 * k + 1 : 2 * k;
    std::vector<char> used(limit + 1, 0);
    used[banned] = 1;
    std::vector<int> b(k + 1, 0);
    auto dfs = [&](auto&& self, int j) -> bool {
        if (j == 0) return true;
        for (int cand = 1; cand + j <= limit; ++cand) {
            if (used[cand] || used[cand + j]) continue;
            used[cand] = used[cand + j] = 1;
            b[j] = cand;
            if (self(self, j - 1)) return true;
            used[cand] = used[cand + j] = 0;
        }
        return false;
    };
    if (!dfs(dfs, k)) throw internal_error("skolem search exhausted; existence is guaranteed");

    SkolemTriples st;
    st.k = k;
    std::set<long long> all;
    for (int j = 1; j <= k; ++j) {
        long long alpha = j, beta = b[j] + k, gamma = b[j] + j + k;
        st.triples.push_back({alpha, beta, gamma});
        st.alpha_sum += alpha;
        st.beta_sum += beta;
        st.gamma_sum += gamma;
        for (long long x : {alpha, beta, gamma}) {
            if (x < 1 || x > 3 * k + 1 || !all.insert(x).second)
                throw internal_error("skolem triples fail the distinctness invariant");
        }
    }
    for (long long x : all)
        if (x != static_cast<long long>(6 * k + 1) - x && all.count(6 * k + 1 - x) && x < 6 * k + 1 - x)
            throw internal_error("skolem triples contain a pair summing to 6k+1");
    return st;
}

bool is_steiner_system(int s, const std::vector<SteinerTriple>& triples) {
    if (static_cast<long long>(triples.size()) * 6 != static_cast<long long>(s) * (s - 1))
        return false;
    std::set<std::pair<int, int>> seen;
    for (const auto& t : triples) {
        int v[3] = {t[0], t[1], t[2]};
        for (int i = 0; i < 3; ++i)
            if (v[i] < 0 || v[i] >= s) return false;
        if (v[0] == v[1] || v[1] == v[2] || v[0] == v[2]) return false;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j) {
                auto p = std::minmax(v[i], v[j]);
                if (!seen.insert({p.first, p.second}).second) return false;
            }
    }
    return true;
}

std::vector<SteinerTriple> triangle_walks(const PolarizedGraph& g, const WalkDecomposition& dec) {
    std::vector<SteinerTriple> out;
    for (const Walk& w : dec.walks) {
        if (w.length() != 3) continue;
        out.push_back({g.origin[w.darts[0]], g.origin[w.darts[1]], g.origin[w.darts[2]]});
    }
    return out;
}

bool ks_admissible(int s) {
    if (s == 7 || s == 9) return true;
    if (s < 7 || s % 12 != 7) return false;
    for (int d = 2; static_cast<long long>(d) * d <= s; ++d)
        if (s % d == 0) return false;
    return true;
}

namespace {

// Found by computer search over the Steiner-system ansatz (S = 9 has even
// k, which the arithmetic synthesis does not cover).
const std::vector<int> k9_top_sequence = {19, 11, 23, 6,  21, 15, 20, 7,  13, 10, 16, 5,
                                          14, 2,  9,  24, 1,  22, 4,  17, 8,  3,  12, 18};

GluingPolygon ks_polygon(int s) {
    if (s == 9) return GluingPolygon(12, k9_top_sequence);
    int k = (s - 1) / 6;
    SkolemTriples st = skolem_triples(k);
    int f = k * s;

    // Bottom valuation: within block j the odd sides advance by alpha_j,
    // the even sides by beta_j (mod S).
    std::vector<int> val(2 * f + 1, 0);
    for (int m = 1; m <= 2 * f; ++m) {
        int j = (m - 1) / (2 * s);  // 0-based block
        long long inc = (m % 2 == 1) ? st.triples[j][0] : st.triples[j][1];
        val[m] = static_cast<int>((val[m - 1] + inc) % s);
    }
    for (int j = 1; j <= k; ++j)
        if (val[2 * s * j] != 0) throw internal_error("block valuation does not close");

    // side lookups: start value -> 1-based side index, per block and type.
    std::vector<std::vector<int>> alpha_side(k, std::vector<int>(s, -1));
    std::vector<std::vector<int>> beta_side(k, std::vector<int>(s, -1));
    for (int m = 1; m <= 2 * f; ++m) {
        int j = (m - 1) / (2 * s);
        auto& table = (m % 2 == 1) ? alpha_side : beta_side;
        if (table[j][val[m - 1]] != -1)
            throw internal_error("corner values within a block are not distinct");
        table[j][val[m - 1]] = m;
    }

    // Top valuation: beta blocks cyclically across the left half, alpha
    // blocks across the right half.
    std::vector<int> seq(2 * f, 0);
    long long cur = 0;
    for (int m = 1; m <= 2 * f; ++m) {
        int j = (m - 1) % k;
        if (m <= f) {
            seq[m - 1] = beta_side[j][cur];
            cur = (cur + st.triples[j][1]) % s;
        } else {
            seq[m - 1] = alpha_side[j][cur];
            cur = (cur + st.triples[j][0]) % s;
        }
        if (m == f && cur != 0) throw internal_error("left half of the top does not close");
    }
    if (cur != 0) throw internal_error("top valuation does not close");
    if (seq[0] == 1 || seq[2 * f - 1] == 2 * f)
        throw internal_error("top endpoints collide with the bottom endpoints");
    GluingPolygon poly = [&] {
        try {
            return GluingPolygon(f, seq);
        } catch (const input_error& e) {
            throw internal_error(std::string("synthesized polygon is invalid: ") + e.what());
        }
    }();
    if (poly.has_adjacent_pair())
        throw internal_error("synthesized polygon has an adjacent pair on top");
    return poly;
}

}  // namespace

std::vector<long long> ks_genera_up_to(long long max_genus) {
    std::vector<long long> out;
    for (int s = 7; static_cast<long long>(s - 1) * (s - 3) / 6 <= max_genus; s += 2) {
        if (!ks_admissible(s)) continue;
        out.push_back(static_cast<long long>(s - 1) * (s - 3) / 6);
    }
    std::sort(out.begin(), out.end());
    return out;
}

PolarizedGraph ks_polarization(int s) {
    if (!ks_admissible(s))
        throw input_error("admissible S are 7, 9 and primes congruent to 7 mod 12");
    GluingResult res = gluing_quotient(ks_polygon(s));
    if (res.corner_classes != s)
        throw internal_error("polygon quotient has " + std::to_string(res.corner_classes) +
                             " corner classes, expected " + std::to_string(s));
    return res.graph;
}

// -------------------------------------------------------- genus 1..5 optima

namespace {

// Ordinary graph from closed vertex itineraries: consecutive vertices name
// an edge; every unordered pair must occur exactly twice, once per
// direction.
PolarizedGraph graph_from_itineraries(int vertex_count,
                                      const std::vector<std::vector<int>>& cycles) {
    std::map<std::pair<int, int>, EdgeId> ids;
    std::map<std::pair<int, int>, int> uses;
    std::vector<std::vector<Dart>> faces;
    std::vector<VertexId> origin;
    for (const auto& cyc : cycles) {
        if (cyc.size() < 2 || cyc.front() != cyc.back())
            throw input_error("itinerary must be closed (first vertex repeated at the end)");
        std::vector<Dart> face;
        for (size_t i = 0; i + 1 < cyc.size(); ++i) {
            int u = cyc[i], v = cyc[i + 1];
            if (u == v) throw input_error("itinerary has a loop step");
            auto key = std::minmax(u, v);
            auto it = ids.find(key);
            EdgeId e;
            if (it == ids.end()) {
                e = static_cast<EdgeId>(ids.size());
                ids[key] = e;
                origin.resize(2 * ids.size(), -1);
                origin[plus_dart(e)] = u;
                origin[minus_dart(e)] = v;
                face.push_back(plus_dart(e));
            } else {
                e = it->second;
                if (origin[minus_dart(e)] != u || origin[plus_dart(e)] != v)
                    throw input_error("edge traversed twice in the same direction");
                face.push_back(minus_dart(e));
            }
            if (++uses[key] > 2) throw input_error("edge traversed more than twice");
        }
        faces.push_back(std::move(face));
    }
    return from_faces(vertex_count, faces, origin);
}

// Frozen outputs of the bounded searches below (see search_genus1_optimal
// and friends, which re-derive them deterministically).
const char* const genus1_polgraph = R"(polgraph 1
vertices 7
edges 12
v 0: 3+ 6- 5+ 8- 4+ 7-
v 1: 0+ 1- 6+ 9-
v 2: 1+ 2+ 7+ 10-
v 3: 0- 8+ 11- 2-
v 4: 3- 9+
v 5: 4- 10+
v 6: 5- 11+
)";

const char* const genus2_polgraph = R"(polgraph 1
vertices 6
edges 13
v 0: 6+ 7+ 8+ 9+ 10+
v 1: 1- 4- 11+ 6-
v 2: 2+ 7- 11- 5+
v 3: 3- 5- 12+ 8-
v 4: 0- 1+ 9- 12-
v 5: 0+ 10- 2- 3+ 4+
)";

const std::vector<int> genus3_top_sequence = {6, 7, 2, 3, 9, 1, 12, 5, 10, 11, 8, 4};

}  // namespace

PolarizedGraph search_genus1_optimal() {
    // Three elementary blow-ups at the monograph vertex (arcs of original
    // loop darts only), doubling of the three fresh edges, then one
    // subdivision per doubled pair; first ordinary result with the target
    // invariants wins.
    PolarizedGraph base = standard_monograph(1);

    std::vector<PolarizedGraph> blown;
    auto blow_rec = [&](auto&& self, const PolarizedGraph& g, int round) -> void {
        if (round == 3) {
            blown.push_back(g);
            return;
        }
        auto rot = g.rotation_of(0);
        int deg = static_cast<int>(rot.size());
        auto dec = trace_walks(g);
        if (!dec.complete_index) return;
        std::vector<char> in_mc(g.dart_count(), 0);
        for (Dart d : dec.complete().darts) in_mc[d] = 1;
        for (int from = 0; from < deg; ++from) {
            for (int len = 1; len < deg; ++len) {
                int to = (from + len) % deg;
                bool ok = true;
                std::vector<char> edge_seen(g.edge_count(), 0);
                for (int i = from; i != to; i = (i + 1) % deg) {
                    Dart d = rot[i];
                    if (edge_of(d) >= 3) ok = false;  // spokes stay at the hub
                    if (edge_seen[edge_of(d)]) ok = false;  // full loop pair moved
                    edge_seen[edge_of(d)] = 1;
                    if (!ok) break;
                }
                if (!ok) continue;
                if (!in_mc[rot[from]]) continue;
                if (!in_mc[reverse(rot[(to + deg - 1) % deg])]) continue;
                self(self, blow_up_elementary(g, 0, from, to).graph, round + 1);
            }
        }
    };
    blow_rec(blow_rec, base, 0);

    for (const PolarizedGraph& g3 : blown) {
        // Double edges 3, 4, 5 (the fresh spokes), trying both chain
        // orientations, then subdivide one edge of each resulting pair.
        for (int mask = 0; mask < 8; ++mask) {
            PolarizedGraph cur = g3;
            bool fail = false;
            for (int i = 0; i < 3 && !fail; ++i) {
                Dart chain = (mask >> i & 1) ? plus_dart(3 + i) : minus_dart(3 + i);
                try {
                    cur = add_parallel_edge(cur, {chain}).graph;
                } catch (const precondition_error&) {
                    fail = true;
                }
            }
            if (fail) continue;
            for (int smask = 0; smask < 8; ++smask) {
                PolarizedGraph fin = cur;
                for (int i = 0; i < 3; ++i) {
                    EdgeId pair_first = 3 + i, pair_second = 6 + i;
                    fin = subdivide(fin, (smask >> i & 1) ? pair_second : pair_first).graph;
                }
                if (!is_ordinary(fin)) continue;
                auto dec = trace_walks(fin);
                if (!dec.complete_index) continue;
                auto st = graph_stats(fin, dec);
                if (st.S == 7 && st.A == 12 && st.gamma == 1) return fin;
            }
        }
    }
    throw internal_error("genus-1 search found no certificate");
}

PolarizedGraph search_genus2_optimal() {
    // Five elementary blow-ups at the monograph vertex moving all twelve
    // loop darts out, then two parallel edges over length-2 chains through
    // the hub.
    PolarizedGraph base = standard_monograph(2);
    PolarizedGraph found;
    bool done = false;

    auto chains_through_hub = [](const PolarizedGraph& g, const Walk& mc) {
        std::vector<std::vector<Dart>> chains;
        int L = mc.length();
        for (int i = 0; i < L; ++i) {
            Dart c1 = mc.darts[i], c2 = mc.darts[(i + 1) % L];
            if (g.head(c1) != 0) continue;
            chains.push_back({c1, c2});
        }
        return chains;
    };

    auto finish = [&](const PolarizedGraph& g5) {
        auto dec = trace_walks(g5);
        if (!dec.complete_index) return;
        for (const auto& chain1 : chains_through_hub(g5, dec.complete())) {
            PolarizedGraph g6;
            try {
                g6 = add_parallel_edge(g5, chain1).graph;
            } catch (const precondition_error&) {
                continue;
            }
            auto dec6 = trace_walks(g6);
            if (!dec6.complete_index) continue;
            for (const auto& chain2 : chains_through_hub(g6, dec6.complete())) {
                PolarizedGraph g7;
                try {
                    g7 = add_parallel_edge(g6, chain2).graph;
                } catch (const precondition_error&) {
                    continue;
                }
                if (!is_ordinary(g7)) continue;
                auto dec7 = trace_walks(g7);
                if (!dec7.complete_index) continue;
                auto st = graph_stats(g7, dec7);
                if (st.S == 6 && st.A == 13 && st.gamma == 2) {
                    found = g7;
                    done = true;
                    return;
                }
            }
            if (done) return;
        }
    };

    auto blow_rec = [&](auto&& self, const PolarizedGraph& g, int round, int moved) -> void {
        if (done) return;
        if (round == 5) {
            if (moved == 12) finish(g);
            return;
        }
        auto rot = g.rotation_of(0);
        int deg = static_cast<int>(rot.size());
        auto dec = trace_walks(g);
        if (!dec.complete_index) return;
        std::vector<char> in_mc(g.dart_count(), 0);
        for (Dart d : dec.complete().darts) in_mc[d] = 1;
        int remaining = 12 - moved;
        int rounds_left = 5 - round;
        for (int from = 0; from < deg && !done; ++from) {
            int max_len = remaining - (rounds_left - 1);
            for (int len = 1; len <= max_len; ++len) {
                int to = (from + len) % deg;
                if (to == from) break;
                bool ok = true;
                std::vector<char> edge_seen(g.edge_count(), 0);
                for (int i = from; i != to; i = (i + 1) % deg) {
                    Dart d = rot[i];
                    if (edge_of(d) >= 6 || edge_seen[edge_of(d)]) {
                        ok = false;
                        break;
                    }
                    edge_seen[edge_of(d)] = 1;
                }
                if (!ok) continue;
                if (!in_mc[rot[from]]) continue;
                if (!in_mc[reverse(rot[(to + deg - 1) % deg])]) continue;
                self(self, blow_up_elementary(g, 0, from, to).graph, round + 1, moved + len);
                if (done) return;
            }
        }
    };
    blow_rec(blow_rec, base, 0, 0);
    if (!done) throw internal_error("genus-2 search found no certificate");
    return found;
}

std::vector<int> search_genus3_polygon() {
    // Backtracking over top sequences of the 24-gon with 6 half-moons:
    // the quotient must have exactly 7 corner classes and an ordinary
    // 18-edge graph.
    const int f = 6, n = 2 * f + 1;
    std::vector<int> parent(2 * n);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<int> size(2 * n, 1);
    std::vector<std::pair<int, int>> undo;  // (child_root, parent_root)
    int classes = 2 * n;

    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x];
        return x;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) {
            undo.push_back({-1, -1});
            return;
        }
        if (size[a] > size[b]) std::swap(a, b);
        parent[a] = b;
        size[b] += size[a];
        undo.push_back({a, b});
        --classes;
    };
    auto rollback = [&](size_t mark) {
        while (undo.size() > mark) {
            auto [a, b] = undo.back();
            undo.pop_back();
            if (a >= 0) {
                parent[a] = a;
                size[b] -= size[a];
                ++classes;
            }
        }
    };

    // Edge endpoint corners (bottom indices): e_m then d_j.
    std::vector<std::pair<int, int>> edge_corners;
    for (int m = 1; m <= 2 * f; ++m) edge_corners.push_back({m - 1, m});
    for (int j = 1; j <= f; ++j) edge_corners.push_back({2 * j - 2, 2 * j});

    auto graph_ok_so_far = [&]() {
        std::vector<std::pair<int, int>> pairs;
        for (auto [a, b] : edge_corners) {
            int ca = find(a), cb = find(b);
            if (ca == cb) return false;  // loop, can never unmerge
            pairs.push_back(std::minmax(ca, cb));
        }
        std::sort(pairs.begin(), pairs.end());
        return std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
    };

    unite(0, n);
    unite(n - 1, 2 * n - 1);

    std::vector<int> seq(2 * f, 0);
    std::vector<char> used(2 * f + 1, 0);
    auto dfs = [&](auto&& self, int m) -> bool {  // m = 1-based top position
        if (m > 2 * f) return classes == 7 && graph_ok_so_far();
        for (int k = 1; k <= 2 * f; ++k) {
            if (used[k]) continue;
            size_t mark = undo.size();
            unite(k - 1, n + m - 1);
            unite(k, n + m);
            if (classes >= 7 && graph_ok_so_far()) {
                used[k] = 1;
                seq[m - 1] = k;
                if (self(self, m + 1)) return true;
                used[k] = 0;
            }
            rollback(mark);
        }
        return false;
    };
    if (!dfs(dfs, 1)) throw internal_error("genus-3 polygon search found no certificate");
    return seq;
}

PolarizedGraph genus_optimal(int g) {
    switch (g) {
        case 1:
            return parse_polgraph_string(genus1_polgraph);
        case 2:
            return parse_polgraph_string(genus2_polgraph);
        case 3:
            return gluing_quotient(GluingPolygon(6, genus3_top_sequence)).graph;
        case 4:
            return ks_polarization(7);
        case 5: {
            std::vector<std::vector<int>> cycles = {
                {1, 2, 3, 7, 8, 5, 6, 3, 8, 2, 1, 5, 4, 6, 2, 7, 1, 3, 4, 8, 1, 4, 2, 5, 7, 6, 1},
                {3, 2, 4, 3},
                {7, 3, 6, 7},
                {8, 7, 2, 8},
                {5, 8, 4, 5},
                {6, 5, 2, 6},
                {8, 3, 1, 8},
                {5, 1, 7, 5},
                {6, 4, 1, 6}};
            for (auto& c : cycles)
                for (int& v : c) --v;  // to 0-based vertex ids
            return graph_from_itineraries(8, cycles);
        }
        default:
            throw input_error("optimal graphs are stored for genus 1..5 only");
    }
}

// ------------------------------------------------------- recursive family

long long FamilyRecipe::genus() const {
    if (kind == "ks") return (param - 1) * (param - 3) / 6;
    if (kind == "optimal" || kind == "star") return param;
    long long total = 0;
    for (const auto& p : parts) total += p.genus();
    return total;
}

std::string FamilyRecipe::describe() const {
    if (kind != "sum") return kind + "(" + std::to_string(param) + ")";
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += " # ";
        out += parts[i].describe();
    }
    return out;
}

namespace {

struct Piece {
    FamilyRecipe leaf;
    long long genus;
    long long num;   // 2 * A_r
    long long size;  // S
};

const std::vector<Piece>& family_pieces(long long max_genus) {
    static std::vector<Piece> pieces;
    static long long covered = 0;
    if (max_genus > covered) {
        pieces.clear();
        for (int s = 7; static_cast<long long>(s - 1) * (s - 3) / 6 <= max_genus; s += 2) {
            if (!ks_admissible(s)) continue;
            long long g = static_cast<long long>(s - 1) * (s - 3) / 6;
            pieces.push_back({{"ks", s, {}}, g, static_cast<long long>(s) * (s - 1), s});
        }
        const long long opt_num[6] = {0, 24, 26, 36, 0, 50};  // 2*A_r, genus 4 is ks(7)
        const long long opt_size[6] = {0, 7, 6, 7, 0, 8};
        for (long long g = 1; g <= 5 && g <= max_genus; ++g) {
            if (g == 4) continue;
            pieces.push_back({{"optimal", g, {}}, g, opt_num[g], opt_size[g]});
        }
        for (long long g = 1; g <= std::min<long long>(max_genus, 8); ++g)
            pieces.push_back({{"star", g, {}}, g, 12 * g, 3 * g + 1});
        covered = max_genus;
    }
    return pieces;
}

struct DpEntry {
    long long num = 0;
    long long den = 0;  // sum of (S_i - 1)
    int piece = -1;     // index into pieces
    long long prev_g = 0;
    int prev_entry = -1;
};

// Pareto frontier per genus over (num max, den min); exact optimum of
// num/(den+1) is attained on the frontier.
const std::vector<std::vector<DpEntry>>& family_table(long long max_genus) {
    static std::vector<std::vector<DpEntry>> dp;
    if (static_cast<long long>(dp.size()) > max_genus) return dp;
    const auto& pieces = family_pieces(max_genus);
    dp.assign(max_genus + 1, {});
    dp[0].push_back({0, 0, -1, 0, -1});
    for (long long g = 1; g <= max_genus; ++g) {
        std::vector<DpEntry> cand;
        for (int pi = 0; pi < static_cast<int>(pieces.size()); ++pi) {
            const Piece& p = pieces[pi];
            if (p.genus > g) continue;
            const auto& prev = dp[g - p.genus];
            for (int ei = 0; ei < static_cast<int>(prev.size()); ++ei)
                cand.push_back({prev[ei].num + p.num, prev[ei].den + p.size - 1, pi,
                                g - p.genus, ei});
        }
        std::sort(cand.begin(), cand.end(), [](const DpEntry& a, const DpEntry& b) {
            if (a.den != b.den) return a.den < b.den;
            return a.num > b.num;
        });
        long long best_num = -1;
        for (const DpEntry& e : cand) {
            if (e.num > best_num) {
                dp[g].push_back(e);
                best_num = e.num;
            }
        }
    }
    return dp;
}

const PolarizedGraph& family_leaf(const FamilyRecipe& leaf) {
    static std::map<std::pair<std::string, long long>, PolarizedGraph> cache;
    auto key = std::make_pair(leaf.kind, leaf.param);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    PolarizedGraph g;
    if (leaf.kind == "ks")
        g = ks_polarization(static_cast<int>(leaf.param));
    else if (leaf.kind == "optimal")
        g = genus_optimal(static_cast<int>(leaf.param));
    else if (leaf.kind == "star")
        g = lower_bound_graph(leaf.param);
    else
        throw internal_error("unknown family leaf kind " + leaf.kind);
    return cache.emplace(key, std::move(g)).first->second;
}

}  // namespace

FamilyResult asymptotic_family(long long g) {
    if (g < 1) throw input_error("family needs genus >= 1");
    const auto& dp = family_table(std::max<long long>(g, 500));
    const auto& pieces = family_pieces(std::max<long long>(g, 500));

    const std::vector<DpEntry>& entries = dp[g];
    if (entries.empty()) throw internal_error("family table has no entry for genus " + std::to_string(g));
    int best = 0;
    for (int i = 1; i < static_cast<int>(entries.size()); ++i) {
        const DpEntry &a = entries[i], &b = entries[best];
        if (Rat(a.num, a.den + 1) > Rat(b.num, b.den + 1)) best = i;
    }

    std::vector<FamilyRecipe> leaves;
    long long cur_g = g;
    int cur_e = best;
    while (cur_e >= 0 && dp[cur_g][cur_e].piece >= 0) {
        const DpEntry& e = dp[cur_g][cur_e];
        leaves.push_back(pieces[e.piece].leaf);
        cur_g = e.prev_g;
        cur_e = e.prev_entry;
    }
    std::sort(leaves.begin(), leaves.end(), [](const FamilyRecipe& a, const FamilyRecipe& b) {
        if (a.genus() != b.genus()) return a.genus() > b.genus();
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.param > b.param;
    });

    FamilyResult res;
    if (leaves.size() == 1) {
        res.recipe = leaves[0];
        res.graph = family_leaf(leaves[0]);
    } else {
        res.recipe = FamilyRecipe{"sum", 0, leaves};
        res.graph = family_leaf(leaves[0]);
        for (size_t i = 1; i < leaves.size(); ++i)
            res.graph = connected_sum(res.graph, 0, family_leaf(leaves[i]), 0).graph;
    }

    auto dec = trace_walks(res.graph);
    if (!dec.complete_index) throw internal_error("family graph lost its complete walk");
    auto st = graph_stats(res.graph, dec);
    if (st.gamma != g) throw internal_error("family graph has wrong genus");
    return res;
}

}  // namespace polwalk
