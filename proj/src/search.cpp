#include "polwalk/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include <json.hpp>

#include "polwalk/errors.hpp"
#include "polwalk/io.hpp"

namespace polwalk {

bool Multigraph::connected() const {
    if (vertices <= 0) return false;
    if (vertices == 1) return true;
    std::vector<int> parent(vertices);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : edges) parent[find(u)] = find(v);
    for (int v = 1; v < vertices; ++v)
        if (find(v) != find(0)) return false;
    return true;
}

bool enumerate_polarizations(const Multigraph& mg, long long node_limit,
                             const std::function<bool(const PolarizedGraph&)>& visit) {
    int a = static_cast<int>(mg.edges.size());
    std::vector<std::vector<Dart>> at_vertex(mg.vertices);
    for (EdgeId e = 0; e < a; ++e) {
        at_vertex[mg.edges[e].first].push_back(plus_dart(e));
        at_vertex[mg.edges[e].second].push_back(minus_dart(e));
    }
    // Per vertex: smallest dart pinned first, the rest permuted.
    std::vector<Dart> fixed(mg.vertices, -1);
    std::vector<std::vector<Dart>> tail(mg.vertices);
    for (VertexId v = 0; v < mg.vertices; ++v) {
        if (at_vertex[v].empty()) continue;
        std::sort(at_vertex[v].begin(), at_vertex[v].end());
        fixed[v] = at_vertex[v].front();
        tail[v].assign(at_vertex[v].begin() + 1, at_vertex[v].end());
    }

    long long nodes = 0;
    std::vector<std::vector<Dart>> rot(mg.vertices);
    std::function<bool(int)> rec = [&](int v) -> bool {
        if (v == mg.vertices) {
            if (++nodes > node_limit) return false;
            return visit(PolarizedGraph::from_rotations(mg.vertices, rot));
        }
        if (fixed[v] < 0) {
            rot[v].clear();
            return rec(v + 1);
        }
        std::vector<Dart> perm = tail[v];
        std::sort(perm.begin(), perm.end());
        do {
            rot[v].clear();
            rot[v].push_back(fixed[v]);
            rot[v].insert(rot[v].end(), perm.begin(), perm.end());
            if (!rec(v + 1)) return false;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return true;
    };
    bool finished = rec(0);
    return finished || nodes <= node_limit;
}

namespace {

// All connected multigraphs with the given vertex and edge count, one
// representative per isomorphism class for S <= 6 (canonical labeling by
// full permutation scan), duplicates tolerated above that.
std::vector<Multigraph> connected_multigraphs(int s, int a) {
    std::vector<std::pair<int, int>> pair_types;
    for (int u = 0; u < s; ++u)
        for (int v = u; v < s; ++v) pair_types.push_back({u, v});

    std::vector<Multigraph> out;
    std::set<std::vector<std::pair<int, int>>> canon_seen;
    std::vector<int> perm_base(s);
    std::iota(perm_base.begin(), perm_base.end(), 0);

    std::vector<std::pair<int, int>> chosen;
    std::function<void(size_t, int)> rec = [&](size_t idx, int left) {
        if (left == 0) {
            Multigraph mg{s, chosen};
            if (!mg.connected()) return;
            if (s <= 6) {
                std::vector<std::pair<int, int>> best;
                std::vector<int> perm = perm_base;
                do {
                    std::vector<std::pair<int, int>> relabeled;
                    relabeled.reserve(chosen.size());
                    for (auto [u, v] : chosen) {
                        auto p = std::minmax(perm[u], perm[v]);
                        relabeled.push_back({p.first, p.second});
                    }
                    std::sort(relabeled.begin(), relabeled.end());
                    if (best.empty() || relabeled < best) best = relabeled;
                } while (std::next_permutation(perm.begin(), perm.end()));
                if (!canon_seen.insert(best).second) return;
            }
            out.push_back(std::move(mg));
            return;
        }
        if (idx == pair_types.size()) return;
        for (int take = 0; take <= left; ++take) {
            for (int i = 0; i < take; ++i) chosen.push_back(pair_types[idx]);
            rec(idx + 1, left - take);
            for (int i = 0; i < take; ++i) chosen.pop_back();
        }
    };
    rec(0, a);
    return out;
}

int worker_count() {
    const char* env = std::getenv("POLWALK_THREADS");
    if (!env) return 1;
    int n = std::atoi(env);
    return n > 0 ? n : 1;
}

std::string cache_key(long long g, const SearchBudget& b) {
    return "bfmaxvr_g" + std::to_string(g) + "_s" + std::to_string(b.max_s) + "_a" +
           std::to_string(b.max_a) + "_n" + std::to_string(b.node_limit) + ".json";
}

}  // namespace

MaxVrResult brute_force_max_vr(long long g, const SearchBudget& budget,
                               const std::string& cache_dir) {
    namespace fs = std::filesystem;
    fs::path cache_file;
    if (!cache_dir.empty()) {
        cache_file = fs::path(cache_dir) / cache_key(g, budget);
        std::ifstream in(cache_file);
        if (in) {
            nlohmann::json j;
            in >> j;
            MaxVrResult res;
            res.completed = j.at("completed").get<bool>();
            res.nodes = j.at("nodes").get<long long>();
            if (!j.at("best").is_null()) {
                res.best = parse_rational(j.at("best").get<std::string>());
                res.witness = j.at("witness").get<std::string>();
            }
            return res;
        }
    }

    std::vector<Multigraph> all;
    for (int s = 1; s <= budget.max_s; ++s)
        for (int a = 1; a <= budget.max_a; ++a) {
            auto batch = connected_multigraphs(s, a);
            all.insert(all.end(), batch.begin(), batch.end());
        }

    int threads = worker_count();
    std::vector<MaxVrResult> partial(threads);
    std::atomic<size_t> next_index{0};
    long long per_thread_limit = budget.node_limit;  // shared budget, checked loosely
    std::atomic<long long> nodes_total{0};

    auto run = [&](int tid) {
        MaxVrResult& res = partial[tid];
        res.completed = true;
        for (;;) {
            size_t i = next_index.fetch_add(1);
            if (i >= all.size()) break;
            const Multigraph& mg = all[i];
            long long local = 0;
            bool aborted = false;
            enumerate_polarizations(mg, per_thread_limit, [&](const PolarizedGraph& pg) {
                ++local;
                if (nodes_total.load(std::memory_order_relaxed) + local > budget.node_limit) {
                    aborted = true;
                    return false;
                }
                auto dec = trace_walks(pg);
                if (!dec.complete_index) return true;
                long long f = static_cast<long long>(dec.walks.size());
                long long chi = pg.vertices - pg.edge_count() + f;
                if (1 - chi / 2 != g) return true;
                auto rv = reduced_valences(pg);
                long long twice_ar = std::accumulate(rv.begin(), rv.end(), 0LL);
                Rat vr(twice_ar, pg.vertices);
                if (!res.best || vr > *res.best) {
                    res.best = vr;
                    res.witness = serialize_polgraph(pg);
                } else if (vr == *res.best) {
                    std::string w = serialize_polgraph(pg);
                    if (res.witness.empty() || w < res.witness) res.witness = w;
                }
                return true;
            });
            nodes_total.fetch_add(local);
            if (aborted || nodes_total.load() > budget.node_limit) {
                res.completed = false;
                break;
            }
        }
    };

    if (threads == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(run, t);
        for (auto& th : pool) th.join();
    }

    MaxVrResult merged;
    merged.completed = true;
    merged.nodes = nodes_total.load();
    for (const auto& p : partial) {
        merged.completed = merged.completed && p.completed;
        if (!p.best) continue;
        if (!merged.best || *p.best > *merged.best ||
            (*p.best == *merged.best && p.witness < merged.witness)) {
            merged.best = p.best;
            merged.witness = p.witness;
        }
    }

    if (!cache_dir.empty()) {
        fs::create_directories(cache_dir);
        nlohmann::json j;
        j["completed"] = merged.completed;
        j["nodes"] = merged.nodes;
        if (merged.best) {
            j["best"] = to_string(*merged.best);
            j["witness"] = merged.witness;
        } else {
            j["best"] = nullptr;
        }
        std::ofstream out(cache_file);
        out << j.dump(2) << "\n";
    }
    return merged;
}

PolarizedGraph random_polarized(int s, int a, std::uint64_t seed) {
    if (s < 1) throw input_error("need at least one vertex");
    if (a < s - 1) throw input_error("need A >= S-1 for connectivity");
    std::mt19937_64 rng(seed);
    auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };

    Multigraph mg;
    mg.vertices = s;
    for (int attempt = 0; attempt < 10000; ++attempt) {
        mg.edges.clear();
        for (int e = 0; e < a; ++e) {
            int u = pick(s), v = pick(s);
            mg.edges.push_back(std::minmax(u, v));
        }
        if (mg.connected()) break;
        mg.edges.clear();
    }
    if (mg.edges.empty()) {
        // Deterministic fallback: a path plus random extras.
        for (int v = 0; v + 1 < s; ++v) mg.edges.push_back({v, v + 1});
        while (static_cast<int>(mg.edges.size()) < a) {
            int u = pick(s), v = pick(s);
            mg.edges.push_back(std::minmax(u, v));
        }
    }

    std::vector<std::vector<Dart>> rot(s);
    for (EdgeId e = 0; e < a; ++e) {
        rot[mg.edges[e].first].push_back(plus_dart(e));
        rot[mg.edges[e].second].push_back(minus_dart(e));
    }
    for (auto& r : rot) {
        for (int i = static_cast<int>(r.size()) - 1; i > 0; --i)
            std::swap(r[i], r[pick(i + 1)]);
    }
    return PolarizedGraph::from_rotations(s, rot);
}

}  // namespace polwalk
