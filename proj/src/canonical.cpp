#include "polwalk/canonical.hpp"

#include <algorithm>

#include "polwalk/errors.hpp"

namespace polwalk {

namespace {

// Relabels darts by first-visit order of a BFS from root that expands
// next(d) then reverse(d); emits (label(next(d)), label(reverse(d))) in
// label order. Isomorphisms of rotation systems commute with both maps,
// so equal codes <=> isomorphic once minimized over roots.
std::vector<int> code_from_root(const PolarizedGraph& g, Dart root) {
    int n = g.dart_count();
    std::vector<int> label(n, -1);
    std::vector<Dart> order;
    order.reserve(n);
    label[root] = 0;
    order.push_back(root);
    for (size_t i = 0; i < order.size(); ++i) {
        Dart d = order[i];
        for (Dart t : {g.next[d], reverse(d)})
            if (label[t] < 0) {
                label[t] = static_cast<int>(order.size());
                order.push_back(t);
            }
    }
    if (static_cast<int>(order.size()) != n)
        throw precondition_error("canonical code requires a connected graph");
    std::vector<int> code;
    code.reserve(2 * n);
    for (Dart d : order) {
        code.push_back(label[g.next[d]]);
        code.push_back(label[reverse(d)]);
    }
    return code;
}

}  // namespace

std::vector<int> canonical_code(const PolarizedGraph& g) {
    if (g.dart_count() == 0) return {};
    std::vector<int> best;
    for (Dart root = 0; root < g.dart_count(); ++root) {
        auto code = code_from_root(g, root);
        if (best.empty() || code < best) best = std::move(code);
    }
    return best;
}

bool isomorphic(const PolarizedGraph& a, const PolarizedGraph& b) {
    if (a.vertices != b.vertices || a.edge_count() != b.edge_count()) return false;
    return canonical_code(a) == canonical_code(b);
}

}  // namespace polwalk
