#include "sft/heuristics.hpp"

#include <algorithm>
#include <numeric>

namespace sft {

SpanningTree heuristic1(const Graph& g) {
    if (!is_connected(g))
        throw Error(ErrorCode::Infeasible, "heuristic1 requires a connected graph");
    int m = g.num_edges();
    std::vector<EdgeId> order(m);
    std::iota(order.begin(), order.end(), 0);
    auto weight = [&](EdgeId e) {
        const Edge& ed = g.edge(e);
        return static_cast<long long>(g.degree(ed.u)) * g.degree(ed.v);
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](EdgeId a, EdgeId b) { return weight(a) > weight(b); });
    std::vector<int> parent(g.num_vertices());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<EdgeId> chosen;
    for (EdgeId e : order) {
        int a = find(g.edge(e).u), b = find(g.edge(e).v);
        if (a != b) {
            parent[a] = b;
            chosen.push_back(e);
        }
    }
    return SpanningTree::validate(g, std::move(chosen));
}

SpanningTree heuristic2(const Graph& g) {
    if (!is_connected(g))
        throw Error(ErrorCode::Infeasible, "heuristic2 requires a connected graph");
    int n = g.num_vertices();
    if (n == 1) return SpanningTree::validate(g, {});
    Vertex source = 0;
    for (Vertex v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(source)) source = v;
    std::vector<bool> in_tree(n, false);
    std::vector<EdgeId> chosen;
    in_tree[source] = true;
    for (Vertex w : g.neighbors(source)) {
        in_tree[w] = true;
        chosen.push_back(*g.find_edge(source, w));
    }
    int covered = 1 + g.degree(source);
    while (covered < n) {
        Vertex best = -1;
        int best_out = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (!in_tree[v]) continue;
            int out = 0;
            for (Vertex w : g.neighbors(v))
                if (!in_tree[w]) out++;
            if (out > best_out) {
                best_out = out;
                best = v;
            }
        }
        for (Vertex w : g.neighbors(best))
            if (!in_tree[w]) {
                in_tree[w] = true;
                chosen.push_back(*g.find_edge(best, w));
                covered++;
            }
    }
    return SpanningTree::validate(g, std::move(chosen));
}

Rational approx_ratio(long long opt_value, long long heur_value) {
    if (heur_value < 1)
        throw Error(ErrorCode::InvalidInput, "approx_ratio: heuristic value must be >= 1");
    return Rational(opt_value, heur_value);
}

} // namespace sft
