#include "sft/transforms.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace sft {

namespace {

// Unique u-v path in the tree, endpoints included.
std::vector<Vertex> tree_path(const SpanningTree& t, Vertex u, Vertex v) {
    int n = t.num_vertices();
    std::vector<Vertex> prev(n, -1);
    std::queue<Vertex> q;
    q.push(u);
    prev[u] = u;
    while (!q.empty()) {
        Vertex x = q.front();
        q.pop();
        if (x == v) break;
        for (Vertex w : t.neighbors(x))
            if (prev[w] < 0) {
                prev[w] = x;
                q.push(w);
            }
    }
    std::vector<Vertex> path;
    for (Vertex x = v; x != u; x = prev[x]) path.push_back(x);
    path.push_back(u);
    std::reverse(path.begin(), path.end());
    return path;
}

} // namespace

NeighborSwitch make_switch(const SpanningTree& t, Vertex u, Vertex v,
                           const std::vector<Vertex>& b) {
    int n = t.num_vertices();
    if (u < 0 || u >= n || v < 0 || v >= n || u == v)
        throw Error(ErrorCode::InvalidInput, "switch: invalid vertex pair");
    if (b.empty())
        throw Error(ErrorCode::InvalidInput, "switch: B must be nonempty");
    NeighborSwitch sw;
    sw.u = u;
    sw.v = v;
    sw.t = t.degree(v);
    if (sw.t < 2)
        throw Error(ErrorCode::InvalidInput,
                    "switch: v=" + std::to_string(v) + " is a leaf (t < 2)");
    sw.path = tree_path(t, u, v);
    sw.u_plus = sw.path[1];
    sw.v_minus = sw.path[sw.path.size() - 2];
    sw.adjacent = sw.path.size() == 2;
    std::vector<bool> on_path(n, false);
    for (Vertex x : sw.path) on_path[x] = true;

    sw.moved = b;
    std::sort(sw.moved.begin(), sw.moved.end());
    if (std::adjacent_find(sw.moved.begin(), sw.moved.end()) != sw.moved.end())
        throw Error(ErrorCode::InvalidInput, "switch: repeated vertex in B");
    const auto& nv = t.neighbors(v);
    for (Vertex x : sw.moved) {
        if (!std::binary_search(nv.begin(), nv.end(), x))
            throw Error(ErrorCode::InvalidInput,
                        "switch: " + std::to_string(x) + " is not a tree neighbor of v");
        if (on_path[x])
            throw Error(ErrorCode::InvalidInput,
                        "switch: B contains path vertex " + std::to_string(x));
    }

    sw.p = t.degree(u);
    sw.q = static_cast<int>(sw.moved.size());
    sw.r = sw.t - 1 - sw.q;
    sw.alpha = t.degree(sw.u_plus);
    sw.beta = t.degree(sw.v_minus);
    for (Vertex a : t.neighbors(u))
        if (a != sw.u_plus) sw.d_a += t.degree(a);
    for (Vertex x : sw.moved) sw.d_b += t.degree(x);
    for (Vertex c : nv)
        if (c != sw.v_minus && !std::binary_search(sw.moved.begin(), sw.moved.end(), c))
            sw.d_c += t.degree(c);
    return sw;
}

NeighborSwitch make_total_switch(const SpanningTree& t, Vertex u, Vertex v) {
    std::vector<Vertex> path = tree_path(t, u, v);
    Vertex v_minus = path[path.size() - 2];
    std::vector<Vertex> b;
    for (Vertex x : t.neighbors(v))
        if (x != v_minus) b.push_back(x);
    return make_switch(t, u, v, b);
}

bool switch_feasible(const SpanningTree& t, const NeighborSwitch& sw) {
    for (Vertex x : sw.moved)
        if (!t.host().find_edge(sw.u, x)) return false;
    return true;
}

SpanningTree apply_switch(const SpanningTree& t, const NeighborSwitch& sw) {
    std::vector<EdgeId> ids;
    std::vector<bool> drop(t.host().num_edges(), false);
    for (Vertex x : sw.moved) {
        auto old_e = t.host().find_edge(sw.v, x);
        drop[*old_e] = true;
        auto new_e = t.host().find_edge(sw.u, x);
        if (!new_e)
            throw Error(ErrorCode::Infeasible,
                        "switch: host has no edge (" + std::to_string(sw.u) + "," +
                            std::to_string(x) + ")");
        ids.push_back(*new_e);
    }
    for (EdgeId e : t.edges())
        if (!drop[e]) ids.push_back(e);
    return SpanningTree::validate(t.host(), std::move(ids));
}

namespace {

// Metric of the tree after the rewrite, computed from adjusted degrees
// without requiring host feasibility.
long long rewritten_metric(const SpanningTree& t, const NeighborSwitch& sw, char metric) {
    int n = t.num_vertices();
    std::vector<long long> deg(n);
    for (int x = 0; x < n; ++x) deg[x] = t.degree(x);
    deg[sw.u] = sw.p + sw.q;
    deg[sw.v] = sw.r + 1;
    if (metric == 'm') {
        long long m = 0;
        for (int x = 0; x < n; ++x) m += deg[x] * deg[x];
        return m;
    }
    std::vector<bool> moved(n, false);
    for (Vertex x : sw.moved) moved[x] = true;
    long long s = 0;
    for (EdgeId e : t.edges()) {
        Vertex a = t.host().edge(e).u, b = t.host().edge(e).v;
        if (a == sw.v && moved[b]) a = sw.u; // edge rehomed to u
        else if (b == sw.v && moved[a]) b = sw.u;
        s += deg[a] * deg[b];
    }
    return s;
}

} // namespace

long long switch_delta_s(const SpanningTree& t, const NeighborSwitch& sw) {
    if (!sw.adjacent)
        return sw.q * (sw.alpha - sw.beta) + sw.d_b * (sw.p - sw.r - 1) +
               sw.q * (sw.d_a - sw.d_c);
    return rewritten_metric(t, sw, 's') - t.s_metric();
}

long long switch_delta_m(const SpanningTree& t, const NeighborSwitch& sw) {
    return 2LL * sw.q * (sw.p - sw.r - 1);
}

LocalSearchResult local_search(const Graph& g, const SpanningTree& t0,
                               char metric, long long budget) {
    int n = g.num_vertices();
    if (budget <= 0) budget = 10LL * n * n;
    SpanningTree cur = t0;
    int steps = 0;
    bool moved = true;
    while (moved && steps < budget) {
        moved = false;
        for (Vertex u = 0; u < n && !moved; ++u) {
            for (Vertex v = 0; v < n && !moved; ++v) {
                if (u == v || cur.degree(v) < 2) continue;
                NeighborSwitch sw = make_total_switch(cur, u, v);
                if (!switch_feasible(cur, sw)) continue;
                long long delta = metric == 's' ? switch_delta_s(cur, sw)
                                                : switch_delta_m(cur, sw);
                if (delta > 0) {
                    cur = apply_switch(cur, sw);
                    steps++;
                    moved = true;
                }
            }
        }
    }
    return {std::move(cur), steps, steps >= budget && moved};
}

} // namespace sft
