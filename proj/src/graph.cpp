#include "sft/graph.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <istream>
#include <numeric>
#include <ostream>
#include <queue>
#include <set>
#include <sstream>

namespace sft {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
    if (n < 0)
        throw Error(ErrorCode::InvalidInput, "negative vertex count");
    adj_.resize(n);
    inc_.resize(n);
    std::set<std::pair<int, int>> seen;
    edges_.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(ErrorCode::InvalidInput,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") has an out-of-range vertex");
        if (u == v)
            throw Error(ErrorCode::InvalidInput,
                        "loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second)
            throw Error(ErrorCode::InvalidInput,
                        "duplicate edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ")");
        EdgeId id = static_cast<EdgeId>(edges_.size());
        edges_.push_back({u, v});
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        inc_[u].push_back(id);
        inc_[v].push_back(id);
    }
    for (int v = 0; v < n; ++v) {
        // sort neighbors and keep incident edge ids aligned
        std::vector<int> order(adj_[v].size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return adj_[v][a] < adj_[v][b]; });
        std::vector<Vertex> na(adj_[v].size());
        std::vector<EdgeId> ni(adj_[v].size());
        for (size_t i = 0; i < order.size(); ++i) {
            na[i] = adj_[v][order[i]];
            ni[i] = inc_[v][order[i]];
        }
        adj_[v] = std::move(na);
        inc_[v] = std::move(ni);
    }
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return std::nullopt;
    const auto& nb = adj_[u];
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) return std::nullopt;
    return inc_[u][it - nb.begin()];
}

long long s_metric(const Graph& g) {
    long long s = 0;
    for (const Edge& e : g.edges())
        s += static_cast<long long>(g.degree(e.u)) * g.degree(e.v);
    return s;
}

long long m_metric(const Graph& g) {
    long long m = 0;
    for (int v = 0; v < g.num_vertices(); ++v) {
        long long d = g.degree(v);
        m += d * d;
    }
    return m;
}

TrailCounts trail_counts(const Graph& g) {
    TrailCounts tc;
    tc.gamma1 = g.num_edges();
    for (int v = 0; v < g.num_vertices(); ++v) {
        long long d = g.degree(v);
        tc.gamma2 += d * (d - 1) / 2;
    }
    for (const Edge& e : g.edges())
        tc.gamma3 += static_cast<long long>(g.degree(e.u) - 1) * (g.degree(e.v) - 1);
    return tc;
}

std::pair<long long, long long> metrics_from_trails(const TrailCounts& tc) {
    return {2 * tc.gamma2 + 2 * tc.gamma1, tc.gamma3 + 2 * tc.gamma2 + tc.gamma1};
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<Vertex>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<int> q;
        q.push(s);
        comp[s] = id;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            out[id].push_back(v);
            for (int w : g.neighbors(v))
                if (comp[w] < 0) {
                    comp[w] = id;
                    q.push(w);
                }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Graph& g) {
    return g.num_vertices() <= 1 || connected_components(g).size() == 1;
}

SpanningTree::SpanningTree(const Graph& g, std::vector<EdgeId> ids)
    : host_(&g), edge_ids_(std::move(ids)), in_tree_(g.num_edges(), false),
      adj_(g.num_vertices()) {
    std::sort(edge_ids_.begin(), edge_ids_.end());
    for (EdgeId e : edge_ids_) {
        in_tree_[e] = true;
        const Edge& ed = g.edge(e);
        adj_[ed.u].push_back(ed.v);
        adj_[ed.v].push_back(ed.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

SpanningTree SpanningTree::validate(const Graph& g, std::vector<EdgeId> edge_ids) {
    int n = g.num_vertices();
    for (EdgeId e : edge_ids)
        if (e < 0 || e >= g.num_edges())
            throw Error(ErrorCode::InvalidInput,
                        "edge id " + std::to_string(e) + " out of range");
    std::sort(edge_ids.begin(), edge_ids.end());
    if (std::adjacent_find(edge_ids.begin(), edge_ids.end()) != edge_ids.end())
        throw Error(ErrorCode::InvalidInput, "repeated edge id in tree");
    if (static_cast<int>(edge_ids.size()) != n - 1)
        throw Error(ErrorCode::InvalidInput,
                    "wrong edge count: got " + std::to_string(edge_ids.size()) +
                        ", need " + std::to_string(n - 1));
    // union-find cycle check; n-1 acyclic edges imply connectivity
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (EdgeId e : edge_ids) {
        const Edge& ed = g.edge(e);
        int a = find(ed.u), b = find(ed.v);
        if (a == b)
            throw Error(ErrorCode::InvalidInput,
                        "cycle through edge (" + std::to_string(ed.u) + "," +
                            std::to_string(ed.v) + ")");
        parent[a] = b;
    }
    return SpanningTree(g, std::move(edge_ids));
}

long long SpanningTree::s_metric() const {
    long long s = 0;
    for (EdgeId e : edge_ids_) {
        const Edge& ed = host_->edge(e);
        s += static_cast<long long>(degree(ed.u)) * degree(ed.v);
    }
    return s;
}

long long SpanningTree::m_metric() const {
    long long m = 0;
    for (size_t v = 0; v < adj_.size(); ++v) {
        long long d = static_cast<long long>(adj_[v].size());
        m += d * d;
    }
    return m;
}

Graph SpanningTree::as_graph() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(edge_ids_.size());
    for (EdgeId e : edge_ids_) {
        const Edge& ed = host_->edge(e);
        es.emplace_back(ed.u, ed.v);
    }
    return Graph(host_->num_vertices(), es);
}

namespace {

// BFS distances within a tree given as a Graph.
std::vector<int> bfs_dist(const Graph& g, Vertex s) {
    std::vector<int> dist(g.num_vertices(), -1);
    std::queue<int> q;
    q.push(s);
    dist[s] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

} // namespace

TreeStats tree_stats(const Graph& g) {
    int n = g.num_vertices();
    if (g.num_edges() != n - 1 || !is_connected(g))
        throw Error(ErrorCode::InvalidInput, "tree_stats: input is not a tree");
    TreeStats st;
    st.degree_hist.assign(n, 0);
    for (int v = 0; v < n; ++v) st.degree_hist[g.degree(v)]++;
    st.leaves = n >= 2 ? st.degree_hist[1] : 0;
    if (n >= 2) {
        // double BFS sweep
        auto d0 = bfs_dist(g, 0);
        Vertex a = static_cast<Vertex>(std::max_element(d0.begin(), d0.end()) - d0.begin());
        auto d1 = bfs_dist(g, a);
        st.diameter = *std::max_element(d1.begin(), d1.end());
    }
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1 && g.degree(g.neighbors(v)[0]) == 2)
            st.pendant_two_paths++;
    return st;
}

TreeStats tree_stats(const SpanningTree& t) { return tree_stats(t.as_graph()); }

namespace {

// Search for the lexicographically smallest k-clique over candidates whose
// complement (within the whole vertex set) is independent. Candidates are
// id-sorted, so the first hit is the smallest.
bool find_partition(const Graph& g, const std::vector<Vertex>& cand, size_t idx,
                    int need, std::vector<Vertex>& chosen,
                    const std::vector<bool>& is_cand) {
    if (need == 0) {
        std::vector<bool> in_k(g.num_vertices(), false);
        for (Vertex v : chosen) in_k[v] = true;
        for (const Edge& e : g.edges())
            if (!in_k[e.u] && !in_k[e.v]) return false;
        return true;
    }
    if (cand.size() - idx < static_cast<size_t>(need)) return false;
    Vertex v = cand[idx];
    bool clique_ok = true;
    for (Vertex c : chosen)
        if (!g.adjacent(v, c)) { clique_ok = false; break; }
    if (clique_ok) {
        chosen.push_back(v);
        if (find_partition(g, cand, idx + 1, need - 1, chosen, is_cand)) return true;
        chosen.pop_back();
    }
    return find_partition(g, cand, idx + 1, need, chosen, is_cand);
}

} // namespace

std::optional<SplitPartition> recognize_split(const Graph& g) {
    int n = g.num_vertices();
    if (n == 0) return SplitPartition{};
    std::vector<long long> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<long long> d = deg;
    std::sort(d.rbegin(), d.rend());
    // splittance criterion: with k = max{i : d_i >= i-1},
    // G is split iff sum_{i<=k} d_i = k(k-1) + sum_{i>k} d_i; then omega = k
    int k = 0;
    for (int i = 1; i <= n; ++i)
        if (d[i - 1] >= i - 1) k = i;
    long long lhs = 0, rhs = static_cast<long long>(k) * (k - 1);
    for (int i = 0; i < k; ++i) lhs += d[i];
    for (int i = k; i < n; ++i) rhs += d[i];
    if (lhs != rhs) return std::nullopt;

    // Every K-vertex has tree degree >= k-1 within the clique.
    std::vector<Vertex> cand;
    std::vector<bool> is_cand(n, false);
    for (int v = 0; v < n; ++v)
        if (deg[v] >= k - 1) {
            cand.push_back(v);
            is_cand[v] = true;
        }
    std::vector<Vertex> chosen;
    if (!find_partition(g, cand, 0, k, chosen, is_cand)) return std::nullopt;

    SplitPartition sp;
    sp.clique = chosen;
    std::sort(sp.clique.begin(), sp.clique.end());
    std::vector<bool> in_k(n, false);
    for (Vertex v : sp.clique) in_k[v] = true;
    for (int v = 0; v < n; ++v)
        if (!in_k[v]) sp.independent.push_back(v);
    return sp;
}

std::optional<std::vector<Vertex>> recognize_threshold(const Graph& g) {
    int n = g.num_vertices();
    std::vector<bool> removed(n, false);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<Vertex> order;
    int remaining = n;
    while (remaining > 0) {
        int pick = -1;
        for (int v = 0; v < n && pick < 0; ++v) {
            if (removed[v]) continue;
            if (deg[v] == 0 || deg[v] == remaining - 1) pick = v;
        }
        if (pick < 0) return std::nullopt;
        removed[pick] = true;
        remaining--;
        for (int w : g.neighbors(pick))
            if (!removed[w]) deg[w]--;
        order.push_back(pick);
    }
    return order;
}

Graph read_graph(std::istream& in) {
    int n, m;
    if (!(in >> n >> m))
        throw Error(ErrorCode::InvalidInput, "graph header: expected \"n m\"");
    std::vector<std::pair<int, int>> es;
    es.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v))
            throw Error(ErrorCode::InvalidInput,
                        "graph edge " + std::to_string(i) + ": expected \"u v\"");
        es.emplace_back(u, v);
    }
    return Graph(n, es);
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::InvalidInput, "cannot open graph file: " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorCode::InvalidInput, "cannot open output file: " + path);
    write_graph(out, g);
}

} // namespace sft
