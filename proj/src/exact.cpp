#include "sft/exact.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sft {

BigInt count_spanning_trees(const Graph& g) {
    int n = g.num_vertices();
    if (n == 0) return 0;
    if (n == 1) return 1;
    if (!is_connected(g)) return 0;
    // Laplacian minor, fraction-free (Bareiss) elimination
    int k = n - 1;
    std::vector<std::vector<BigInt>> a(k, std::vector<BigInt>(k, 0));
    for (int v = 0; v < k; ++v) a[v][v] = g.degree(v);
    for (const Edge& e : g.edges())
        if (e.u < k && e.v < k) {
            a[e.u][e.v] -= 1;
            a[e.v][e.u] -= 1;
        }
    BigInt prev = 1;
    int sign = 1;
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int row = col; row < k; ++row)
            if (a[row][col] != 0) { pivot = row; break; }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            sign = -sign;
        }
        for (int row = col + 1; row < k; ++row)
            for (int j = col + 1; j < k; ++j)
                a[row][j] = (a[row][j] * a[col][col] - a[row][col] * a[col][j]) / prev;
        prev = a[col][col];
    }
    BigInt det = a[k - 1][k - 1];
    return sign > 0 ? det : -det;
}

namespace {

int dsu_find(const std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x];
    return x;
}

// True iff the contraction classes in `parent` can still be connected by
// the undecided edges with id >= from_idx.
bool classes_connectable(const Graph& g, const std::vector<int>& parent, int from_idx) {
    int n = g.num_vertices();
    std::vector<std::vector<int>> class_adj(n);
    for (int j = from_idx; j < g.num_edges(); ++j) {
        int a = dsu_find(parent, g.edge(j).u), b = dsu_find(parent, g.edge(j).v);
        if (a != b) {
            class_adj[a].push_back(b);
            class_adj[b].push_back(a);
        }
    }
    std::vector<bool> seen(n, false);
    std::queue<int> q;
    int start = dsu_find(parent, 0);
    q.push(start);
    seen[start] = true;
    int reached = 1;
    int classes = 0;
    for (int v = 0; v < n; ++v)
        if (parent[v] == v) classes++;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : class_adj[x])
            if (!seen[y]) {
                seen[y] = true;
                reached++;
                q.push(y);
            }
    }
    return reached == classes;
}

// Contraction/deletion backtracking. Edges are decided in id order; the
// include branch is explored first, and an exclude branch is pruned when
// the chosen edges plus the undecided ones no longer connect the graph.
class Enumerator {
public:
    Enumerator(const Graph& g,
               const std::function<bool(const std::vector<EdgeId>&)>& visit)
        : g_(g), visit_(visit), parent_(g.num_vertices()) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    // Resume from an explicit state (used by the parallel partitioning).
    void set_state(const std::vector<int>& parent, std::vector<EdgeId> chosen) {
        parent_ = parent;
        chosen_ = std::move(chosen);
    }
    const std::vector<int>& parent() const { return parent_; }
    const std::vector<EdgeId>& chosen() const { return chosen_; }

    bool run(int idx) {
        if (static_cast<int>(chosen_.size()) == g_.num_vertices() - 1)
            return visit_(chosen_);
        if (idx >= g_.num_edges()) return true;
        const Edge& e = g_.edge(idx);
        int ru = find(e.u), rv = find(e.v);
        if (ru == rv) return run(idx + 1);
        // include
        parent_[ru] = rv;
        chosen_.push_back(idx);
        bool go = run(idx + 1);
        chosen_.pop_back();
        parent_[ru] = ru;
        if (!go) return false;
        // exclude
        if (classes_connectable(g_, parent_, idx + 1)) return run(idx + 1);
        return true;
    }

    int find(int x) const { return dsu_find(parent_, x); }

private:
    const Graph& g_;
    const std::function<bool(const std::vector<EdgeId>&)>& visit_;
    std::vector<int> parent_;
    std::vector<EdgeId> chosen_;
};

} // namespace

void enumerate_spanning_trees(const Graph& g,
                              const std::function<bool(const std::vector<EdgeId>&)>& visit) {
    if (g.num_vertices() == 0) return;
    if (!is_connected(g))
        throw Error(ErrorCode::Infeasible, "enumeration requires a connected graph");
    if (g.num_vertices() == 1) {
        std::vector<EdgeId> empty;
        visit(empty);
        return;
    }
    Enumerator en(g, visit);
    en.run(0);
}

std::vector<std::vector<EdgeId>> enumerate_spanning_trees(const Graph& g, long long cap) {
    BigInt count = count_spanning_trees(g);
    if (count == 0 && g.num_vertices() > 1)
        throw Error(ErrorCode::Infeasible, "enumeration requires a connected graph");
    if (count > cap)
        throw Error(ErrorCode::Infeasible,
                    "refusing to enumerate " + count.str() + " spanning trees (cap " +
                        std::to_string(cap) + ")");
    std::vector<std::vector<EdgeId>> out;
    enumerate_spanning_trees(g, [&](const std::vector<EdgeId>& t) {
        out.push_back(t);
        return true;
    });
    return out;
}

namespace {

struct EnumTask {
    std::vector<int> parent;
    std::vector<EdgeId> chosen;
    int idx = 0;
};

struct PartialResult {
    long long best = -1;
    std::vector<EdgeId> argmax;
    BigInt optimal_count = 0;
    BigInt examined = 0;
};

long long tree_metric(const Graph& g, const std::vector<EdgeId>& edge_ids, char metric) {
    std::vector<long long> deg(g.num_vertices(), 0);
    for (EdgeId e : edge_ids) {
        deg[g.edge(e).u]++;
        deg[g.edge(e).v]++;
    }
    long long res = 0;
    if (metric == 'm') {
        for (long long d : deg) res += d * d;
    } else {
        for (EdgeId e : edge_ids) res += deg[g.edge(e).u] * deg[g.edge(e).v];
    }
    return res;
}

// Split the branch tree into tasks by expanding the first branching
// decisions in enumeration order. Tasks keep that order, so merging them
// front to back reproduces the serial result exactly.
std::vector<EnumTask> partition_tasks(const Graph& g, int target) {
    std::vector<EnumTask> frontier;
    EnumTask root;
    root.parent.resize(g.num_vertices());
    std::iota(root.parent.begin(), root.parent.end(), 0);
    frontier.push_back(std::move(root));
    bool grew = true;
    while (static_cast<int>(frontier.size()) < target && grew) {
        grew = false;
        std::vector<EnumTask> next;
        for (EnumTask& task : frontier) {
            if (static_cast<int>(task.chosen.size()) == g.num_vertices() - 1 ||
                task.idx >= g.num_edges()) {
                next.push_back(std::move(task));
                continue;
            }
            // advance past forced skips
            int idx = task.idx;
            int ru = -1, rv = -1;
            while (idx < g.num_edges()) {
                ru = dsu_find(task.parent, g.edge(idx).u);
                rv = dsu_find(task.parent, g.edge(idx).v);
                if (ru != rv) break;
                idx++;
            }
            if (idx >= g.num_edges()) {
                task.idx = idx;
                next.push_back(std::move(task));
                continue;
            }
            grew = true;
            EnumTask inc = task;
            inc.parent[ru] = rv;
            inc.chosen.push_back(idx);
            inc.idx = idx + 1;
            next.push_back(std::move(inc));
            // keep the exclude branch only if the remainder can still span
            if (classes_connectable(g, task.parent, idx + 1)) {
                EnumTask exc = std::move(task);
                exc.idx = idx + 1;
                next.push_back(std::move(exc));
            }
        }
        frontier = std::move(next);
    }
    return frontier;
}

ExactResult solve_from_tasks(const Graph& g, char metric, std::vector<EnumTask> tasks,
                             int threads) {
    std::vector<PartialResult> parts(tasks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (int i = 0; i < static_cast<int>(tasks.size()); ++i) {
        PartialResult& pr = parts[i];
        std::function<bool(const std::vector<EdgeId>&)> visit =
            [&](const std::vector<EdgeId>& t) {
                pr.examined += 1;
                long long val = tree_metric(g, t, metric);
                if (val > pr.best) {
                    pr.best = val;
                    pr.argmax = t;
                    pr.optimal_count = 1;
                } else if (val == pr.best) {
                    pr.optimal_count += 1;
                }
                return true;
            };
        Enumerator en(g, visit);
        en.set_state(tasks[i].parent, tasks[i].chosen);
        en.run(tasks[i].idx);
    }
    ExactResult res;
    res.metric = metric;
    long long best = -1;
    for (const PartialResult& pr : parts) {
        res.trees_examined += pr.examined;
        if (pr.best > best) {
            best = pr.best;
            res.argmax = pr.argmax;
            res.optimal_count = pr.optimal_count;
        } else if (pr.best == best && best >= 0) {
            res.optimal_count += pr.optimal_count;
        }
    }
    if (best < 0)
        throw Error(ErrorCode::Infeasible, "no spanning tree found");
    res.optimum = best;
    std::sort(res.argmax.begin(), res.argmax.end());
    return res;
}

} // namespace

ExactResult solve_exact(const Graph& g, char metric, long long cap, int threads) {
    if (g.num_vertices() == 0)
        throw Error(ErrorCode::InvalidInput, "empty graph");
    BigInt count = count_spanning_trees(g);
    if (count == 0 && g.num_vertices() > 1)
        throw Error(ErrorCode::Infeasible, "graph is disconnected");
    if (count > cap)
        throw Error(ErrorCode::Infeasible,
                    "refusing to enumerate " + count.str() + " spanning trees (cap " +
                        std::to_string(cap) + ")");
    if (threads <= 0) {
#ifdef _OPENMP
        threads = omp_get_max_threads();
#else
        threads = 1;
#endif
    }
    if (g.num_vertices() == 1) {
        ExactResult res;
        res.metric = metric;
        res.optimal_count = 1;
        res.trees_examined = 1;
        return res;
    }
    std::vector<EnumTask> tasks;
    if (threads == 1) {
        EnumTask root;
        root.parent.resize(g.num_vertices());
        std::iota(root.parent.begin(), root.parent.end(), 0);
        tasks.push_back(std::move(root));
    } else {
        tasks = partition_tasks(g, 8 * threads);
    }
    return solve_from_tasks(g, metric, std::move(tasks), threads);
}

ExactResult solve_exact_serial(const Graph& g, char metric, long long cap) {
    return solve_exact(g, metric, cap, 1);
}

void enumerate_labeled_trees(int n,
                             const std::function<bool(const Graph&, const std::vector<EdgeId>&)>& visit) {
    if (n < 2 || n > 9)
        throw Error(ErrorCode::InvalidInput,
                    "labeled tree enumeration supports 2 <= n <= 9");
    // host K_n
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
    Graph host(n, es);

    std::vector<int> seq(std::max(0, n - 2), 0);
    std::vector<int> deg(n);
    std::vector<EdgeId> ids(n - 1);
    while (true) {
        // decode the Pruefer sequence
        std::fill(deg.begin(), deg.end(), 1);
        for (int x : seq) deg[x]++;
        int k = 0;
        for (int x : seq) {
            int leaf = -1;
            for (int v = 0; v < n; ++v)
                if (deg[v] == 1) { leaf = v; break; }
            ids[k++] = *host.find_edge(leaf, x);
            deg[leaf] = 0;
            deg[x]--;
        }
        int a = -1, b = -1;
        for (int v = 0; v < n; ++v)
            if (deg[v] == 1) (a < 0 ? a : b) = v;
        ids[k++] = *host.find_edge(a, b);
        std::vector<EdgeId> sorted = ids;
        std::sort(sorted.begin(), sorted.end());
        if (!visit(host, sorted)) return;
        // next sequence, lexicographic
        int pos = static_cast<int>(seq.size()) - 1;
        while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
        if (pos < 0) return;
        seq[pos]++;
    }
}

MaxLeafResult max_leaf(const Graph& g, long long cap) {
    BigInt count = count_spanning_trees(g);
    if (count == 0 && g.num_vertices() > 1)
        throw Error(ErrorCode::Infeasible, "graph is disconnected");
    if (count > cap)
        throw Error(ErrorCode::Infeasible,
                    "refusing to enumerate " + count.str() + " spanning trees (cap " +
                        std::to_string(cap) + ")");
    MaxLeafResult res;
    res.max_leaves = -1;
    std::vector<long long> deg(g.num_vertices());
    enumerate_spanning_trees(g, [&](const std::vector<EdgeId>& t) {
        std::fill(deg.begin(), deg.end(), 0);
        for (EdgeId e : t) {
            deg[g.edge(e).u]++;
            deg[g.edge(e).v]++;
        }
        int leaves = 0;
        for (long long d : deg)
            if (d == 1) leaves++;
        long long s = 0;
        for (EdgeId e : t) s += deg[g.edge(e).u] * deg[g.edge(e).v];
        if (leaves > res.max_leaves || (leaves == res.max_leaves && s > res.best_s)) {
            res.max_leaves = leaves;
            res.best_s = s;
            res.argmax = t;
        }
        return true;
    });
    return res;
}

} // namespace sft
