#ifndef SFT_GRAPH_HPP
#define SFT_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sft/error.hpp"

namespace sft {

using Vertex = int;
using EdgeId = int;

struct Edge {
    Vertex u, v; // normalized so that u < v

    bool operator==(const Edge&) const = default;
};

// Immutable simple undirected graph. Vertices are 0..n-1, edge ids are
// dense 0..m-1 in construction order.
class Graph {
public:
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }

    // Sorted neighbor list.
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    // Incident edge ids, sorted by the neighbor they lead to.
    const std::vector<EdgeId>& incident_edges(Vertex v) const { return inc_[v]; }

    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;

    bool adjacent(Vertex u, Vertex v) const { return find_edge(u, v).has_value(); }
    std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;

    Vertex other_end(EdgeId e, Vertex v) const {
        const Edge& ed = edges_[e];
        return ed.u == v ? ed.v : ed.u;
    }

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::vector<EdgeId>> inc_;
};

struct TrailCounts {
    long long gamma1 = 0; // trails with 1 edge (= m)
    long long gamma2 = 0; // trails with 2 edges (wedges)
    long long gamma3 = 0; // trails with 3 edges, triangles included

    bool operator==(const TrailCounts&) const = default;
};

long long s_metric(const Graph& g);
long long m_metric(const Graph& g);
TrailCounts trail_counts(const Graph& g);

// (m, s) from trail counts: m = 2*g2 + 2*g1, s = g3 + 2*g2 + g1.
std::pair<long long, long long> metrics_from_trails(const TrailCounts& tc);

std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// A spanning tree of a host graph, stored as host edge ids.
class SpanningTree {
public:
    // Validates edge count, acyclicity and connectivity; throws
    // Error(InvalidInput) with a message naming the failure mode.
    static SpanningTree validate(const Graph& g, std::vector<EdgeId> edge_ids);

    const Graph& host() const { return *host_; }
    const std::vector<EdgeId>& edges() const { return edge_ids_; } // sorted
    int num_vertices() const { return host_->num_vertices(); }

    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
    bool contains(EdgeId e) const { return in_tree_[e]; }

    long long s_metric() const;
    long long m_metric() const;
    long long metric(char which) const { return which == 's' ? s_metric() : m_metric(); }

    // The tree as a standalone graph on the same vertex set.
    Graph as_graph() const;

private:
    SpanningTree(const Graph& g, std::vector<EdgeId> ids);

    const Graph* host_;
    std::vector<EdgeId> edge_ids_;
    std::vector<bool> in_tree_;
    std::vector<std::vector<Vertex>> adj_;
};

struct TreeStats {
    int leaves = 0;                  // number of degree-1 vertices
    int diameter = 0;
    std::vector<int> degree_hist;    // degree_hist[i] = count of degree-i vertices
    int pendant_two_paths = 0;       // p2: leaves whose neighbor has degree 2
};

// g must be a tree (connected, n-1 edges); throws otherwise.
TreeStats tree_stats(const Graph& g);
TreeStats tree_stats(const SpanningTree& t);

struct SplitPartition {
    std::vector<Vertex> clique;       // K, sorted; |K| = omega(G)
    std::vector<Vertex> independent;  // I, sorted
};

// Degree-sequence splittance test; on success K is a maximum clique and,
// among those, lexicographically smallest.
std::optional<SplitPartition> recognize_split(const Graph& g);

// Elimination order witnessing thresholdness: at each step the removed
// vertex is universal or isolated in the remaining graph (smallest id
// among candidates). Empty optional if g is not threshold.
std::optional<std::vector<Vertex>> recognize_threshold(const Graph& g);

// Text format: first line "n m", then m lines "u v".
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

} // namespace sft

#endif
