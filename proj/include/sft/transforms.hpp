#ifndef SFT_TRANSFORMS_HPP
#define SFT_TRANSFORMS_HPP

#include <vector>

#include "sft/graph.hpp"

namespace sft {

// Descriptor of a neighbor switch S_{v->u}^B on a tree: the vertices of B
// are detached from v and re-attached to u. Only deg(u) and deg(v) change.
struct NeighborSwitch {
    Vertex u = -1, v = -1;
    std::vector<Vertex> moved;       // B, subset of N_T(v) \ {v_minus}
    std::vector<Vertex> path;        // P_T(u, v), endpoints included
    Vertex u_plus = -1, v_minus = -1; // path neighbors of u and v
    bool adjacent = false;           // u and v adjacent in the tree

    int p = 0;  // deg_T(u)
    int t = 0;  // deg_T(v)
    int q = 0;  // |B|
    int r = 0;  // |N_T(v) \ {v_minus}| - q
    long long alpha = 0; // deg_T(u_plus)
    long long beta = 0;  // deg_T(v_minus)
    long long d_a = 0;   // sum of degrees over N_T(u) \ {u_plus}
    long long d_b = 0;   // sum of degrees over B
    long long d_c = 0;   // sum of degrees over N_T(v) \ ({v_minus} + B)
};

// Builds the descriptor, computing all derived quantities from the unique
// u-v tree path. Throws Error(InvalidInput) if v is a leaf, B is empty, or
// B touches the path / v_minus.
NeighborSwitch make_switch(const SpanningTree& t, Vertex u, Vertex v,
                           const std::vector<Vertex>& b);

// Total switch: B = N_T(v) \ {v_minus}; afterwards v is a leaf.
NeighborSwitch make_total_switch(const SpanningTree& t, Vertex u, Vertex v);

// Applies the switch within the host graph. Every new edge u-b must exist
// in the host; otherwise throws Error(Infeasible) naming the missing edge.
SpanningTree apply_switch(const SpanningTree& t, const NeighborSwitch& sw);

// True iff every re-attachment edge u-b exists in the host.
bool switch_feasible(const SpanningTree& t, const NeighborSwitch& sw);

// s(S(T)) - s(T). Nonadjacent case uses the closed form
// q(alpha - beta) + D_B(p - r - 1) + q(D_A - D_C); adjacent case is
// recomputed from the rewritten degree sequence.
long long switch_delta_s(const SpanningTree& t, const NeighborSwitch& sw);

// m(S(T)) - m(T) = 2q(p - r - 1).
long long switch_delta_m(const SpanningTree& t, const NeighborSwitch& sw);

struct LocalSearchResult {
    SpanningTree tree;
    int steps = 0;
    bool budget_exhausted = false;
};

// Hill climbing over host-feasible total neighbor switches, first
// improvement in (u, v) id order; plateau moves are not taken.
// budget <= 0 means the default 10*n^2 moves.
LocalSearchResult local_search(const Graph& g, const SpanningTree& t0,
                               char metric, long long budget = 0);

} // namespace sft

#endif
