#ifndef SFT_GENERATORS_HPP
#define SFT_GENERATORS_HPP

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "sft/graph.hpp"

namespace sft {

// All randomness funnels through mt19937_64. Bounded integers are drawn by
// rejection sampling on the raw 64-bit stream and uniform doubles as
// (x >> 11) * 2^-53, so identical seeds reproduce identical graphs on any
// platform.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next() { return gen_(); }

    // uniform in [0, bound)
    uint64_t below(uint64_t bound);

    // uniform in [0, 1)
    double uniform() { return (gen_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 gen_;
};

Graph gen_path(int n);
Graph gen_cycle(int n);
Graph gen_star(int leaves);             // K_{1,leaves}
Graph gen_double_star(int a, int b);    // S_{a,b}: two joined star centers
Graph gen_complete(int n);
Graph gen_grid(int rows, int cols);     // P_rows x P_cols, row-major ids
Graph gen_wheel(int n);                 // hub 0 joined to a cycle on n-1 vertices

Graph gen_erdos_renyi(int n, double p, uint64_t seed);

// Barabasi-Albert style: seed clique on k+1 vertices, then each new vertex
// attaches to k distinct existing vertices sampled proportionally to degree.
Graph gen_preferential_attachment(int n, int k, uint64_t seed);

// Random split graph: clique of random size in [1, max_clique], every
// independent vertex gets one random clique neighbor plus extras with
// probability extra_p.
Graph gen_random_split(int n, int max_clique, double extra_p, uint64_t seed);

// Corona g1 * g2: one copy of g2 per vertex of g1, fully joined to it.
Graph corona(const Graph& g1, const Graph& g2);

// The split family with clique c_1..c_omega and independent set
// b_1..b_{2*omega-2}; the H variant drops the edges at c_omega.
enum class GOmegaVariant { G, H };
Graph gen_gomega(int omega, GOmegaVariant variant);

struct ThreeDMInstance {
    int n = 0;                                    // |X| = |Y| = |Z|
    std::vector<std::array<int, 3>> triples;      // (x, y, z) indices in 0..n-1
};

struct GadgetResult {
    Graph graph;
    bool connected;   // disconnected gadget implies no perfect matching
};

// Root r joined to one vertex per triple; each triple vertex joined to its
// three element vertices. With split=true, {r} plus the triple vertices
// form a clique. Vertex ids: r=0, triples 1..m, then X, Y, Z blocks.
GadgetResult gen_3dm_gadget(const ThreeDMInstance& inst, bool split);

// Closed forms for the gadget optima attained exactly at perfect matchings.
long long threedm_t1(long long n, long long m);        // m^2 + m + 18n
long long threedm_t2(long long n, long long m);        // m^2 + 3mn + 12n
long long threedm_split_t2(long long n, long long m);  // m^2 + 3mn + 3m + 21n - 12

} // namespace sft

#endif
