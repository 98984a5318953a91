#ifndef SFT_EXACT_HPP
#define SFT_EXACT_HPP

#include <functional>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sft/graph.hpp"

namespace sft {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr long long kDefaultTreeCap = 10'000'000;

// Kirchhoff matrix-tree count via fraction-free integer elimination.
// Returns 0 for disconnected graphs.
BigInt count_spanning_trees(const Graph& g);

// Visits every spanning tree exactly once in a deterministic order:
// branch on the lowest-id undecided edge, include before exclude, pruning
// exclude branches that disconnect the remainder. The visitor receives the
// sorted edge-id set; returning false stops the enumeration.
void enumerate_spanning_trees(const Graph& g,
                              const std::function<bool(const std::vector<EdgeId>&)>& visit);

// Materialized enumeration guarded by the matrix-tree count.
// Throws Error(Infeasible) if the count exceeds cap.
std::vector<std::vector<EdgeId>> enumerate_spanning_trees(const Graph& g,
                                                          long long cap = kDefaultTreeCap);

struct ExactResult {
    char metric = 's';
    long long optimum = 0;
    std::vector<EdgeId> argmax;     // first optimal tree in enumeration order
    BigInt optimal_count = 0;       // number of optimal trees
    BigInt trees_examined = 0;
};

// Exhaustive optimum by enumeration; single- and multi-threaded runs give
// identical output. threads <= 0 picks the OpenMP default.
ExactResult solve_exact(const Graph& g, char metric, long long cap = kDefaultTreeCap,
                        int threads = 1);

// Serial reference implementation kept for testing and benchmarking.
ExactResult solve_exact_serial(const Graph& g, char metric,
                               long long cap = kDefaultTreeCap);

// All labeled trees on n vertices (2 <= n <= 9) via Pruefer sequences,
// as spanning trees of K_n.
void enumerate_labeled_trees(int n, const std::function<bool(const Graph& host,
                                                             const std::vector<EdgeId>&)>& visit);

struct MaxLeafResult {
    int max_leaves = 0;          // ell(G)
    long long best_s = 0;        // max s over spanning trees attaining ell(G)
    std::vector<EdgeId> argmax;  // a tree attaining both
};

MaxLeafResult max_leaf(const Graph& g, long long cap = kDefaultTreeCap);

} // namespace sft

#endif
