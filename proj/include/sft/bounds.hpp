#ifndef SFT_BOUNDS_HPP
#define SFT_BOUNDS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sft/exact.hpp"
#include "sft/graph.hpp"

namespace sft {

struct BoundRecord {
    std::string name;
    bool applicable = true;
    std::string skip_reason;          // failed precondition when not applicable
    long long lhs = 0, rhs = 0;
    std::string relation = "<=";
    bool holds = false;
    bool equality = false;
    // structural condition that is supposed to characterize equality
    bool characterization_expected = false;
    bool characterization_checked = false;

    bool characterization_matches() const {
        return !characterization_checked || characterization_expected == equality;
    }
};

struct BoundsReport {
    std::map<std::string, long long> inputs; // n, m_edges, metrics, ell, ...
    std::vector<BoundRecord> records;

    bool all_hold() const;
    bool all_characterizations_match() const;
    const BoundRecord* find(const std::string& name) const;
};

// Order/leaf/diameter bounds for a single tree (given as a tree graph).
BoundsReport tree_bounds(const Graph& tree);

// Order-only bounds on tau_1/tau_2 with path/cycle and universal-vertex
// equality characterizations. Estimates that are not supplied are skipped.
BoundsReport graph_dimension_bounds(const Graph& g,
                                    std::optional<long long> tau1,
                                    std::optional<long long> tau2);

// Identities and the 6n-15 bound over every spanning tree of a cubic host
// (by enumeration), plus the n/4+2 leaf guarantee.
BoundsReport cubic_checks(const Graph& g, long long cap = kDefaultTreeCap);

// Sharp split-graph bracket on tau_2.
std::pair<long long, long long> split_tau2_bounds(const Graph& g);

// Structural conditions every s/m-optimal tree of a split graph with
// maximal |K| >= 3 satisfies: I-vertices are leaves, the clique subtree is
// a star, its center carries the most I-neighbors and has degree Delta(G).
BoundsReport split_structure_check(const Graph& g, const SpanningTree& t);

// Linear-time optimum for connected threshold graphs: the star at a
// universal vertex.
ExactResult threshold_solve(const Graph& g, char metric = 's');

// tau_2(S_{a,b}) = (a+b+1)^2 - ab
long long double_star_tau2(long long a, long long b);

} // namespace sft

#endif
