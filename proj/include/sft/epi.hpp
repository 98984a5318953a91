#ifndef SFT_EPI_HPP
#define SFT_EPI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "sft/exact.hpp"
#include "sft/graph.hpp"
#include "sft/heuristics.hpp"

namespace sft {

struct PatientSequences {
    std::string id;
    std::vector<std::string> sequences; // equal length, alphabet ACGTN
};

// FASTA with headers "patientID|seqIndex"; lowercase bases are normalized to
// uppercase. Throws Error(InvalidInput) on a bad character, mixed lengths or
// an empty record.
std::vector<PatientSequences> parse_sequences(std::istream& in);
std::vector<PatientSequences> parse_sequences_file(const std::string& path);

// Minimal relative Hamming distance between the two sequence sets, as an
// exact rational. n_is_mismatch=false ignores positions where either side
// has an N (the per-pair denominator shrinks accordingly).
Rational distance(const PatientSequences& a, const PatientSequences& b,
                  bool n_is_mismatch = true);

struct EpiGraph {
    Graph graph;                               // vertex i = patients[i]
    std::vector<std::vector<Rational>> dist;   // full symmetric matrix
    std::vector<std::vector<Vertex>> components;
};

// Edge iff distance <= t (inclusive boundary). Needs >= 2 patients.
EpiGraph build_epi_graph(const std::vector<PatientSequences>& patients, Rational t,
                         bool n_is_mismatch = true, int threads = 1);

struct ComponentThreshold {
    Rational t_c;   // max edge of a minimum spanning tree of the distances
    Graph pruned;   // component-local ids; edges with distance <= t_c
};

// members: component vertices in epi-graph ids; the submatrix is read from
// eg.dist. The pruned graph is connected and t_c is the smallest cutoff
// with that property.
ComponentThreshold component_threshold(const EpiGraph& eg,
                                       const std::vector<Vertex>& members);

enum class EpiSolver { Exact, Ilp, Heuristic2 };

struct ComponentReport {
    std::vector<std::string> member_ids;       // patient ids, component-local order
    std::vector<Vertex> members;               // epi-graph vertex ids
    Rational t_c;
    std::vector<std::pair<Vertex, Vertex>> tree_edges; // epi-graph vertex ids
    long long s_value = 0;
    Vertex superspreader = -1;                 // epi-graph vertex id
    std::string superspreader_id;
    bool exact = false;                        // false for heuristic trees
};

struct TransmissionReport {
    std::vector<ComponentReport> components;
};

// Per component: prune at t_C, find an s-optimal (or heuristic) spanning
// tree, report its max-degree vertex (tie by smallest id). A component too
// large for the chosen solver raises Error(Infeasible) suggesting
// heuristic2 instead of switching silently. solver_cmd is required for
// EpiSolver::Ilp ("cmd model.lp out.sol" contract).
TransmissionReport transmission_report(const std::vector<PatientSequences>& patients,
                                       const EpiGraph& eg, EpiSolver solver,
                                       long long cap = kDefaultTreeCap,
                                       const std::string& solver_cmd = "",
                                       double solver_timeout_s = 60.0);

std::string report_json(const TransmissionReport& rep);
std::string report_csv(const TransmissionReport& rep);

} // namespace sft

#endif
