#ifndef SFT_ILP_HPP
#define SFT_ILP_HPP

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "sft/graph.hpp"

namespace sft {

// Wedge: two edges sharing a vertex, a < b.
struct Trail2 {
    EdgeId a, b;
};

// Three-edge trail (path of length 3, or a triangle traversal), stored as
// (end, middle, end) with end1 < end2. The middle edge distinguishes the
// three traversals of a triangle.
struct Trail3 {
    EdgeId end1, mid, end2;
};

struct TrailSets {
    std::vector<Trail2> gamma2;
    std::vector<Trail3> gamma3;
};

TrailSets enumerate_trails(const Graph& g);

enum class Formulation { Martin, Mtz };

enum class VarKind { Binary, Continuous };

struct Variable {
    std::string name;
    VarKind kind;
    double lb, ub;
};

enum class Sense { Le, Ge, Eq };

struct Constraint {
    std::string name;
    std::vector<std::pair<int, double>> terms; // (var index, coefficient)
    Sense sense;
    double rhs;
};

struct IlpModel {
    Formulation formulation;
    char metric = 's';
    int num_vertices = 0;
    Vertex root = -1; // MTZ only

    std::vector<Variable> vars;
    std::vector<Constraint> constraints;
    std::vector<std::pair<int, double>> objective; // maximized

    std::unordered_map<std::string, int> var_index;
    std::vector<int> edge_var; // edge id -> index of its x variable
};

// Complete model for one formulation/metric pair. The m-metric variant
// uses objective 2*sum(y2) + 2*sum(x) and omits the y3 variables.
IlpModel build_model(const Graph& g, Formulation f, char metric);

// Deterministic LP-format text.
std::string emit_lp(const IlpModel& model);

struct Assignment {
    std::map<std::string, double> values;
    double objective = 0.0;
    std::string status; // optimal | timeout | infeasible
};

// Writes the model to a temp directory, runs `solver_cmd <model.lp> <sol>`
// under a timeout, and parses the "name value" solution listing (one pair
// per line, plus "objective <v>" and optional "status <s>" lines).
Assignment run_external_solver(const IlpModel& model, const std::string& solver_cmd,
                               double timeout_s);

// Edges with x >= 0.5 after binary rounding (tolerance 1e-4); validates the
// tree and that its recomputed metric equals the reported objective.
SpanningTree extract_tree(const Graph& g, const IlpModel& model, const Assignment& a);

// --- verification helpers (used by tests and extract_tree) ---

// Dense value vector indexed like model.vars.
std::vector<double> assignment_vector(const IlpModel& model, const Assignment& a);

// The integral feasible point induced by a spanning tree: x from the tree,
// y maximal feasible, z/t from the orientation toward the root(s).
std::vector<double> tree_assignment(const Graph& g, const IlpModel& model,
                                    const SpanningTree& t);

// Checks every constraint and bound within tol; on failure fills `why`.
bool check_assignment(const IlpModel& model, const std::vector<double>& values,
                      double tol, std::string* why = nullptr);

double eval_objective(const IlpModel& model, const std::vector<double>& values);

} // namespace sft

#endif
