#include "sft/ilp.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <queue>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

namespace sft {

namespace fs = std::filesystem;

TrailSets enumerate_trails(const Graph& g) {
    TrailSets ts;
    for (int v = 0; v < g.num_vertices(); ++v) {
        const auto& inc = g.incident_edges(v);
        for (size_t i = 0; i < inc.size(); ++i)
            for (size_t j = i + 1; j < inc.size(); ++j)
                ts.gamma2.push_back({std::min(inc[i], inc[j]), std::max(inc[i], inc[j])});
    }
    std::sort(ts.gamma2.begin(), ts.gamma2.end(), [](const Trail2& a, const Trail2& b) {
        return std::tie(a.a, a.b) < std::tie(b.a, b.b);
    });
    // one trail per (middle edge, unordered end pair); a triangle yields
    // three trails over the same edge set, one per middle edge
    for (EdgeId mid = 0; mid < g.num_edges(); ++mid) {
        Vertex u = g.edge(mid).u, v = g.edge(mid).v;
        for (EdgeId e1 : g.incident_edges(u)) {
            if (e1 == mid) continue;
            for (EdgeId e2 : g.incident_edges(v)) {
                if (e2 == mid || e2 == e1) continue;
                // a path trail appears once (its u-side edge is fixed); a
                // triangle appears in both endpoint assignments, so dedupe
                bool triangle = g.other_end(e1, u) == g.other_end(e2, v);
                if (triangle && e1 > e2) continue;
                ts.gamma3.push_back({std::min(e1, e2), mid, std::max(e1, e2)});
            }
        }
    }
    std::sort(ts.gamma3.begin(), ts.gamma3.end(), [](const Trail3& a, const Trail3& b) {
        std::array<EdgeId, 3> ka{a.end1, a.mid, a.end2}, kb{b.end1, b.mid, b.end2};
        std::array<EdgeId, 3> sa = ka, sb = kb;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        return std::tie(sa, ka.at(1)) < std::tie(sb, kb.at(1));
    });
    return ts;
}

namespace {

int add_var(IlpModel& model, std::string name, VarKind kind, double lb, double ub) {
    int idx = static_cast<int>(model.vars.size());
    model.var_index.emplace(name, idx);
    model.vars.push_back({std::move(name), kind, lb, ub});
    return idx;
}

std::string arc_name(Vertex v, Vertex w) {
    return "z_" + std::to_string(v) + "_" + std::to_string(w);
}

std::string arc_name(Vertex r, Vertex v, Vertex w) {
    return "z_" + std::to_string(r) + "_" + std::to_string(v) + "_" + std::to_string(w);
}

} // namespace

IlpModel build_model(const Graph& g, Formulation f, char metric) {
    if (g.num_vertices() < 2)
        throw Error(ErrorCode::InvalidInput, "ILP model needs n >= 2");
    if (!is_connected(g))
        throw Error(ErrorCode::Infeasible, "ILP model requires a connected graph");
    int n = g.num_vertices(), m = g.num_edges();
    TrailSets ts = enumerate_trails(g);

    IlpModel model;
    model.formulation = f;
    model.metric = metric;
    model.num_vertices = n;

    model.edge_var.resize(m);
    for (EdgeId e = 0; e < m; ++e)
        model.edge_var[e] = add_var(model, "x_" + std::to_string(e), VarKind::Binary, 0, 1);

    // y linearization variables are continuous in [0,1]; the constraint
    // triples/quadruples force integrality at integral x
    std::vector<int> y2(ts.gamma2.size());
    for (size_t i = 0; i < ts.gamma2.size(); ++i)
        y2[i] = add_var(model,
                        "y2_" + std::to_string(ts.gamma2[i].a) + "_" +
                            std::to_string(ts.gamma2[i].b),
                        VarKind::Continuous, 0, 1);
    std::vector<int> y3;
    if (metric == 's') {
        y3.resize(ts.gamma3.size());
        for (size_t i = 0; i < ts.gamma3.size(); ++i)
            y3[i] = add_var(model,
                            "y3_" + std::to_string(ts.gamma3[i].end1) + "_" +
                                std::to_string(ts.gamma3[i].mid) + "_" +
                                std::to_string(ts.gamma3[i].end2),
                            VarKind::Continuous, 0, 1);
    }

    auto cname = [&model] { return "c" + std::to_string(model.constraints.size()); };
    auto add = [&](std::vector<std::pair<int, double>> terms, Sense s, double rhs) {
        model.constraints.push_back({cname(), std::move(terms), s, rhs});
    };

    for (size_t i = 0; i < ts.gamma2.size(); ++i) {
        int xi = model.edge_var[ts.gamma2[i].a], xj = model.edge_var[ts.gamma2[i].b];
        add({{y2[i], 1}, {xi, -1}}, Sense::Le, 0);
        add({{y2[i], 1}, {xj, -1}}, Sense::Le, 0);
        add({{y2[i], 1}, {xi, -1}, {xj, -1}}, Sense::Ge, -1);
    }
    if (metric == 's') {
        for (size_t i = 0; i < ts.gamma3.size(); ++i) {
            int xi = model.edge_var[ts.gamma3[i].end1];
            int xj = model.edge_var[ts.gamma3[i].mid];
            int xk = model.edge_var[ts.gamma3[i].end2];
            add({{y3[i], 1}, {xi, -1}}, Sense::Le, 0);
            add({{y3[i], 1}, {xj, -1}}, Sense::Le, 0);
            add({{y3[i], 1}, {xk, -1}}, Sense::Le, 0);
            add({{y3[i], 1}, {xi, -1}, {xj, -1}, {xk, -1}}, Sense::Ge, -2);
        }
    }

    if (f == Formulation::Martin) {
        // nonnegative flow variables per root and directed edge, arcs into
        // the root pinned to zero
        for (Vertex r = 0; r < n; ++r)
            for (const Edge& e : g.edges()) {
                double ub_vu = e.u == r ? 0 : 1;
                double ub_uv = e.v == r ? 0 : 1;
                add_var(model, arc_name(r, e.u, e.v), VarKind::Continuous, 0, ub_uv);
                add_var(model, arc_name(r, e.v, e.u), VarKind::Continuous, 0, ub_vu);
            }
        for (Vertex r = 0; r < n; ++r) {
            for (EdgeId e = 0; e < m; ++e) {
                Vertex u = g.edge(e).u, v = g.edge(e).v;
                add({{model.edge_var[e], 1},
                     {model.var_index.at(arc_name(r, u, v)), -1},
                     {model.var_index.at(arc_name(r, v, u)), -1}},
                    Sense::Eq, 0);
            }
            for (Vertex w = 0; w < n; ++w) {
                std::vector<std::pair<int, double>> inflow;
                for (Vertex v : g.neighbors(w))
                    inflow.emplace_back(model.var_index.at(arc_name(r, v, w)), 1.0);
                add(std::move(inflow), Sense::Eq, w == r ? 0 : 1);
            }
        }
    } else {
        // MTZ: binary arcs plus vertex order variables; root is the
        // maximum-degree vertex, smallest id on ties
        Vertex r = 0;
        for (Vertex v = 1; v < n; ++v)
            if (g.degree(v) > g.degree(r)) r = v;
        model.root = r;
        for (const Edge& e : g.edges()) {
            add_var(model, arc_name(e.u, e.v), VarKind::Binary, 0, 1);
            add_var(model, arc_name(e.v, e.u), VarKind::Binary, 0, 1);
        }
        std::vector<int> tvar(n);
        for (Vertex v = 0; v < n; ++v)
            tvar[v] = add_var(model, "t_" + std::to_string(v), VarKind::Continuous, 0, n - 1);
        for (EdgeId e = 0; e < m; ++e) {
            Vertex u = g.edge(e).u, v = g.edge(e).v;
            add({{model.edge_var[e], 1},
                 {model.var_index.at(arc_name(u, v)), -1},
                 {model.var_index.at(arc_name(v, u)), -1}},
                Sense::Eq, 0);
        }
        for (Vertex w = 0; w < n; ++w) {
            std::vector<std::pair<int, double>> inflow;
            for (Vertex v : g.neighbors(w))
                inflow.emplace_back(model.var_index.at(arc_name(v, w)), 1.0);
            add(std::move(inflow), Sense::Eq, w == r ? 0 : 1);
        }
        for (const Edge& e : g.edges())
            for (auto [v, w] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}})
                add({{tvar[v], 1},
                     {tvar[w], -1},
                     {model.var_index.at(arc_name(v, w)), static_cast<double>(n)}},
                    Sense::Le, n - 1);
    }

    for (EdgeId e = 0; e < m; ++e) model.objective.emplace_back(model.edge_var[e], metric == 's' ? 1.0 : 2.0);
    for (size_t i = 0; i < ts.gamma2.size(); ++i) model.objective.emplace_back(y2[i], 2.0);
    if (metric == 's')
        for (size_t i = 0; i < ts.gamma3.size(); ++i) model.objective.emplace_back(y3[i], 1.0);
    return model;
}

namespace {

void emit_terms(std::ostringstream& out, const std::vector<std::pair<int, double>>& terms,
                const IlpModel& model) {
    bool first = true;
    for (auto [idx, coef] : terms) {
        if (coef == 0) continue;
        if (first) {
            if (coef < 0) out << "- ";
            first = false;
        } else {
            out << (coef < 0 ? " - " : " + ");
        }
        double mag = std::abs(coef);
        if (mag != 1.0) out << mag << ' ';
        out << model.vars[idx].name;
    }
    if (first) out << "0 " << model.vars[0].name;
}

} // namespace

std::string emit_lp(const IlpModel& model) {
    std::ostringstream out;
    out << "\\ spanning tree model: "
        << (model.formulation == Formulation::Martin ? "martin" : "mtz") << ' '
        << model.metric << "-metric\n";
    out << "Maximize\n obj: ";
    emit_terms(out, model.objective, model);
    out << "\nSubject To\n";
    for (const Constraint& c : model.constraints) {
        out << ' ' << c.name << ": ";
        emit_terms(out, c.terms, model);
        out << (c.sense == Sense::Le ? " <= " : c.sense == Sense::Ge ? " >= " : " = ")
            << c.rhs << '\n';
    }
    out << "Bounds\n";
    for (const Variable& v : model.vars) {
        if (v.kind == VarKind::Binary) continue;
        out << ' ' << v.lb << " <= " << v.name << " <= " << v.ub << '\n';
    }
    out << "Binary\n";
    for (const Variable& v : model.vars)
        if (v.kind == VarKind::Binary) out << ' ' << v.name << '\n';
    out << "End\n";
    return out.str();
}

Assignment run_external_solver(const IlpModel& model, const std::string& solver_cmd,
                               double timeout_s) {
    if (solver_cmd.empty())
        throw Error(ErrorCode::SolverFailure, "no solver command configured");
    fs::path dir = fs::temp_directory_path() /
                   ("sft_ilp_" + std::to_string(::getpid()) + "_" +
                    std::to_string(reinterpret_cast<uintptr_t>(&model)));
    fs::create_directories(dir);
    fs::path model_path = dir / "model.lp";
    fs::path sol_path = dir / "solution.txt";
    {
        std::ofstream out(model_path);
        out << emit_lp(model);
    }
    std::ostringstream cmd;
    cmd << "timeout " << std::max(1LL, static_cast<long long>(timeout_s)) << "s "
        << solver_cmd << " '" << model_path.string() << "' '" << sol_path.string() << "'";
    int rc = std::system(cmd.str().c_str());
    if (rc == -1)
        throw Error(ErrorCode::SolverFailure, "failed to launch solver command");
    int exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    if (exit_code == 124)
        throw Error(ErrorCode::Timeout, "solver timed out after " +
                                            std::to_string(timeout_s) + "s");
    if (exit_code != 0)
        throw Error(ErrorCode::SolverFailure,
                    "solver exited with code " + std::to_string(exit_code));
    std::ifstream in(sol_path);
    if (!in)
        throw Error(ErrorCode::SolverFailure, "solver produced no solution file");
    Assignment a;
    a.status = "optimal";
    bool have_objective = false;
    std::string name;
    double value;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        if (!(ls >> name)) continue;
        if (name == "status") {
            ls >> a.status;
            continue;
        }
        if (!(ls >> value))
            throw Error(ErrorCode::SolverFailure, "unparsable solution line: " + line);
        if (name == "objective") {
            a.objective = value;
            have_objective = true;
        } else {
            a.values[name] = value;
        }
    }
    if (a.status == "infeasible")
        throw Error(ErrorCode::Infeasible, "solver reported infeasible");
    if (!have_objective)
        throw Error(ErrorCode::SolverFailure, "solution file has no objective line");
    fs::remove_all(dir);
    return a;
}

SpanningTree extract_tree(const Graph& g, const IlpModel& model, const Assignment& a) {
    constexpr double kBinaryTol = 1e-4;
    std::vector<EdgeId> ids;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const std::string& name = model.vars[model.edge_var[e]].name;
        auto it = a.values.find(name);
        if (it == a.values.end())
            throw Error(ErrorCode::SolverFailure, "solution is missing variable " + name);
        double rounded = std::round(it->second);
        if (std::abs(it->second - rounded) > kBinaryTol)
            throw Error(ErrorCode::SolverFailure,
                        "variable " + name + " is not near-integral");
        if (rounded >= 0.5) ids.push_back(e);
    }
    SpanningTree t = SpanningTree::validate(g, std::move(ids));
    long long recomputed = model.metric == 's' ? t.s_metric() : t.m_metric();
    long long reported = static_cast<long long>(std::llround(a.objective));
    if (recomputed != reported)
        throw Error(ErrorCode::SolverFailure,
                    "objective mismatch: tree gives " + std::to_string(recomputed) +
                        ", solver reported " + std::to_string(reported));
    return t;
}

std::vector<double> assignment_vector(const IlpModel& model, const Assignment& a) {
    std::vector<double> values(model.vars.size(), 0.0);
    for (const auto& [name, v] : a.values) {
        auto it = model.var_index.find(name);
        if (it == model.var_index.end())
            throw Error(ErrorCode::SolverFailure, "unknown variable in solution: " + name);
        values[it->second] = v;
    }
    return values;
}

std::vector<double> tree_assignment(const Graph& g, const IlpModel& model,
                                    const SpanningTree& t) {
    std::vector<double> values(model.vars.size(), 0.0);
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        values[model.edge_var[e]] = t.contains(e) ? 1.0 : 0.0;
    // maximal feasible y: products of the x values
    for (size_t i = 0; i < model.vars.size(); ++i) {
        const std::string& name = model.vars[i].name;
        if (name.rfind("y2_", 0) == 0) {
            int a, b;
            std::sscanf(name.c_str(), "y2_%d_%d", &a, &b);
            values[i] = values[model.edge_var[a]] * values[model.edge_var[b]];
        } else if (name.rfind("y3_", 0) == 0) {
            int a, b, c;
            std::sscanf(name.c_str(), "y3_%d_%d_%d", &a, &b, &c);
            values[i] = values[model.edge_var[a]] * values[model.edge_var[b]] *
                        values[model.edge_var[c]];
        }
    }
    // orient the tree away from each root; parent arcs carry the flow
    auto orient = [&](Vertex root, auto arc_var) {
        std::vector<int> prev(g.num_vertices(), -1);
        std::queue<Vertex> q;
        q.push(root);
        prev[root] = root;
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : t.neighbors(v))
                if (prev[w] < 0) {
                    prev[w] = v;
                    values[arc_var(v, w)] = 1.0;
                    q.push(w);
                }
        }
        return prev;
    };
    if (model.formulation == Formulation::Martin) {
        for (Vertex r = 0; r < g.num_vertices(); ++r)
            orient(r, [&](Vertex v, Vertex w) {
                return model.var_index.at(arc_name(r, v, w));
            });
    } else {
        auto prev = orient(model.root, [&](Vertex v, Vertex w) {
            return model.var_index.at(arc_name(v, w));
        });
        // depth doubles as the MTZ order variable
        std::vector<int> depth(g.num_vertices(), 0);
        std::queue<Vertex> q;
        q.push(model.root);
        std::vector<bool> seen(g.num_vertices(), false);
        seen[model.root] = true;
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (Vertex w : t.neighbors(v))
                if (!seen[w]) {
                    seen[w] = true;
                    depth[w] = depth[v] + 1;
                    q.push(w);
                }
        }
        for (Vertex v = 0; v < g.num_vertices(); ++v)
            values[model.var_index.at("t_" + std::to_string(v))] = depth[v];
    }
    return values;
}

bool check_assignment(const IlpModel& model, const std::vector<double>& values,
                      double tol, std::string* why) {
    for (size_t i = 0; i < model.vars.size(); ++i) {
        const Variable& v = model.vars[i];
        if (values[i] < v.lb - tol || values[i] > v.ub + tol) {
            if (why) *why = "bound violated for " + v.name;
            return false;
        }
    }
    for (const Constraint& c : model.constraints) {
        double lhs = 0;
        for (auto [idx, coef] : c.terms) lhs += coef * values[idx];
        bool ok = c.sense == Sense::Le   ? lhs <= c.rhs + tol
                  : c.sense == Sense::Ge ? lhs >= c.rhs - tol
                                         : std::abs(lhs - c.rhs) <= tol;
        if (!ok) {
            if (why) *why = "constraint " + c.name + " violated (lhs=" +
                            std::to_string(lhs) + ")";
            return false;
        }
    }
    return true;
}

double eval_objective(const IlpModel& model, const std::vector<double>& values) {
    double obj = 0;
    for (auto [idx, coef] : model.objective) obj += coef * values[idx];
    return obj;
}

} // namespace sft
