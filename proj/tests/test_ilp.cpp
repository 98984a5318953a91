#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <string>

#include "sft/exact.hpp"
#include "sft/generators.hpp"
#include "sft/ilp.hpp"

using namespace sft;

namespace {

std::string solver_cmd() {
    return "python3 " + std::string(SFT_SOURCE_DIR) + "/tools/lp_solve.py";
}

int count_vars(const IlpModel& m, const std::string& prefix) {
    int c = 0;
    for (const Variable& v : m.vars)
        if (v.name.rfind(prefix, 0) == 0) ++c;
    return c;
}

// writes an executable stub script and returns the command to run it
std::string make_stub(const std::string& tag, const std::string& body) {
    std::string path = "/tmp/sft_stub_" + tag + ".sh";
    std::ofstream out(path);
    out << "#!/bin/sh\n" << body << "\n";
    out.close();
    std::system(("chmod +x " + path).c_str());
    return path;
}

} // namespace

TEST_CASE("trail sets match trail counts") {
    Graph tri = gen_complete(3);
    TrailSets ts = enumerate_trails(tri);
    CHECK(ts.gamma2.size() == 3);
    CHECK(ts.gamma3.size() == 3);

    Graph p4 = gen_path(4);
    ts = enumerate_trails(p4);
    CHECK(ts.gamma2.size() == 2);
    CHECK(ts.gamma3.size() == 1);

    Graph star3 = gen_star(3);
    ts = enumerate_trails(star3);
    CHECK(ts.gamma2.size() == 3);
    CHECK(ts.gamma3.size() == 0);

    for (uint64_t seed = 0; seed < 15; ++seed) {
        Graph g = gen_erdos_renyi(7, 0.5, seed);
        TrailCounts tc = trail_counts(g);
        TrailSets sets = enumerate_trails(g);
        CHECK((long long)sets.gamma2.size() == tc.gamma2);
        CHECK((long long)sets.gamma3.size() == tc.gamma3);
    }
}

TEST_CASE("model sizes match closed forms") {
    Graph tri = gen_complete(3);
    IlpModel mtz = build_model(tri, Formulation::Mtz, 's');
    CHECK(count_vars(mtz, "x_") == 3);
    CHECK(count_vars(mtz, "y2_") == 3);
    CHECK(count_vars(mtz, "y3_") == 3);
    CHECK(count_vars(mtz, "z_") == 6);
    CHECK(count_vars(mtz, "t_") == 3);

    IlpModel martin = build_model(tri, Formulation::Martin, 's');
    CHECK(count_vars(martin, "z_") == 18); // 3 roots x 6 arcs
    int pinned = 0;
    for (const Variable& v : martin.vars)
        if (v.name.rfind("z_", 0) == 0 && v.ub == 0) ++pinned;
    CHECK(pinned == 6); // one inbound arc per root per incident edge

    for (uint64_t seed = 0; seed < 8; ++seed) {
        Graph g = gen_erdos_renyi(7, 0.5, 50 + seed);
        if (!is_connected(g)) continue;
        TrailCounts tc = trail_counts(g);
        long long n = g.num_vertices(), m = g.num_edges();
        IlpModel a = build_model(g, Formulation::Martin, 's');
        CHECK(count_vars(a, "x_") == m);
        CHECK(count_vars(a, "y2_") == tc.gamma2);
        CHECK(count_vars(a, "y3_") == tc.gamma3);
        CHECK(count_vars(a, "z_") == 2 * m * n);
        IlpModel b = build_model(g, Formulation::Mtz, 'm');
        CHECK(count_vars(b, "z_") == 2 * m);
        CHECK(count_vars(b, "t_") == n);
        CHECK(count_vars(b, "y3_") == 0); // m-metric omits three-edge trails
    }

    Graph disc(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(build_model(disc, Formulation::Mtz, 's'), Error);
}

TEST_CASE("lp emission is deterministic and well formed") {
    Graph tri = gen_complete(3);
    IlpModel m = build_model(tri, Formulation::Mtz, 's');
    std::string text = emit_lp(m);
    CHECK(text == emit_lp(m));

    size_t count = 0, pos = 0;
    while ((pos = text.find("Maximize", pos)) != std::string::npos) {
        ++count;
        ++pos;
    }
    CHECK(count == 1);
    CHECK(text.find("Binary\n x_0\n x_1\n x_2\n") != std::string::npos);
    CHECK(text.find("End") != std::string::npos);
}

TEST_CASE("every spanning tree induces a feasible integral point with objective s(T)") {
    for (uint64_t seed = 0; seed < 12; ++seed) {
        Graph g = gen_erdos_renyi(6 + (int)(seed % 2), 0.5, 200 + seed);
        if (!is_connected(g)) continue;
        for (Formulation f : {Formulation::Martin, Formulation::Mtz}) {
            for (char metric : {'s', 'm'}) {
                IlpModel model = build_model(g, f, metric);
                enumerate_spanning_trees(g, [&](const std::vector<EdgeId>& ids) {
                    SpanningTree t = SpanningTree::validate(g, ids);
                    auto values = tree_assignment(g, model, t);
                    std::string why;
                    CHECK_MESSAGE(check_assignment(model, values, 1e-9, &why), why);
                    CHECK(eval_objective(model, values) ==
                          doctest::Approx((double)t.metric(metric)));
                    return true;
                });
            }
        }
    }
}

TEST_CASE("triangle trail variables vanish on every integral tree point") {
    Graph g = gen_complete(4); // plenty of triangles
    IlpModel model = build_model(g, Formulation::Mtz, 's');
    TrailSets ts = enumerate_trails(g);
    enumerate_spanning_trees(g, [&](const std::vector<EdgeId>& ids) {
        SpanningTree t = SpanningTree::validate(g, ids);
        auto values = tree_assignment(g, model, t);
        for (const Trail3& tr : ts.gamma3) {
            // triangle traversal: the three edges form a cycle
            Vertex a = g.edge(tr.end1).u, b = g.edge(tr.end1).v;
            Vertex c = g.edge(tr.end2).u, d = g.edge(tr.end2).v;
            std::set<Vertex> span{a, b, c, d, g.edge(tr.mid).u, g.edge(tr.mid).v};
            if (span.size() == 3) {
                std::string name = "y3_" + std::to_string(tr.end1) + "_" +
                                   std::to_string(tr.mid) + "_" + std::to_string(tr.end2);
                CHECK(values[model.var_index.at(name)] == 0.0);
            }
        }
        return true;
    });
}

TEST_CASE("corrupted assignments are rejected") {
    Graph c4 = gen_cycle(4);
    IlpModel model = build_model(c4, Formulation::Mtz, 's');
    ExactResult opt = solve_exact(c4, 's');
    SpanningTree t = SpanningTree::validate(c4, opt.argmax);
    auto values = tree_assignment(c4, model, t);

    Assignment a;
    a.objective = (double)opt.optimum;
    a.status = "optimal";
    for (size_t i = 0; i < model.vars.size(); ++i) a.values[model.vars[i].name] = values[i];
    CHECK(extract_tree(c4, model, a).s_metric() == 8);

    Assignment missing = a;
    missing.values.erase("x_0");
    CHECK_THROWS_AS(extract_tree(c4, model, missing), Error);

    Assignment fractional = a;
    fractional.values["x_0"] = 0.4; // far from integral
    CHECK_THROWS_AS(extract_tree(c4, model, fractional), Error);

    Assignment noisy = a;
    for (auto& [k, v] : noisy.values)
        if (k.rfind("x_", 0) == 0 && v == 1.0) v = 0.99997; // within tolerance
    CHECK(extract_tree(c4, model, noisy).s_metric() == 8);

    Assignment wrong_obj = a;
    wrong_obj.objective = 7;
    CHECK_THROWS_AS(extract_tree(c4, model, wrong_obj), Error);

    // flipping one x breaks feasibility of the full point
    values[model.edge_var[0]] = 1 - values[model.edge_var[0]];
    CHECK(!check_assignment(model, values, 1e-9));
}

TEST_CASE("external solver protocol failure modes") {
    Graph tri = gen_complete(3);
    IlpModel model = build_model(tri, Formulation::Mtz, 's');

    CHECK_THROWS_AS(run_external_solver(model, "", 5), Error);

    try {
        run_external_solver(model, "/nonexistent/solver", 5);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::SolverFailure);
    }

    std::string slow = make_stub("slow", "sleep 10");
    try {
        run_external_solver(model, slow, 1);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Timeout);
    }

    std::string infeasible =
        make_stub("infeasible", "echo 'status infeasible' > \"$2\"");
    try {
        run_external_solver(model, infeasible, 5);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Infeasible);
    }

    std::string garbage = make_stub("garbage", "echo 'x_0 banana' > \"$2\"");
    CHECK_THROWS_AS(run_external_solver(model, garbage, 5), Error);

    std::string no_obj = make_stub("noobj", "printf 'x_0 1\\nx_1 1\\n' > \"$2\"");
    CHECK_THROWS_AS(run_external_solver(model, no_obj, 5), Error);
}

TEST_CASE("real solver agrees with exact enumeration" * doctest::skip(false)) {
    // scipy-backed MILP adapter; skip silently if python3/scipy are absent
    if (std::system("python3 -c 'import scipy.optimize' > /dev/null 2>&1") != 0)
        return;
    std::string cmd = solver_cmd();
    int solved = 0;
    for (uint64_t seed = 0; solved < 4 && seed < 20; ++seed) {
        Graph g = gen_erdos_renyi(6, 0.5, 700 + seed);
        if (!is_connected(g)) continue;
        ++solved;
        for (Formulation f : {Formulation::Martin, Formulation::Mtz}) {
            for (char metric : {'s', 'm'}) {
                IlpModel model = build_model(g, f, metric);
                Assignment a = run_external_solver(model, cmd, 60);
                SpanningTree t = extract_tree(g, model, a);
                CHECK(t.metric(metric) == solve_exact(g, metric).optimum);
            }
        }
    }
    CHECK(solved == 4);
}
