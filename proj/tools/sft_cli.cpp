// Command-line front end: generate / solve / bounds / bench / epi.
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sft/bounds.hpp"
#include "sft/epi.hpp"
#include "sft/exact.hpp"
#include "sft/generators.hpp"
#include "sft/heuristics.hpp"
#include "sft/ilp.hpp"
#include "sft/transforms.hpp"

using json = nlohmann::json;
using namespace sft;

namespace {

struct GlobalOpts {
    uint64_t seed = 1;
    int threads = 1;
    std::string format = "json"; // csv | json
};

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorCode::InvalidInput, "cannot write '" + path + "'");
    out << text;
}

Graph require_connected(const Graph& g) {
    if (!is_connected(g))
        throw Error(ErrorCode::Infeasible, "input graph is disconnected");
    return g;
}

json bounds_report_json(const BoundsReport& rep) {
    json j;
    j["inputs"] = rep.inputs;
    j["records"] = json::array();
    for (const BoundRecord& r : rep.records) {
        json jr;
        jr["name"] = r.name;
        jr["applicable"] = r.applicable;
        if (!r.applicable) {
            jr["skip_reason"] = r.skip_reason;
        } else {
            jr["lhs"] = r.lhs;
            jr["rhs"] = r.rhs;
            jr["relation"] = r.relation;
            jr["holds"] = r.holds;
            jr["equality"] = r.equality;
            if (r.characterization_checked)
                jr["characterization_matches"] = r.characterization_matches();
        }
        j["records"].push_back(jr);
    }
    j["all_hold"] = rep.all_hold();
    return j;
}

json tree_result_json(const Graph& g, const std::vector<EdgeId>& edges,
                      const std::string& method, char metric) {
    SpanningTree t = SpanningTree::validate(g, edges);
    json j;
    j["method"] = method;
    j["metric"] = std::string(1, metric);
    j["value"] = t.metric(metric);
    j["s"] = t.s_metric();
    j["m"] = t.m_metric();
    j["edges"] = json::array();
    for (EdgeId e : t.edges()) j["edges"].push_back({g.edge(e).u, g.edge(e).v});
    return j;
}

std::string tree_result_csv(const json& j) {
    std::ostringstream os;
    os << "method,metric,value,s,m,edges\n";
    std::ostringstream es;
    for (size_t i = 0; i < j["edges"].size(); ++i) {
        if (i) es << " ";
        es << j["edges"][i][0].get<int>() << "-" << j["edges"][i][1].get<int>();
    }
    os << j["method"].get<std::string>() << "," << j["metric"].get<std::string>() << ","
       << j["value"].get<long long>() << "," << j["s"].get<long long>() << ","
       << j["m"].get<long long>() << "," << es.str() << "\n";
    return os.str();
}

// ---------------------------------------------------------------- generate

struct GenerateOpts {
    std::string family;
    int n = 0, a = 2, b = 2, rows = 2, cols = 2, k = 2, omega = 4, max_clique = 0;
    double p = 0.5;
    std::string out;
};

Graph build_family(const GenerateOpts& o, uint64_t seed) {
    if (o.family == "path") return gen_path(o.n);
    if (o.family == "cycle") return gen_cycle(o.n);
    if (o.family == "star") return gen_star(o.n - 1);
    if (o.family == "double-star") return gen_double_star(o.a, o.b);
    if (o.family == "complete") return gen_complete(o.n);
    if (o.family == "grid") return gen_grid(o.rows, o.cols);
    if (o.family == "wheel") return gen_wheel(o.n);
    if (o.family == "er") return gen_erdos_renyi(o.n, o.p, seed);
    if (o.family == "pa") return gen_preferential_attachment(o.n, o.k, seed);
    if (o.family == "split")
        return gen_random_split(o.n, o.max_clique > 0 ? o.max_clique : o.n / 2, o.p, seed);
    if (o.family == "gomega") return gen_gomega(o.omega, GOmegaVariant::G);
    if (o.family == "homega") return gen_gomega(o.omega, GOmegaVariant::H);
    throw Error(ErrorCode::InvalidInput, "unknown family '" + o.family + "'");
}

int cmd_generate(const GlobalOpts& g, const GenerateOpts& o) {
    Graph graph = build_family(o, g.seed);
    std::ostringstream os;
    write_graph(os, graph);
    write_output(o.out, os.str());
    return 0;
}

// ------------------------------------------------------------------- solve

struct SolveOpts {
    std::string input;
    std::string method = "exact";
    std::string metric = "s";
    std::string formulation = "mtz";
    std::string out;
    std::string solver_cmd;
    long long cap = kDefaultTreeCap;
    long long budget = 0;
    double timeout_s = 60.0;
};

int cmd_solve(const GlobalOpts& g, const SolveOpts& o) {
    Graph host = require_connected(read_graph_file(o.input));
    char metric = o.metric[0];
    json j;

    if (o.method == "exact") {
        ExactResult res = solve_exact(host, metric, o.cap, g.threads);
        j = tree_result_json(host, res.argmax, "exact", metric);
        j["optimal_count"] = res.optimal_count.str();
        j["trees_examined"] = res.trees_examined.str();
    } else if (o.method == "heuristic1") {
        j = tree_result_json(host, heuristic1(host).edges(), "heuristic1", metric);
    } else if (o.method == "heuristic2") {
        j = tree_result_json(host, heuristic2(host).edges(), "heuristic2", metric);
    } else if (o.method == "local-search") {
        LocalSearchResult r = local_search(host, heuristic2(host), metric, o.budget);
        j = tree_result_json(host, r.tree.edges(), "local-search", metric);
        j["steps"] = r.steps;
        j["budget_exhausted"] = r.budget_exhausted;
    } else if (o.method == "ilp-emit") {
        Formulation f = o.formulation == "martin" ? Formulation::Martin : Formulation::Mtz;
        IlpModel model = build_model(host, f, metric);
        std::string path = o.out.empty() ? "model.lp" : o.out;
        write_output(path, emit_lp(model));
        std::cout << path << "\n";
        return 0;
    } else if (o.method == "ilp-solve") {
        std::string cmd = o.solver_cmd;
        if (cmd.empty())
            if (const char* env = std::getenv("SFT_SOLVER_CMD")) cmd = env;
        if (cmd.empty())
            throw Error(ErrorCode::SolverFailure,
                        "no solver command (--solver-cmd or SFT_SOLVER_CMD)");
        Formulation f = o.formulation == "martin" ? Formulation::Martin : Formulation::Mtz;
        IlpModel model = build_model(host, f, metric);
        Assignment a = run_external_solver(model, cmd, o.timeout_s);
        SpanningTree t = extract_tree(host, model, a);
        j = tree_result_json(host, t.edges(), "ilp-solve", metric);
    } else {
        throw Error(ErrorCode::InvalidInput, "unknown method '" + o.method + "'");
    }

    if (g.format == "csv")
        write_output(o.out, tree_result_csv(j));
    else
        write_output(o.out, j.dump(2) + "\n");
    return 0;
}

// ------------------------------------------------------------------ bounds

struct BoundsOpts {
    std::string input;
    std::string kind = "auto"; // auto | tree | dims | cubic | split
    std::string out;
    long long cap = kDefaultTreeCap;
};

int cmd_bounds(const GlobalOpts&, const BoundsOpts& o) {
    Graph g = read_graph_file(o.input);
    std::string kind = o.kind;
    if (kind == "auto") {
        bool cubic = g.num_vertices() > 0;
        for (int v = 0; v < g.num_vertices(); ++v)
            if (g.degree(v) != 3) cubic = false;
        if (g.num_edges() == g.num_vertices() - 1 && is_connected(g))
            kind = "tree";
        else if (cubic && is_connected(g))
            kind = "cubic";
        else if (is_connected(g) && recognize_split(g))
            kind = "split";
        else
            kind = "dims";
    }

    json j;
    j["kind"] = kind;
    if (kind == "tree") {
        j["report"] = bounds_report_json(tree_bounds(g));
    } else if (kind == "cubic") {
        j["report"] = bounds_report_json(cubic_checks(g, o.cap));
    } else if (kind == "split") {
        auto [lo, hi] = split_tau2_bounds(g);
        j["tau2_lower"] = lo;
        j["tau2_upper"] = hi;
        if (auto order = recognize_threshold(require_connected(g))) {
            ExactResult res = threshold_solve(g, 's');
            j["threshold"] = true;
            j["tau2"] = res.optimum;
        } else {
            j["threshold"] = false;
        }
    } else {
        require_connected(g);
        std::optional<long long> tau1, tau2;
        if (count_spanning_trees(g) <= o.cap) {
            tau1 = solve_exact(g, 'm', o.cap).optimum;
            tau2 = solve_exact(g, 's', o.cap).optimum;
        }
        j["report"] = bounds_report_json(graph_dimension_bounds(g, tau1, tau2));
        if (tau1) j["tau1"] = *tau1;
        if (tau2) j["tau2"] = *tau2;
    }
    write_output(o.out, j.dump(2) + "\n");
    return 0;
}

// ------------------------------------------------------------------- bench

struct BenchOpts {
    std::string spec_path;
    std::string out;
    long long cap = kDefaultTreeCap;
};

struct BenchRow {
    std::string graph_id, family, method, status;
    int n = 0, m = 0;
    std::optional<long long> value;
    std::optional<double> alpha;
    double wall_ms = 0.0;
};

int cmd_bench(const GlobalOpts& g, const BenchOpts& o) {
    std::ifstream in(o.spec_path);
    if (!in)
        throw Error(ErrorCode::InvalidInput, "cannot open '" + o.spec_path + "'");
    json spec;
    try {
        in >> spec;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidInput, std::string("bad bench spec: ") + e.what());
    }
    char metric = spec.value("metric", std::string("s"))[0];
    std::vector<std::string> methods = spec.value("methods",
                                                  std::vector<std::string>{"exact"});

    struct Job {
        std::string id, family;
        Graph graph;
    };
    std::vector<Job> jobs;
    uint64_t seed = g.seed;
    for (const json& jg : spec.at("graphs")) {
        GenerateOpts go;
        go.family = jg.at("family").get<std::string>();
        go.n = jg.value("n", 0);
        go.a = jg.value("a", 2);
        go.b = jg.value("b", 2);
        go.rows = jg.value("rows", 2);
        go.cols = jg.value("cols", 2);
        go.k = jg.value("k", 2);
        go.p = jg.value("p", 0.5);
        go.omega = jg.value("omega", 4);
        go.max_clique = jg.value("max_clique", 0);
        int count = jg.value("count", 1);
        for (int i = 0; i < count; ++i) {
            Graph graph = build_family(go, seed++);
            if (!is_connected(graph)) {
                // retry deterministically until connected (random families)
                int tries = 0;
                while (!is_connected(graph) && ++tries < 1000)
                    graph = build_family(go, seed++);
                if (!is_connected(graph))
                    throw Error(ErrorCode::Infeasible,
                                "could not generate a connected '" + go.family + "' graph");
            }
            std::string id = go.family + "_n" + std::to_string(graph.num_vertices()) +
                             "_g" + std::to_string(i);
            jobs.push_back({id, go.family, std::move(graph)});
        }
    }

    std::vector<BenchRow> rows(jobs.size() * methods.size());
    std::vector<std::optional<long long>> best(jobs.size());

    // exact pass first so heuristic rows can report alpha
    for (size_t gi = 0; gi < jobs.size(); ++gi) {
        for (size_t mi = 0; mi < methods.size(); ++mi) {
            const std::string& method = methods[mi];
            BenchRow& row = rows[gi * methods.size() + mi];
            row.graph_id = jobs[gi].id;
            row.family = jobs[gi].family;
            row.method = method;
            row.n = jobs[gi].graph.num_vertices();
            row.m = jobs[gi].graph.num_edges();
            auto t0 = std::chrono::steady_clock::now();
            try {
                if (method == "exact") {
                    ExactResult res = solve_exact(jobs[gi].graph, metric, o.cap, g.threads);
                    row.value = res.optimum;
                    row.status = "optimal";
                    best[gi] = res.optimum;
                } else if (method == "heuristic1") {
                    row.value = heuristic1(jobs[gi].graph).metric(metric);
                    row.status = "heuristic";
                } else if (method == "heuristic2") {
                    row.value = heuristic2(jobs[gi].graph).metric(metric);
                    row.status = "heuristic";
                } else if (method == "local-search") {
                    LocalSearchResult r =
                        local_search(jobs[gi].graph, heuristic2(jobs[gi].graph), metric);
                    row.value = r.tree.metric(metric);
                    row.status = "heuristic";
                } else {
                    throw Error(ErrorCode::InvalidInput, "unknown method '" + method + "'");
                }
            } catch (const Error& e) {
                row.status = e.code() == ErrorCode::Timeout ? "timeout" : "refused";
            }
            row.wall_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
        }
    }
    for (size_t gi = 0; gi < jobs.size(); ++gi)
        for (size_t mi = 0; mi < methods.size(); ++mi) {
            BenchRow& row = rows[gi * methods.size() + mi];
            if (best[gi] && row.value && *row.value > 0)
                row.alpha = static_cast<double>(*best[gi]) / static_cast<double>(*row.value);
        }

    std::ostringstream os;
    os << "graph_id,family,n,m,method,value,alpha,wall_ms,status\n";
    for (const BenchRow& r : rows) {
        os << r.graph_id << "," << r.family << "," << r.n << "," << r.m << ","
           << r.method << ",";
        if (r.value) os << *r.value;
        os << ",";
        if (r.alpha) os << *r.alpha;
        os << "," << r.wall_ms << "," << r.status << "\n";
    }
    write_output(o.out, os.str());
    return 0;
}

// --------------------------------------------------------------------- epi

struct EpiOpts {
    std::string input;
    std::string solver = "exact";
    std::string threshold = "29/800"; // 3.625%
    bool ignore_n = false;
    std::string json_out, csv_out;
    std::string solver_cmd;
    long long cap = kDefaultTreeCap;
    double timeout_s = 60.0;
};

Rational parse_rational(const std::string& s) {
    long long num = 0, den = 1;
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            auto dot = s.find('.');
            if (dot == std::string::npos) {
                num = std::stoll(s);
            } else {
                std::string frac = s.substr(dot + 1);
                num = std::stoll(s.substr(0, dot) + frac);
                for (size_t i = 0; i < frac.size(); ++i) den *= 10;
            }
        } else {
            num = std::stoll(s.substr(0, slash));
            den = std::stoll(s.substr(slash + 1));
        }
    } catch (const std::exception&) {
        throw Error(ErrorCode::InvalidInput, "bad rational '" + s + "'");
    }
    if (den == 0)
        throw Error(ErrorCode::InvalidInput, "bad rational '" + s + "'");
    return Rational(num, den);
}

int cmd_epi(const GlobalOpts& g, const EpiOpts& o) {
    auto patients = parse_sequences_file(o.input);
    Rational t = parse_rational(o.threshold);
    EpiGraph eg = build_epi_graph(patients, t, !o.ignore_n, g.threads);

    EpiSolver solver;
    if (o.solver == "exact") solver = EpiSolver::Exact;
    else if (o.solver == "ilp") solver = EpiSolver::Ilp;
    else if (o.solver == "heuristic2") solver = EpiSolver::Heuristic2;
    else throw Error(ErrorCode::InvalidInput, "unknown epi solver '" + o.solver + "'");

    std::string cmd = o.solver_cmd;
    if (cmd.empty())
        if (const char* env = std::getenv("SFT_SOLVER_CMD")) cmd = env;

    TransmissionReport rep =
        transmission_report(patients, eg, solver, o.cap, cmd, o.timeout_s);
    if (!o.json_out.empty()) write_output(o.json_out, report_json(rep));
    if (!o.csv_out.empty()) write_output(o.csv_out, report_csv(rep));
    if (o.json_out.empty() && o.csv_out.empty())
        write_output("", g.format == "csv" ? report_csv(rep) : report_json(rep));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spanning-tree scale-freeness toolkit"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "Random seed (default 1)");
    app.add_option("--threads", g.threads, "Worker threads (default 1)");
    app.add_option("--format", g.format, "Output format: csv|json")
        ->check(CLI::IsMember({"csv", "json"}));

    GenerateOpts go;
    auto* sgen = app.add_subcommand("generate", "Emit a graph from a named family");
    sgen->add_option("--family", go.family,
                     "path|cycle|star|double-star|complete|grid|wheel|er|pa|split|"
                     "gomega|homega")
        ->required();
    sgen->add_option("--n", go.n, "Number of vertices");
    sgen->add_option("--a", go.a, "Double-star left leaf count");
    sgen->add_option("--b", go.b, "Double-star right leaf count");
    sgen->add_option("--rows", go.rows, "Grid rows");
    sgen->add_option("--cols", go.cols, "Grid cols");
    sgen->add_option("--k", go.k, "Preferential-attachment edges per vertex");
    sgen->add_option("--p", go.p, "Edge probability");
    sgen->add_option("--omega", go.omega, "Clique size for gomega/homega");
    sgen->add_option("--max-clique", go.max_clique, "Split clique-size bound");
    sgen->add_option("--out", go.out, "Output path (default stdout)");

    SolveOpts so;
    auto* ssolve = app.add_subcommand("solve", "Optimize over spanning trees");
    ssolve->add_option("input", so.input, "Graph file")->required();
    ssolve->add_option("--method", so.method,
                       "exact|heuristic1|heuristic2|local-search|ilp-emit|ilp-solve")
        ->check(CLI::IsMember({"exact", "heuristic1", "heuristic2", "local-search",
                               "ilp-emit", "ilp-solve"}));
    ssolve->add_option("--metric", so.metric, "s|m")->check(CLI::IsMember({"s", "m"}));
    ssolve->add_option("--formulation", so.formulation, "martin|mtz")
        ->check(CLI::IsMember({"martin", "mtz"}));
    ssolve->add_option("--out", so.out, "Output path (default stdout)");
    ssolve->add_option("--solver-cmd", so.solver_cmd, "External MILP solver command");
    ssolve->add_option("--cap", so.cap, "Enumeration cap");
    ssolve->add_option("--budget", so.budget, "Local-search move budget");
    ssolve->add_option("--timeout", so.timeout_s, "Solver timeout (seconds)");

    BoundsOpts bo;
    auto* sbounds = app.add_subcommand("bounds", "Inequality report for a graph");
    sbounds->add_option("input", bo.input, "Graph file")->required();
    sbounds->add_option("--kind", bo.kind, "auto|tree|dims|cubic|split")
        ->check(CLI::IsMember({"auto", "tree", "dims", "cubic", "split"}));
    sbounds->add_option("--out", bo.out, "Output path (default stdout)");
    sbounds->add_option("--cap", bo.cap, "Enumeration cap");

    BenchOpts eo;
    auto* sbench = app.add_subcommand("bench", "Batch benchmark from a JSON spec");
    sbench->add_option("spec", eo.spec_path, "Batch spec (JSON)")->required();
    sbench->add_option("--out", eo.out, "CSV output path (default stdout)");
    sbench->add_option("--cap", eo.cap, "Enumeration cap");

    EpiOpts po;
    auto* sepi = app.add_subcommand("epi", "Transmission-tree pipeline from FASTA");
    sepi->add_option("input", po.input, "FASTA file")->required();
    sepi->add_option("--solver", po.solver, "exact|ilp|heuristic2")
        ->check(CLI::IsMember({"exact", "ilp", "heuristic2"}));
    sepi->add_option("--threshold", po.threshold,
                     "Distance threshold (rational p/q or decimal; default 29/800)");
    sepi->add_flag("--ignore-n", po.ignore_n,
                   "Skip positions with N instead of counting them as mismatches");
    sepi->add_option("--json-out", po.json_out, "JSON report path");
    sepi->add_option("--csv-out", po.csv_out, "CSV summary path");
    sepi->add_option("--solver-cmd", po.solver_cmd, "External MILP solver command");
    sepi->add_option("--cap", po.cap, "Enumeration cap");
    sepi->add_option("--timeout", po.timeout_s, "Solver timeout (seconds)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sgen->parsed()) return cmd_generate(g, go);
        if (ssolve->parsed()) return cmd_solve(g, so);
        if (sbounds->parsed()) return cmd_bounds(g, bo);
        if (sbench->parsed()) return cmd_bench(g, eo);
        if (sepi->parsed()) return cmd_epi(g, po);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
