#include "sft/epi.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sft/ilp.hpp"

namespace sft {

namespace {

bool valid_base(char c) {
    return c == 'A' || c == 'C' || c == 'G' || c == 'T' || c == 'N';
}

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r.numerator() << "/" << r.denominator();
    return os.str();
}

} // namespace

std::vector<PatientSequences> parse_sequences(std::istream& in) {
    std::vector<PatientSequences> out;
    std::map<std::string, size_t> index;
    std::string line, header, seq;
    size_t length = 0;

    auto flush = [&]() {
        if (header.empty()) return;
        if (seq.empty())
            throw Error(ErrorCode::InvalidInput, "empty record for header '" + header + "'");
        auto bar = header.find('|');
        std::string pid = bar == std::string::npos ? header : header.substr(0, bar);
        if (pid.empty())
            throw Error(ErrorCode::InvalidInput, "empty patient id in header '" + header + "'");
        for (char& c : seq) {
            c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            if (!valid_base(c))
                throw Error(ErrorCode::InvalidInput,
                            std::string("invalid character '") + c + "' in record '" +
                                header + "'");
        }
        if (length == 0) length = seq.size();
        if (seq.size() != length)
            throw Error(ErrorCode::InvalidInput,
                        "sequence length mismatch in record '" + header + "': expected " +
                            std::to_string(length) + ", got " + std::to_string(seq.size()));
        auto it = index.find(pid);
        if (it == index.end()) {
            index.emplace(pid, out.size());
            out.push_back({pid, {seq}});
        } else {
            out[it->second].sequences.push_back(seq);
        }
        header.clear();
        seq.clear();
    };

    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '>') {
            flush();
            header = line.substr(1);
            if (header.empty())
                throw Error(ErrorCode::InvalidInput, "empty FASTA header");
        } else {
            if (header.empty())
                throw Error(ErrorCode::InvalidInput, "sequence data before any header");
            seq += line;
        }
    }
    flush();
    if (out.empty())
        throw Error(ErrorCode::InvalidInput, "no FASTA records found");
    return out;
}

std::vector<PatientSequences> parse_sequences_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::InvalidInput, "cannot open '" + path + "'");
    return parse_sequences(in);
}

Rational distance(const PatientSequences& a, const PatientSequences& b,
                  bool n_is_mismatch) {
    bool have = false;
    Rational best;
    for (const std::string& x : a.sequences) {
        for (const std::string& y : b.sequences) {
            if (x.size() != y.size())
                throw Error(ErrorCode::InvalidInput, "sequence length mismatch");
            long long mism = 0, denom = static_cast<long long>(x.size());
            for (size_t i = 0; i < x.size(); ++i) {
                if (!n_is_mismatch && (x[i] == 'N' || y[i] == 'N')) {
                    --denom;
                    continue;
                }
                if (x[i] != y[i]) ++mism;
            }
            // all-N overlap: treat as maximally distant rather than divide by 0
            Rational d = denom == 0 ? Rational(1) : Rational(mism, denom);
            if (!have || d < best) {
                best = d;
                have = true;
            }
        }
    }
    if (!have)
        throw Error(ErrorCode::InvalidInput, "empty sequence set in distance()");
    return best;
}

EpiGraph build_epi_graph(const std::vector<PatientSequences>& patients, Rational t,
                         bool n_is_mismatch, int threads) {
    int n = static_cast<int>(patients.size());
    if (n < 2)
        throw Error(ErrorCode::InvalidInput, "build_epi_graph needs at least 2 patients");
    std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n, Rational(0)));

    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

#pragma omp parallel for schedule(dynamic) num_threads(threads > 0 ? threads : 1) \
    if (threads != 1)
    for (long long k = 0; k < static_cast<long long>(pairs.size()); ++k) {
        auto [i, j] = pairs[k];
        Rational d = distance(patients[i], patients[j], n_is_mismatch);
        dist[i][j] = d;
        dist[j][i] = d;
    }

    std::vector<std::pair<int, int>> edges;
    for (auto [i, j] : pairs)
        if (dist[i][j] <= t) edges.emplace_back(i, j);
    Graph g(n, edges);
    auto comps = connected_components(g);
    return EpiGraph{std::move(g), std::move(dist), std::move(comps)};
}

ComponentThreshold component_threshold(const EpiGraph& eg,
                                       const std::vector<Vertex>& members) {
    int k = static_cast<int>(members.size());
    if (k == 0)
        throw Error(ErrorCode::InvalidInput, "empty component");
    std::vector<int> local(eg.graph.num_vertices(), -1);
    for (int i = 0; i < k; ++i) local[members[i]] = i;

    // component-local edges present in the epi graph, with their distances
    struct WEdge {
        Rational w;
        int a, b;
    };
    std::vector<WEdge> wedges;
    for (const Edge& e : eg.graph.edges()) {
        int a = local[e.u], b = local[e.v];
        if (a >= 0 && b >= 0) wedges.push_back({eg.dist[e.u][e.v], a, b});
    }

    if (k == 1) {
        return {Rational(0), Graph(1, {})};
    }

    // Kruskal: the bottleneck of the minimum spanning tree is the smallest
    // cutoff that keeps the component connected.
    std::stable_sort(wedges.begin(), wedges.end(),
                     [](const WEdge& x, const WEdge& y) { return x.w < y.w; });
    std::vector<int> parent(k);
    for (int i = 0; i < k; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    Rational t_c(0);
    int joined = 0;
    for (const WEdge& e : wedges) {
        int ra = find(e.a), rb = find(e.b);
        if (ra == rb) continue;
        parent[ra] = rb;
        t_c = std::max(t_c, e.w);
        if (++joined == k - 1) break;
    }
    if (joined != k - 1)
        throw Error(ErrorCode::Infeasible, "component is not connected");

    std::vector<std::pair<int, int>> kept;
    for (const WEdge& e : wedges)
        if (e.w <= t_c) kept.emplace_back(e.a, e.b);
    return {t_c, Graph(k, kept)};
}

TransmissionReport transmission_report(const std::vector<PatientSequences>& patients,
                                       const EpiGraph& eg, EpiSolver solver,
                                       long long cap, const std::string& solver_cmd,
                                       double solver_timeout_s) {
    TransmissionReport rep;
    for (const std::vector<Vertex>& members : eg.components) {
        ComponentThreshold ct = component_threshold(eg, members);
        const Graph& g = ct.pruned;
        int k = g.num_vertices();

        ComponentReport cr;
        cr.members = members;
        for (Vertex v : members) cr.member_ids.push_back(patients[v].id);
        cr.t_c = ct.t_c;

        std::vector<EdgeId> tree_ids;
        if (k == 1) {
            cr.s_value = 0;
            cr.superspreader = members[0];
            cr.superspreader_id = patients[members[0]].id;
            cr.exact = true;
            rep.components.push_back(std::move(cr));
            continue;
        }

        switch (solver) {
        case EpiSolver::Exact: {
            if (count_spanning_trees(g) > cap)
                throw Error(ErrorCode::Infeasible,
                            "component with " + std::to_string(k) +
                                " patients exceeds the exact enumeration cap; rerun "
                                "with the heuristic2 solver");
            ExactResult res = solve_exact(g, 's', cap);
            tree_ids = res.argmax;
            cr.s_value = res.optimum;
            cr.exact = true;
            break;
        }
        case EpiSolver::Ilp: {
            if (solver_cmd.empty())
                throw Error(ErrorCode::SolverFailure,
                            "ilp solver requested but no solver command configured; "
                            "rerun with the heuristic2 solver or supply one");
            IlpModel model = build_model(g, Formulation::Mtz, 's');
            Assignment a = run_external_solver(model, solver_cmd, solver_timeout_s);
            SpanningTree t = extract_tree(g, model, a);
            tree_ids = t.edges();
            cr.s_value = t.s_metric();
            cr.exact = true;
            break;
        }
        case EpiSolver::Heuristic2: {
            SpanningTree t = heuristic2(g);
            tree_ids = t.edges();
            cr.s_value = t.s_metric();
            cr.exact = false;
            break;
        }
        }

        std::vector<int> deg(k, 0);
        for (EdgeId e : tree_ids) {
            const Edge& ed = g.edge(e);
            deg[ed.u]++;
            deg[ed.v]++;
            cr.tree_edges.emplace_back(members[ed.u], members[ed.v]);
        }
        int best = 0;
        for (int v = 1; v < k; ++v)
            if (deg[v] > deg[best]) best = v;
        cr.superspreader = members[best];
        cr.superspreader_id = patients[members[best]].id;
        rep.components.push_back(std::move(cr));
    }
    return rep;
}

std::string report_json(const TransmissionReport& rep) {
    nlohmann::json j = nlohmann::json::array();
    for (size_t c = 0; c < rep.components.size(); ++c) {
        const ComponentReport& cr = rep.components[c];
        nlohmann::json jc;
        jc["component"] = c;
        jc["patients"] = cr.member_ids;
        jc["t_C"] = rational_str(cr.t_c);
        jc["t_C_float"] = boost::rational_cast<double>(cr.t_c);
        nlohmann::json edges = nlohmann::json::array();
        for (auto [u, v] : cr.tree_edges) edges.push_back({u, v});
        jc["tree_edges"] = edges;
        jc["s_value"] = cr.s_value;
        jc["superspreader"] = cr.superspreader_id;
        jc["exact"] = cr.exact;
        j.push_back(jc);
    }
    return j.dump(2) + "\n";
}

std::string report_csv(const TransmissionReport& rep) {
    std::ostringstream os;
    os << "component,size,t_C,s_value,superspreader,exact\n";
    for (size_t c = 0; c < rep.components.size(); ++c) {
        const ComponentReport& cr = rep.components[c];
        os << c << "," << cr.member_ids.size() << "," << rational_str(cr.t_c) << ","
           << cr.s_value << "," << cr.superspreader_id << ","
           << (cr.exact ? "true" : "false") << "\n";
    }
    return os.str();
}

} // namespace sft
