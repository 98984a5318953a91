#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "sft/graph.hpp"

using namespace sft;

namespace {

const std::string cli = SFT_CLI_PATH;

int run(const std::string& args, const std::string& out_file = "/dev/null") {
    std::string cmd = cli + " " + args + " > " + out_file + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

} // namespace

TEST_CASE("generate writes valid graphs and round-trips") {
    CHECK(run("generate --family gomega --omega 4 --out /tmp/cli_g4.g") == 0);
    Graph g = read_graph_file("/tmp/cli_g4.g");
    CHECK(g.num_vertices() == 10);

    CHECK(run("generate --family cycle --n 5 --out /tmp/cli_c5.g") == 0);
    Graph c5 = read_graph_file("/tmp/cli_c5.g");
    CHECK(c5.num_edges() == 5);

    // identical seeds give identical files
    CHECK(run("--seed 9 generate --family er --n 12 --p 0.4 --out /tmp/cli_a.g") == 0);
    CHECK(run("--seed 9 generate --family er --n 12 --p 0.4 --out /tmp/cli_b.g") == 0);
    CHECK(slurp("/tmp/cli_a.g") == slurp("/tmp/cli_b.g"));

    CHECK(run("generate --family bogus --n 5") == 2);
}

TEST_CASE("solve subcommand") {
    run("generate --family cycle --n 5 --out /tmp/cli_c5.g");
    CHECK(run("solve /tmp/cli_c5.g --method exact", "/tmp/cli_solve.json") == 0);
    std::string out = slurp("/tmp/cli_solve.json");
    CHECK(out.find("\"value\": 12") != std::string::npos);

    spit("/tmp/cli_tri.g", "3 3\n0 1\n1 2\n0 2\n");
    CHECK(run("solve /tmp/cli_tri.g --method ilp-emit --out /tmp/cli_tri.lp") == 0);
    std::string lp = slurp("/tmp/cli_tri.lp");
    CHECK(lp.find("Maximize") != std::string::npos);
    CHECK(lp.find("Binary") != std::string::npos);

    spit("/tmp/cli_disc.g", "4 2\n0 1\n2 3\n");
    CHECK(run("solve /tmp/cli_disc.g --method exact") == 3);
    CHECK(run("solve /tmp/cli_missing_file.g --method exact") == 2);
    CHECK(run("solve /tmp/cli_c5.g --method ilp-solve") == 4); // no solver configured

    // csv output
    CHECK(run("--format csv solve /tmp/cli_c5.g --method heuristic2",
              "/tmp/cli_solve.csv") == 0);
    CHECK(slurp("/tmp/cli_solve.csv").find("method,metric,value") == 0);
}

TEST_CASE("bounds subcommand") {
    run("generate --family path --n 6 --out /tmp/cli_p6.g");
    CHECK(run("bounds /tmp/cli_p6.g", "/tmp/cli_bounds.json") == 0);
    std::string out = slurp("/tmp/cli_bounds.json");
    CHECK(out.find("\"kind\": \"tree\"") != std::string::npos);
    CHECK(out.find("\"all_hold\": true") != std::string::npos);
}

TEST_CASE("bench subcommand emits stable csv") {
    spit("/tmp/cli_bench.json",
         R"({"metric":"s","methods":["exact","heuristic1","heuristic2"],)"
         R"("graphs":[{"family":"er","n":7,"p":0.5,"count":3},)"
         R"({"family":"grid","rows":2,"cols":3}]})");
    CHECK(run("--seed 4 bench /tmp/cli_bench.json --out /tmp/cli_bench.csv") == 0);
    std::string csv = slurp("/tmp/cli_bench.csv");
    CHECK(csv.find("graph_id,family,n,m,method,value,alpha,wall_ms,status") == 0);
    int rows = 0;
    for (char c : csv)
        if (c == '\n') ++rows;
    CHECK(rows == 1 + 4 * 3); // header + (3 ER + 1 grid) x 3 methods

    // refused instances still produce rows with empty value and alpha
    spit("/tmp/cli_bench2.json",
         R"({"metric":"s","methods":["exact"],)"
         R"("graphs":[{"family":"complete","n":12}]})");
    CHECK(run("bench /tmp/cli_bench2.json --cap 100 --out /tmp/cli_bench2.csv") == 0);
    CHECK(slurp("/tmp/cli_bench2.csv").find(",refused") != std::string::npos);
}

TEST_CASE("epi subcommand") {
    std::string base(64, 'A');
    std::ostringstream f;
    f << ">hub|0\n" << base << "\n";
    for (int i = 1; i <= 4; ++i) {
        std::string s = base;
        s[2 * i] = 'G';
        f << ">p" << i << "|0\n" << s << "\n";
    }
    spit("/tmp/cli_epi.fa", f.str());
    CHECK(run("epi /tmp/cli_epi.fa --threshold 1/32 --json-out /tmp/cli_epi.json "
              "--csv-out /tmp/cli_epi.csv") == 0);
    std::string json = slurp("/tmp/cli_epi.json");
    CHECK(json.find("\"superspreader\": \"hub\"") != std::string::npos);
    CHECK(slurp("/tmp/cli_epi.csv").find("component,size,t_C") == 0);

    spit("/tmp/cli_bad.fa", ">a|0\nACGT\n>b|0\nAC\n");
    CHECK(run("epi /tmp/cli_bad.fa") == 2);
}
