// Drives the installed command-line binary end to end. The build passes the
// binary's path in MOTIFCUT_CLI_PATH; files live under a scratch directory.
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "motifcut/graph.hpp"

using namespace motifcut;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
  fs::path dir = fs::temp_directory_path() / "motifcut_cli_tests";
  fs::create_directories(dir);
  return dir;
}

std::string p(const std::string& name) { return (scratch() / name).string(); }

int run_cli(const std::string& args) {
  std::string cmd = std::string(MOTIFCUT_CLI_PATH) + " " + args;
  int rc = std::system(cmd.c_str());
  REQUIRE(rc != -1);
  REQUIRE(WIFEXITED(rc));
  return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cli generates reference graphs") {
  CHECK(run_cli("gen clique -n 4 -o " + p("k4.graph")) == 0);
  CHECK(load_graph(p("k4.graph")).edge_count() == 6);

  CHECK(run_cli("gen delta-minus -n 10 -o " + p("dm.graph")) == 0);
  Graph dm = load_graph(p("dm.graph"));
  CHECK(dm.edge_count() == 42);
  CHECK(!dm.has_edge(0, 1));

  CHECK(run_cli("gen gnp -n 12 -p 0.5 --seed 9 -o " + p("a.graph")) == 0);
  CHECK(run_cli("gen gnp -n 12 -p 0.5 --seed 9 -o " + p("b.graph")) == 0);
  CHECK(slurp(p("a.graph")) == slurp(p("b.graph")));
  CHECK(run_cli("gen gnp -n 12 -p 0.5 --seed 10 -o " + p("c.graph")) == 0);
  CHECK(slurp(p("a.graph")) != slurp(p("c.graph")));

  CHECK(run_cli("gen clique-minus-edge -n 8 -o " + p("cme.graph") + " --hat-out " +
                p("cme_hat.graph")) == 0);
  CHECK(load_graph(p("cme.graph")).edge_count() == 27);
  CHECK(load_graph(p("cme_hat.graph")).edge_count() == 7);
  // the companion file is not optional for this generator
  CHECK(run_cli("gen clique-minus-edge -n 8 -o " + p("x.graph") + " 2>/dev/null") == 2);
}

TEST_CASE("cli sparsify round trip with stats") {
  REQUIRE(run_cli("gen gnp -n 12 -p 0.6 --seed 4 -o " + p("in.graph")) == 0);
  CHECK(run_cli("sparsify -i " + p("in.graph") + " -o " + p("out.graph") +
                " -e 0.3 -m triangle,path2 --threshold-scale 1e6 --rounds 4 --stats " +
                p("stats.json")) == 0);
  Graph in = load_graph(p("in.graph"));
  Graph out = load_graph(p("out.graph"));
  for (const Edge& e : out.edges()) CHECK(in.edge_index(e.u, e.v) >= 0);

  nlohmann::json st = nlohmann::json::parse(slurp(p("stats.json")));
  CHECK(st["input_edges"].get<int>() == static_cast<int>(in.edge_count()));
  CHECK(st["output_edges"].get<int>() == static_cast<int>(out.edge_count()));
  CHECK(st["rounds_run"].get<int>() >= 1);
  CHECK(st["rounds"].is_array());
  CHECK(st["motifs"].size() == 2);

  // identical invocations write identical bytes
  CHECK(run_cli("sparsify -i " + p("in.graph") + " -o " + p("out2.graph") +
                " -e 0.3 -m triangle,path2 --threshold-scale 1e6 --rounds 4") == 0);
  CHECK(slurp(p("out.graph")) == slurp(p("out2.graph")));

  CHECK(run_cli("sparsify -i " + p("in.graph") + " -o " + p("out3.graph") +
                " -e 0.3 -m triangle --engine connectivity --rounds 2") == 0);
  CHECK(run_cli("sparsify -i " + p("in.graph") + " -o " + p("x.graph") +
                " -e 0.3 --engine bogus 2>/dev/null") == 2);
  CHECK(run_cli("sparsify -i " + p("in.graph") + " -o " + p("x.graph") +
                " -e 1.5 2>/dev/null") == 2);
}

TEST_CASE("cli verify reports errors and honors the epsilon gate") {
  REQUIRE(run_cli("gen clique -n 4 -o " + p("k4.graph")) == 0);
  CHECK(run_cli("verify -i " + p("k4.graph") + " -s " + p("k4.graph") + " -e 0.5 --report " +
                p("rep.json")) == 0);
  nlohmann::json rep = nlohmann::json::parse(slurp(p("rep.json")));
  CHECK(rep["max_relative_error"].get<double>() == 0.0);
  CHECK(rep["mode"] == "exhaustive");
  CHECK(rep["motif"] == "triangle");

  // perturb one edge; a tight epsilon now fails, a loose one passes
  Graph k4 = load_graph(p("k4.graph"));
  std::vector<Edge> edges = k4.edges();
  edges[0].w = 1.5;
  save_graph(Graph(4, GraphKind::undirected, edges), p("k4_mod.graph"));
  CHECK(run_cli("verify -i " + p("k4.graph") + " -s " + p("k4_mod.graph") +
                " -e 1e-6 --report " + p("rep2.json")) == 1);
  CHECK(run_cli("verify -i " + p("k4.graph") + " -s " + p("k4_mod.graph") +
                " -e 0.9 --report " + p("rep3.json")) == 0);
  // without an epsilon the command only measures
  CHECK(run_cli("verify -i " + p("k4.graph") + " -s " + p("k4_mod.graph") + " --report " +
                p("rep4.json")) == 0);

  // beyond the exhaustive limit: explicit exhaustive refuses, auto samples
  REQUIRE(run_cli("gen gnp -n 25 -p 0.4 --seed 2 -o " + p("big.graph")) == 0);
  CHECK(run_cli("verify -i " + p("big.graph") + " -s " + p("big.graph") +
                " --mode exhaustive --report " + p("rep5.json") + " 2>/dev/null") == 3);
  CHECK(run_cli("verify -i " + p("big.graph") + " -s " + p("big.graph") +
                " --samples 50 --report " + p("rep6.json")) == 0);
  nlohmann::json rep6 = nlohmann::json::parse(slurp(p("rep6.json")));
  CHECK(rep6["mode"] == "sampled");
}

TEST_CASE("cli weights prints per-edge motif weights") {
  REQUIRE(run_cli("gen clique -n 4 -o " + p("k4.graph")) == 0);
  CHECK(run_cli("weights -i " + p("k4.graph") + " -m triangle -o " + p("w.txt")) == 0);
  std::istringstream in(slurp(p("w.txt")));
  int lines = 0, u, v;
  double w;
  while (in >> u >> v >> w) {
    CHECK(w == 2.0);
    ++lines;
  }
  CHECK(lines == 6);
  CHECK(run_cli("weights -i " + p("k4.graph") + " --method naive -o " + p("wn.txt")) == 0);
  CHECK(slurp(p("wn.txt")) == slurp(p("w.txt")));
  CHECK(run_cli("weights -i " + p("k4.graph") + " -m nonsense 2>/dev/null") == 2);
}

TEST_CASE("cli invariants and bench run clean") {
  REQUIRE(run_cli("gen clique -n 4 -o " + p("k4.graph")) == 0);
  CHECK(run_cli("invariants -i " + p("k4.graph") + " -m triangle --report " +
                p("inv.json")) == 0);
  nlohmann::json rep = nlohmann::json::parse(slurp(p("inv.json")));
  CHECK(rep["mode"] == "invariants");
  REQUIRE(rep["invariants"].is_array());
  CHECK(!rep["invariants"].empty());
  for (const auto& r : rep["invariants"]) CHECK(r["pass"].get<bool>());

  CHECK(run_cli("bench -n 12 -p 0.5 -m triangle > " + p("bench.json")) == 0);
  nlohmann::json b = nlohmann::json::parse(slurp(p("bench.json")));
  CHECK(b["n"].get<int>() == 12);
  CHECK(b["fast_ms"].is_number());
}

TEST_CASE("cli maps failures onto the documented exit codes") {
  CHECK(run_cli("--help >/dev/null") == 0);
  CHECK(run_cli("sparsify 2>/dev/null") == 2);          // missing required options
  CHECK(run_cli("frobnicate 2>/dev/null") == 2);        // unknown subcommand
  CHECK(run_cli("gen clique -n 4 -o /nonexistent-dir/x.graph 2>/dev/null") == 2);
  CHECK(run_cli("weights -i " + p("missing.graph") + " 2>/dev/null") == 2);
  CHECK(run_cli("--threads 4 gen clique -n 4 -o " + p("t.graph")) == 0);
}
