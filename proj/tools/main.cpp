// Command-line front end: graph generation, sparsification, per-edge motif
// weights, cut-error verification, invariant checks, and a small benchmark.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
// limit exceeded, 4 internal error.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "motifcut/graph.hpp"
#include "motifcut/hypergraph.hpp"
#include "motifcut/motif_enum.hpp"
#include "motifcut/motif_weights.hpp"
#include "motifcut/sparsify.hpp"
#include "motifcut/verify.hpp"

namespace {

using namespace motifcut;

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw usage_error("cannot write " + path);
  out << text;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty())
    std::cout << text << "\n";
  else
    write_text(path, text + "\n");
}

Engine parse_engine(const std::string& name) {
  if (name == "strength") return Engine::strength;
  if (name == "connectivity") return Engine::connectivity;
  throw usage_error("unknown engine '" + name + "' (strength|connectivity)");
}

nlohmann::json stats_json(const Graph& in, const Graph& out, const std::vector<std::string>& specs,
                          const SparsifyStats& st) {
  nlohmann::json j;
  j["input_edges"] = in.edge_count();
  j["output_edges"] = out.edge_count();
  j["motifs"] = specs;
  j["eps_prime"] = st.eps_prime;
  j["sample_probability"] = st.sample_probability;
  j["rounds_planned"] = st.rounds_planned;
  j["rounds_run"] = st.rounds_run;
  j["early_exit"] = st.early_exit;
  nlohmann::json rounds = nlohmann::json::array();
  for (const RoundStats& r : st.rounds) {
    rounds.push_back({{"round", r.round},
                      {"edges_before", r.edges_before},
                      {"edges_after", r.edges_after},
                      {"critical", r.critical},
                      {"critical_per_motif", r.critical_per_motif},
                      {"identity", r.identity}});
  }
  j["rounds"] = rounds;
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"motif-cut sparsifiers of weighted graphs"};
  app.require_subcommand(1);
  int threads = 0;  // 0 = no cap; current kernels are single-threaded
  app.add_option("--threads", threads, "cap on worker threads")->check(CLI::NonNegativeNumber);

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "generate a graph file");
  std::string gen_kind, gen_out, gen_hat_out;
  int gen_n = 0;
  double gen_p = 0.5;
  uint64_t gen_seed = 0;
  gen->add_option("kind", gen_kind, "clique|gnp|delta-minus|clique-minus-edge")->required();
  gen->add_option("-n,--n", gen_n, "vertex count")->required();
  gen->add_option("-p,--p", gen_p, "edge probability (gnp)");
  gen->add_option("--seed", gen_seed, "random seed (gnp)");
  gen->add_option("-o,--out", gen_out, "output graph file")->required();
  gen->add_option("--hat-out", gen_hat_out, "companion sparsifier file (clique-minus-edge)");

  // ---- sparsify ----
  auto* sp = app.add_subcommand("sparsify", "compute a motif cut sparsifier");
  std::string sp_in, sp_out, sp_stats, sp_engine = "strength";
  std::string sp_motifs = "triangle";
  SparsifyConfig cfg;
  sp->add_option("-i,--input", sp_in, "input graph file")->required();
  sp->add_option("-o,--output", sp_out, "output graph file")->required();
  sp->add_option("-m,--motifs", sp_motifs, "comma-separated motif specs");
  sp->add_option("-e,--epsilon", cfg.epsilon, "target accuracy in (0,1)")->required();
  sp->add_option("--engine", sp_engine, "strength|connectivity");
  sp->add_option("--seed", cfg.seed, "sampling seed");
  sp->add_option("--c1", cfg.c1, "success-exponent constant");
  sp->add_option("--d", cfg.d, "criticality threshold constant");
  sp->add_option("--d1", cfg.d1, "fast-variant constant (0 = c1 + 1)");
  sp->add_option("--threshold-scale", cfg.threshold_scale, "criticality threshold multiplier (>= 1)");
  sp->add_option("--rounds", cfg.rounds_override, "round-count override (0 = schedule)");
  sp->add_option("--exact-strength-limit", cfg.exact_strength_limit,
                 "max n for exact strengths");
  sp->add_flag("--force-estimation", cfg.force_estimation,
               "use estimated strengths even when exact ones are affordable");
  sp->add_option("--instance-limit", cfg.instance_limit, "motif instance cap");
  sp->add_option("--budget-entries", cfg.budget_entries, "tuple matrix entry cap");
  sp->add_option("--stats", sp_stats, "write run statistics JSON here");

  // ---- verify ----
  auto* ver = app.add_subcommand("verify", "measure motif cut error between two graphs");
  std::string v_in, v_hat, v_motifs = "triangle", v_mode = "auto", v_report;
  long long v_samples = 1000;
  uint64_t v_seed = 0;
  double v_eps = -1.0;
  ver->add_option("-i,--input", v_in, "reference graph file")->required();
  ver->add_option("-s,--sparsifier", v_hat, "candidate sparsifier file")->required();
  ver->add_option("-m,--motifs", v_motifs, "comma-separated motif specs");
  ver->add_option("--mode", v_mode, "auto|exhaustive|sampled");
  ver->add_option("--samples", v_samples, "random cuts in sampled mode");
  ver->add_option("--seed", v_seed, "cut sampling seed");
  ver->add_option("-e,--epsilon", v_eps, "fail (exit 1) when max error exceeds this");
  ver->add_option("--report", v_report, "write the JSON report here instead of stdout");

  // ---- weights ----
  auto* wt = app.add_subcommand("weights", "per-edge motif weights");
  std::string w_in, w_motif = "triangle", w_method = "fast", w_out;
  wt->add_option("-i,--input", w_in, "input graph file")->required();
  wt->add_option("-m,--motif", w_motif, "motif spec");
  wt->add_option("--method", w_method, "fast|naive");
  wt->add_option("-o,--out", w_out, "output file (default stdout)");

  // ---- invariants ----
  auto* inv = app.add_subcommand("invariants", "run the exact-pipeline invariant suite");
  std::string iv_in, iv_motif = "triangle", iv_report;
  inv->add_option("-i,--input", iv_in, "input graph file")->required();
  inv->add_option("-m,--motif", iv_motif, "motif spec");
  inv->add_option("--report", iv_report, "write the JSON report here instead of stdout");

  // ---- bench ----
  auto* be = app.add_subcommand("bench", "time the weighting kernels on G(n,p)");
  int b_n = 48;
  double b_p = 0.3;
  uint64_t b_seed = 0;
  std::string b_motif = "triangle";
  be->add_option("-n,--n", b_n, "vertex count");
  be->add_option("-p,--p", b_p, "edge probability");
  be->add_option("--seed", b_seed, "generation seed");
  be->add_option("-m,--motif", b_motif, "motif spec");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version land here with exit code 0; real parse
    // errors map onto the usage-error exit code
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (gen->parsed()) {
    if (gen_kind == "clique") {
      save_graph(make_clique(gen_n), gen_out);
    } else if (gen_kind == "gnp") {
      if (gen_p < 0.0 || gen_p > 1.0) throw usage_error("gnp needs p in [0,1]");
      save_graph(make_gnp(gen_n, gen_p, gen_seed), gen_out);
    } else if (gen_kind == "delta-minus") {
      save_graph(build_delta_minus(gen_n), gen_out);
    } else if (gen_kind == "clique-minus-edge") {
      if (gen_hat_out.empty())
        throw usage_error("clique-minus-edge also writes a sparsifier: pass --hat-out");
      CliqueMinusEdgeExample ex = clique_minus_edge_example(gen_n);
      save_graph(ex.g, gen_out);
      save_graph(ex.g_hat, gen_hat_out);
    } else {
      throw usage_error("unknown generator kind '" + gen_kind + "'");
    }
    return 0;
  }

  if (sp->parsed()) {
    cfg.engine = parse_engine(sp_engine);
    Graph g = load_graph(sp_in);
    std::vector<std::string> specs;
    {
      std::string item;
      std::istringstream in(sp_motifs);
      while (std::getline(in, item, ','))
        if (!item.empty()) specs.push_back(item);
    }
    std::vector<Motif> motifs = parse_motif_list(sp_motifs);
    SparsifyStats st;
    Graph out = motif_sparsification(g, motifs, cfg, &st);
    save_graph(out, sp_out);
    if (!sp_stats.empty()) write_text(sp_stats, stats_json(g, out, specs, st).dump(2) + "\n");
    return 0;
  }

  if (ver->parsed()) {
    Graph g = load_graph(v_in);
    Graph gh = load_graph(v_hat);
    std::vector<std::string> specs;
    {
      std::string item;
      std::istringstream in(v_motifs);
      while (std::getline(in, item, ','))
        if (!item.empty()) specs.push_back(item);
    }
    std::vector<Motif> motifs = parse_motif_list(v_motifs);
    bool sampled;
    if (v_mode == "auto") {
      sampled = g.n() > 20;
    } else if (v_mode == "exhaustive") {
      if (g.n() > 20)
        throw resource_limit_error("exhaustive mode needs n <= 20; use --mode sampled");
      sampled = false;
    } else if (v_mode == "sampled") {
      sampled = true;
    } else {
      throw usage_error("unknown mode '" + v_mode + "' (auto|exhaustive|sampled)");
    }
    VerificationReport worst;
    std::string worst_spec;
    for (size_t i = 0; i < motifs.size(); ++i) {
      VerificationReport r = sampled ? sampled_cut_error(g, gh, motifs[i], v_samples, v_seed)
                                     : max_cut_error(g, gh, motifs[i]);
      if (i == 0 || r.max_relative_error > worst.max_relative_error) {
        worst = r;
        worst_spec = specs[i];
      }
    }
    nlohmann::json j = nlohmann::json::parse(worst.to_json());
    j["motif"] = worst_spec;
    emit(j.dump(2), v_report);
    if (v_eps >= 0.0 && !(worst.max_relative_error <= v_eps)) return 1;
    return 0;
  }

  if (wt->parsed()) {
    Graph g = load_graph(w_in);
    Motif m = parse_motif(w_motif);
    std::vector<double> wm;
    if (w_method == "fast")
      wm = motif_weights_fast(g, m);
    else if (w_method == "naive")
      wm = motif_weights_naive(g, m);
    else
      throw usage_error("unknown method '" + w_method + "' (fast|naive)");
    std::string text;
    char line[128];
    for (int e = 0; e < g.edge_count(); ++e) {
      std::snprintf(line, sizeof line, "%d %d %.17g\n", g.edges()[e].u, g.edges()[e].v, wm[e]);
      text += line;
    }
    if (w_out.empty())
      std::cout << text;
    else
      write_text(w_out, text);
    return 0;
  }

  if (inv->parsed()) {
    Graph g = load_graph(iv_in);
    Motif m = parse_motif(iv_motif);
    VerificationReport rep = check_invariants(g, m);
    emit(rep.to_json(), iv_report);
    for (const InvariantResult& r : rep.invariants)
      if (!r.pass) return 1;
    return 0;
  }

  if (be->parsed()) {
    Graph g = make_gnp(b_n, b_p, b_seed);
    Motif m = parse_motif(b_motif);
    auto ms_since = [](std::chrono::steady_clock::time_point t0) {
      return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
    };
    nlohmann::json j;
    j["n"] = g.n();
    j["p"] = b_p;
    j["edges"] = g.edge_count();
    j["motif"] = b_motif;
    auto t0 = std::chrono::steady_clock::now();
    std::vector<double> wf = motif_weights_fast(g, m);
    j["fast_ms"] = ms_since(t0);
    try {
      t0 = std::chrono::steady_clock::now();
      std::vector<double> wn = motif_weights_naive(g, m);
      j["naive_ms"] = ms_since(t0);
      double dev = 0.0;
      for (size_t i = 0; i < wf.size(); ++i) dev = std::max(dev, std::abs(wf[i] - wn[i]));
      j["max_abs_difference"] = dev;
    } catch (const resource_limit_error&) {
      j["naive_ms"] = "skipped (instance limit)";
    }
    t0 = std::chrono::steady_clock::now();
    Graph gm = motif_weighted_graph(g, wf);
    std::vector<double> conn = motif_edge_connectivities(g, wf);
    (void)conn;
    j["connectivities_ms"] = ms_since(t0);
    j["motif_graph_edges"] = gm.edge_count();
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const resource_limit_error& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
