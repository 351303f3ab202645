// The two sparsification engines: strength-based importance sampling (per
// round: hyperedge strengths -> per-edge importance -> keep critical edges,
// sample the rest) and the enumeration-free connectivity engine (motif
// weighted graph -> edge connectivities -> layered importance nu-hat), plus
// the round scheduler that iterates either engine.
#pragma once

#include <cstdint>
#include <vector>

#include "motifcut/graph.hpp"
#include "motifcut/motif_enum.hpp"

namespace motifcut {

enum class Engine { strength, connectivity };

struct SparsifyConfig {
  double epsilon = 0.1;         // target cut accuracy, in (0,1)
  double c1 = 10.0;             // success-exponent constant
  double d = 1.0 / 64.0;        // critical-threshold constant
  double d1 = 0.0;              // fast-variant constant; 0 = derive c1 + 1
  double threshold_scale = 1.0; // >= 1; raises criticality thresholds so
                                // desk-scale runs exercise the sampling path
  uint64_t seed = 0;
  Engine engine = Engine::strength;
  int rounds_override = 0;      // 0 = use the schedule formula
  int exact_strength_limit = 64;
  bool force_estimation = false;
  long long instance_limit = 10'000'000;
  long long budget_entries = 100'000'000;

  double effective_d1() const { return d1 > 0.0 ? d1 : c1 + 1.0; }
  void validate() const;  // throws usage_error on out-of-range fields
};

struct ImportanceTable {
  std::vector<double> importance;  // per edge, in edge order of the graph
  double threshold = 0.0;          // critical when importance >= threshold
                                   // (threshold_scale already applied)
};

struct RoundStats {
  int round = 0;
  int edges_before = 0;
  int edges_after = 0;
  int critical = 0;                     // size of the union of critical sets
  std::vector<int> critical_per_motif;  // |E_{M_i,+}|
  bool identity = false;                // every edge critical: round is a no-op
};

struct SparsifyStats {
  double eps_prime = 0.0;
  double sample_probability = 0.0;
  int rounds_planned = 0;
  int rounds_run = 0;
  bool early_exit = false;
  std::vector<RoundStats> rounds;
};

// Round accuracy eps' = eps / (5 c1 r*_max log2 n) and the round count
// ceil(2 c1 r*_max log2 n).
double eps_prime_for(int n, const std::vector<Motif>& motifs, const SparsifyConfig& cfg);
int planned_rounds(int n, const std::vector<Motif>& motifs, const SparsifyConfig& cfg);

// Non-critical edges survive one round with probability 2^{-1/(2 r*_max)}.
double sample_probability(const std::vector<Motif>& motifs);

// Strength-engine importance: eta(e) = sum over instances through e of
// w(I)/kappa'(I); threshold d eps'^2 / (r* (log2 n + r)) scaled.
ImportanceTable strength_importance(const Graph& g, const Motif& m,
                                    const std::vector<MotifInstance>& instances,
                                    double eps_prime, const SparsifyConfig& cfg);

// Connectivity-engine importance: nu-hat(e) from the layered motif weights
// (layer j keeps edges with connectivity >= 2^j * k_min; the j-th shell
// contributes (w_{M,j} - w_{M,j+1}) r* / (2^j k_min)); threshold
// Upsilon' = eps'^2 / (256 (d1 + r + 2 r*) (r*)^2 r log2 n ln n) scaled.
// conn holds k_e per edge of g (0 for edges in no instance).
ImportanceTable layered_importance(const Graph& g, const Motif& m,
                                   const std::vector<double>& conn, double eps_prime,
                                   const SparsifyConfig& cfg);

// Connectivities k_e of g's edges measured in the motif weighted graph built
// from wm = motif weights of (g, m); edges absent from that graph get 0.
std::vector<double> motif_edge_connectivities(const Graph& g, const std::vector<double>& wm);

// One strength-engine round: keep critical edges, keep the rest independently
// with probability p reweighted 1/p. Draws are a pure function of
// (seed, round, u, v).
Graph partial_sparsification(const Graph& g, double eps_prime,
                             const std::vector<Motif>& motifs, const SparsifyConfig& cfg,
                             int round = 0, RoundStats* stats = nullptr);

// Same, with caller-maintained instance lists (one per motif; all instance
// edges must exist in g; weights are recomputed from g).
Graph partial_sparsification_maintained(const Graph& g, double eps_prime,
                                        const std::vector<Motif>& motifs,
                                        const std::vector<std::vector<MotifInstance>>& instances,
                                        const SparsifyConfig& cfg, int round = 0,
                                        RoundStats* stats = nullptr);

// One connectivity-engine round: rescale weights to min 1, mark edges with
// nu-hat above the scaled threshold critical, sample the rest, rescale back.
Graph fast_partial_sparsification(const Graph& g, double eps_prime,
                                  const std::vector<Motif>& motifs, const SparsifyConfig& cfg,
                                  int round = 0, RoundStats* stats = nullptr);

// The full schedule: run the configured engine for the planned number of
// rounds (or rounds_override), feeding each output to the next round,
// stopping early at a fixed point (all edges critical, or no edges left).
// The strength engine maintains instance lists across rounds (instances
// losing an edge are discarded; weights recomputed each round).
Graph motif_sparsification(const Graph& g, const std::vector<Motif>& motifs,
                           const SparsifyConfig& cfg, SparsifyStats* stats = nullptr);

}  // namespace motifcut
