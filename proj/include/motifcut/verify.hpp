// Brute-force oracles and measurement: exhaustive/sampled motif cut error
// between a graph and its sparsifier, exact instance connectivities, induced
// instance enumeration, the lower-bound constructions, and the invariant
// suite run by the `invariants` command.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "motifcut/graph.hpp"
#include "motifcut/motif_enum.hpp"

namespace motifcut {

struct InvariantResult {
  std::string name;
  bool pass = true;
  // Margin left before the invariant's tolerance is violated; negative when
  // the check fails. Exact-match checks report tolerance minus deviation.
  double slack = 0.0;
};

struct VerificationReport {
  double max_relative_error = 0.0;  // +infinity when a zero cut gained mass
  Cut argmax_cut;
  long long cuts_checked = 0;
  std::string mode;  // "exhaustive" | "sampled" | "invariants"
  std::vector<InvariantResult> invariants;

  std::string to_json() const;
};

// Maximum over all 2^(n-1)-1 proper cuts of the relative motif-cut-value
// error |Val_hat - Val| / Val; a cut with Val = 0 and Val_hat > 0 scores
// infinity. Requires matching vertex counts and n <= 20.
VerificationReport max_cut_error(const Graph& g, const Graph& g_hat, const Motif& m);

// Error over the n singleton cuts plus `samples` seeded random cuts.
VerificationReport sampled_cut_error(const Graph& g, const Graph& g_hat, const Motif& m,
                                     long long samples, uint64_t seed);

// Exact k_I: minimum motif cut value among cuts the instance crosses
// (exhaustive scan, n <= 16). The batch form shares one scan across the
// whole instance list.
double instance_connectivity(const Graph& g, const Motif& m, const MotifInstance& inst);
std::vector<double> instance_connectivities(const Graph& g,
                                            const std::vector<MotifInstance>& instances);

// Instances whose vertex set induces exactly the instance's edges.
std::vector<MotifInstance> enumerate_induced_instances(const Graph& g, const Motif& m,
                                                       long long instance_limit = 10'000'000);

// Exhaustive cut error measured on induced instances.
VerificationReport max_induced_cut_error(const Graph& g, const Graph& g_hat, const Motif& m);

// Unit clique on n >= 6 vertices minus the triangle {0,1},{1,2},{0,2}.
Graph build_delta_minus(int n);

struct CliqueMinusEdgeExample {
  Graph g;      // unit clique minus the edge {0,1}
  Graph g_hat;  // {0,1} at weight n^2 plus 0-x edges at weight n^-2
  VerificationReport report;  // induced 2-path cut error (n <= 20)
};
CliqueMinusEdgeExample clique_minus_edge_example(int n);

// Full exact-pipeline invariant suite (n <= 14): hypergraph cut transfer,
// strength definition oracle and mass bounds, strength-estimate ordering,
// decomposition laminarity, motif-weight oracle equivalence and triangle
// mass, cut and importance sandwiches, critical-edge preservation and
// counting, sampling subgraph property, determinism. Checks whose own size
// limits exclude the input are omitted from the report.
VerificationReport check_invariants(const Graph& g, const Motif& m);

}  // namespace motifcut
