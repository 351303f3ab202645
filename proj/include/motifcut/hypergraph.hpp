// Motif hypergraph: one weighted hyperedge per distinct instance vertex set,
// minimum cuts via MA orderings, and hyperedge strengths (exact by recursive
// min-cut peeling, or under-estimated by an iterative halving scheme).
#pragma once

#include <utility>
#include <vector>

#include "motifcut/graph.hpp"

namespace motifcut {

struct Hyperedge {
  std::vector<int> verts;             // sorted distinct graph vertices
  double w = 0.0;                     // sum of member instance weights
  std::vector<int> member_instances;  // indices into the source instance list
};

struct MotifHypergraph {
  int n = 0;
  std::vector<Hyperedge> hyperedges;
};

// Merge instances sharing a vertex set into one hyperedge whose weight is the
// sum of the current instance weights in g. Hyperedges come out sorted by
// vertex set.
MotifHypergraph build_motif_hypergraph(const Graph& g,
                                       const std::vector<MotifInstance>& instances);

// Minimum cut of the subhypergraph induced by `active` (only hyperedges fully
// inside `active` count; vertices outside `active` are reported on side 0).
// Deterministic MA-ordering contraction. When the induced subhypergraph is
// disconnected the value is 0 and side 1 holds one connected component.
std::pair<Cut, double> hypergraph_min_cut(const MotifHypergraph& h,
                                          const std::vector<int>& active);
std::pair<Cut, double> hypergraph_min_cut(const MotifHypergraph& h);

// Exhaustive reference: scans all 2^(|active|-1) - 1 splits (|active| <= 20)
// and returns the minimizer with the smallest canonical side-1 bitmask.
std::pair<Cut, double> hypergraph_min_cut_brute(const MotifHypergraph& h,
                                                const std::vector<int>& active);

struct StrengthTable {
  std::vector<double> kappa;        // per hyperedge; empty when not computed
  std::vector<double> kappa_prime;  // per hyperedge; empty when not computed
};

// Exact strength of every hyperedge: recursively cut the current region along
// a minimum cut, give every crossing hyperedge strength max(cut value,
// inherited), and descend into both sides with the inherited value raised to
// that level. Regions visited are appended to components_log when given.
StrengthTable exact_strengths(const MotifHypergraph& h, int exact_limit = 64,
                              std::vector<std::vector<int>>* components_log = nullptr);

// Strength under-estimates: exact values when n is within exact_limit (unless
// force_estimation), otherwise iterative halving — starting from each
// component's minimum cut c, repeatedly extract maximal pieces of
// connectivity >= 2 * level and stamp hyperedges cut away from them with the
// current level, doubling the level each round. Guarantees
// kappa' <= kappa < 2 * kappa' and checks sum(w / kappa') <= 4 r (n - 1)
// at runtime.
StrengthTable estimate_strengths(const MotifHypergraph& h, int exact_limit = 64,
                                 bool force_estimation = false,
                                 std::vector<std::vector<int>>* components_log = nullptr);

// Expand a per-hyperedge table to per-instance values.
std::vector<double> instance_strengths(const MotifHypergraph& h,
                                       const std::vector<double>& per_hyperedge,
                                       size_t instance_count);

}  // namespace motifcut
