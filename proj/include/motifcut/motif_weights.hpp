// Motif weights w_M(e): the enumeration-free tripartite triangle reduction
// (dense weighted adjacency blocks between three tuple parts, triangle mass
// accumulated with two matrix products) and the naive enumeration reference.
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "motifcut/graph.hpp"

namespace motifcut {

struct SigmaGraph {
  int n = 0;
  int r = 0;
  GraphKind kind = GraphKind::undirected;
  int k[3] = {0, 0, 0};          // tuple length of each part (k1 >= k2 >= k3)
  long long size[3] = {0, 0, 0}; // rows per part = n^k (index = base-n digits)
  // Motif edges by placement: local vertex positions within one part, or
  // (position in part i, position in part j) across parts.
  std::vector<std::pair<int, int>> within[3];
  std::vector<std::pair<int, int>> cross12, cross13, cross23;
  Eigen::VectorXd vweight[3];    // product over within-part edge images; 0 if
                                 // the tuple repeats a vertex or an image is
                                 // missing
  Eigen::MatrixXd W12, W13, W23; // cross-part products; 0 if tuples overlap or
                                 // an image is missing; 1 for disjoint tuples
                                 // with no cross edges
};

// Build the tripartite reduction for an r >= 3 motif. Parts are the motif
// vertex ranges [0,k1), [k1,k1+k2), [k1+k2,r) in the identity ordering, with
// k_i in {floor(r/3), ceil(r/3)}. budget_entries caps the combined block
// sizes.
SigmaGraph build_sigma_graph(const Graph& g, const Motif& m,
                             long long budget_entries = 100'000'000);

// Per-edge motif weight w_M(e) = sum of weights of instances containing e,
// indexed by g's edge order. Computed without enumeration for r >= 3 via the
// triangle mass of the tripartite reduction; r = 2 falls back to enumeration.
std::vector<double> motif_weights_fast(const Graph& g, const Motif& m,
                                       long long budget_entries = 100'000'000);

// The accumulation step of the reduction on an already-built (possibly
// modified) sigma graph: triangle mass gathered per motif edge image,
// divided by the automorphism count.
std::vector<double> motif_weights_from_sigma(const Graph& g, const Motif& m,
                                             const SigmaGraph& s);

// Enumeration reference for w_M(e).
std::vector<double> motif_weights_naive(const Graph& g, const Motif& m,
                                        long long instance_limit = 10'000'000);

// Total triangle weight of the reduction; equals (number of automorphisms)
// times the total instance weight.
double sigma_triangle_total(const SigmaGraph& s);

// The motif-weighted graph G_M: undirected, weight w_M per edge (antiparallel
// directed edges merged by summing), zero-weight edges dropped.
Graph motif_weighted_graph(const Graph& g, const std::vector<double>& wm);

}  // namespace motifcut
