// Pairwise edge connectivities of an undirected weighted graph: Dinic
// max-flow kernel, Gusfield flow-equivalent tree (n-1 max-flows), and the
// per-edge endpoint connectivity map.
#pragma once

#include <vector>

#include "motifcut/graph.hpp"

namespace motifcut {

// Maximum s-t flow = minimum s-t cut value. When side is given it receives
// the s-side indicator of a minimum cut (residual-reachable set).
double max_flow_min_cut(const Graph& g, int s, int t, std::vector<char>* side = nullptr);

struct GomoryHuTree {
  std::vector<int> parent;   // parent[0] = -1
  std::vector<double> flow;  // flow[i] = min cut value between i and parent[i]

  // Minimum edge weight on the tree path between u and v (0 when the graph
  // is disconnected between them).
  double min_cut(int u, int v) const;
};

// Gusfield's flow-equivalent tree: preserves every pairwise min cut value.
GomoryHuTree gomory_hu(const Graph& g);

// Connectivity k_e per edge of gm (endpoint min cut value), in edge order.
std::vector<double> edge_connectivities(const Graph& gm);

}  // namespace motifcut
