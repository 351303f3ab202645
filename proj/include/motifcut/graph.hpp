// Graph, Motif, MotifInstance and Cut value types plus file I/O.
//
// Graphs are immutable after construction: vertices are 0..n-1, weights are
// strictly positive, no self-loops, no duplicate edges. Undirected graphs
// store each edge once with u < v. All operations here are pure.
#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "motifcut/common.hpp"

namespace motifcut {

enum class GraphKind { directed, undirected };

struct Edge {
  int u = 0;
  int v = 0;
  double w = 1.0;
};

class Graph {
 public:
  Graph() = default;
  // Validates invariants, canonicalizes (undirected endpoints ordered u < v,
  // edges sorted by (u, v)) and builds the lookup index.
  Graph(int n, GraphKind kind, std::vector<Edge> edges);

  int n() const { return n_; }
  GraphKind kind() const { return kind_; }
  bool directed() const { return kind_ == GraphKind::directed; }
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Index of edge (u, v) in edges(), or -1. For undirected graphs the
  // endpoint order does not matter.
  int edge_index(int u, int v) const;
  bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
  // Weight of edge (u, v); throws usage_error if absent.
  double weight(int u, int v) const;

  double min_weight() const;
  double max_weight() const;

 private:
  int n_ = 0;
  GraphKind kind_ = GraphKind::undirected;
  std::vector<Edge> edges_;
  std::unordered_map<uint64_t, int> index_;
};

// Text edge-list format: line 1 = vertex count, line 2 = "d" or "u",
// remaining lines = "u v w"; '#'-prefixed lines are comments.
Graph load_graph(const std::string& path);
Graph parse_graph(const std::string& text, const std::string& origin = "<string>");
std::string graph_to_string(const Graph& g);  // weights printed with %.17g
void save_graph(const Graph& g, const std::string& path);

// Bidirected encoding: each undirected edge {u,v} of weight w becomes
// directed (u,v) and (v,u) of weight sqrt(w), so bidirected motif images
// keep the original instance weights.
Graph encode_undirected(const Graph& g);

struct Motif {
  int r = 0;       // vertex count
  int r_star = 0;  // edge count
  GraphKind kind = GraphKind::undirected;
  std::vector<std::pair<int, int>> edges;  // over vertices 0..r-1
};

// Validates r >= 2, r_star >= 1, weak connectivity, no self-loops/dups.
Motif make_motif(int r, GraphKind kind, std::vector<std::pair<int, int>> edges);

struct MotifInstance {
  std::vector<int> vertex_map;                  // image of motif vertex i
  std::vector<std::pair<int, int>> edge_set;    // mapped graph edges
  double weight = 0.0;                          // product of mapped edge weights
};

// Product of current edge weights of inst.edge_set; throws usage_error if an
// edge no longer exists (stale instance).
double instance_weight(const Graph& g, const MotifInstance& inst);

// A proper cut: side[v] == 1 iff v belongs to S, with {} != S != V.
struct Cut {
  std::vector<uint8_t> side;
  std::vector<int> members() const {
    std::vector<int> s;
    for (int v = 0; v < static_cast<int>(side.size()); ++v)
      if (side[v]) s.push_back(v);
    return s;
  }
};

bool instance_crosses(const MotifInstance& inst, const Cut& cut);

// Total weight of instances with at least one vertex on each side.
double motif_cut_value(const std::vector<MotifInstance>& instances, const Cut& cut);

// All 2^(n-1) - 1 proper cuts, canonicalized by vertex 0 in S.
// Throws resource_limit_error when n exceeds the limit.
std::vector<Cut> enumerate_cuts(int n, int limit = 20);

// Streaming variant of enumerate_cuts reusing one Cut buffer.
template <typename Fn>
void for_each_cut(int n, Fn&& fn, int limit = 20) {
  if (n < 2) return;
  if (n > limit) throw resource_limit_error("cut enumeration limit exceeded: n=" + std::to_string(n));
  Cut cut;
  cut.side.assign(n, 0);
  cut.side[0] = 1;
  const uint64_t m = 1ull << (n - 1);
  for (uint64_t mask = 0; mask + 1 < m; ++mask) {
    for (int v = 1; v < n; ++v) cut.side[v] = (mask >> (v - 1)) & 1u;
    fn(cut);
  }
}

// Simple generators shared by tests and the CLI.
Graph make_clique(int n, double w = 1.0);
// Erdos-Renyi G(n, p) with unit weights, deterministic in the seed.
Graph make_gnp(int n, double p, uint64_t seed);
// G(n, p) with weights drawn uniformly from [lo, hi], deterministic.
Graph make_gnp_weighted(int n, double p, uint64_t seed, double lo, double hi,
                        GraphKind kind = GraphKind::undirected);

}  // namespace motifcut
