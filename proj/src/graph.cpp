#include "motifcut/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>

#include "motifcut/rng.hpp"

namespace motifcut {

namespace {

uint64_t pair_key(int u, int v) {
  return (static_cast<uint64_t>(static_cast<uint32_t>(u)) << 32) | static_cast<uint32_t>(v);
}

}  // namespace

Graph::Graph(int n, GraphKind kind, std::vector<Edge> edges) : n_(n), kind_(kind) {
  if (n < 0) throw usage_error("negative vertex count");
  for (Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw usage_error("edge endpoint out of range: (" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + ")");
    if (e.u == e.v)
      throw usage_error("self-loop at vertex " + std::to_string(e.u));
    if (!(e.w > 0.0) || !std::isfinite(e.w))
      throw usage_error("nonpositive weight on edge (" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + ")");
    if (kind_ == GraphKind::undirected && e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (size_t i = 1; i < edges.size(); ++i)
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v)
      throw usage_error("duplicate edge (" + std::to_string(edges[i].u) + "," +
                        std::to_string(edges[i].v) + ")");
  edges_ = std::move(edges);
  index_.reserve(edges_.size() * 2);
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i)
    index_.emplace(pair_key(edges_[i].u, edges_[i].v), i);
}

int Graph::edge_index(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return -1;
  if (kind_ == GraphKind::undirected && u > v) std::swap(u, v);
  auto it = index_.find(pair_key(u, v));
  return it == index_.end() ? -1 : it->second;
}

double Graph::weight(int u, int v) const {
  int i = edge_index(u, v);
  if (i < 0)
    throw usage_error("edge (" + std::to_string(u) + "," + std::to_string(v) + ") not in graph");
  return edges_[i].w;
}

double Graph::min_weight() const {
  double m = std::numeric_limits<double>::infinity();
  for (const Edge& e : edges_) m = std::min(m, e.w);
  return m;
}

double Graph::max_weight() const {
  double m = 0.0;
  for (const Edge& e : edges_) m = std::max(m, e.w);
  return m;
}

Graph parse_graph(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1;
  GraphKind kind = GraphKind::undirected;
  bool have_n = false, have_kind = false;
  std::vector<Edge> edges;
  auto fail = [&](const std::string& what) {
    throw usage_error(origin + ":" + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    if (!have_n) {
      if (!(ls >> n) || n < 0) fail("expected vertex count");
      have_n = true;
    } else if (!have_kind) {
      std::string k;
      if (!(ls >> k) || (k != "d" && k != "u")) fail("expected 'd' or 'u'");
      kind = k == "d" ? GraphKind::directed : GraphKind::undirected;
      have_kind = true;
    } else {
      Edge e;
      if (!(ls >> e.u >> e.v >> e.w)) fail("expected 'u v w'");
      std::string rest;
      if (ls >> rest) fail("trailing tokens after 'u v w'");
      edges.push_back(e);
    }
  }
  if (!have_n || !have_kind) throw usage_error(origin + ": missing header lines");
  try {
    return Graph(n, kind, std::move(edges));
  } catch (const usage_error& e) {
    throw usage_error(origin + ": " + e.what());
  }
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str(), path);
}

std::string graph_to_string(const Graph& g) {
  std::string out = std::to_string(g.n()) + "\n";
  out += g.directed() ? "d\n" : "u\n";
  char buf[64];
  for (const Edge& e : g.edges()) {
    std::snprintf(buf, sizeof buf, "%d %d %.17g\n", e.u, e.v, e.w);
    out += buf;
  }
  return out;
}

void save_graph(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw usage_error("cannot write graph file: " + path);
  out << graph_to_string(g);
}

Graph encode_undirected(const Graph& g) {
  if (g.directed()) throw usage_error("encode_undirected expects an undirected graph");
  std::vector<Edge> edges;
  edges.reserve(g.edges().size() * 2);
  for (const Edge& e : g.edges()) {
    double w = std::sqrt(e.w);
    edges.push_back({e.u, e.v, w});
    edges.push_back({e.v, e.u, w});
  }
  return Graph(g.n(), GraphKind::directed, std::move(edges));
}

Motif make_motif(int r, GraphKind kind, std::vector<std::pair<int, int>> edges) {
  if (r < 2) throw usage_error("motif needs at least 2 vertices");
  if (edges.empty()) throw usage_error("motif needs at least 1 edge");
  std::vector<std::pair<int, int>> canon;
  for (auto [a, b] : edges) {
    if (a < 0 || a >= r || b < 0 || b >= r) throw usage_error("motif edge endpoint out of range");
    if (a == b) throw usage_error("motif self-loop");
    if (kind == GraphKind::undirected && a > b) std::swap(a, b);
    canon.emplace_back(a, b);
  }
  std::sort(canon.begin(), canon.end());
  if (std::adjacent_find(canon.begin(), canon.end()) != canon.end())
    throw usage_error("duplicate motif edge");
  // weak connectivity
  std::vector<std::vector<int>> adj(r);
  for (auto [a, b] : canon) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(r, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int cnt = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : adj[v])
      if (!seen[u]) {
        seen[u] = 1;
        ++cnt;
        q.push(u);
      }
  }
  if (cnt != r) throw usage_error("motif is not (weakly) connected");
  Motif m;
  m.r = r;
  m.r_star = static_cast<int>(canon.size());
  m.kind = kind;
  m.edges = std::move(canon);
  return m;
}

double instance_weight(const Graph& g, const MotifInstance& inst) {
  double w = 1.0;
  for (auto [u, v] : inst.edge_set) {
    int i = g.edge_index(u, v);
    if (i < 0)
      throw usage_error("stale instance: edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") missing");
    w *= g.edges()[i].w;
  }
  return w;
}

bool instance_crosses(const MotifInstance& inst, const Cut& cut) {
  bool in_s = false, out_s = false;
  for (int v : inst.vertex_map) {
    if (cut.side[v])
      in_s = true;
    else
      out_s = true;
    if (in_s && out_s) return true;
  }
  return false;
}

double motif_cut_value(const std::vector<MotifInstance>& instances, const Cut& cut) {
  double total = 0.0;
  for (const MotifInstance& inst : instances)
    if (instance_crosses(inst, cut)) total += inst.weight;
  return total;
}

std::vector<Cut> enumerate_cuts(int n, int limit) {
  std::vector<Cut> cuts;
  for_each_cut(n, [&](const Cut& c) { cuts.push_back(c); }, limit);
  return cuts;
}

Graph make_clique(int n, double w) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v, w});
  return Graph(n, GraphKind::undirected, std::move(edges));
}

Graph make_gnp(int n, double p, uint64_t seed) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (to_unit(hash_key(seed, 0x676e70ull, u, v)) < p) edges.push_back({u, v, 1.0});
  return Graph(n, GraphKind::undirected, std::move(edges));
}

Graph make_gnp_weighted(int n, double p, uint64_t seed, double lo, double hi, GraphKind kind) {
  std::vector<Edge> edges;
  auto add = [&](int u, int v) {
    if (to_unit(hash_key(seed, 0x676e7077ull, u, v)) < p) {
      double w = lo + (hi - lo) * to_unit(hash_key(seed, 0x77656967ull, u, v));
      edges.push_back({u, v, w});
    }
  };
  for (int u = 0; u < n; ++u)
    for (int v = (kind == GraphKind::undirected ? u + 1 : 0); v < n; ++v)
      if (u != v) add(u, v);
  return Graph(n, kind, std::move(edges));
}

}  // namespace motifcut
