#include "motifcut/motif_enum.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "motifcut/rng.hpp"

namespace motifcut {

namespace {

// Connected ordering of motif vertices: each vertex after the first has a
// (weak) neighbor among its predecessors. Guaranteed to exist, the motif is
// connected.
std::vector<int> connected_order(const Motif& m) {
  std::vector<std::vector<int>> adj(m.r);
  for (auto [a, b] : m.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> order;
  std::vector<char> placed(m.r, 0);
  order.push_back(0);
  placed[0] = 1;
  while (static_cast<int>(order.size()) < m.r) {
    for (int v = 0; v < m.r; ++v) {
      if (placed[v]) continue;
      bool anchored = false;
      for (int u : adj[v])
        if (placed[u]) {
          anchored = true;
          break;
        }
      if (anchored) {
        order.push_back(v);
        placed[v] = 1;
        break;
      }
    }
  }
  return order;
}

struct EdgeSetHash {
  size_t operator()(const std::vector<std::pair<int, int>>& es) const {
    uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto [a, b] : es) h = mix64(h ^ (static_cast<uint64_t>(a) << 32 | static_cast<uint32_t>(b)));
    return static_cast<size_t>(h);
  }
};

}  // namespace

std::vector<MotifInstance> enumerate_instances(const Graph& g, const Motif& m,
                                               long long instance_limit) {
  if (g.directed() != (m.kind == GraphKind::directed))
    throw usage_error("graph and motif kinds must match");
  // Weak adjacency of g for candidate generation; exact direction is checked
  // against the edge index below.
  std::vector<std::vector<int>> nbr(g.n());
  for (const Edge& e : g.edges()) {
    nbr[e.u].push_back(e.v);
    nbr[e.v].push_back(e.u);
  }
  for (auto& v : nbr) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  }

  const std::vector<int> order = connected_order(m);
  // pos_of[motif vertex] = placement step
  std::vector<int> pos_of(m.r);
  for (int i = 0; i < m.r; ++i) pos_of[order[i]] = i;
  // For each step i, the motif edges whose both endpoints are placed once
  // step i is assigned, expressed as (placed step j, direction).
  struct Check {
    int j;        // earlier step
    bool forward; // true: motif edge (order[j], order[i]); false: (order[i], order[j])
  };
  std::vector<std::vector<Check>> checks(m.r);
  int anchor_of[64] = {0};
  for (int i = 1; i < m.r; ++i) {
    int a = -1;
    for (auto [x, y] : m.edges) {
      int px = pos_of[x], py = pos_of[y];
      int hi = std::max(px, py), lo = std::min(px, py);
      if (hi == i) {
        checks[i].push_back({lo, pos_of[x] == lo});
        if (a < 0) a = lo;
      }
    }
    anchor_of[i] = a;  // a >= 0 by connected ordering
  }

  auto canonical_graph_edge = [&](int gu, int gv) {
    if (!g.directed() && gu > gv) std::swap(gu, gv);
    return std::make_pair(gu, gv);
  };

  std::unordered_map<std::vector<std::pair<int, int>>, size_t, EdgeSetHash> dedup;
  std::vector<MotifInstance> out;
  std::vector<int> image(m.r, -1);  // image[i] = graph vertex of order[i]
  std::vector<char> used(g.n(), 0);

  // Iterative backtracking over placement steps.
  std::vector<size_t> cursor(m.r, 0);
  int depth = 0;
  auto candidates_at = [&](int i) -> const std::vector<int>* {
    if (i == 0) return nullptr;  // whole vertex range
    return &nbr[image[anchor_of[i]]];
  };
  std::vector<int> all(g.n());
  std::iota(all.begin(), all.end(), 0);

  while (depth >= 0) {
    const std::vector<int>& cand = depth == 0 ? all : *candidates_at(depth);
    bool advanced = false;
    while (cursor[depth] < cand.size()) {
      int v = cand[cursor[depth]++];
      if (used[v]) continue;
      bool ok = true;
      for (const Check& c : checks[depth]) {
        int from = c.forward ? image[c.j] : v;
        int to = c.forward ? v : image[c.j];
        if (!g.has_edge(from, to)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[depth] = v;
      used[v] = 1;
      if (depth + 1 == m.r) {
        // Complete embedding; canonicalize its subgraph.
        MotifInstance inst;
        inst.vertex_map.resize(m.r);
        for (int i = 0; i < m.r; ++i) inst.vertex_map[i] = image[pos_of[i]];
        inst.edge_set.reserve(m.edges.size());
        for (auto [a, b] : m.edges)
          inst.edge_set.push_back(canonical_graph_edge(inst.vertex_map[a], inst.vertex_map[b]));
        std::sort(inst.edge_set.begin(), inst.edge_set.end());
        auto it = dedup.find(inst.edge_set);
        if (it == dedup.end()) {
          if (static_cast<long long>(out.size()) >= instance_limit)
            throw resource_limit_error("instance limit exceeded (" +
                                       std::to_string(instance_limit) + ")");
          dedup.emplace(inst.edge_set, out.size());
          out.push_back(std::move(inst));
        } else if (inst.vertex_map < out[it->second].vertex_map) {
          out[it->second].vertex_map = inst.vertex_map;
        }
        used[v] = 0;
        image[depth] = -1;
      } else {
        ++depth;
        cursor[depth] = 0;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      --depth;
      if (depth >= 0 && image[depth] >= 0) {
        used[image[depth]] = 0;
        image[depth] = -1;
      }
    }
  }

  for (MotifInstance& inst : out) inst.weight = instance_weight(g, inst);
  std::sort(out.begin(), out.end(), [](const MotifInstance& a, const MotifInstance& b) {
    std::vector<int> sa = a.vertex_map, sb = b.vertex_map;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return sa < sb;
    return a.edge_set < b.edge_set;
  });
  return out;
}

long long automorphism_count(const Motif& m) {
  if (m.r > 10) throw resource_limit_error("automorphism count limited to r <= 10");
  std::vector<std::pair<int, int>> canon = m.edges;  // already canonical & sorted
  std::vector<int> perm(m.r);
  std::iota(perm.begin(), perm.end(), 0);
  long long count = 0;
  std::vector<std::pair<int, int>> mapped;
  mapped.reserve(canon.size());
  do {
    mapped.clear();
    for (auto [a, b] : canon) {
      int x = perm[a], y = perm[b];
      if (m.kind == GraphKind::undirected && x > y) std::swap(x, y);
      mapped.emplace_back(x, y);
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped == canon) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

namespace {

Motif preset_motif(const std::string& name, bool directed) {
  auto kind = directed ? GraphKind::directed : GraphKind::undirected;
  auto path = [&](int r) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < r; ++i) e.emplace_back(i, i + 1);
    return make_motif(r, kind, e);
  };
  auto cycle = [&](int k) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return make_motif(k, kind, e);
  };
  auto clique = [&](int k) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) e.emplace_back(i, j);
    return make_motif(k, kind, e);
  };
  if (name == "triangle") return cycle(3);  // directed variant = directed 3-cycle
  if (name == "path2") return path(3);
  if (name == "path3") return path(4);
  if (name.rfind("cycle", 0) == 0 && name.size() == 6) {
    int k = name[5] - '0';
    if (k >= 3 && k <= 6) return cycle(k);
  }
  if (name.rfind("clique", 0) == 0 && name.size() == 7) {
    int k = name[6] - '0';
    if (k >= 3 && k <= 6) return clique(k);
  }
  throw usage_error("unknown motif preset: " + name);
}

}  // namespace

Motif parse_motif(const std::string& spec) {
  if (spec.empty()) throw usage_error("empty motif spec");
  if (spec[0] == '@') {
    Graph g = load_graph(spec.substr(1));
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
    return make_motif(g.n(), g.kind(), edges);
  }
  if (spec.find('/') != std::string::npos) {
    std::string text = spec;
    std::replace(text.begin(), text.end(), '/', '\n');
    Graph g = parse_graph(text, "<motif>");
    std::vector<std::pair<int, int>> edges;
    for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
    return make_motif(g.n(), g.kind(), edges);
  }
  bool directed = false;
  std::string name = spec;
  if (name.rfind("d:", 0) == 0) {
    directed = true;
    name = name.substr(2);
  } else if (name.rfind("u:", 0) == 0) {
    name = name.substr(2);
  }
  return preset_motif(name, directed);
}

std::vector<Motif> parse_motif_list(const std::string& specs) {
  std::vector<Motif> motifs;
  size_t start = 0;
  while (start <= specs.size()) {
    size_t comma = specs.find(',', start);
    std::string item =
        comma == std::string::npos ? specs.substr(start) : specs.substr(start, comma - start);
    if (!item.empty()) motifs.push_back(parse_motif(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (motifs.empty()) throw usage_error("no motifs given");
  return motifs;
}

}  // namespace motifcut
