#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace motifcut::oracle {

namespace {

// Visit every injective map motif-vertex -> graph-vertex whose image contains
// all motif edges. No ordering tricks: assign vertices 0..r-1 in order and
// test the full edge list at the leaves.
template <typename Fn>
void for_each_hom(const Graph& g, const Motif& m, Fn&& fn) {
  std::vector<int> map(m.r, -1);
  std::vector<char> used(g.n(), 0);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == m.r) {
      double w = 1.0;
      for (auto [a, b] : m.edges) {
        int idx = g.edge_index(map[a], map[b]);
        if (idx < 0) return;
        w *= g.edges()[idx].w;
      }
      fn(map, w);
      return;
    }
    for (int v = 0; v < g.n(); ++v) {
      if (used[v]) continue;
      used[v] = 1;
      map[depth] = v;
      self(self, depth + 1);
      used[v] = 0;
    }
  };
  rec(rec, 0);
}

Graph motif_as_graph(const Motif& m) {
  std::vector<Edge> edges;
  for (auto [a, b] : m.edges) edges.push_back({a, b, 1.0});
  return Graph(m.r, m.kind, edges);
}

}  // namespace

HomCount injective_homs(const Graph& g, const Motif& m) {
  if (g.directed() != (m.kind == GraphKind::directed))
    throw std::invalid_argument("oracle: graph and motif kinds must match");
  HomCount hc;
  for_each_hom(g, m, [&](const std::vector<int>&, double w) {
    ++hc.count;
    hc.total_weight += w;
  });
  return hc;
}

long long automorphisms(const Motif& m) { return injective_homs(motif_as_graph(m), m).count; }

std::vector<double> motif_weights(const Graph& g, const Motif& m) {
  if (g.directed() != (m.kind == GraphKind::directed))
    throw std::invalid_argument("oracle: graph and motif kinds must match");
  double aut = static_cast<double>(automorphisms(m));
  std::vector<double> out(g.edge_count(), 0.0);
  for_each_hom(g, m, [&](const std::vector<int>& map, double w) {
    for (auto [a, b] : m.edges) out[g.edge_index(map[a], map[b])] += w / aut;
  });
  return out;
}

double st_min_cut(const Graph& g, int s, int t) {
  if (g.n() > 20) throw std::invalid_argument("oracle: st_min_cut limited to n <= 20");
  const int n = g.n();
  double best = std::numeric_limits<double>::infinity();
  for (uint64_t mask = 0; mask < (1ull << n); ++mask) {
    if (!((mask >> s) & 1) || ((mask >> t) & 1)) continue;
    double value = 0.0;
    for (const Edge& e : g.edges())
      if (((mask >> e.u) & 1) != ((mask >> e.v) & 1)) value += e.w;
    best = std::min(best, value);
  }
  return best;
}

std::vector<double> strengths(const MotifHypergraph& h) {
  if (h.n > 16) throw std::invalid_argument("oracle: strengths limited to n <= 16");
  const int n = h.n;
  const auto& hes = h.hyperedges;
  std::vector<double> kappa(hes.size(), 0.0);
  std::vector<uint32_t> he_mask(hes.size(), 0);
  for (size_t f = 0; f < hes.size(); ++f)
    for (int v : hes[f].verts) he_mask[f] |= 1u << v;

  for (uint32_t sub = 0; sub < (1u << n); ++sub) {
    // minimum cut of the subhypergraph induced by `sub`
    std::vector<size_t> inside;
    for (size_t f = 0; f < hes.size(); ++f)
      if ((he_mask[f] & sub) == he_mask[f]) inside.push_back(f);
    if (inside.empty()) continue;
    int lowest = -1;
    int verts = 0;
    for (int v = 0; v < n; ++v)
      if ((sub >> v) & 1) {
        ++verts;
        if (lowest < 0) lowest = v;
      }
    if (verts < 2) continue;
    double mincut = std::numeric_limits<double>::infinity();
    // enumerate splits with `lowest` pinned to side 0: side 1 runs over all
    // non-empty subsets of the remaining vertices
    uint32_t rest = sub & ~(1u << lowest);
    for (uint32_t side1 = rest; side1 != 0; side1 = (side1 - 1) & rest) {
      double value = 0.0;
      for (size_t f : inside) {
        uint32_t mm = he_mask[f];
        if ((mm & side1) && (mm & ~side1)) value += hes[f].w;
      }
      mincut = std::min(mincut, value);
    }
    if (!std::isfinite(mincut)) continue;
    for (size_t f : inside) kappa[f] = std::max(kappa[f], mincut);
  }
  return kappa;
}

}  // namespace motifcut::oracle
