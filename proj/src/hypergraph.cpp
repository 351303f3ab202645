#include "motifcut/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace motifcut {

MotifHypergraph build_motif_hypergraph(const Graph& g,
                                       const std::vector<MotifInstance>& instances) {
  MotifHypergraph h;
  h.n = g.n();
  std::map<std::vector<int>, size_t> index;
  for (size_t i = 0; i < instances.size(); ++i) {
    std::vector<int> verts = instances[i].vertex_map;
    std::sort(verts.begin(), verts.end());
    double w = instance_weight(g, instances[i]);
    auto it = index.find(verts);
    if (it == index.end()) {
      index.emplace(std::move(verts), h.hyperedges.size());
      Hyperedge f;
      f.verts = [&] {
        std::vector<int> v = instances[i].vertex_map;
        std::sort(v.begin(), v.end());
        return v;
      }();
      f.w = w;
      f.member_instances.push_back(static_cast<int>(i));
      h.hyperedges.push_back(std::move(f));
    } else {
      h.hyperedges[it->second].w += w;
      h.hyperedges[it->second].member_instances.push_back(static_cast<int>(i));
    }
  }
  // std::map iteration gave first-appearance order; re-sort hyperedges by
  // vertex set so the layout is canonical regardless of instance order.
  std::vector<size_t> order(h.hyperedges.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return h.hyperedges[a].verts < h.hyperedges[b].verts; });
  std::vector<Hyperedge> sorted;
  sorted.reserve(h.hyperedges.size());
  for (size_t i : order) sorted.push_back(std::move(h.hyperedges[i]));
  h.hyperedges = std::move(sorted);
  return h;
}

namespace {

// Indices of hyperedges fully contained in the active set.
std::vector<int> inside_hyperedges(const MotifHypergraph& h, const std::vector<char>& in_active) {
  std::vector<int> inside;
  for (size_t i = 0; i < h.hyperedges.size(); ++i) {
    bool all = true;
    for (int v : h.hyperedges[i].verts)
      if (!in_active[v]) {
        all = false;
        break;
      }
    if (all) inside.push_back(static_cast<int>(i));
  }
  return inside;
}

// Connected components of the induced subhypergraph (isolated vertices are
// singleton components), each sorted, ordered by smallest member.
std::vector<std::vector<int>> hyper_components(const MotifHypergraph& h,
                                               const std::vector<int>& active,
                                               const std::vector<int>& inside) {
  std::vector<int> comp(h.n, -1);
  std::vector<std::vector<int>> vert_edges(h.n);  // inside hyperedges per vertex
  for (int idx : inside)
    for (int v : h.hyperedges[idx].verts) vert_edges[v].push_back(idx);
  std::vector<std::vector<int>> out;
  for (int s : active) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      for (int idx : vert_edges[v])
        for (int u : h.hyperedges[idx].verts)
          if (comp[u] < 0) {
            comp[u] = id;
            stack.push_back(u);
          }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

Cut cut_from_side1(int n, const std::vector<int>& side1) {
  Cut cut;
  cut.side.assign(n, 0);
  for (int v : side1) cut.side[v] = 1;
  return cut;
}

// Canonicalize: the smallest active vertex goes to side 0.
void canonicalize_cut(Cut& cut, const std::vector<int>& active) {
  int smallest = *std::min_element(active.begin(), active.end());
  if (cut.side[smallest]) {
    std::vector<char> in_active(cut.side.size(), 0);
    for (int v : active) in_active[v] = 1;
    for (size_t v = 0; v < cut.side.size(); ++v)
      cut.side[v] = in_active[v] ? static_cast<uint8_t>(1 - cut.side[v]) : 0;
  }
}

}  // namespace

std::pair<Cut, double> hypergraph_min_cut(const MotifHypergraph& h,
                                          const std::vector<int>& active_in) {
  if (active_in.size() < 2)
    throw std::invalid_argument("min cut needs at least 2 active vertices");
  std::vector<int> active = active_in;
  std::sort(active.begin(), active.end());
  std::vector<char> in_active(h.n, 0);
  for (int v : active) in_active[v] = 1;
  std::vector<int> inside = inside_hyperedges(h, in_active);

  std::vector<std::vector<int>> comps = hyper_components(h, active, inside);
  if (comps.size() > 1) {
    // Disconnected: report the component holding the smallest active vertex
    // complemented, i.e. side 1 = everything else, with the canonical flip
    // putting the smallest vertex on side 0 anyway.
    std::vector<int> side1;
    for (size_t c = 1; c < comps.size(); ++c)
      side1.insert(side1.end(), comps[c].begin(), comps[c].end());
    Cut cut = cut_from_side1(h.n, side1);
    canonicalize_cut(cut, active);
    return {cut, 0.0};
  }

  // MA-ordering contraction. Supervertices carry their original members; the
  // representative (smallest member) breaks all ties.
  struct Super {
    int rep;
    std::vector<int> members;
  };
  std::vector<Super> sv;
  sv.reserve(active.size());
  for (int v : active) sv.push_back({v, {v}});
  struct HE {
    double w;
    std::vector<int> members;  // supervertex indices, sorted distinct
  };
  std::vector<HE> hes;
  {
    std::vector<int> pos(h.n, -1);
    for (size_t i = 0; i < sv.size(); ++i) pos[sv[i].rep] = static_cast<int>(i);
    for (int idx : inside) {
      HE e;
      e.w = h.hyperedges[idx].w;
      for (int v : h.hyperedges[idx].verts) e.members.push_back(pos[v]);
      std::sort(e.members.begin(), e.members.end());
      hes.push_back(std::move(e));
    }
  }

  // Cut values are always recomputed as index-order sums over the crossing
  // hyperedges, so the same side yields bit-identical values no matter how
  // the MA keys accumulated; the keys only steer the ordering.
  auto canonical_value = [&](const std::vector<int>& side1) {
    std::vector<char> in_side1(h.n, 0);
    for (int v : side1) in_side1[v] = 1;
    double value = 0.0;
    for (int idx : inside) {
      bool s0 = false, s1 = false;
      for (int v : h.hyperedges[idx].verts) (in_side1[v] ? s1 : s0) = true;
      if (s0 && s1) value += h.hyperedges[idx].w;
    }
    return value;
  };

  double best = std::numeric_limits<double>::infinity();
  std::vector<int> best_side1;
  while (sv.size() > 1) {
    size_t k = sv.size();
    // One phase: grow A by maximum attachment, keys updated the first time a
    // hyperedge is touched by A.
    std::vector<char> in_A(k, 0);
    std::vector<double> key(k, 0.0);
    std::vector<char> touched(hes.size(), 0);
    std::vector<std::vector<int>> he_of(k);
    for (size_t i = 0; i < hes.size(); ++i)
      for (int m : hes[i].members) he_of[m].push_back(static_cast<int>(i));
    int prev = -1, last = -1;
    for (size_t step = 0; step < k; ++step) {
      int pick = -1;
      for (size_t i = 0; i < k; ++i) {
        if (in_A[i]) continue;
        // Ties keep the earliest index; with the ascending scan this is a
        // fixed deterministic choice.
        if (pick < 0 || key[i] > key[pick]) pick = static_cast<int>(i);
      }
      in_A[pick] = 1;
      prev = last;
      last = pick;
      for (int ei : he_of[pick]) {
        if (touched[ei]) continue;
        touched[ei] = 1;
        for (int m : hes[ei].members)
          if (!in_A[m]) key[m] += hes[ei].w;
      }
    }
    double phase_cut = canonical_value(sv[last].members);
    if (phase_cut < best) {
      best = phase_cut;
      best_side1 = sv[last].members;
    }
    // Merge the last two supervertices.
    Super merged;
    merged.rep = std::min(sv[prev].rep, sv[last].rep);
    merged.members = sv[prev].members;
    merged.members.insert(merged.members.end(), sv[last].members.begin(), sv[last].members.end());
    int a = std::min(prev, last), b = std::max(prev, last);
    sv[a] = std::move(merged);
    sv.erase(sv.begin() + b);
    std::vector<HE> next;
    next.reserve(hes.size());
    for (HE& e : hes) {
      for (int& m : e.members) {
        if (m == b) m = a;
        else if (m > b) --m;
      }
      std::sort(e.members.begin(), e.members.end());
      e.members.erase(std::unique(e.members.begin(), e.members.end()), e.members.end());
      if (e.members.size() >= 2) next.push_back(std::move(e));
    }
    hes = std::move(next);
  }

  Cut cut = cut_from_side1(h.n, best_side1);
  canonicalize_cut(cut, active);
  return {cut, best};
}

std::pair<Cut, double> hypergraph_min_cut(const MotifHypergraph& h) {
  std::vector<int> active(h.n);
  for (int v = 0; v < h.n; ++v) active[v] = v;
  return hypergraph_min_cut(h, active);
}

std::pair<Cut, double> hypergraph_min_cut_brute(const MotifHypergraph& h,
                                                const std::vector<int>& active) {
  if (active.size() < 2) throw std::invalid_argument("min cut needs at least 2 active vertices");
  if (active.size() > 20) throw resource_limit_error("brute-force min cut limited to 20 vertices");
  std::vector<int> verts = active;
  std::sort(verts.begin(), verts.end());
  std::vector<char> in_active(h.n, 0);
  for (int v : verts) in_active[v] = 1;
  std::vector<int> inside = inside_hyperedges(h, in_active);
  size_t k = verts.size();
  std::vector<int> pos(h.n, -1);
  for (size_t i = 0; i < k; ++i) pos[verts[i]] = static_cast<int>(i);

  double best = std::numeric_limits<double>::infinity();
  uint64_t best_mask = 0;
  for (uint64_t mask = 1; mask < (1ull << (k - 1)); ++mask) {
    // bit i of mask = side of verts[i + 1]; verts[0] pinned to side 0
    double value = 0.0;
    for (int idx : inside) {
      bool s0 = false, s1 = false;
      for (int v : h.hyperedges[idx].verts) {
        int p = pos[v];
        bool side = p > 0 && ((mask >> (p - 1)) & 1);
        (side ? s1 : s0) = true;
      }
      if (s0 && s1) value += h.hyperedges[idx].w;
    }
    if (value < best) {
      best = value;
      best_mask = mask;
    }
  }
  Cut cut;
  cut.side.assign(h.n, 0);
  for (size_t i = 1; i < k; ++i)
    if ((best_mask >> (i - 1)) & 1) cut.side[verts[i]] = 1;
  return {cut, best};
}

namespace {

// Split `active` along a minimum cut: crossing hyperedges get stamped with
// `level`, sides recurse with the inherited level raised. Shared by the exact
// path (threshold = infinity never promotes) and the halving path.
void peel_exact(const MotifHypergraph& h, const std::vector<int>& active, double inherited,
                std::vector<double>& kappa, std::vector<std::vector<int>>* log) {
  if (active.size() < 2) return;
  std::vector<char> in_active(h.n, 0);
  for (int v : active) in_active[v] = 1;
  std::vector<int> inside = inside_hyperedges(h, in_active);
  if (inside.empty()) return;
  if (log) log->push_back(active);
  auto [cut, c] = hypergraph_min_cut(h, active);
  double level = std::max(c, inherited);
  std::vector<int> side0, side1;
  for (int v : active) (cut.side[v] ? side1 : side0).push_back(v);
  for (int idx : inside) {
    bool s0 = false, s1 = false;
    for (int v : h.hyperedges[idx].verts) (cut.side[v] ? s1 : s0) = true;
    if (s0 && s1) kappa[idx] = level;
  }
  peel_exact(h, side0, level, kappa, log);
  peel_exact(h, side1, level, kappa, log);
}

// Halving round: split `active` along cuts below `threshold`, stamping each
// crossing hyperedge with `level`; pieces whose minimum cut reaches the
// threshold are promoted to the next round.
void carve(const MotifHypergraph& h, const std::vector<int>& active, double threshold,
           double level, std::vector<double>& kappa_prime,
           std::vector<std::vector<int>>& promoted, std::vector<std::vector<int>>* log) {
  if (active.size() < 2) return;
  std::vector<char> in_active(h.n, 0);
  for (int v : active) in_active[v] = 1;
  std::vector<int> inside = inside_hyperedges(h, in_active);
  if (inside.empty()) return;
  auto [cut, c] = hypergraph_min_cut(h, active);
  if (c >= threshold) {
    if (log) log->push_back(active);
    promoted.push_back(active);
    return;
  }
  std::vector<int> side0, side1;
  for (int v : active) (cut.side[v] ? side1 : side0).push_back(v);
  for (int idx : inside) {
    bool s0 = false, s1 = false;
    for (int v : h.hyperedges[idx].verts) (cut.side[v] ? s1 : s0) = true;
    if (s0 && s1) kappa_prime[idx] = level;
  }
  carve(h, side0, threshold, level, kappa_prime, promoted, log);
  carve(h, side1, threshold, level, kappa_prime, promoted, log);
}

}  // namespace

StrengthTable exact_strengths(const MotifHypergraph& h, int exact_limit,
                              std::vector<std::vector<int>>* components_log) {
  if (h.n > exact_limit)
    throw resource_limit_error("exact strengths limited to " + std::to_string(exact_limit) +
                               " vertices (graph has " + std::to_string(h.n) + ")");
  StrengthTable table;
  table.kappa.assign(h.hyperedges.size(), 0.0);
  if (h.hyperedges.empty()) return table;
  std::vector<int> all(h.n);
  for (int v = 0; v < h.n; ++v) all[v] = v;
  peel_exact(h, all, 0.0, table.kappa, components_log);
  return table;
}

StrengthTable estimate_strengths(const MotifHypergraph& h, int exact_limit,
                                 bool force_estimation,
                                 std::vector<std::vector<int>>* components_log) {
  StrengthTable table;
  if (!force_estimation && h.n <= exact_limit) {
    table = exact_strengths(h, exact_limit, components_log);
    table.kappa_prime = table.kappa;
  } else {
    table.kappa_prime.assign(h.hyperedges.size(), 0.0);
    if (h.hyperedges.empty()) return table;
    std::vector<int> all(h.n);
    for (int v = 0; v < h.n; ++v) all[v] = v;
    std::vector<char> in_all(h.n, 1);
    std::vector<int> inside_all = inside_hyperedges(h, in_all);
    for (const std::vector<int>& comp : hyper_components(h, all, inside_all)) {
      if (comp.size() < 2) continue;
      double c0 = hypergraph_min_cut(h, comp).second;
      if (c0 <= 0.0) continue;  // hyper_components made components connected
      double level = c0;
      std::vector<std::vector<int>> pieces{comp};
      while (!pieces.empty()) {
        std::vector<std::vector<int>> next;
        for (const std::vector<int>& piece : pieces)
          carve(h, piece, 2.0 * level, level, table.kappa_prime, next, components_log);
        pieces = std::move(next);
        level *= 2.0;
      }
    }
  }
  // Output contract, second property: the strength-weighted hyperedge mass is
  // at most 4 r (n - 1).
  if (!h.hyperedges.empty()) {
    double sum = 0.0;
    size_t r = 0;
    for (size_t i = 0; i < h.hyperedges.size(); ++i) {
      if (table.kappa_prime[i] <= 0.0)
        throw std::logic_error("strength estimation left a hyperedge unassigned");
      sum += h.hyperedges[i].w / table.kappa_prime[i];
      r = std::max(r, h.hyperedges[i].verts.size());
    }
    double bound = 4.0 * static_cast<double>(r) * (h.n - 1);
    if (sum > bound * (1.0 + 1e-9))
      throw std::logic_error("strength estimate mass bound violated: " + std::to_string(sum) +
                             " > " + std::to_string(bound));
  }
  return table;
}

std::vector<double> instance_strengths(const MotifHypergraph& h,
                                       const std::vector<double>& per_hyperedge,
                                       size_t instance_count) {
  std::vector<double> out(instance_count, 0.0);
  for (size_t i = 0; i < h.hyperedges.size(); ++i)
    for (int inst : h.hyperedges[i].member_instances) out[inst] = per_hyperedge[i];
  return out;
}

}  // namespace motifcut
