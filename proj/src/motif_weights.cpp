#include "motifcut/motif_weights.hpp"

#include <algorithm>
#include <map>

#include "motifcut/motif_enum.hpp"

namespace motifcut {

namespace {

// Decode a part row index into its vertex tuple (most significant digit
// first).
void decode_tuple(long long idx, int n, int k, int* out) {
  for (int t = k - 1; t >= 0; --t) {
    out[t] = static_cast<int>(idx % n);
    idx /= n;
  }
}

// Dense weight lookup table: adj(u,v) = w(u,v) or 0. Both directions filled
// for undirected graphs.
Eigen::MatrixXd dense_adjacency(const Graph& g) {
  Eigen::MatrixXd adj = Eigen::MatrixXd::Zero(g.n(), g.n());
  for (const Edge& e : g.edges()) {
    adj(e.u, e.v) = e.w;
    if (!g.directed()) adj(e.v, e.u) = e.w;
  }
  return adj;
}

struct TriangleBlocks {
  Eigen::MatrixXd T12, T13, T23;  // per-sigma-edge triangle mass
};

// T_ij = W_ij ∘ (D_i (W_ik D_k W_kj) D_j): for each cross pair, the total
// weight of triangles through it (triangle weight = product of its three
// vertex weights and three edge weights).
TriangleBlocks triangle_blocks(const SigmaGraph& s) {
  const auto d1 = s.vweight[0].asDiagonal();
  const auto d2 = s.vweight[1].asDiagonal();
  const auto d3 = s.vweight[2].asDiagonal();
  TriangleBlocks t;
  t.T12 = s.W12.cwiseProduct(d1 * (s.W13 * (d3 * s.W23.transpose())) * d2);
  t.T13 = s.W13.cwiseProduct(d1 * (s.W12 * (d2 * s.W23)) * d3);
  t.T23 = s.W23.cwiseProduct(d2 * (s.W12.transpose() * (d1 * s.W13)) * d3);
  return t;
}

}  // namespace

SigmaGraph build_sigma_graph(const Graph& g, const Motif& m, long long budget_entries) {
  if (g.directed() != (m.kind == GraphKind::directed))
    throw usage_error("graph and motif kinds must match");
  if (m.r < 3) throw usage_error("tripartite reduction needs r >= 3");
  SigmaGraph s;
  s.n = g.n();
  s.r = m.r;
  s.kind = m.kind;
  s.k[0] = (m.r + 2) / 3;
  s.k[1] = (m.r - s.k[0] + 1) / 2;
  s.k[2] = m.r - s.k[0] - s.k[1];
  int base[3] = {0, s.k[0], s.k[0] + s.k[1]};
  auto part_of = [&](int mv) { return mv < base[1] ? 0 : (mv < base[2] ? 1 : 2); };
  for (auto [a, b] : m.edges) {
    int pa = part_of(a), pb = part_of(b);
    int la = a - base[pa], lb = b - base[pb];
    if (pa == pb) {
      s.within[pa].emplace_back(la, lb);
    } else if (pa > pb) {
      // edge runs from the higher part to the lower one; the negative
      // encoding (-1-la, -1-lb) marks that reversed direction
      auto& list = (pb == 0 && pa == 1) ? s.cross12 : (pb == 0 ? s.cross13 : s.cross23);
      list.emplace_back(-1 - la, -1 - lb);
    } else {
      auto& list = (pa == 0 && pb == 1) ? s.cross12 : (pa == 0 ? s.cross13 : s.cross23);
      list.emplace_back(la, lb);
    }
  }
  double total = 0.0;
  for (int i = 0; i < 3; ++i) {
    long long sz = 1;
    for (int t = 0; t < s.k[i]; ++t) sz *= s.n;
    s.size[i] = sz;
  }
  total = static_cast<double>(s.size[0]) * s.size[1] + static_cast<double>(s.size[0]) * s.size[2] +
          static_cast<double>(s.size[1]) * s.size[2];
  if (total > static_cast<double>(budget_entries))
    throw resource_limit_error("tuple matrix budget exceeded (" + std::to_string(total) + " > " +
                               std::to_string(budget_entries) + " entries)");

  Eigen::MatrixXd adj = dense_adjacency(g);

  // Vertex weights: product of within-part motif edge images; zero when the
  // tuple repeats a vertex or an image edge is absent.
  int tup[3][6];
  for (int i = 0; i < 3; ++i) {
    s.vweight[i].resize(s.size[i]);
    for (long long idx = 0; idx < s.size[i]; ++idx) {
      int* v = tup[0];
      decode_tuple(idx, s.n, s.k[i], v);
      double w = 1.0;
      for (int a = 0; a < s.k[i] && w > 0.0; ++a)
        for (int b = a + 1; b < s.k[i]; ++b)
          if (v[a] == v[b]) {
            w = 0.0;
            break;
          }
      for (auto [la, lb] : s.within[i]) {
        if (w <= 0.0) break;
        w *= adj(v[la], v[lb]);
      }
      s.vweight[i](idx) = w;
    }
  }

  // Cross blocks: product of cross motif edge images over disjoint tuples.
  auto fill_block = [&](int pi, int pj, const std::vector<std::pair<int, int>>& cross,
                        Eigen::MatrixXd& W) {
    W.resize(s.size[pi], s.size[pj]);
    int* vi = tup[0];
    int* vj = tup[1];
    for (long long a = 0; a < s.size[pi]; ++a) {
      decode_tuple(a, s.n, s.k[pi], vi);
      for (long long b = 0; b < s.size[pj]; ++b) {
        decode_tuple(b, s.n, s.k[pj], vj);
        double w = 1.0;
        for (int x = 0; x < s.k[pi] && w > 0.0; ++x)
          for (int y = 0; y < s.k[pj]; ++y)
            if (vi[x] == vj[y]) {
              w = 0.0;
              break;
            }
        for (auto [la, lb] : cross) {
          if (w <= 0.0) break;
          // negative encoding: (-1-x, -1-y) is the motif edge from part pj
          // position x to part pi position y
          if (la < 0)
            w *= adj(vj[-1 - la], vi[-1 - lb]);
          else
            w *= adj(vi[la], vj[lb]);
        }
        W(a, b) = w;
      }
    }
  };
  fill_block(0, 1, s.cross12, s.W12);
  fill_block(0, 2, s.cross13, s.W13);
  fill_block(1, 2, s.cross23, s.W23);
  return s;
}

double sigma_triangle_total(const SigmaGraph& s) {
  // Every triangle has exactly one edge between parts 1 and 2.
  const auto d3 = s.vweight[2].asDiagonal();
  Eigen::MatrixXd inner = s.W13 * (d3 * s.W23.transpose());
  Eigen::MatrixXd t12 = s.W12.cwiseProduct(s.vweight[0].asDiagonal() * inner *
                                           s.vweight[1].asDiagonal());
  return t12.sum();
}

std::vector<double> motif_weights_naive(const Graph& g, const Motif& m,
                                        long long instance_limit) {
  std::vector<double> out(g.edge_count(), 0.0);
  for (const MotifInstance& inst : enumerate_instances(g, m, instance_limit))
    for (auto [u, v] : inst.edge_set) out[g.edge_index(u, v)] += inst.weight;
  return out;
}

std::vector<double> motif_weights_fast(const Graph& g, const Motif& m,
                                       long long budget_entries) {
  if (g.directed() != (m.kind == GraphKind::directed))
    throw usage_error("graph and motif kinds must match");
  if (m.r == 2) return motif_weights_naive(g, m);
  return motif_weights_from_sigma(g, m, build_sigma_graph(g, m, budget_entries));
}

std::vector<double> motif_weights_from_sigma(const Graph& g, const Motif& m,
                                             const SigmaGraph& s) {
  TriangleBlocks t = triangle_blocks(s);
  std::vector<double> out(g.edge_count(), 0.0);

  // Triangle mass per sigma vertex: half the incident sigma-edge mass.
  Eigen::VectorXd mass1 = 0.5 * (t.T12.rowwise().sum() + t.T13.rowwise().sum());
  Eigen::VectorXd mass2 = 0.5 * (t.T12.colwise().sum().transpose() + t.T23.rowwise().sum());
  Eigen::VectorXd mass3 =
      0.5 * (t.T13.colwise().sum().transpose() + t.T23.colwise().sum().transpose());

  int base[3] = {0, s.k[0], s.k[0] + s.k[1]};
  (void)base;
  int tup[2][6];
  // Within-part motif edges collect the mass of their sigma vertex.
  const Eigen::VectorXd* mass[3] = {&mass1, &mass2, &mass3};
  for (int i = 0; i < 3; ++i) {
    if (s.within[i].empty()) continue;
    for (long long idx = 0; idx < s.size[i]; ++idx) {
      double wm = (*mass[i])(idx);
      if (wm == 0.0) continue;
      decode_tuple(idx, s.n, s.k[i], tup[0]);
      for (auto [la, lb] : s.within[i]) out[g.edge_index(tup[0][la], tup[0][lb])] += wm;
    }
  }
  // Cross-part motif edges collect the mass of their sigma edge.
  auto accumulate_cross = [&](int pi, int pj, const std::vector<std::pair<int, int>>& cross,
                              const Eigen::MatrixXd& T) {
    if (cross.empty()) return;
    for (long long a = 0; a < s.size[pi]; ++a) {
      decode_tuple(a, s.n, s.k[pi], tup[0]);
      for (long long b = 0; b < s.size[pj]; ++b) {
        double wm = T(a, b);
        if (wm == 0.0) continue;
        decode_tuple(b, s.n, s.k[pj], tup[1]);
        for (auto [la, lb] : cross) {
          int u = la < 0 ? tup[1][-1 - la] : tup[0][la];
          int v = la < 0 ? tup[0][-1 - lb] : tup[1][lb];
          out[g.edge_index(u, v)] += wm;
        }
      }
    }
  };
  accumulate_cross(0, 1, s.cross12, t.T12);
  accumulate_cross(0, 2, s.cross13, t.T13);
  accumulate_cross(1, 2, s.cross23, t.T23);

  double a_count = static_cast<double>(automorphism_count(m));
  for (double& w : out) w /= a_count;
  return out;
}

Graph motif_weighted_graph(const Graph& g, const std::vector<double>& wm) {
  std::map<std::pair<int, int>, double> acc;
  const auto& edges = g.edges();
  for (size_t i = 0; i < edges.size(); ++i) {
    if (wm[i] <= 0.0) continue;
    int u = edges[i].u, v = edges[i].v;
    if (u > v) std::swap(u, v);
    acc[{u, v}] += wm[i];
  }
  std::vector<Edge> out;
  out.reserve(acc.size());
  for (auto& [key, w] : acc) out.push_back({key.first, key.second, w});
  return Graph(g.n(), GraphKind::undirected, out);
}

}  // namespace motifcut
