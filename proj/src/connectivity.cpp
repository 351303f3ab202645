#include "motifcut/connectivity.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace motifcut {

namespace {

class Dinic {
 public:
  Dinic(int n, double eps) : arcs_(n), level_(n), iter_(n), eps_(eps) {}

  void add_undirected(int u, int v, double cap) {
    arcs_[u].push_back({v, cap, arcs_[v].size()});
    arcs_[v].push_back({u, cap, arcs_[u].size() - 1});
  }

  double run(int s, int t) {
    double flow = 0.0;
    int guard = 10 * static_cast<int>(arcs_.size()) + 10;
    while (guard-- > 0 && bfs(s, t)) {
      std::fill(iter_.begin(), iter_.end(), 0);
      while (true) {
        double f = dfs(s, t, std::numeric_limits<double>::infinity());
        if (f <= eps_) break;
        flow += f;
      }
    }
    return flow;
  }

  std::vector<char> residual_side(int s) const {
    std::vector<char> side(arcs_.size(), 0);
    std::vector<int> stack{s};
    side[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Arc& a : arcs_[v])
        if (a.cap > eps_ && !side[a.to]) {
          side[a.to] = 1;
          stack.push_back(a.to);
        }
    }
    return side;
  }

 private:
  struct Arc {
    int to;
    double cap;
    size_t rev;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (const Arc& a : arcs_[v])
        if (a.cap > eps_ && level_[a.to] < 0) {
          level_[a.to] = level_[v] + 1;
          q.push(a.to);
        }
    }
    return level_[t] >= 0;
  }

  double dfs(int v, int t, double limit) {
    if (v == t) return limit;
    for (size_t& i = iter_[v]; i < arcs_[v].size(); ++i) {
      Arc& a = arcs_[v][i];
      if (a.cap <= eps_ || level_[a.to] != level_[v] + 1) continue;
      double got = dfs(a.to, t, std::min(limit, a.cap));
      if (got > eps_) {
        a.cap -= got;
        arcs_[a.to][a.rev].cap += got;
        return got;
      }
    }
    return 0.0;
  }

  std::vector<std::vector<Arc>> arcs_;
  std::vector<int> level_;
  std::vector<size_t> iter_;
  double eps_;
};

double flow_epsilon(const Graph& g) {
  double max_cap = 0.0;
  for (const Edge& e : g.edges()) max_cap = std::max(max_cap, e.w);
  return (max_cap + 1.0) * 1e-12;
}

Dinic make_dinic(const Graph& g, double eps) {
  Dinic d(g.n(), eps);
  for (const Edge& e : g.edges()) d.add_undirected(e.u, e.v, e.w);
  return d;
}

}  // namespace

double max_flow_min_cut(const Graph& g, int s, int t, std::vector<char>* side) {
  if (g.directed()) throw usage_error("max flow expects an undirected graph");
  if (s == t || s < 0 || t < 0 || s >= g.n() || t >= g.n())
    throw usage_error("invalid flow terminals");
  double eps = flow_epsilon(g);
  Dinic d = make_dinic(g, eps);
  double f = d.run(s, t);
  if (side) *side = d.residual_side(s);
  return f;
}

GomoryHuTree gomory_hu(const Graph& g) {
  if (g.directed()) throw usage_error("Gomory-Hu expects an undirected graph");
  int n = g.n();
  GomoryHuTree tree;
  tree.parent.assign(n, 0);
  tree.flow.assign(n, 0.0);
  if (n > 0) tree.parent[0] = -1;
  double eps = flow_epsilon(g);
  for (int i = 1; i < n; ++i) {
    Dinic d = make_dinic(g, eps);
    tree.flow[i] = d.run(i, tree.parent[i]);
    std::vector<char> side = d.residual_side(i);
    for (int j = i + 1; j < n; ++j)
      if (side[j] && tree.parent[j] == tree.parent[i]) tree.parent[j] = i;
  }
  return tree;
}

double GomoryHuTree::min_cut(int u, int v) const {
  // Walk both endpoints up to the root, then trim the common tail.
  std::vector<int> pu, pv;
  for (int x = u; x >= 0; x = parent[x]) pu.push_back(x);
  for (int x = v; x >= 0; x = parent[x]) pv.push_back(x);
  size_t a = pu.size(), b = pv.size();
  while (a > 0 && b > 0 && pu[a - 1] == pv[b - 1]) {
    --a;
    --b;
  }
  double best = std::numeric_limits<double>::infinity();
  for (size_t i = 0; i < a; ++i) best = std::min(best, flow[pu[i]]);
  for (size_t i = 0; i < b; ++i) best = std::min(best, flow[pv[i]]);
  return best == std::numeric_limits<double>::infinity() ? 0.0 : best;
}

std::vector<double> edge_connectivities(const Graph& gm) {
  GomoryHuTree tree = gomory_hu(gm);
  std::vector<double> out;
  out.reserve(gm.edge_count());
  for (const Edge& e : gm.edges()) out.push_back(tree.min_cut(e.u, e.v));
  return out;
}

}  // namespace motifcut
