#include "motifcut/sparsify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "motifcut/connectivity.hpp"
#include "motifcut/hypergraph.hpp"
#include "motifcut/motif_weights.hpp"
#include "motifcut/rng.hpp"

namespace motifcut {

void SparsifyConfig::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw usage_error("epsilon must be in (0,1)");
  if (!(threshold_scale >= 1.0)) throw usage_error("threshold_scale must be >= 1");
  if (!(c1 > 0.0)) throw usage_error("c1 must be positive");
  if (!(d > 0.0)) throw usage_error("d must be positive");
  if (d1 < 0.0) throw usage_error("d1 must be nonnegative (0 derives c1+1)");
  if (rounds_override < 0) throw usage_error("rounds_override must be nonnegative");
  if (instance_limit <= 0 || budget_entries <= 0)
    throw usage_error("resource limits must be positive");
}

namespace {

double max_r_star(const std::vector<Motif>& motifs) {
  if (motifs.empty()) throw usage_error("at least one motif required");
  int rs = 0;
  for (const Motif& m : motifs) rs = std::max(rs, m.r_star);
  return static_cast<double>(rs);
}

// Critical test with a hair of slack so borderline floating-point equality
// counts as critical on every platform.
bool is_critical(double importance, double threshold) {
  return importance >= threshold * (1.0 - 1e-12);
}

Graph sample_edges(const Graph& g, const std::vector<char>& critical, double p,
                   const SparsifyConfig& cfg, int round) {
  std::vector<Edge> kept;
  kept.reserve(g.edge_count());
  const auto& edges = g.edges();
  for (size_t i = 0; i < edges.size(); ++i) {
    if (critical[i]) {
      kept.push_back(edges[i]);
    } else if (keyed_bernoulli(p, cfg.seed, static_cast<uint64_t>(round),
                               static_cast<uint64_t>(edges[i].u),
                               static_cast<uint64_t>(edges[i].v))) {
      kept.push_back({edges[i].u, edges[i].v, edges[i].w / p});
    }
  }
  return Graph(g.n(), g.kind(), kept);
}

void fill_round_stats(RoundStats* stats, int round, const Graph& before, const Graph& after,
                      const std::vector<char>& critical,
                      std::vector<int> critical_per_motif) {
  if (!stats) return;
  stats->round = round;
  stats->edges_before = static_cast<int>(before.edge_count());
  stats->edges_after = static_cast<int>(after.edge_count());
  stats->critical = static_cast<int>(std::count(critical.begin(), critical.end(), 1));
  stats->critical_per_motif = std::move(critical_per_motif);
  stats->identity = stats->critical == stats->edges_before;
}

}  // namespace

double eps_prime_for(int n, const std::vector<Motif>& motifs, const SparsifyConfig& cfg) {
  if (n < 2) throw usage_error("schedule needs n >= 2");
  return cfg.epsilon / (5.0 * cfg.c1 * max_r_star(motifs) * std::log2(static_cast<double>(n)));
}

int planned_rounds(int n, const std::vector<Motif>& motifs, const SparsifyConfig& cfg) {
  if (cfg.rounds_override > 0) return cfg.rounds_override;
  if (n < 2) throw usage_error("schedule needs n >= 2");
  return static_cast<int>(
      std::ceil(2.0 * cfg.c1 * max_r_star(motifs) * std::log2(static_cast<double>(n))));
}

double sample_probability(const std::vector<Motif>& motifs) {
  return std::exp2(-1.0 / (2.0 * max_r_star(motifs)));
}

ImportanceTable strength_importance(const Graph& g, const Motif& m,
                                    const std::vector<MotifInstance>& instances,
                                    double eps_prime, const SparsifyConfig& cfg) {
  ImportanceTable table;
  table.importance.assign(g.edge_count(), 0.0);
  double log2n = std::log2(static_cast<double>(std::max(2, g.n())));
  table.threshold = cfg.threshold_scale * cfg.d * eps_prime * eps_prime /
                    (m.r_star * (log2n + m.r));
  if (instances.empty()) return table;
  MotifHypergraph h = build_motif_hypergraph(g, instances);
  StrengthTable st = estimate_strengths(h, cfg.exact_strength_limit, cfg.force_estimation);
  for (size_t f = 0; f < h.hyperedges.size(); ++f) {
    double kp = st.kappa_prime[f];
    for (int idx : h.hyperedges[f].member_instances) {
      double w = instance_weight(g, instances[idx]);
      for (auto [u, v] : instances[idx].edge_set) table.importance[g.edge_index(u, v)] += w / kp;
    }
  }
  return table;
}

std::vector<double> motif_edge_connectivities(const Graph& g, const std::vector<double>& wm) {
  std::vector<double> conn(g.edge_count(), 0.0);
  Graph gm = motif_weighted_graph(g, wm);
  if (gm.edge_count() == 0) return conn;
  std::vector<double> per_gm = edge_connectivities(gm);
  const auto& edges = g.edges();
  for (size_t i = 0; i < edges.size(); ++i) {
    int j = gm.edge_index(edges[i].u, edges[i].v);
    if (j >= 0) conn[i] = per_gm[j];
  }
  return conn;
}

ImportanceTable layered_importance(const Graph& g, const Motif& m,
                                   const std::vector<double>& conn, double eps_prime,
                                   const SparsifyConfig& cfg) {
  ImportanceTable table;
  table.importance.assign(g.edge_count(), 0.0);
  double n = static_cast<double>(std::max(2, g.n()));
  double rs = m.r_star, r = m.r;
  double upsilon = eps_prime * eps_prime /
                   (256.0 * (cfg.effective_d1() + r + 2.0 * rs) * rs * rs * r * std::log2(n) *
                    std::log(n));
  table.threshold = cfg.threshold_scale * upsilon;

  double k_min = std::numeric_limits<double>::infinity(), k_max = 0.0;
  for (double k : conn)
    if (k > 0.0) {
      k_min = std::min(k_min, k);
      k_max = std::max(k_max, k);
    }
  if (!std::isfinite(k_min)) return table;  // no edge carries an instance

  int lambda = static_cast<int>(std::ceil(std::log2(std::max(1.0, k_max / k_min))));
  // Layer-count guard from the weight ratio: ceil(r* log2 W + r log2 n) + 1.
  double wratio = g.max_weight() / g.min_weight();
  int guard = static_cast<int>(std::ceil(rs * std::log2(std::max(1.0, wratio)) +
                                         r * std::log2(n))) +
              1;
  lambda = std::max(0, std::min(lambda, guard));

  // Motif weights of the layer subgraph (edges with k_e >= threshold),
  // scattered back to g's edge indexing.
  auto layer_weights = [&](double level) {
    std::vector<double> out(g.edge_count(), 0.0);
    std::vector<Edge> sub;
    std::vector<int> back;
    const auto& edges = g.edges();
    for (size_t i = 0; i < edges.size(); ++i)
      if (conn[i] >= level * (1.0 - 1e-9)) {
        sub.push_back(edges[i]);
        back.push_back(static_cast<int>(i));
      }
    if (sub.empty()) return out;
    Graph layer(g.n(), g.kind(), sub);
    std::vector<double> wm = motif_weights_fast(layer, m, cfg.budget_entries);
    // layer edges were appended in g's edge order, which the Graph
    // constructor preserves (already sorted), so indices line up
    for (size_t i = 0; i < back.size(); ++i) out[back[i]] += wm[i];
    return out;
  };

  std::vector<double> w_cur = layer_weights(k_min);
  for (int j = 0; j <= lambda; ++j) {
    std::vector<double> w_next;
    if (j < lambda)
      w_next = layer_weights(std::ldexp(k_min, j + 1));
    else
      w_next.assign(g.edge_count(), 0.0);
    double factor = rs / std::ldexp(k_min, j);
    for (size_t i = 0; i < table.importance.size(); ++i)
      table.importance[i] += (w_cur[i] - w_next[i]) * factor;
    w_cur = std::move(w_next);
  }
  return table;
}

Graph partial_sparsification_maintained(const Graph& g, double eps_prime,
                                        const std::vector<Motif>& motifs,
                                        const std::vector<std::vector<MotifInstance>>& instances,
                                        const SparsifyConfig& cfg, int round,
                                        RoundStats* stats) {
  if (!(eps_prime > 0.0 && eps_prime < 1.0)) throw usage_error("eps_prime must be in (0,1)");
  if (instances.size() != motifs.size())
    throw usage_error("one instance list per motif required");
  std::vector<char> critical(g.edge_count(), 0);
  std::vector<int> per_motif;
  for (size_t i = 0; i < motifs.size(); ++i) {
    ImportanceTable table = strength_importance(g, motifs[i], instances[i], eps_prime, cfg);
    int count = 0;
    for (size_t e = 0; e < table.importance.size(); ++e)
      if (is_critical(table.importance[e], table.threshold)) {
        critical[e] = 1;
        ++count;
      }
    per_motif.push_back(count);
    // Critical-set size bound (strength estimates are within a factor 2, so
    // the constant is 4): r* 4 r (n-1) / threshold.
    double bound = 4.0 * motifs[i].r * motifs[i].r_star * (g.n() - 1) / table.threshold;
    if (count > bound * (1.0 + 1e-9))
      throw std::logic_error("critical-edge count bound violated (strength engine)");
  }
  double p = sample_probability(motifs);
  Graph out = sample_edges(g, critical, p, cfg, round);
  fill_round_stats(stats, round, g, out, critical, std::move(per_motif));
  return out;
}

Graph partial_sparsification(const Graph& g, double eps_prime,
                             const std::vector<Motif>& motifs, const SparsifyConfig& cfg,
                             int round, RoundStats* stats) {
  std::vector<std::vector<MotifInstance>> instances;
  instances.reserve(motifs.size());
  for (const Motif& m : motifs)
    instances.push_back(enumerate_instances(g, m, cfg.instance_limit));
  return partial_sparsification_maintained(g, eps_prime, motifs, instances, cfg, round, stats);
}

Graph fast_partial_sparsification(const Graph& g, double eps_prime,
                                  const std::vector<Motif>& motifs, const SparsifyConfig& cfg,
                                  int round, RoundStats* stats) {
  if (!(eps_prime > 0.0 && eps_prime < 1.0)) throw usage_error("eps_prime must be in (0,1)");
  if (g.edge_count() == 0) {
    fill_round_stats(stats, round, g, g, {}, std::vector<int>(motifs.size(), 0));
    return g;
  }
  // Rescale so the minimum weight is 1; importances are computed on the
  // rescaled graph, sampling applies to the original weights.
  double unit = g.min_weight();
  std::vector<Edge> scaled = g.edges();
  for (Edge& e : scaled) e.w /= unit;
  Graph g1(g.n(), g.kind(), scaled);

  std::vector<char> critical(g.edge_count(), 0);
  std::vector<int> per_motif;
  for (const Motif& m : motifs) {
    std::vector<double> wm = motif_weights_fast(g1, m, cfg.budget_entries);
    std::vector<double> conn = motif_edge_connectivities(g1, wm);
    ImportanceTable table = layered_importance(g1, m, conn, eps_prime, cfg);
    int count = 0;
    for (size_t e = 0; e < table.importance.size(); ++e)
      if (is_critical(table.importance[e], table.threshold)) {
        critical[e] = 1;
        ++count;
      }
    per_motif.push_back(count);
    // Critical-set size bound: sum of nu-hat is at most 2 (r*)^2 (n-1).
    double bound = 2.0 * m.r_star * m.r_star * (g.n() - 1) / table.threshold;
    if (count > bound * (1.0 + 1e-9))
      throw std::logic_error("critical-edge count bound violated (connectivity engine)");
  }
  double p = sample_probability(motifs);
  Graph out = sample_edges(g, critical, p, cfg, round);
  fill_round_stats(stats, round, g, out, critical, std::move(per_motif));
  return out;
}

Graph motif_sparsification(const Graph& g, const std::vector<Motif>& motifs,
                           const SparsifyConfig& cfg, SparsifyStats* stats) {
  cfg.validate();
  if (motifs.empty()) throw usage_error("at least one motif required");
  for (const Motif& m : motifs)
    if (g.directed() != (m.kind == GraphKind::directed))
      throw usage_error("graph and motif kinds must match");
  SparsifyStats local;
  SparsifyStats& st = stats ? *stats : local;
  st = SparsifyStats{};
  if (g.n() < 2 || g.edge_count() == 0) return g;

  double eps_prime = eps_prime_for(g.n(), motifs, cfg);
  int rounds = planned_rounds(g.n(), motifs, cfg);
  if (cfg.rounds_override <= 0) {
    // The schedule must compound to the target accuracy.
    if (std::pow(1.0 + eps_prime, rounds) > (1.0 + cfg.epsilon) * (1.0 + 1e-9))
      throw std::logic_error("(1+eps')^rounds exceeds 1+eps");
  }
  st.eps_prime = eps_prime;
  st.rounds_planned = rounds;
  st.sample_probability = sample_probability(motifs);

  std::vector<std::vector<MotifInstance>> instances;
  if (cfg.engine == Engine::strength) {
    instances.reserve(motifs.size());
    for (const Motif& m : motifs)
      instances.push_back(enumerate_instances(g, m, cfg.instance_limit));
  }

  Graph cur = g;
  for (int t = 0; t < rounds; ++t) {
    RoundStats rs;
    Graph next =
        cfg.engine == Engine::strength
            ? partial_sparsification_maintained(cur, eps_prime, motifs, instances, cfg, t, &rs)
            : fast_partial_sparsification(cur, eps_prime, motifs, cfg, t, &rs);
    if (cfg.engine == Engine::strength) {
      // Instances only ever die (a kept edge changes weight, never identity).
      for (auto& list : instances) {
        std::vector<MotifInstance> alive;
        alive.reserve(list.size());
        for (MotifInstance& inst : list) {
          bool ok = true;
          for (auto [u, v] : inst.edge_set)
            if (next.edge_index(u, v) < 0) {
              ok = false;
              break;
            }
          if (ok) alive.push_back(std::move(inst));
        }
        list = std::move(alive);
      }
    }
    st.rounds.push_back(rs);
    st.rounds_run = t + 1;
    bool fixed_point = rs.identity || next.edge_count() == 0;
    cur = std::move(next);
    if (fixed_point) {
      st.early_exit = t + 1 < rounds;
      break;
    }
  }
  return cur;
}

}  // namespace motifcut
