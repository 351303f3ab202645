#include "motifcut/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <json.hpp>

#include "motifcut/connectivity.hpp"
#include "motifcut/hypergraph.hpp"
#include "motifcut/motif_weights.hpp"
#include "motifcut/rng.hpp"
#include "motifcut/sparsify.hpp"

namespace motifcut {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Instance vertex sets packed into 64-bit words for fast crossing tests.
struct PackedInstances {
  int words = 1;
  size_t count = 0;
  std::vector<uint64_t> masks;  // count * words, instance-major
  std::vector<double> weights;
};

PackedInstances pack_instances(const std::vector<MotifInstance>& list, int n) {
  PackedInstances p;
  p.words = (n + 63) / 64;
  p.count = list.size();
  p.masks.assign(p.count * p.words, 0);
  p.weights.resize(p.count);
  for (size_t i = 0; i < p.count; ++i) {
    for (int v : list[i].vertex_map) p.masks[i * p.words + v / 64] |= 1ull << (v % 64);
    p.weights[i] = list[i].weight;
  }
  return p;
}

// Total weight of instances with vertices on both sides of the bitmask cut.
// Extra high bits in ~side are harmless: instance masks never set them.
double packed_cut_value(const PackedInstances& p, const uint64_t* side) {
  double val = 0.0;
  for (size_t i = 0; i < p.count; ++i) {
    const uint64_t* m = &p.masks[i * p.words];
    bool on1 = false, on0 = false;
    for (int w = 0; w < p.words; ++w) {
      if (m[w] & side[w]) on1 = true;
      if (m[w] & ~side[w]) on0 = true;
    }
    if (on1 && on0) val += p.weights[i];
  }
  return val;
}

double relative_cut_error(double val, double val_hat) {
  if (val == 0.0) return val_hat == 0.0 ? 0.0 : kInf;
  return std::abs(val_hat - val) / val;
}

Cut cut_from_words(const std::vector<uint64_t>& side, int n) {
  Cut cut;
  cut.side.assign(n, 0);
  for (int v = 0; v < n; ++v) cut.side[v] = (side[v / 64] >> (v % 64)) & 1u;
  return cut;
}

VerificationReport exhaustive_error(const std::vector<MotifInstance>& ig,
                                    const std::vector<MotifInstance>& ih, int n) {
  VerificationReport rep;
  rep.mode = "exhaustive";
  if (n < 2) return rep;
  PackedInstances pg = pack_instances(ig, n);
  PackedInstances ph = pack_instances(ih, n);
  rep.cuts_checked = (1ll << (n - 1)) - 1;
  uint64_t best = 1;  // S = {0}
  double best_err = -1.0;
  const uint64_t total = 1ull << (n - 1);
  for (uint64_t mask = 0; mask + 1 < total; ++mask) {
    uint64_t side = (mask << 1) | 1ull;
    double err = relative_cut_error(packed_cut_value(pg, &side), packed_cut_value(ph, &side));
    if (err > best_err) {
      best_err = err;
      best = side;
      if (err == kInf) break;
    }
  }
  rep.max_relative_error = std::max(best_err, 0.0);
  rep.argmax_cut = cut_from_words({best}, n);
  return rep;
}

void check_pair(const Graph& g, const Graph& g_hat) {
  if (g.n() != g_hat.n()) throw usage_error("graphs have different vertex counts");
  if (g.kind() != g_hat.kind()) throw usage_error("graphs have different kinds");
}

}  // namespace

std::string VerificationReport::to_json() const {
  nlohmann::json j;
  if (std::isinf(max_relative_error))
    j["max_relative_error"] = "inf";
  else
    j["max_relative_error"] = max_relative_error;
  j["argmax_cut"] = argmax_cut.members();
  j["cuts_checked"] = cuts_checked;
  j["mode"] = mode;
  nlohmann::json inv = nlohmann::json::array();
  for (const InvariantResult& r : invariants) {
    nlohmann::json e;
    e["name"] = r.name;
    e["pass"] = r.pass;
    if (std::isinf(r.slack))
      e["slack"] = r.slack > 0 ? "inf" : "-inf";
    else
      e["slack"] = r.slack;
    inv.push_back(e);
  }
  j["invariants"] = inv;
  return j.dump(2);
}

VerificationReport max_cut_error(const Graph& g, const Graph& g_hat, const Motif& m) {
  check_pair(g, g_hat);
  if (g.n() > 20)
    throw resource_limit_error("exhaustive cut check needs n <= 20; use the sampled mode");
  return exhaustive_error(enumerate_instances(g, m), enumerate_instances(g_hat, m), g.n());
}

VerificationReport sampled_cut_error(const Graph& g, const Graph& g_hat, const Motif& m,
                                     long long samples, uint64_t seed) {
  check_pair(g, g_hat);
  if (samples < 1) throw usage_error("sampled cut check needs at least one sample");
  const int n = g.n();
  VerificationReport rep;
  rep.mode = "sampled";
  if (n < 2) return rep;
  PackedInstances pg = pack_instances(enumerate_instances(g, m), n);
  PackedInstances ph = pack_instances(enumerate_instances(g_hat, m), n);
  rep.cuts_checked = n + samples;

  const int words = (n + 63) / 64;
  std::vector<uint64_t> side(words, 0);
  std::vector<uint64_t> best_side(words, 0);
  best_side[0] = 1;
  double best_err = -1.0;
  auto consider = [&]() {
    double err = relative_cut_error(packed_cut_value(pg, side.data()),
                                    packed_cut_value(ph, side.data()));
    if (err > best_err) {
      best_err = err;
      best_side = side;
    }
  };

  for (int v = 0; v < n; ++v) {
    std::fill(side.begin(), side.end(), 0);
    side[v / 64] = 1ull << (v % 64);
    consider();
  }
  for (long long i = 0; i < samples; ++i) {
    // keyed coin per vertex; bump the salt until the cut is proper
    for (uint64_t salt = 0;; ++salt) {
      std::fill(side.begin(), side.end(), 0);
      bool any0 = false, any1 = false;
      for (int v = 0; v < n; ++v) {
        if (hash_key(seed, 0x63757473ull, static_cast<uint64_t>(i) * 1024 + salt,
                     static_cast<uint64_t>(v)) &
            1ull) {
          side[v / 64] |= 1ull << (v % 64);
          any1 = true;
        } else {
          any0 = true;
        }
      }
      if (any0 && any1) break;
    }
    consider();
  }
  rep.max_relative_error = std::max(best_err, 0.0);
  rep.argmax_cut = cut_from_words(best_side, n);
  return rep;
}

std::vector<double> instance_connectivities(const Graph& g,
                                            const std::vector<MotifInstance>& instances) {
  if (g.n() > 16) throw resource_limit_error("exact instance connectivities need n <= 16");
  std::vector<double> k(instances.size(), kInf);
  if (instances.empty() || g.n() < 2) return k;
  PackedInstances p = pack_instances(instances, g.n());
  std::vector<uint8_t> crossing(p.count, 0);
  for_each_cut(
      g.n(),
      [&](const Cut& cut) {
        uint64_t side = 0;
        for (int v = 0; v < g.n(); ++v)
          if (cut.side[v]) side |= 1ull << v;
        double val = 0.0;
        for (size_t i = 0; i < p.count; ++i) {
          uint64_t m = p.masks[i];
          crossing[i] = (m & side) && (m & ~side);
          if (crossing[i]) val += p.weights[i];
        }
        for (size_t i = 0; i < p.count; ++i)
          if (crossing[i] && val < k[i]) k[i] = val;
      },
      16);
  return k;
}

double instance_connectivity(const Graph& g, const Motif& m, const MotifInstance& inst) {
  auto instances = enumerate_instances(g, m);
  auto k = instance_connectivities(g, instances);
  auto key = inst.edge_set;
  if (!g.directed())
    for (auto& [a, b] : key)
      if (a > b) std::swap(a, b);
  std::sort(key.begin(), key.end());
  for (size_t i = 0; i < instances.size(); ++i)
    if (instances[i].edge_set == key) return k[i];
  throw usage_error("instance not found in the graph");
}

std::vector<MotifInstance> enumerate_induced_instances(const Graph& g, const Motif& m,
                                                       long long instance_limit) {
  std::vector<MotifInstance> out;
  for (MotifInstance& inst : enumerate_instances(g, m, instance_limit)) {
    const auto& vm = inst.vertex_map;
    int induced = 0;
    for (size_t a = 0; a < vm.size(); ++a)
      for (size_t b = 0; b < vm.size(); ++b) {
        if (a == b || (!g.directed() && a > b)) continue;
        if (g.has_edge(vm[a], vm[b])) ++induced;
      }
    if (induced == m.r_star) out.push_back(std::move(inst));
  }
  return out;
}

VerificationReport max_induced_cut_error(const Graph& g, const Graph& g_hat, const Motif& m) {
  check_pair(g, g_hat);
  if (g.n() > 20)
    throw resource_limit_error("exhaustive induced cut check needs n <= 20");
  return exhaustive_error(enumerate_induced_instances(g, m),
                          enumerate_induced_instances(g_hat, m), g.n());
}

Graph build_delta_minus(int n) {
  if (n < 6) throw usage_error("the clique-minus-triangle graph needs n >= 6");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (j > 2) edges.push_back({i, j, 1.0});
  return Graph(n, GraphKind::undirected, edges);
}

CliqueMinusEdgeExample clique_minus_edge_example(int n) {
  if (n < 5) throw usage_error("the clique-minus-edge example needs n >= 5");
  std::vector<Edge> ge;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!(i == 0 && j == 1)) ge.push_back({i, j, 1.0});
  double n2 = static_cast<double>(n) * n;
  std::vector<Edge> he;
  he.push_back({0, 1, n2});
  for (int x = 2; x < n; ++x) he.push_back({0, x, 1.0 / n2});
  CliqueMinusEdgeExample ex{Graph(n, GraphKind::undirected, std::move(ge)),
                            Graph(n, GraphKind::undirected, std::move(he)),
                            {}};
  if (n <= 20) {
    Motif path2 = make_motif(3, GraphKind::undirected, {{0, 1}, {1, 2}});
    ex.report = max_induced_cut_error(ex.g, ex.g_hat, path2);
  } else {
    ex.report.mode = "skipped";
  }
  return ex;
}

VerificationReport check_invariants(const Graph& g, const Motif& m) {
  if (g.n() > 14) throw resource_limit_error("invariant suite needs n <= 14");
  VerificationReport rep;
  rep.mode = "invariants";
  const int n = g.n();
  if (n < 2) return rep;

  auto add = [&rep](const std::string& name, double slack) {
    bool pass = slack >= 0.0;
    rep.invariants.push_back({name, pass, slack});
    if (!pass) rep.max_relative_error = std::max(rep.max_relative_error, -slack);
  };
  auto rel_excess = [](double value, double bound) {
    // positive when value exceeds bound, scaled to the bound's magnitude
    return (value - bound) / std::max(1.0, std::abs(bound));
  };

  const auto instances = enumerate_instances(g, m);
  const MotifHypergraph h = build_motif_hypergraph(g, instances);
  std::vector<std::vector<int>> regions;
  const StrengthTable exact = exact_strengths(h, 64, &regions);
  const std::vector<double> k_inst = instance_connectivities(g, instances);

  SparsifyConfig icfg;
  icfg.epsilon = 0.3;
  icfg.seed = 1;
  icfg.rounds_override = 12;
  const std::vector<Motif> motifs{m};
  const double ep = eps_prime_for(n, motifs, icfg);

  // The hypergraph's cut values agree with direct instance counting.
  if (n <= 12) {
    double worst = 0.0;
    for_each_cut(n, [&](const Cut& cut) {
      double direct = motif_cut_value(instances, cut);
      double viah = 0.0;
      for (const Hyperedge& f : h.hyperedges) {
        bool on1 = false, on0 = false;
        for (int v : f.verts) (cut.side[v] ? on1 : on0) = true;
        if (on1 && on0) viah += f.w;
      }
      worst = std::max(worst, std::abs(direct - viah) / std::max({1.0, direct, viah}));
    });
    add("hypergraph_cut_transfer", 1e-12 - worst);
  }

  // Strength of a hyperedge == max over containing vertex sets of the
  // induced sub-hypergraph's minimum cut (brute force over all subsets).
  if (n <= 8 && !h.hyperedges.empty()) {
    std::vector<double> brute(h.hyperedges.size(), 0.0);
    std::vector<int> subset;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (std::popcount(mask) < 2) continue;
      subset.clear();
      for (int v = 0; v < n; ++v)
        if (mask >> v & 1u) subset.push_back(v);
      double c = hypergraph_min_cut_brute(h, subset).second;
      if (c <= 0.0) continue;
      for (size_t f = 0; f < h.hyperedges.size(); ++f) {
        bool inside = true;
        for (int v : h.hyperedges[f].verts)
          if (!(mask >> v & 1u)) {
            inside = false;
            break;
          }
        if (inside) brute[f] = std::max(brute[f], c);
      }
    }
    double worst = 0.0;
    for (size_t f = 0; f < brute.size(); ++f)
      worst = std::max(worst, std::abs(brute[f] - exact.kappa[f]) / std::max(1.0, brute[f]));
    add("strength_definition_oracle", 1e-9 - worst);
  }

  // sum over hyperedges of w/kappa <= n - (number of components).
  {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Hyperedge& f : h.hyperedges)
      for (size_t i = 1; i < f.verts.size(); ++i)
        parent[find(f.verts[i])] = find(f.verts[0]);
    int comps = 0;
    for (int v = 0; v < n; ++v)
      if (find(v) == v) ++comps;
    double sum = 0.0;
    for (size_t f = 0; f < h.hyperedges.size(); ++f) sum += h.hyperedges[f].w / exact.kappa[f];
    add("strength_mass_bound", 1e-9 - rel_excess(sum, static_cast<double>(n - comps)));
  }

  // Dividing each hyperedge weight by its strength makes every minimum cut
  // exactly 1 (vacuous when the hypergraph does not span a connected graph).
  if (!h.hyperedges.empty()) {
    double mn = kInf;
    for_each_cut(n, [&](const Cut& cut) {
      double v = 0.0;
      for (size_t f = 0; f < h.hyperedges.size(); ++f) {
        bool on1 = false, on0 = false;
        for (int x : h.hyperedges[f].verts) (cut.side[x] ? on1 : on0) = true;
        if (on1 && on0) v += h.hyperedges[f].w / exact.kappa[f];
      }
      mn = std::min(mn, v);
    });
    add("strength_normalized_min_cut", mn > 1e-12 ? 1e-9 - std::abs(mn - 1.0) : 0.0);
  }

  // Estimated strengths bracket the exact ones: kappa' <= kappa < 2 kappa'.
  {
    const StrengthTable est = estimate_strengths(h, 64, /*force_estimation=*/true);
    double worst_lower = 0.0, worst_upper = 0.0;
    for (size_t f = 0; f < h.hyperedges.size(); ++f) {
      worst_lower = std::max(worst_lower, rel_excess(est.kappa_prime[f], exact.kappa[f]));
      worst_upper = std::max(worst_upper, rel_excess(exact.kappa[f], 2.0 * est.kappa_prime[f]));
    }
    add("strength_estimate_lower", 1e-9 - worst_lower);
    add("strength_estimate_halving", 1e-9 - worst_upper);
  }

  // The regions visited by the exact decomposition form a laminar family.
  {
    bool ok = true;
    std::vector<int> inter;
    for (size_t i = 0; i < regions.size() && ok; ++i)
      for (size_t j = i + 1; j < regions.size() && ok; ++j) {
        inter.clear();
        std::set_intersection(regions[i].begin(), regions[i].end(), regions[j].begin(),
                              regions[j].end(), std::back_inserter(inter));
        size_t smaller = std::min(regions[i].size(), regions[j].size());
        if (!inter.empty() && inter.size() != smaller) ok = false;
      }
    add("strength_components_laminar", ok ? 0.0 : -1.0);
  }

  // Enumeration-free motif weights match the enumeration-based ones.
  const std::vector<double> wn = motif_weights_naive(g, m);
  const std::vector<double> wf = motif_weights_fast(g, m);
  {
    double worst = 0.0;
    for (int e = 0; e < g.edge_count(); ++e)
      worst = std::max(worst, std::abs(wf[e] - wn[e]) / std::max(1.0, wn[e]));
    add("motif_weights_fast_matches_naive", 1e-9 - worst);
  }

  if (m.r >= 3) {
    const SigmaGraph s = build_sigma_graph(g, m);
    // Total triangle mass over the automorphism count == total instance weight.
    double direct = 0.0;
    for (const MotifInstance& inst : instances) direct += inst.weight;
    double total = sigma_triangle_total(s) / static_cast<double>(automorphism_count(m));
    add("triangle_mass_matches_enumeration",
        1e-9 - std::abs(total - direct) / std::max(1.0, direct));

    // Zero-weight sigma vertices carry no triangle mass: zeroing their
    // incident cross entries changes nothing, bit for bit.
    SigmaGraph z = s;
    for (long long i = 0; i < z.size[0]; ++i)
      if (z.vweight[0](i) == 0.0) {
        z.W12.row(i).setZero();
        z.W13.row(i).setZero();
      }
    for (long long i = 0; i < z.size[1]; ++i)
      if (z.vweight[1](i) == 0.0) {
        z.W12.col(i).setZero();
        z.W23.row(i).setZero();
      }
    for (long long i = 0; i < z.size[2]; ++i)
      if (z.vweight[2](i) == 0.0) {
        z.W13.col(i).setZero();
        z.W23.col(i).setZero();
      }
    const std::vector<double> wz = motif_weights_from_sigma(g, m, z);
    double dev = 0.0;
    for (int e = 0; e < g.edge_count(); ++e) dev = std::max(dev, std::abs(wz[e] - wf[e]));
    add("sigma_zero_rows_carry_no_mass", dev == 0.0 ? 0.0 : -dev);
  }

  // Motif-weighted cut values sandwich the motif cut value:
  // Val <= Val_weighted <= r* Val on every cut.
  const Graph gm = motif_weighted_graph(g, wf);
  if (n <= 10) {
    double worst = 0.0;
    for_each_cut(n, [&](const Cut& cut) {
      double val = motif_cut_value(instances, cut);
      double gmval = 0.0;
      for (const Edge& e : gm.edges())
        if (cut.side[e.u] != cut.side[e.v]) gmval += e.w;
      worst = std::max(worst, rel_excess(val, gmval));
      worst = std::max(worst, rel_excess(gmval, m.r_star * val));
    });
    add("motif_weight_cut_sandwich", 1e-9 - worst);
  }

  // Per instance: mu = w/k_I and nu = w r*/rho satisfy mu <= nu <= r* mu.
  const std::vector<double> conn = motif_edge_connectivities(g, wf);
  std::vector<double> rho(instances.size(), kInf);
  for (size_t i = 0; i < instances.size(); ++i)
    for (auto [u, v] : instances[i].edge_set)
      rho[i] = std::min(rho[i], conn[g.edge_index(u, v)]);
  if (n <= 12 && !instances.empty()) {
    double worst = 0.0;
    for (size_t i = 0; i < instances.size(); ++i) {
      double mu = instances[i].weight / k_inst[i];
      double nu = instances[i].weight * m.r_star / rho[i];
      worst = std::max(worst, rel_excess(mu, nu));
      worst = std::max(worst, rel_excess(nu, m.r_star * mu));
    }
    add("connectivity_sandwich_mu_nu", 1e-9 - worst);
  }

  // The layered importance doubles-at-most the exact nu mass per edge:
  // nu_M(e) <= nu_hat(e) <= 2 nu_M(e).
  {
    const ImportanceTable lt = layered_importance(g, m, conn, ep, icfg);
    std::vector<double> nu_m(g.edge_count(), 0.0);
    for (size_t i = 0; i < instances.size(); ++i) {
      double nu = instances[i].weight * m.r_star / rho[i];
      for (auto [u, v] : instances[i].edge_set) nu_m[g.edge_index(u, v)] += nu;
    }
    double worst = 0.0;
    for (int e = 0; e < g.edge_count(); ++e) {
      worst = std::max(worst, rel_excess(nu_m[e], lt.importance[e]));
      worst = std::max(worst, rel_excess(lt.importance[e], 2.0 * nu_m[e]));
    }
    add("layered_importance_sandwich", 1e-9 - worst);
  }

  // Edges whose exact importance clears the threshold are marked critical by
  // the engine's (estimate-based) table, at scale 1 and at the test scale.
  auto strength_preservation = [&](double scale, const std::string& name) {
    SparsifyConfig c = icfg;
    c.threshold_scale = scale;
    std::vector<double> eta(g.edge_count(), 0.0);
    for (size_t f = 0; f < h.hyperedges.size(); ++f)
      for (int i : h.hyperedges[f].member_instances)
        for (auto [u, v] : instances[i].edge_set)
          eta[g.edge_index(u, v)] += instances[i].weight / exact.kappa[f];
    const ImportanceTable te = strength_importance(g, m, instances, ep, c);
    SparsifyConfig cf = c;
    cf.force_estimation = true;
    const ImportanceTable tf = strength_importance(g, m, instances, ep, cf);
    double slack = 0.0;
    bool first = true;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (eta[e] < te.threshold) continue;
      double margin = std::min(te.importance[e], tf.importance[e]) -
                      te.threshold * (1.0 - 1e-12);
      slack = first ? margin : std::min(slack, margin);
      first = false;
    }
    add(name, slack);
  };
  strength_preservation(1.0, "critical_preservation_strength_scale1");
  strength_preservation(1e9, "critical_preservation_strength_scaled");

  auto connectivity_preservation = [&](double scale, const std::string& name) {
    SparsifyConfig c = icfg;
    c.threshold_scale = scale;
    const ImportanceTable lt = layered_importance(g, m, conn, ep, c);
    std::vector<double> mu_m(g.edge_count(), 0.0);
    for (size_t i = 0; i < instances.size(); ++i)
      for (auto [u, v] : instances[i].edge_set)
        mu_m[g.edge_index(u, v)] += instances[i].weight / k_inst[i];
    double upsilon = 2.0 * m.r_star * lt.threshold;
    double slack = 0.0;
    bool first = true;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (mu_m[e] < upsilon) continue;
      double margin = lt.importance[e] - lt.threshold * (1.0 - 1e-12);
      slack = first ? margin : std::min(slack, margin);
      first = false;
    }
    add(name, slack);
  };
  connectivity_preservation(1.0, "critical_preservation_connectivity_scale1");
  connectivity_preservation(1e9, "critical_preservation_connectivity_scaled");

  // Critical-edge counts stay under the mass-derived ceilings.
  {
    SparsifyConfig c = icfg;
    c.threshold_scale = 1e9;
    const ImportanceTable te = strength_importance(g, m, instances, ep, c);
    int count = 0;
    for (double imp : te.importance)
      if (imp >= te.threshold * (1.0 - 1e-12)) ++count;
    double bound = 4.0 * m.r * m.r_star * (n - 1) / te.threshold;
    add("critical_count_bound_strength", 1e-9 - rel_excess(count, bound));

    const ImportanceTable lt = layered_importance(g, m, conn, ep, c);
    count = 0;
    for (double imp : lt.importance)
      if (imp >= lt.threshold * (1.0 - 1e-12)) ++count;
    bound = 2.0 * m.r_star * m.r_star * (n - 1) / lt.threshold;
    add("critical_count_bound_connectivity", 1e-9 - rel_excess(count, bound));
  }

  // Every output edge exists in the input with weight w * (1/p)^t for an
  // integer number of sampled rounds t within the executed count.
  auto subgraph_property = [&](Engine eng, const std::string& name) {
    SparsifyConfig c = icfg;
    c.engine = eng;
    c.threshold_scale = 1e9;
    SparsifyStats st;
    Graph out = motif_sparsification(g, motifs, c, &st);
    double p = sample_probability(motifs);
    double worst = 0.0;
    bool ok = true;
    for (const Edge& e : out.edges()) {
      int idx = g.edge_index(e.u, e.v);
      if (idx < 0) {
        ok = false;
        break;
      }
      double t = std::log(e.w / g.edges()[idx].w) / std::log(1.0 / p);
      double tr = std::round(t);
      if (tr < -0.5 || tr > st.rounds_run + 0.5) {
        ok = false;
        break;
      }
      worst = std::max(worst, std::abs(t - tr));
    }
    add(name, ok ? 1e-6 - worst : -1.0);
  };
  subgraph_property(Engine::strength, "sampling_subgraph_property_strength");
  subgraph_property(Engine::connectivity, "sampling_subgraph_property_connectivity");

  // Identical configurations reproduce identical outputs.
  auto determinism = [&](Engine eng, const std::string& name) {
    SparsifyConfig c = icfg;
    c.engine = eng;
    c.threshold_scale = 1e9;
    Graph a = motif_sparsification(g, motifs, c);
    Graph b = motif_sparsification(g, motifs, c);
    add(name, graph_to_string(a) == graph_to_string(b) ? 0.0 : -1.0);
  };
  determinism(Engine::strength, "determinism_strength");
  determinism(Engine::connectivity, "determinism_connectivity");

  return rep;
}

}  // namespace motifcut
