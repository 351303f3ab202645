#include <doctest.h>

#include <cmath>

#include "motifcut/motif_enum.hpp"
#include "motifcut/motif_weights.hpp"
#include "oracles.hpp"

using namespace motifcut;

TEST_CASE("K4 triangle weights are 2 per edge") {
  Graph g = make_clique(4);
  Motif tri = parse_motif("triangle");
  for (auto& wm : {motif_weights_fast(g, tri), motif_weights_naive(g, tri)}) {
    REQUIRE(wm.size() == 6);
    for (double w : wm) CHECK(w == doctest::Approx(2.0).epsilon(1e-12));
  }
}

TEST_CASE("K4 2-path weights are 4 per edge") {
  Graph g = make_clique(4);
  auto wm = motif_weights_fast(g, parse_motif("path2"));
  for (double w : wm) CHECK(w == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("weighted triangle: every edge carries the full product") {
  Graph tri(3, GraphKind::undirected, {{0, 1, 2.0}, {0, 2, 5.0}, {1, 2, 3.0}});
  auto wm = motif_weights_fast(tri, parse_motif("triangle"));
  REQUIRE(wm.size() == 3);
  for (double w : wm) CHECK(w == doctest::Approx(30.0).epsilon(1e-12));
}

TEST_CASE("sigma graph shape for a 4-motif on 5 vertices") {
  Graph g = make_clique(5);
  Motif c4 = parse_motif("cycle4");
  SigmaGraph s = build_sigma_graph(g, c4);
  CHECK(s.k[0] == 2);
  CHECK(s.k[1] == 1);
  CHECK(s.k[2] == 1);
  CHECK(s.size[0] == 25);
  CHECK(s.size[1] == 5);
  CHECK(s.size[2] == 5);
  // tuples with repeated vertices get weight zero: 25 - 20 of them
  int nonzero = 0;
  for (int i = 0; i < 25; ++i)
    if (s.vweight[0](i) != 0.0) ++nonzero;
  CHECK(nonzero == 20);
}

TEST_CASE("triangle mass equals automorphisms times total instance weight") {
  for (int seed = 0; seed < 8; ++seed) {
    Graph g = make_gnp_weighted(7, 0.6, 520 + seed, 0.5, 2.0);
    for (const char* spec : {"triangle", "path2", "cycle4"}) {
      Motif m = parse_motif(spec);
      double total = 0.0;
      for (const auto& i : enumerate_instances(g, m)) total += i.weight;
      double mass = sigma_triangle_total(build_sigma_graph(g, m));
      CHECK(mass == doctest::Approx(total * static_cast<double>(automorphism_count(m)))
                        .epsilon(1e-10));
    }
  }
}

TEST_CASE("fast weights match naive and the independent oracle") {
  const char* und[] = {"triangle", "path2", "path3", "cycle4", "clique4"};
  for (int seed = 0; seed < 10; ++seed) {
    Graph g = make_gnp_weighted(6 + seed % 4, 0.55, 640 + seed, 0.5, 2.0);
    for (const char* spec : und) {
      Motif m = parse_motif(spec);
      auto wf = motif_weights_fast(g, m);
      auto wn = motif_weights_naive(g, m);
      auto wo = oracle::motif_weights(g, m);
      REQUIRE(wf.size() == wn.size());
      for (size_t e = 0; e < wf.size(); ++e) {
        CHECK(std::abs(wf[e] - wn[e]) <= 1e-9 * std::max(1.0, std::abs(wn[e])));
        CHECK(std::abs(wn[e] - wo[e]) <= 1e-9 * std::max(1.0, std::abs(wo[e])));
      }
    }
  }
  for (int seed = 0; seed < 6; ++seed) {
    Graph g = make_gnp_weighted(6, 0.5, 910 + seed, 0.5, 2.0, GraphKind::directed);
    for (const char* spec : {"d:triangle", "d:path2", "d:path3"}) {
      Motif m = parse_motif(spec);
      auto wf = motif_weights_fast(g, m);
      auto wn = motif_weights_naive(g, m);
      for (size_t e = 0; e < wf.size(); ++e)
        CHECK(std::abs(wf[e] - wn[e]) <= 1e-9 * std::max(1.0, std::abs(wn[e])));
    }
  }
}

TEST_CASE("2-vertex motifs bypass the reduction") {
  Graph g = make_gnp_weighted(8, 0.5, 11, 0.5, 2.0);
  Motif edge = parse_motif("2/u/0 1 1");
  auto wm = motif_weights_fast(g, edge);
  for (int e = 0; e < g.edge_count(); ++e) CHECK(wm[e] == g.edges()[e].w);
  CHECK_THROWS_AS(build_sigma_graph(g, edge), usage_error);
}

TEST_CASE("tuple budget is enforced") {
  Graph g = make_clique(20);
  CHECK_THROWS_AS(motif_weights_fast(g, parse_motif("clique4"), 1000), resource_limit_error);
}

TEST_CASE("kind mismatch is rejected") {
  Graph g = make_clique(5);
  CHECK_THROWS_AS(motif_weights_fast(g, parse_motif("d:triangle")), usage_error);
}

TEST_CASE("motif weighted graph merges arcs and drops uncovered edges") {
  // bidirected unit triangle: each arc lies in exactly one directed 3-cycle
  Graph g(3, GraphKind::directed,
          {{0, 1, 1.0}, {1, 2, 1.0}, {2, 0, 1.0}, {1, 0, 1.0}, {2, 1, 1.0}, {0, 2, 1.0}});
  auto wm = motif_weights_fast(g, parse_motif("d:triangle"));
  Graph gm = motif_weighted_graph(g, wm);
  CHECK_FALSE(gm.directed());
  REQUIRE(gm.edge_count() == 3);  // arc pairs merged
  for (const Edge& e : gm.edges()) CHECK(e.w == doctest::Approx(2.0).epsilon(1e-12));

  // an edge in no triangle disappears from the weighted graph
  Graph tail(4, GraphKind::undirected, {{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}});
  auto wt = motif_weights_fast(tail, parse_motif("triangle"));
  Graph tm = motif_weighted_graph(tail, wt);
  CHECK(tm.edge_count() == 3);
  CHECK(tm.edge_index(2, 3) == -1);
}

TEST_CASE("zeroing cross entries of zero-weight sigma vertices changes nothing") {
  Graph g = make_gnp_weighted(6, 0.6, 5150, 0.5, 2.0);
  Motif c4 = parse_motif("cycle4");
  SigmaGraph s = build_sigma_graph(g, c4);
  auto base = motif_weights_from_sigma(g, c4, s);
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
  auto pruned = motif_weights_from_sigma(g, c4, z);
  REQUIRE(base.size() == pruned.size());
  for (size_t e = 0; e < base.size(); ++e) CHECK(base[e] == pruned[e]);
}
