#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <set>

#include "motifcut/graph.hpp"
#include "motifcut/motif_enum.hpp"

using namespace motifcut;

TEST_CASE("graph construction canonicalizes and validates") {
  Graph g(4, GraphKind::undirected, {{2, 0, 1.5}, {0, 1, 2.0}, {3, 1, 0.25}});
  CHECK(g.n() == 4);
  CHECK(g.edge_count() == 3);
  // endpoints ordered u < v, edges sorted by (u, v)
  CHECK(g.edges()[0].u == 0);
  CHECK(g.edges()[0].v == 1);
  CHECK(g.edges()[1].u == 0);
  CHECK(g.edges()[1].v == 2);
  CHECK(g.edges()[2].u == 1);
  CHECK(g.edges()[2].v == 3);
  CHECK(g.edge_index(1, 0) == 0);  // order-insensitive lookup
  CHECK(g.edge_index(3, 1) == 2);
  CHECK(g.edge_index(2, 3) == -1);
  CHECK(g.weight(2, 0) == 1.5);
  CHECK(g.min_weight() == 0.25);
  CHECK(g.max_weight() == 2.0);

  CHECK_THROWS_AS(Graph(3, GraphKind::undirected, {{0, 0, 1.0}}), usage_error);  // self loop
  CHECK_THROWS_AS(Graph(3, GraphKind::undirected, {{0, 1, 1.0}, {1, 0, 2.0}}),
                  usage_error);  // duplicate
  CHECK_THROWS_AS(Graph(3, GraphKind::undirected, {{0, 1, 0.0}}), usage_error);  // zero weight
  CHECK_THROWS_AS(Graph(3, GraphKind::undirected, {{0, 1, -1.0}}), usage_error);
  CHECK_THROWS_AS(Graph(2, GraphKind::undirected, {{0, 5, 1.0}}), usage_error);  // out of range
}

TEST_CASE("directed graphs keep both arc directions distinct") {
  Graph g(3, GraphKind::directed, {{1, 0, 2.0}, {0, 1, 3.0}});
  CHECK(g.edge_count() == 2);
  CHECK(g.weight(0, 1) == 3.0);
  CHECK(g.weight(1, 0) == 2.0);
  CHECK_THROWS_AS(Graph(3, GraphKind::directed, {{0, 1, 1.0}, {0, 1, 2.0}}), usage_error);
}

TEST_CASE("text format round trip preserves weights exactly") {
  Graph g(5, GraphKind::undirected,
          {{0, 1, 1.0 / 3.0}, {1, 2, std::nextafter(2.0, 3.0)}, {2, 4, 1e-7}});
  std::string text = graph_to_string(g);
  Graph back = parse_graph(text);
  CHECK(back.n() == 5);
  CHECK(back.edge_count() == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(back.edges()[i].u == g.edges()[i].u);
    CHECK(back.edges()[i].v == g.edges()[i].v);
    CHECK(back.edges()[i].w == g.edges()[i].w);  // %.17g round trip is exact
  }
  CHECK(graph_to_string(back) == text);
}

TEST_CASE("parser accepts comments and rejects malformed input") {
  Graph g = parse_graph("# header\n3\nu\n# middle\n0 1 2.5\n1 2 1\n");
  CHECK(g.n() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.kind() == GraphKind::undirected);
  Graph d = parse_graph("2\nd\n0 1 1\n1 0 1\n");
  CHECK(d.directed());
  CHECK(d.edge_count() == 2);

  CHECK_THROWS_AS(parse_graph(""), usage_error);
  CHECK_THROWS_AS(parse_graph("3\nx\n0 1 1\n"), usage_error);      // bad kind
  CHECK_THROWS_AS(parse_graph("3\nu\n0 1\n"), usage_error);        // missing weight
  CHECK_THROWS_AS(parse_graph("3\nu\n0 1 1 9\n"), usage_error);    // trailing token
  CHECK_THROWS_AS(load_graph("/nonexistent/file.graph"), usage_error);
}

TEST_CASE("save and load round trip through a file") {
  Graph g = make_gnp_weighted(9, 0.5, 42, 0.5, 2.0);
  std::string path = "/tmp/motifcut_roundtrip_test.graph";
  save_graph(g, path);
  Graph back = load_graph(path);
  CHECK(graph_to_string(back) == graph_to_string(g));
  std::remove(path.c_str());
}

TEST_CASE("cut helpers: enumeration, crossing, value") {
  auto cuts = enumerate_cuts(4);
  CHECK(cuts.size() == 7);  // 2^3 - 1 proper cuts
  std::set<std::vector<uint8_t>> seen;
  for (const Cut& c : cuts) {
    CHECK(c.side[0] == 1);  // canonical: vertex 0 in S
    bool has0 = false;
    for (uint8_t s : c.side)
      if (!s) has0 = true;
    CHECK(has0);  // proper
    seen.insert(c.side);
  }
  CHECK(seen.size() == 7);

  int streamed = 0;
  for_each_cut(4, [&](const Cut& c) {
    CHECK(c.side == cuts[streamed].side);
    ++streamed;
  });
  CHECK(streamed == 7);
  CHECK_THROWS_AS(enumerate_cuts(21), resource_limit_error);

  MotifInstance inst;
  inst.vertex_map = {0, 2, 3};
  inst.weight = 2.5;
  Cut cut;
  cut.side = {1, 0, 0, 0};
  CHECK(instance_crosses(inst, cut));
  cut.side = {1, 0, 1, 1};
  CHECK_FALSE(instance_crosses(inst, cut));
  CHECK(motif_cut_value({inst}, Cut{{1, 0, 0, 0}}) == 2.5);
  CHECK(motif_cut_value({inst}, Cut{{1, 0, 1, 1}}) == 0.0);
  CHECK(Cut{{0, 1, 1, 0}}.members() == std::vector<int>{1, 2});
}

TEST_CASE("instance_weight follows current edge weights and rejects stale edges") {
  Graph g(3, GraphKind::undirected, {{0, 1, 2.0}, {1, 2, 3.0}});
  MotifInstance inst;
  inst.vertex_map = {0, 1, 2};
  inst.edge_set = {{0, 1}, {1, 2}};
  CHECK(instance_weight(g, inst) == 6.0);
  Graph g2(3, GraphKind::undirected, {{0, 1, 2.0}});
  CHECK_THROWS_AS(instance_weight(g2, inst), usage_error);
}

TEST_CASE("generators are deterministic in the seed") {
  Graph k5 = make_clique(5, 2.0);
  CHECK(k5.edge_count() == 10);
  for (const Edge& e : k5.edges()) CHECK(e.w == 2.0);

  Graph a = make_gnp(16, 0.5, 7);
  Graph b = make_gnp(16, 0.5, 7);
  Graph c = make_gnp(16, 0.5, 8);
  CHECK(graph_to_string(a) == graph_to_string(b));
  CHECK(graph_to_string(a) != graph_to_string(c));
  for (const Edge& e : a.edges()) CHECK(e.w == 1.0);

  Graph w = make_gnp_weighted(12, 0.7, 3, 0.5, 2.0);
  Graph w2 = make_gnp_weighted(12, 0.7, 3, 0.5, 2.0);
  CHECK(graph_to_string(w) == graph_to_string(w2));
  for (const Edge& e : w.edges()) {
    CHECK(e.w >= 0.5);
    CHECK(e.w < 2.0);
  }
  Graph dw = make_gnp_weighted(10, 0.5, 3, 0.5, 2.0, GraphKind::directed);
  CHECK(dw.directed());
}

TEST_CASE("bidirected encoding preserves motif instance weights") {
  Graph tri(3, GraphKind::undirected, {{0, 1, 2.0}, {0, 2, 5.0}, {1, 2, 3.0}});
  Graph enc = encode_undirected(tri);
  CHECK(enc.directed());
  CHECK(enc.edge_count() == 6);
  CHECK(enc.weight(0, 1) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  // a bidirected triangle image uses all six arcs: weight = product of the
  // three original weights
  Motif bidi = make_motif(3, GraphKind::directed,
                          {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}});
  auto inst = enumerate_instances(enc, bidi);
  REQUIRE(inst.size() == 1);
  CHECK(inst[0].weight == doctest::Approx(30.0).epsilon(1e-12));
}
