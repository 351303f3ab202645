// Motif instance enumeration (non-induced), automorphism counts, and the
// motif spec grammar used by the CLI.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "motifcut/graph.hpp"

namespace motifcut {

// All distinct subgraphs of g isomorphic to m, one MotifInstance per
// subgraph (instances differing by a motif automorphism are emitted once).
// Deterministic order: lexicographic on sorted vertex_map, then edge_set.
// Each instance's vertex_map is the lexicographically smallest embedding
// producing its subgraph. Throws resource_limit_error past instance_limit.
std::vector<MotifInstance> enumerate_instances(const Graph& g, const Motif& m,
                                               long long instance_limit = 10'000'000);

// Number of permutations of motif vertices mapping the edge set onto itself.
// Requires r <= 10.
long long automorphism_count(const Motif& m);

// Motif spec grammar:
//   presets: triangle, path2, path3, cycle3..cycle6, clique3..clique6,
//            optionally prefixed "u:" (default) or "d:" for the directed
//            variant (paths/cliques oriented low->high, cycles cyclically);
//   inline:  the graph file format with '/' as the line separator,
//            e.g. "3/u/0 1 1/1 2 1" (weights are required by the format
//            but ignored for motifs);
//   file:    "@path" reads a motif from an edge-list file.
Motif parse_motif(const std::string& spec);

// Comma-separated list of motif specs.
std::vector<Motif> parse_motif_list(const std::string& specs);

}  // namespace motifcut
