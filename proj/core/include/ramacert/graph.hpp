#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ramacert {

// Plain undirected simple graph; input type for subdivisions and for the
// regular-graph checks.
struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // u < v, 0-based

  static SimpleGraph complete(int n);
  static SimpleGraph complete_bipartite(int m, int n);
  static SimpleGraph cycle(int n);
  static SimpleGraph petersen();
};

// Finite connected (q1+1, q2+1)-biregular bipartite graph. Color-1 vertices
// carry the larger valency (q1 >= q2). Edges are (v1, v2) index pairs,
// 0-based, kept in construction order; serialization canonicalizes.
struct Bigraph {
  int n1 = 0;
  int n2 = 0;
  int q1 = 0;
  int q2 = 0;
  std::vector<std::pair<int, int>> edges;

  int num_edges() const { return static_cast<int>(edges.size()); }
  int num_vertices() const { return n1 + n2; }
  // r = |E| - |V| + 1; the number of independent cycles.
  int rank() const { return num_edges() - num_vertices() + 1; }
};

// Checks biregularity, connectivity and (unless allow_multi) simplicity;
// infers q1, q2 from the degrees and flips color classes if needed so that
// q1 >= q2. Throws Error on any violation.
Bigraph validate(int n1, int n2, std::vector<std::pair<int, int>> edges,
                 bool allow_multi = false);

// K_{m,n} with 1 <= m <= n; color-1 side is the m side (degree n).
Bigraph complete_bipartite(int m, int n);

// One new vertex per edge of a connected simple d-regular graph (d >= 3);
// yields a (d, 2)-valent bigraph with q1 = d-1, q2 = 1.
Bigraph subdivision(const SimpleGraph& g);

// Configuration model with rejection of parallel edges and disconnected
// samples. Deterministic per seed; resamples up to max_retries times.
Bigraph random_biregular(int n1, int n2, int q1, int q2, std::uint64_t seed,
                         bool allow_multi = false, int max_retries = 1000);

// Line-oriented edge-list format:
//   bigraph 1
//   <n1> <n2>
//   <u> <v>         (one per line; '#' starts a comment)
Bigraph parse_edge_list(std::string_view text, bool allow_multi = false);
std::string serialize(const Bigraph& x);

// A Bigraph with q1 == q2 viewed as a plain (q+1)-regular graph on
// n1 + n2 vertices (color-2 indices offset by n1).
SimpleGraph to_simple(const Bigraph& x);

}  // namespace ramacert
