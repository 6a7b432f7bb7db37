#pragma once

#include <random>

#include "zf/generators.hpp"
#include "zf/graph.hpp"

namespace fixtures {

using zf::build_graph;

inline zf::Graph paw() { return build_graph(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}}); }
inline zf::Graph bowtie() { return build_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }
/// Triangle 0-1-2 with leaf 3 on 0 and leaf 4 on 1.
inline zf::Graph triangle_two_pendants() {
  return build_graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}});
}
/// Triangles {0,1,2}, {2,3,4}, {4,5,6}.
inline zf::Graph triangle_chain() {
  return build_graph(7, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}, {4, 5}, {5, 6}, {4, 6}});
}
inline zf::Graph two_k4_sharing_vertex() {
  return build_graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                         {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}});
}
inline zf::Graph triangles_bridged() {
  return build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
}
inline zf::Graph triangle_and_c4() {
  return build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 2}});
}
/// Three triangles each hung by a bridge from center 0; every cycle is outer.
inline zf::Graph triangles_on_bridges() {
  return build_graph(10, {{0, 1}, {1, 2}, {2, 3}, {1, 3}, {0, 4}, {4, 5}, {5, 6}, {4, 6},
                          {0, 7}, {7, 8}, {8, 9}, {7, 9}});
}

/// Connected graph: a random tree plus each remaining pair with probability p.
inline zf::Graph random_connected(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const zf::Graph tree = zf::random_tree(n, rng());
  std::vector<zf::Edge> edges = tree.edges();
  std::bernoulli_distribution coin(p);
  for (zf::Vertex u = 0; u < n; ++u) {
    for (zf::Vertex v = u + 1; v < n; ++v) {
      if (!tree.adjacent(u, v) && coin(rng)) edges.emplace_back(u, v);
    }
  }
  return zf::build_graph(n, edges);
}

}  // namespace fixtures
