#pragma once

#include <string_view>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

enum class BlockKind {
  Vertex,  // the lone block of the one-vertex graph
  Edge,
  Cycle,   // includes K3, which is also complete
  Clique,
  Other,
};

std::string_view to_string(BlockKind kind);

struct Block {
  VertexSet vertices;
  std::size_t edge_count = 0;
  BlockKind kind = BlockKind::Other;
  bool complete = false;
  /// Articulation points of g that lie in this block.
  VertexSet articulation_points;
  /// At most one articulation point.
  bool outer = false;
  /// Peeling round at which the block becomes outer; 0 for outer blocks of g.
  std::size_t depth = 0;
};

/// Biconnected components of a connected graph.
///
/// Blocks are ordered by their sorted vertex lists. `membership[v]` is the
/// number of blocks containing v (written mu(v) in the literature); for a
/// connected graph with n >= 2 it equals the number of components of g - v.
struct BlockDecomposition {
  std::vector<Block> blocks;
  VertexSet articulation_points;
  std::vector<std::size_t> membership;
  /// Indices into `blocks` for each vertex.
  std::vector<std::vector<std::size_t>> blocks_of;

  bool is_articulation(Vertex v) const { return membership[v] >= 2; }
};

/// Throws PreconditionError when g is empty or disconnected.
BlockDecomposition block_decomposition(const Graph& g);

}  // namespace zf
