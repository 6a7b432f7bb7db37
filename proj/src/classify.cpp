#include "zf/classify.hpp"

#include "zf/blocks.hpp"
#include "zf/pendant.hpp"

namespace zf {

std::string_view to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::Path: return "path";
    case FamilyTag::Cycle: return "cycle";
    case FamilyTag::Tree: return "tree";
    case FamilyTag::Unicyclic: return "unicyclic";
    case FamilyTag::BlockGraph: return "block_graph";
    case FamilyTag::Cactus: return "cactus";
    case FamilyTag::General: return "general";
  }
  return "general";
}

FamilyInfo classify_family(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("classification requires a connected graph");
  const BlockDecomposition d = block_decomposition(g);

  FamilyInfo info;
  info.tree = g.size() + 1 == g.order();
  info.unicyclic = g.size() == g.order();
  info.path = info.tree && g.max_degree() <= 2;
  info.cycle = is_cycle_graph(g);
  info.block_graph = true;
  info.cactus = true;
  for (const Block& b : d.blocks) {
    // Clique test by explicit all-pairs adjacency.
    bool clique = true;
    for (std::size_t i = 0; i < b.vertices.size() && clique; ++i) {
      for (std::size_t j = i + 1; j < b.vertices.size() && clique; ++j) {
        clique = g.adjacent(b.vertices[i], b.vertices[j]);
      }
    }
    info.block_graph = info.block_graph && clique;
    const bool edge_or_cycle = b.kind == BlockKind::Edge || b.kind == BlockKind::Cycle ||
                               b.kind == BlockKind::Vertex;
    info.cactus = info.cactus && edge_or_cycle;
  }
  info.pendant_free = PendantIndex(g).pendant_free();

  if (info.path) {
    info.tag = FamilyTag::Path;
  } else if (info.cycle) {
    info.tag = FamilyTag::Cycle;
  } else if (info.tree) {
    info.tag = FamilyTag::Tree;
  } else if (info.unicyclic) {
    info.tag = FamilyTag::Unicyclic;
  } else if (info.block_graph) {
    info.tag = FamilyTag::BlockGraph;
  } else if (info.cactus) {
    info.tag = FamilyTag::Cactus;
  }
  return info;
}

}  // namespace zf
