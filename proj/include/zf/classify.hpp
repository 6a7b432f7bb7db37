#pragma once

#include <string_view>

#include "zf/graph.hpp"

namespace zf {

enum class FamilyTag { Path, Cycle, Tree, Unicyclic, BlockGraph, Cactus, General };

std::string_view to_string(FamilyTag tag);

/// Family membership of a connected graph. `tag` is the most specific family
/// in the order path, cycle, tree, unicyclic, block graph, cactus, general;
/// the flags report every family that applies.
struct FamilyInfo {
  FamilyTag tag = FamilyTag::General;
  bool path = false;
  bool cycle = false;
  bool tree = false;
  bool unicyclic = false;
  bool block_graph = false;
  bool cactus = false;
  /// No vertex has an attached pendant path.
  bool pendant_free = false;
};

/// Throws PreconditionError on a disconnected graph.
FamilyInfo classify_family(const Graph& g);

}  // namespace zf
