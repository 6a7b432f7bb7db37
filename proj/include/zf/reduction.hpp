#pragma once

#include <optional>

#include "zf/exact.hpp"
#include "zf/graph.hpp"

namespace zf {

/// Zero forcing instance (g, k) mapped to connected zero forcing (g', k + 2):
/// g' adds a vertex v* adjacent to every original vertex and two leaves
/// l1, l2 hanging from v*.
struct ReductionInstance {
  Graph original;
  Graph transformed;
  Vertex v_star = 0;
  Vertex l1 = 0;
  Vertex l2 = 0;
};

/// Labels: v_star = n, l1 = n + 1, l2 = n + 2. The input may be disconnected.
ReductionInstance czf_reduction(const Graph& g);

inline std::size_t transformed_bound(std::size_t k) { return k + 2; }

struct ReductionReport {
  SolveResult zf;          // Z(g)
  SolveResult czf;         // Z_c(g')
  bool value_match = false;          // Z_c(g') == Z(g) + 2
  bool witness_has_gadget = false;   // czf witness holds v* and l1 or l2
  bool passed() const { return value_match && witness_has_gadget; }
};

/// Solves both sides exactly (concurrently) and checks Z_c(g') = Z(g) + 2.
/// Requires a connected g small enough for exhaustive search.
ReductionReport verify_reduction(const Graph& g, const ExactOptions& options = {});

struct EqualityReport {
  std::size_t z = 0;
  std::size_t zc = 0;
  /// Some minimum zero forcing set induces a connected subgraph.
  bool equal = false;
  std::size_t minimum_sets = 0;
  /// The first connected minimum zero forcing set, when one exists.
  std::optional<VertexSet> connected_witness;
};

/// Decides Z(g) = Z_c(g) by enumerating every minimum zero forcing set.
EqualityReport equality_report(const Graph& g);

}  // namespace zf
