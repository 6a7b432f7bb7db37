#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <variant>

#include "zf/graph.hpp"
#include "zf/set_family.hpp"

namespace zf {

struct SolveResult {
  std::size_t value = 0;
  VertexSet witness;
  std::uint64_t sets_examined = 0;
  std::chrono::duration<double> elapsed{0};
  /// Which solver produced the value ("exact", "tree", "unicyclic", ...).
  std::string method;
};

struct ExactOptions {
  /// Worker threads for the per-cardinality search. The reported witness is
  /// the lexicographically smallest minimum set regardless of this value.
  unsigned jobs = 1;
};

/// Z(g) by search over k-subsets in increasing k. Requires a connected graph.
SolveResult zero_forcing_number(const Graph& g, const ExactOptions& options = {});

/// Z_c(g) by search over connected subsets in increasing size. Requires a
/// connected graph.
SolveResult connected_forcing_number_exact(const Graph& g, const ExactOptions& options = {});

/// Calls `visit` once for every nonempty vertex set of size <= max_size that
/// induces a connected subgraph. Sets are grown from their smallest vertex
/// and only extended by exclusive neighbors above it, so no set repeats and
/// disconnected candidates are never formed. `visit` returning false stops
/// the walk. The span is unsorted and only valid during the call.
void for_each_connected_subset(const Graph& g, std::size_t max_size,
                               const std::function<bool(std::span<const Vertex>)>& visit);

/// All connected forcing sets with at most `size_cap` vertices (default n),
/// ordered by size then lexicographically. With `minimal_only`, keeps the
/// sets from which no single vertex can be dropped.
SetFamily enumerate_connected_forcing_sets(const Graph& g, bool minimal_only = false,
                                           std::optional<std::size_t> size_cap = std::nullopt);

/// Every zero forcing set of size Z(g), in lexicographic order.
std::vector<VertexSet> minimum_zero_forcing_sets(const Graph& g);

using SpreadTarget = std::variant<Vertex, Edge>;

struct SpreadResult {
  long long spread = 0;
  std::size_t zc_before = 0;
  std::size_t zc_after = 0;
  std::string method_before;
  std::string method_after;
};

/// Z_c(g) - Z_c(g - target) for a non-articulation vertex or a non-bridge
/// edge. Uses a closed-form solver when the graph family allows it unless
/// `exact_only` is set.
SpreadResult spread_zc(const Graph& g, const SpreadTarget& target, bool exact_only = false);

}  // namespace zf
