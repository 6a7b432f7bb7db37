#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

enum class ForceOrder {
  /// The eligible forcer with the smallest label acts first.
  Deterministic,
  /// A uniformly random eligible forcer acts; reproducible from the seed.
  SeededRandom,
};

struct Force {
  Vertex forcer;
  Vertex forced;
  friend bool operator==(const Force&, const Force&) = default;
};

/// Result of running the color change rule to its fixpoint.
struct ColoringTrace {
  VertexSet initial_set;
  VertexSet derived_set;
  /// Chronological list of forces.
  std::vector<Force> forces;
  /// One chain per initial vertex, in initial-set order; a vertex that never
  /// forces appears as a singleton chain.
  std::vector<std::vector<Vertex>> chains;

  bool colors_all(const Graph& g) const { return derived_set.size() == g.order(); }
};

/// Applies the color change rule (a colored vertex with exactly one uncolored
/// neighbor forces it) until no force is possible. Throws PreconditionError
/// for an empty or out-of-range initial set.
ColoringTrace derive(const Graph& g, std::span<const Vertex> initial,
                     ForceOrder order = ForceOrder::Deterministic, std::uint64_t seed = 0);

/// Derived set only; O(n + m) worklist propagation without trace bookkeeping.
VertexSet derived_set(const Graph& g, std::span<const Vertex> initial);

bool is_forcing_set(const Graph& g, std::span<const Vertex> s);
bool is_connected_set(const Graph& g, std::span<const Vertex> s);

inline bool is_connected_forcing_set(const Graph& g, std::span<const Vertex> s) {
  return is_connected_set(g, s) && is_forcing_set(g, s);
}

}  // namespace zf
