#pragma once

#include <span>
#include <vector>

#include "zf/types.hpp"

namespace zf {

enum class DuplicatePolicy {
  Reject,  // duplicate edges are a GraphError
  Merge,   // duplicates are dropped; the caller may ask for the count
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency lists are sorted, so `adjacent` is a binary search and
/// neighbor iteration order is deterministic. Immutable once built.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges with first < second, in lexicographic order.
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t min_degree() const;
  std::size_t max_degree() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend Graph build_graph(std::size_t, std::span<const Edge>, DuplicatePolicy,
                           std::size_t*);

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

/// Builds a graph from an edge list. Throws GraphError on a self-loop, an
/// endpoint outside 0..n-1, or (under DuplicatePolicy::Reject) a repeated
/// edge. With DuplicatePolicy::Merge the number of dropped duplicates is
/// written to `duplicates_dropped` when it is non-null.
Graph build_graph(std::size_t n, std::span<const Edge> edges,
                  DuplicatePolicy policy = DuplicatePolicy::Reject,
                  std::size_t* duplicates_dropped = nullptr);

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

bool is_connected(const Graph& g);

/// Number of connected components of g with the vertices in `removed` deleted.
std::size_t component_count(const Graph& g, const VertexSet& removed = {});

/// Connected components as sorted vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed = {});

/// True iff the induced subgraph g[s] is connected. The empty set is not.
bool induces_connected(const Graph& g, std::span<const Vertex> s);

bool is_bridge(const Graph& g, Vertex u, Vertex v);

/// g - v with vertices above v shifted down by one.
Graph remove_vertex(const Graph& g, Vertex v);
Graph remove_edge(const Graph& g, Vertex u, Vertex v);

/// Induced subgraph relabeled so that keep[i] becomes vertex i.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

bool is_path_graph(const Graph& g);
bool is_cycle_graph(const Graph& g);

}  // namespace zf
