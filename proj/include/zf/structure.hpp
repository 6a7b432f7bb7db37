#pragma once

#include <map>
#include <vector>

#include "zf/blocks.hpp"
#include "zf/graph.hpp"
#include "zf/pendant.hpp"

namespace zf {

/// Vertex classes that every connected forcing set of a non-path graph must
/// respect.
///
///   r1: articulation points v with kappa(g - v) = 2 and one pendant path
///   r2: articulation points v with kappa(g - v) = 2 and no pendant path
///   r3: articulation points v with kappa(g - v) >= 3
///   l_set: for each v with p(v) > 0, the bases of all but one of its
///          pendant paths
///   m_set: r2 | r3 | l_set, contained in every connected forcing set
struct StructuralSets {
  VertexSet r1, r2, r3;
  VertexSet l_set;
  VertexSet m_set;
  /// p(v) for every vertex.
  std::vector<std::size_t> p;
  /// The base left out of l_set for each vertex with pendant paths.
  std::map<Vertex, Vertex> excluded_base;
};

/// Throws PreconditionError for a disconnected graph or a path.
StructuralSets structural_sets(const Graph& g);
StructuralSets structural_sets(const Graph& g, const BlockDecomposition& d,
                               const PendantIndex& pendants);

struct LowerBounds {
  /// |M|.
  long long bound_m = 0;
  /// Sum of min degrees over blocks that are not cut edges of pendant paths,
  /// minus (mu(p) - 1) for every p in r2 | r3.
  long long bound_blocks = 0;

  long long best() const { return bound_m > bound_blocks ? bound_m : bound_blocks; }
};

LowerBounds lower_bounds(const Graph& g, const BlockDecomposition& d, const StructuralSets& ss);
LowerBounds lower_bounds(const Graph& g);

/// A cycle block with a fixed traversal direction.
///
/// The traversal starts at the smallest vertex and steps first to its
/// smaller cycle neighbor; "counterclockwise" means this direction.
class CycleContext {
 public:
  CycleContext(const Graph& g, const VertexSet& cycle_vertices, const BlockDecomposition& d);

  const std::vector<Vertex>& cycle() const { return cycle_; }
  std::size_t length() const { return cycle_.size(); }
  /// Articulation points of g on the cycle, in traversal order.
  const std::vector<Vertex>& articulation_list() const { return articulation_list_; }

  bool on_cycle(Vertex v) const { return position_.count(v) != 0; }
  std::size_t position(Vertex v) const { return position_.at(v); }
  Vertex at(std::size_t pos) const { return cycle_[pos % cycle_.size()]; }

  /// The neighbor reached by one counterclockwise step from u.
  Vertex ccw_next(Vertex u) const { return at(position(u) + 1); }
  /// The neighbor reached by one clockwise step from u.
  Vertex cw_prev(Vertex u) const { return at(position(u) + length() - 1); }

  /// |(u -> v)|: vertices strictly between u and v going counterclockwise.
  /// For u == v this is every cycle vertex except u.
  std::size_t gap(Vertex u, Vertex v) const;
  std::vector<Vertex> segment(Vertex u, Vertex v) const;

 private:
  std::vector<Vertex> cycle_;
  std::vector<Vertex> articulation_list_;
  std::map<Vertex, std::size_t> position_;
};

/// The cycle of a unicyclic graph. Throws PreconditionError otherwise.
CycleContext cycle_context(const Graph& g);
CycleContext cycle_context(const Graph& g, const BlockDecomposition& d);

}  // namespace zf
