#pragma once

#include <vector>

#include "zf/graph.hpp"

namespace zf {

/// A path component of g - attach_vertex whose end `base` is the only vertex
/// adjacent to attach_vertex. `vertices` runs from the base to a leaf of g.
struct PendantPath {
  Vertex attach_vertex = 0;
  Vertex base = 0;
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.size(); }
  Vertex leaf() const { return vertices.back(); }
};

/// All pendant paths of a connected graph, found in linear time by walking
/// inward from every leaf through degree-2 vertices.
///
/// Every vertex passed on such a walk has exactly one pendant path on the
/// leaf side, so paths are stored as (base, leaf, length) triples and
/// materialized on demand.
class PendantIndex {
 public:
  struct Entry {
    Vertex base;
    Vertex leaf;
    std::size_t length;
  };

  explicit PendantIndex(const Graph& g);

  /// p(v): the number of pendant paths attached to v.
  std::size_t count(Vertex v) const { return entries_[v].size(); }
  const std::vector<Entry>& entries(Vertex v) const { return entries_[v]; }

  /// True when v lies on some pendant path (of any attach vertex).
  bool on_pendant_path(Vertex v) const { return on_path_[v] != 0; }
  bool pendant_free() const;

  /// Materializes the paths at v; `g` must be the graph the index was built from.
  std::vector<PendantPath> paths(const Graph& g, Vertex v) const;

 private:
  std::vector<std::vector<Entry>> entries_;
  std::vector<char> on_path_;
};

/// Pendant paths attached at v, sorted by base label.
std::vector<PendantPath> pendant_paths(const Graph& g, Vertex v);

}  // namespace zf
