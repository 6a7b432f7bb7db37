#include "zf/structure.hpp"

#include <algorithm>

namespace zf {

StructuralSets structural_sets(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("structural sets require a connected graph");
  const BlockDecomposition d = block_decomposition(g);
  return structural_sets(g, d, PendantIndex(g));
}

StructuralSets structural_sets(const Graph& g, const BlockDecomposition& d,
                               const PendantIndex& pendants) {
  if (is_path_graph(g)) throw PreconditionError("structural sets are undefined for a path");
  StructuralSets ss;
  ss.p.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    ss.p[v] = pendants.count(v);
    // For connected g, kappa(g - v) is the number of blocks containing v.
    const std::size_t kappa = d.membership[v];
    if (kappa == 2) {
      if (ss.p[v] == 1) ss.r1.push_back(v);
      if (ss.p[v] == 0) ss.r2.push_back(v);
    } else if (kappa >= 3) {
      ss.r3.push_back(v);
    }

    const auto& entries = pendants.entries(v);
    if (entries.empty()) continue;
    // Leave out the base of the longest pendant path, smallest base on ties.
    auto keep_out = std::max_element(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
      if (a.length != b.length) return a.length < b.length;
      return a.base > b.base;
    });
    ss.excluded_base[v] = keep_out->base;
    for (const auto& e : entries) {
      if (e.base != keep_out->base) ss.l_set.push_back(e.base);
    }
  }
  ss.l_set = normalize(std::move(ss.l_set));
  ss.m_set = set_union(set_union(ss.r2, ss.r3), ss.l_set);
  return ss;
}

LowerBounds lower_bounds(const Graph& g, const BlockDecomposition& d, const StructuralSets& ss) {
  if (is_path_graph(g)) throw PreconditionError("lower bounds are stated for non-path graphs");
  const PendantIndex pendants(g);
  LowerBounds lb;
  lb.bound_m = static_cast<long long>(ss.m_set.size());
  for (const Block& b : d.blocks) {
    if (b.kind == BlockKind::Edge) {
      // A cut edge of a pendant path has an endpoint on that path.
      if (pendants.on_pendant_path(b.vertices[0]) || pendants.on_pendant_path(b.vertices[1])) {
        continue;
      }
    }
    std::size_t delta = b.vertices.size();
    for (Vertex v : b.vertices) {
      std::size_t inside = 0;
      for (Vertex w : g.neighbors(v)) inside += contains(b.vertices, w);
      delta = std::min(delta, inside);
    }
    lb.bound_blocks += static_cast<long long>(delta);
  }
  for (Vertex v : set_union(ss.r2, ss.r3)) {
    lb.bound_blocks -= static_cast<long long>(d.membership[v]) - 1;
  }
  return lb;
}

LowerBounds lower_bounds(const Graph& g) {
  const BlockDecomposition d = block_decomposition(g);
  return lower_bounds(g, d, structural_sets(g, d, PendantIndex(g)));
}

CycleContext::CycleContext(const Graph& g, const VertexSet& cycle_vertices,
                           const BlockDecomposition& d) {
  if (cycle_vertices.size() < 3) throw PreconditionError("a cycle needs at least three vertices");
  auto cycle_neighbors = [&](Vertex v) {
    std::vector<Vertex> out;
    for (Vertex w : g.neighbors(v)) {
      if (contains(cycle_vertices, w)) out.push_back(w);
    }
    if (out.size() != 2) throw PreconditionError("vertex set does not induce a cycle");
    return out;
  };
  Vertex start = cycle_vertices.front();
  Vertex prev = start;
  Vertex cur = cycle_neighbors(start)[0];  // smaller neighbor: lists are sorted
  cycle_.push_back(start);
  while (cur != start) {
    if (cycle_.size() > cycle_vertices.size()) {
      throw PreconditionError("vertex set does not induce a cycle");
    }
    cycle_.push_back(cur);
    auto nbrs = cycle_neighbors(cur);
    Vertex next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
    prev = cur;
    cur = next;
  }
  if (cycle_.size() != cycle_vertices.size()) {
    throw PreconditionError("vertex set does not induce a single cycle");
  }
  for (std::size_t i = 0; i < cycle_.size(); ++i) {
    position_[cycle_[i]] = i;
    if (d.is_articulation(cycle_[i])) articulation_list_.push_back(cycle_[i]);
  }
}

std::size_t CycleContext::gap(Vertex u, Vertex v) const {
  if (u == v) return length() - 1;
  return (position(v) + length() - position(u) - 1) % length();
}

std::vector<Vertex> CycleContext::segment(Vertex u, Vertex v) const {
  std::vector<Vertex> out;
  const std::size_t start = position(u) + 1;
  for (std::size_t i = 0; i < gap(u, v); ++i) out.push_back(at(start + i));
  return out;
}

CycleContext cycle_context(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("cycle context requires a connected graph");
  return cycle_context(g, block_decomposition(g));
}

CycleContext cycle_context(const Graph& g, const BlockDecomposition& d) {
  if (g.size() != g.order()) {
    throw PreconditionError("cycle context requires a unicyclic graph (m = n)");
  }
  for (const Block& b : d.blocks) {
    if (b.kind == BlockKind::Cycle) return CycleContext(g, b.vertices, d);
  }
  throw PreconditionError("graph has no cycle");
}

}  // namespace zf
