#include "zf/pendant.hpp"

#include <algorithm>

namespace zf {

PendantIndex::PendantIndex(const Graph& g)
    : entries_(g.order()), on_path_(g.order(), 0) {
  for (Vertex leaf = 0; leaf < g.order(); ++leaf) {
    if (g.degree(leaf) != 1) continue;
    Vertex prev = leaf;
    Vertex cur = g.neighbors(leaf)[0];
    std::size_t length = 1;
    on_path_[leaf] = 1;
    while (true) {
      entries_[cur].push_back({prev, leaf, length});
      if (g.degree(cur) != 2) break;
      auto nbrs = g.neighbors(cur);
      Vertex next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
      on_path_[cur] = 1;
      prev = cur;
      cur = next;
      ++length;
    }
  }
  for (auto& list : entries_) {
    std::sort(list.begin(), list.end(),
              [](const Entry& a, const Entry& b) { return a.base < b.base; });
  }
}

bool PendantIndex::pendant_free() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const auto& list) { return list.empty(); });
}

std::vector<PendantPath> PendantIndex::paths(const Graph& g, Vertex v) const {
  std::vector<PendantPath> out;
  for (const Entry& e : entries_[v]) {
    PendantPath p;
    p.attach_vertex = v;
    p.base = e.base;
    p.vertices.reserve(e.length);
    Vertex prev = v;
    Vertex cur = e.base;
    p.vertices.push_back(cur);
    while (cur != e.leaf) {
      auto nbrs = g.neighbors(cur);
      Vertex next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
      prev = cur;
      cur = next;
      p.vertices.push_back(cur);
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<PendantPath> pendant_paths(const Graph& g, Vertex v) {
  if (!is_connected(g)) throw PreconditionError("pendant paths require a connected graph");
  if (v >= g.order()) throw PreconditionError("vertex out of range");
  return PendantIndex(g).paths(g, v);
}

}  // namespace zf
