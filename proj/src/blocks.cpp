#include "zf/blocks.hpp"

#include <algorithm>

namespace zf {

std::string_view to_string(BlockKind kind) {
  switch (kind) {
    case BlockKind::Vertex: return "vertex";
    case BlockKind::Edge: return "edge";
    case BlockKind::Cycle: return "cycle";
    case BlockKind::Clique: return "clique";
    case BlockKind::Other: return "other";
  }
  return "other";
}

namespace {

struct Frame {
  Vertex v;
  Vertex parent;
  std::size_t next = 0;
};

// Hopcroft-Tarjan with an explicit edge stack; iterative so that long paths
// do not exhaust the call stack.
std::vector<std::vector<Edge>> biconnected_edge_sets(const Graph& g) {
  const std::size_t n = g.order();
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, unvisited), low(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<std::vector<Edge>> out;
  std::size_t clock = 0;

  std::vector<Frame> stack;
  disc[0] = low[0] = clock++;
  stack.push_back({0, unvisited});
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto nbrs = g.neighbors(f.v);
    if (f.next < nbrs.size()) {
      Vertex w = nbrs[f.next++];
      if (w == f.parent) continue;
      if (disc[w] == unvisited) {
        edge_stack.emplace_back(f.v, w);
        disc[w] = low[w] = clock++;
        stack.push_back({w, f.v});
      } else if (disc[w] < disc[f.v]) {
        edge_stack.emplace_back(f.v, w);
        low[f.v] = std::min(low[f.v], disc[w]);
      }
      continue;
    }
    Frame done = f;
    stack.pop_back();
    if (stack.empty()) break;
    Vertex v = stack.back().v;
    low[v] = std::min(low[v], low[done.v]);
    if (low[done.v] >= disc[v]) {
      std::vector<Edge> block;
      while (true) {
        Edge e = edge_stack.back();
        edge_stack.pop_back();
        block.push_back(e);
        if (e.first == v && e.second == done.v) break;
      }
      out.push_back(std::move(block));
    }
  }
  return out;
}

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("block decomposition requires a connected graph");
  const std::size_t n = g.order();
  BlockDecomposition d;
  d.membership.assign(n, 0);
  d.blocks_of.assign(n, {});

  if (n == 1) {
    Block b;
    b.vertices = {0};
    b.kind = BlockKind::Vertex;
    b.complete = true;
    b.outer = true;
    d.blocks.push_back(b);
    d.membership[0] = 1;
    d.blocks_of[0] = {0};
    return d;
  }

  for (auto& edges : biconnected_edge_sets(g)) {
    Block b;
    for (auto [u, v] : edges) {
      b.vertices.push_back(u);
      b.vertices.push_back(v);
    }
    b.vertices = normalize(std::move(b.vertices));
    b.edge_count = edges.size();
    const std::size_t k = b.vertices.size();
    b.complete = b.edge_count == k * (k - 1) / 2;
    if (k == 2) {
      b.kind = BlockKind::Edge;
    } else if (b.edge_count == k) {
      b.kind = BlockKind::Cycle;
    } else if (b.complete) {
      b.kind = BlockKind::Clique;
    } else {
      b.kind = BlockKind::Other;
    }
    d.blocks.push_back(std::move(b));
  }
  std::sort(d.blocks.begin(), d.blocks.end(),
            [](const Block& a, const Block& b) { return a.vertices < b.vertices; });

  for (std::size_t i = 0; i < d.blocks.size(); ++i) {
    for (Vertex v : d.blocks[i].vertices) {
      ++d.membership[v];
      d.blocks_of[v].push_back(i);
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (d.membership[v] >= 2) d.articulation_points.push_back(v);
  }
  for (auto& b : d.blocks) {
    for (Vertex v : b.vertices) {
      if (d.membership[v] >= 2) b.articulation_points.push_back(v);
    }
    b.outer = b.articulation_points.size() <= 1;
  }

  // Peel outer blocks round by round. A vertex stays an articulation point of
  // the remainder while it lies in two or more live blocks.
  std::vector<std::size_t> live = d.membership;
  std::vector<char> alive(d.blocks.size(), 1);
  std::size_t remaining = d.blocks.size();
  for (std::size_t round = 0; remaining > 0; ++round) {
    std::vector<std::size_t> peel;
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
      if (!alive[i]) continue;
      std::size_t aps = 0;
      for (Vertex v : d.blocks[i].vertices) aps += live[v] >= 2;
      if (aps <= 1) peel.push_back(i);
    }
    for (std::size_t i : peel) {
      d.blocks[i].depth = round;
      alive[i] = 0;
      --remaining;
      for (Vertex v : d.blocks[i].vertices) --live[v];
    }
  }
  return d;
}

}  // namespace zf
