#include "zf/graph.hpp"

#include <algorithm>
#include <sstream>

namespace zf {

std::string to_string(const VertexSet& s) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << ',';
    out << s[i];
  }
  out << '}';
  return out.str();
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) return false;
  const auto& nu = adjacency_[u];
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::size_t Graph::min_degree() const {
  std::size_t best = order() == 0 ? 0 : degree(0);
  for (Vertex v = 1; v < order(); ++v) best = std::min(best, degree(v));
  return best;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < order(); ++v) best = std::max(best, degree(v));
  return best;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges, DuplicatePolicy policy,
                  std::size_t* duplicates_dropped) {
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      std::ostringstream msg;
      msg << "edge (" << u << "," << v << ") has an endpoint outside 0.." << (n ? n - 1 : 0);
      if (n == 0) msg.str("edge given for a graph with no vertices");
      throw GraphError(msg.str());
    }
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    canon.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(canon.begin(), canon.end());
  auto dup = std::adjacent_find(canon.begin(), canon.end());
  if (dup != canon.end() && policy == DuplicatePolicy::Reject) {
    throw GraphError("duplicate edge (" + std::to_string(dup->first) + "," +
                     std::to_string(dup->second) + ")");
  }
  const std::size_t before = canon.size();
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  if (duplicates_dropped) *duplicates_dropped = before - canon.size();

  Graph g;
  g.adjacency_.assign(n, {});
  for (auto [u, v] : canon) {
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  g.edges_ = std::move(canon);
  return g;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
  const std::size_t n = g.order();
  std::vector<char> seen(n, 0);
  for (Vertex r : removed) {
    if (r < n) seen[r] = 1;
  }
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::size_t component_count(const Graph& g, const VertexSet& removed) {
  return components(g, removed).size();
}

bool is_connected(const Graph& g) { return g.order() > 0 && component_count(g) == 1; }

bool induces_connected(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) return false;
  std::vector<char> in(g.order(), 0), seen(g.order(), 0);
  for (Vertex v : s) in[v] = 1;
  std::vector<Vertex> stack{s.front()};
  seen[s.front()] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    ++reached;
    for (Vertex w : g.neighbors(v)) {
      if (in[w] && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  std::size_t distinct = 0;
  for (char c : in) distinct += c;
  return reached == distinct;
}

bool is_bridge(const Graph& g, Vertex u, Vertex v) {
  if (!g.adjacent(u, v)) throw PreconditionError("not an edge of the graph");
  return component_count(remove_edge(g, u, v)) > component_count(g);
}

Graph remove_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) throw PreconditionError("vertex out of range");
  std::vector<Edge> kept;
  for (auto [a, b] : g.edges()) {
    if (a == v || b == v) continue;
    kept.emplace_back(a > v ? a - 1 : a, b > v ? b - 1 : b);
  }
  return build_graph(g.order() - 1, kept);
}

Graph remove_edge(const Graph& g, Vertex u, Vertex v) {
  if (!g.adjacent(u, v)) throw PreconditionError("not an edge of the graph");
  Edge target{std::min(u, v), std::max(u, v)};
  std::vector<Edge> kept;
  for (const auto& e : g.edges()) {
    if (e != target) kept.push_back(e);
  }
  return build_graph(g.order(), kept);
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<std::size_t> index(g.order(), g.order());
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = i;
  std::vector<Edge> kept;
  for (auto [a, b] : g.edges()) {
    if (index[a] < g.order() && index[b] < g.order()) kept.emplace_back(index[a], index[b]);
  }
  return build_graph(keep.size(), kept);
}

bool is_path_graph(const Graph& g) {
  return is_connected(g) && g.size() + 1 == g.order() && g.max_degree() <= 2;
}

bool is_cycle_graph(const Graph& g) {
  if (g.order() < 3 || g.size() != g.order() || !is_connected(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

}  // namespace zf
