#include "zf/forcing.hpp"

#include <functional>
#include <queue>
#include <random>

namespace zf {

namespace {

void check_initial(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) throw PreconditionError("initial colored set must be nonempty");
  for (Vertex v : s) {
    if (v >= g.order()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  }
}

// Per-vertex count of uncolored neighbors, shared by both derivations.
struct Propagation {
  std::vector<char> colored;
  std::vector<std::size_t> uncolored;

  Propagation(const Graph& g, std::span<const Vertex> initial)
      : colored(g.order(), 0), uncolored(g.order()) {
    for (Vertex v = 0; v < g.order(); ++v) uncolored[v] = g.degree(v);
    for (Vertex v : initial) {
      if (colored[v]) continue;
      colored[v] = 1;
      for (Vertex w : g.neighbors(v)) --uncolored[w];
    }
  }

  bool eligible(Vertex v) const { return colored[v] && uncolored[v] == 1; }

  Vertex target(const Graph& g, Vertex v) const {
    for (Vertex w : g.neighbors(v)) {
      if (!colored[w]) return w;
    }
    return v;  // unreachable for an eligible vertex
  }

  /// Colors w and reports every vertex that may have just become eligible.
  template <typename Push>
  void color(const Graph& g, Vertex w, Push&& push) {
    colored[w] = 1;
    for (Vertex x : g.neighbors(w)) {
      --uncolored[x];
      if (eligible(x)) push(x);
    }
    if (eligible(w)) push(w);
  }
};

}  // namespace

ColoringTrace derive(const Graph& g, std::span<const Vertex> initial, ForceOrder order,
                     std::uint64_t seed) {
  check_initial(g, initial);
  ColoringTrace trace;
  trace.initial_set = normalize(VertexSet(initial.begin(), initial.end()));
  Propagation state(g, trace.initial_set);

  auto apply = [&](Vertex v, auto&& push) {
    if (!state.eligible(v)) return;  // stale entry
    Vertex w = state.target(g, v);
    trace.forces.push_back({v, w});
    state.color(g, w, push);
  };

  if (order == ForceOrder::Deterministic) {
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
    auto push = [&](Vertex v) { ready.push(v); };
    for (Vertex v : trace.initial_set) {
      if (state.eligible(v)) push(v);
    }
    while (!ready.empty()) {
      Vertex v = ready.top();
      ready.pop();
      apply(v, push);
    }
  } else {
    std::mt19937_64 rng(seed);
    std::vector<Vertex> ready;
    auto push = [&](Vertex v) { ready.push_back(v); };
    for (Vertex v : trace.initial_set) {
      if (state.eligible(v)) push(v);
    }
    while (!ready.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, ready.size() - 1);
      std::size_t i = pick(rng);
      Vertex v = ready[i];
      ready[i] = ready.back();
      ready.pop_back();
      apply(v, push);
    }
  }

  for (Vertex v = 0; v < g.order(); ++v) {
    if (state.colored[v]) trace.derived_set.push_back(v);
  }
  constexpr Vertex none = static_cast<Vertex>(-1);
  std::vector<Vertex> next(g.order(), none);
  for (const Force& f : trace.forces) next[f.forcer] = f.forced;
  for (Vertex start : trace.initial_set) {
    std::vector<Vertex> chain{start};
    for (Vertex v = next[start]; v != none; v = next[v]) chain.push_back(v);
    trace.chains.push_back(std::move(chain));
  }
  return trace;
}

VertexSet derived_set(const Graph& g, std::span<const Vertex> initial) {
  check_initial(g, initial);
  Propagation state(g, initial);
  std::vector<Vertex> work;
  auto push = [&](Vertex v) { work.push_back(v); };
  for (Vertex v : initial) {
    if (state.eligible(v)) push(v);
  }
  while (!work.empty()) {
    Vertex v = work.back();
    work.pop_back();
    if (!state.eligible(v)) continue;
    state.color(g, state.target(g, v), push);
  }
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (state.colored[v]) out.push_back(v);
  }
  return out;
}

bool is_forcing_set(const Graph& g, std::span<const Vertex> s) {
  return derived_set(g, s).size() == g.order();
}

bool is_connected_set(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) throw PreconditionError("vertex set must be nonempty");
  for (Vertex v : s) {
    if (v >= g.order()) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
  }
  return induces_connected(g, s);
}

}  // namespace zf
