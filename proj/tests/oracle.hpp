#pragma once

// Brute-force reference implementations. They share only the Graph type
// with the library: sets are bitmasks, propagation is a naive rescan, and
// every minimum is found by scanning the whole power set.

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "zf/graph.hpp"

namespace oracle {

using Mask = std::uint32_t;

inline std::vector<Mask> adjacency(const zf::Graph& g) {
  std::vector<Mask> adj(g.order(), 0);
  for (auto [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

inline Mask full(std::size_t n) { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

inline Mask to_mask(const std::vector<zf::Vertex>& s) {
  Mask m = 0;
  for (auto v : s) m |= Mask{1} << v;
  return m;
}

inline std::vector<zf::Vertex> to_set(Mask m) {
  std::vector<zf::Vertex> out;
  for (zf::Vertex v = 0; m; ++v, m >>= 1) {
    if (m & 1) out.push_back(v);
  }
  return out;
}

/// Rescans every vertex until a full pass makes no force.
inline Mask derived(const std::vector<Mask>& adj, Mask colored) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < adj.size(); ++v) {
      if (!(colored >> v & 1)) continue;
      const Mask white = adj[v] & ~colored;
      if (std::popcount(white) == 1) {
        colored |= white;
        changed = true;
      }
    }
  }
  return colored;
}

inline bool forcing(const std::vector<Mask>& adj, Mask s) {
  return derived(adj, s) == full(adj.size());
}

inline bool connected(const std::vector<Mask>& adj, Mask s) {
  if (s == 0) return false;
  Mask seen = s & (~s + 1);
  while (true) {
    Mask grow = seen;
    for (std::size_t v = 0; v < adj.size(); ++v) {
      if (seen >> v & 1) grow |= adj[v] & s;
    }
    if (grow == seen) break;
    seen = grow;
  }
  return seen == s;
}

/// Smallest |S| over the power set; nullopt when nothing qualifies.
template <typename Pred>
std::optional<std::size_t> minimum(std::size_t n, Pred pred) {
  std::optional<std::size_t> best;
  for (Mask s = 1; s <= full(n) && s != 0; ++s) {
    const std::size_t k = std::popcount(s);
    if (best && k >= *best) continue;
    if (pred(s)) best = k;
  }
  return best;
}

inline std::size_t z(const zf::Graph& g) {
  const auto adj = adjacency(g);
  return *minimum(g.order(), [&](Mask s) { return forcing(adj, s); });
}

inline std::optional<std::size_t> zc(const zf::Graph& g) {
  const auto adj = adjacency(g);
  return minimum(g.order(), [&](Mask s) { return connected(adj, s) && forcing(adj, s); });
}

inline std::vector<Mask> connected_forcing_sets(const zf::Graph& g) {
  const auto adj = adjacency(g);
  std::vector<Mask> out;
  for (Mask s = 1; s <= full(g.order()); ++s) {
    if (connected(adj, s) && forcing(adj, s)) out.push_back(s);
  }
  return out;
}

inline std::vector<Mask> connected_sets(const zf::Graph& g) {
  const auto adj = adjacency(g);
  std::vector<Mask> out;
  for (Mask s = 1; s <= full(g.order()); ++s) {
    if (connected(adj, s)) out.push_back(s);
  }
  return out;
}

/// Number of components of g - v, by flood fill on masks.
inline std::size_t components_without(const zf::Graph& g, zf::Vertex v) {
  const auto adj = adjacency(g);
  Mask left = full(g.order()) & ~(Mask{1} << v);
  std::size_t count = 0;
  while (left) {
    Mask comp = left & (~left + 1);
    while (true) {
      Mask grow = comp;
      for (std::size_t u = 0; u < adj.size(); ++u) {
        if (comp >> u & 1) grow |= adj[u] & left;
      }
      if (grow == comp) break;
      comp = grow;
    }
    left &= ~comp;
    ++count;
  }
  return count;
}

/// Number of pendant paths at v: components of g - v that induce a path and
/// meet N(v) in exactly one vertex, which is an end of that path.
inline std::size_t pendant_count(const zf::Graph& g, zf::Vertex v) {
  const auto adj = adjacency(g);
  Mask left = full(g.order()) & ~(Mask{1} << v);
  std::size_t count = 0;
  while (left) {
    Mask comp = left & (~left + 1);
    while (true) {
      Mask grow = comp;
      for (std::size_t u = 0; u < adj.size(); ++u) {
        if (comp >> u & 1) grow |= adj[u] & left;
      }
      if (grow == comp) break;
      comp = grow;
    }
    left &= ~comp;
    std::size_t edges = 0;
    bool path = true;
    for (std::size_t u = 0; u < adj.size(); ++u) {
      if (!(comp >> u & 1)) continue;
      const int inner = std::popcount(adj[u] & comp);
      edges += inner;
      path = path && inner <= 2;
    }
    path = path && edges / 2 + 1 == static_cast<std::size_t>(std::popcount(comp));
    const Mask touching = adj[v] & comp;
    if (!path || std::popcount(touching) != 1) continue;
    const auto base = static_cast<std::size_t>(std::countr_zero(touching));
    if (std::popcount(adj[base] & comp) <= 1) ++count;
  }
  return count;
}

/// Literal (M1)-(M3) over an explicit membership table indexed by mask.
struct Axioms {
  bool m1, m2, m3;
};

inline Axioms axioms(const std::vector<char>& in, std::size_t n) {
  const Mask all = full(n);
  Axioms out{in[0] != 0, true, true};
  for (Mask j = 0; j <= all && out.m2; ++j) {
    if (!in[j]) continue;
    for (Mask sub = j;; sub = (sub - 1) & j) {
      if (!in[sub]) {
        out.m2 = false;
        break;
      }
      if (sub == 0) break;
    }
  }
  for (Mask a = 0; a <= all && out.m3; ++a) {
    int size = -1;
    for (Mask x = a;; x = (x - 1) & a) {
      if (in[x]) {
        bool maximal = true;
        for (Mask y = a;; y = (y - 1) & a) {
          if (y != x && (y & x) == x && in[y]) {
            maximal = false;
            break;
          }
          if (y == 0) break;
        }
        if (maximal) {
          if (size >= 0 && size != std::popcount(x)) out.m3 = false;
          size = std::popcount(x);
        }
      }
      if (x == 0) break;
    }
    if (a == all) break;
  }
  return out;
}

/// Membership table of {V \ X : X a connected forcing set}.
inline std::vector<char> complement_family(const zf::Graph& g) {
  const Mask all = full(g.order());
  std::vector<char> in(std::size_t{all} + 1, 0);
  for (Mask s : connected_forcing_sets(g)) in[all & ~s] = 1;
  return in;
}

}  // namespace oracle
