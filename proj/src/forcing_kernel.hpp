#pragma once

// Fixed-width bitset propagation used in the exact solvers' inner loops.

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "zf/forcing.hpp"
#include "zf/graph.hpp"

namespace zf::detail {

template <std::size_t Words>
class FixedForcingKernel {
 public:
  using Mask = std::array<std::uint64_t, Words>;

  explicit FixedForcingKernel(const Graph& g) : n_(g.order()), adjacency_(g.order()) {
    full_.fill(0);
    for (Vertex v = 0; v < n_; ++v) {
      adjacency_[v].fill(0);
      for (Vertex w : g.neighbors(v)) set(adjacency_[v], w);
      set(full_, v);
    }
  }

  bool forces_all(std::span<const Vertex> s) const {
    Mask colored{};
    for (Vertex v : s) set(colored, v);
    // active: colored vertices that may still have an uncolored neighbor.
    Mask active = colored;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t w = 0; w < Words; ++w) {
        std::uint64_t bits = active[w];
        while (bits) {
          const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
          bits &= bits - 1;
          int uncolored = 0;
          std::size_t target_word = 0;
          std::uint64_t target = 0;
          for (std::size_t x = 0; x < Words && uncolored < 2; ++x) {
            const std::uint64_t free = adjacency_[v][x] & ~colored[x];
            if (free) {
              uncolored += std::popcount(free);
              target_word = x;
              target = free;
            }
          }
          if (uncolored == 0) {
            active[w] &= ~(std::uint64_t{1} << (v % 64));
          } else if (uncolored == 1) {
            colored[target_word] |= target;
            active[target_word] |= target;
            active[w] &= ~(std::uint64_t{1} << (v % 64));
            changed = true;
          }
        }
      }
    }
    return colored == full_;
  }

 private:
  static void set(Mask& m, Vertex v) { m[v / 64] |= std::uint64_t{1} << (v % 64); }

  std::size_t n_;
  std::vector<Mask> adjacency_;
  Mask full_;
};

/// Fallback for graphs above 128 vertices.
class GeneralForcingKernel {
 public:
  explicit GeneralForcingKernel(const Graph& g) : g_(&g) {}
  bool forces_all(std::span<const Vertex> s) const { return is_forcing_set(*g_, s); }

 private:
  const Graph* g_;
};

template <typename Body>
decltype(auto) with_forcing_kernel(const Graph& g, Body&& body) {
  if (g.order() <= 64) {
    const FixedForcingKernel<1> kernel(g);
    return body(kernel);
  }
  if (g.order() <= 128) {
    const FixedForcingKernel<2> kernel(g);
    return body(kernel);
  }
  const GeneralForcingKernel kernel(g);
  return body(kernel);
}

}  // namespace zf::detail
