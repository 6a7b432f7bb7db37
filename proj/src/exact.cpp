#include "zf/exact.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "forcing_kernel.hpp"
#include "zf/blocks.hpp"
#include "zf/family_solvers.hpp"
#include "zf/forcing.hpp"

namespace zf {

namespace {

using Clock = std::chrono::steady_clock;

void require_connected(const Graph& g) {
  if (!is_connected(g)) {
    throw PreconditionError("exact solvers require a connected graph with at least one vertex");
  }
}

/// Runs body(part) for part = 0..parts-1, stopping once some part succeeds
/// and every smaller part has finished. Returns the smallest successful part.
template <typename Body>
std::optional<std::size_t> first_successful_part(std::size_t parts, unsigned jobs, Body&& body) {
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{parts};
  auto worker = [&] {
    while (true) {
      const std::size_t part = next.fetch_add(1);
      if (part >= parts || part > best.load()) return;
      if (body(part)) {
        std::size_t cur = best.load();
        while (part < cur && !best.compare_exchange_weak(cur, part)) {
        }
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(parts)));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (best.load() == parts) return std::nullopt;
  return best.load();
}

/// Connected-subset growth restricted to sets whose smallest vertex is `anchor`.
class ConnectedSubsetWalker {
 public:
  explicit ConnectedSubsetWalker(const Graph& g) : g_(g), marks_(g.order(), 0) {}

  template <typename Visit>
  bool walk(Vertex anchor, std::size_t max_size, bool only_full, Visit&& visit) {
    if (max_size == 0) return true;
    std::vector<Vertex> ext;
    for (Vertex u : g_.neighbors(anchor)) {
      if (u > anchor) ext.push_back(u);
    }
    add(anchor);
    const bool ok = extend(anchor, std::move(ext), max_size, only_full, visit);
    remove(anchor);
    return ok;
  }

 private:
  void add(Vertex w) {
    sub_.push_back(w);
    ++marks_[w];
    for (Vertex x : g_.neighbors(w)) ++marks_[x];
  }

  void remove(Vertex w) {
    sub_.pop_back();
    --marks_[w];
    for (Vertex x : g_.neighbors(w)) --marks_[x];
  }

  template <typename Visit>
  bool extend(Vertex anchor, std::vector<Vertex> ext, std::size_t max_size, bool only_full,
              Visit& visit) {
    if (!only_full || sub_.size() == max_size) {
      if (!visit(std::span<const Vertex>(sub_))) return false;
    }
    if (sub_.size() == max_size) return true;
    while (!ext.empty()) {
      const Vertex w = ext.back();
      ext.pop_back();
      std::vector<Vertex> next = ext;
      // Exclusive neighbors of w: outside the current set and its neighborhood.
      for (Vertex u : g_.neighbors(w)) {
        if (u > anchor && marks_[u] == 0) next.push_back(u);
      }
      add(w);
      const bool ok = extend(anchor, std::move(next), max_size, only_full, visit);
      remove(w);
      if (!ok) return false;
    }
    return true;
  }

  const Graph& g_;
  std::vector<int> marks_;
  std::vector<Vertex> sub_;
};

// Z(G) >= min degree: the first force needs all but one neighbor colored.
std::size_t search_floor(const Graph& g) { return std::max<std::size_t>(1, g.min_degree()); }

}  // namespace

SolveResult zero_forcing_number(const Graph& g, const ExactOptions& options) {
  require_connected(g);
  const auto start = Clock::now();
  const std::size_t n = g.order();
  std::atomic<std::uint64_t> examined{0};
  SolveResult result;
  result.method = "exact";

  detail::with_forcing_kernel(g, [&](const auto& kernel) {
    for (std::size_t k = search_floor(g); k <= n; ++k) {
      std::vector<VertexSet> found(n);
      // Part f: k-subsets whose smallest element is f, in lexicographic order.
      auto body = [&](std::size_t f) {
        if (f + k > n) return false;
        VertexSet combo(k);
        for (std::size_t i = 0; i < k; ++i) combo[i] = f + i;
        std::uint64_t local = 0;
        bool hit = false;
        while (true) {
          ++local;
          if (kernel.forces_all(combo)) {
            found[f] = combo;
            hit = true;
            break;
          }
          // Advance positions 1..k-1, keeping combo[0] == f.
          std::size_t i = k;
          while (i > 1 && combo[i - 1] == n - k + (i - 1)) --i;
          if (i <= 1) break;
          ++combo[i - 1];
          for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
        }
        examined += local;
        return hit;
      };
      if (auto part = first_successful_part(n, options.jobs, body)) {
        result.value = k;
        result.witness = found[*part];
        return;
      }
    }
  });
  result.sets_examined = examined.load();
  result.elapsed = Clock::now() - start;
  return result;
}

SolveResult connected_forcing_number_exact(const Graph& g, const ExactOptions& options) {
  require_connected(g);
  const auto start = Clock::now();
  const std::size_t n = g.order();
  std::atomic<std::uint64_t> examined{0};
  SolveResult result;
  result.method = "exact";

  detail::with_forcing_kernel(g, [&](const auto& kernel) {
    for (std::size_t k = search_floor(g); k <= n; ++k) {
      std::vector<VertexSet> found(n);
      // Part a: connected k-sets whose smallest vertex is a. The sorted
      // witness starts with a, so the smallest successful anchor holds the
      // lexicographically smallest witness.
      auto body = [&](std::size_t anchor) {
        ConnectedSubsetWalker walker(g);
        std::uint64_t local = 0;
        VertexSet best;
        walker.walk(anchor, k, true, [&](std::span<const Vertex> sub) {
          ++local;
          if (kernel.forces_all(sub)) {
            VertexSet candidate(sub.begin(), sub.end());
            std::sort(candidate.begin(), candidate.end());
            if (best.empty() || candidate < best) best = std::move(candidate);
          }
          return true;
        });
        examined += local;
        if (best.empty()) return false;
        found[anchor] = std::move(best);
        return true;
      };
      if (auto part = first_successful_part(n, options.jobs, body)) {
        result.value = k;
        result.witness = found[*part];
        return;
      }
    }
  });
  result.sets_examined = examined.load();
  result.elapsed = Clock::now() - start;
  return result;
}

void for_each_connected_subset(const Graph& g, std::size_t max_size,
                               const std::function<bool(std::span<const Vertex>)>& visit) {
  ConnectedSubsetWalker walker(g);
  for (Vertex anchor = 0; anchor < g.order(); ++anchor) {
    if (!walker.walk(anchor, max_size, false, visit)) return;
  }
}

SetFamily enumerate_connected_forcing_sets(const Graph& g, bool minimal_only,
                                           std::optional<std::size_t> size_cap) {
  require_connected(g);
  const std::size_t cap = size_cap.value_or(g.order());
  if (cap > g.order()) throw PreconditionError("size cap exceeds the vertex count");
  std::vector<VertexSet> sets;
  detail::with_forcing_kernel(g, [&](const auto& kernel) {
    for_each_connected_subset(g, cap, [&](std::span<const Vertex> sub) {
      if (kernel.forces_all(sub)) sets.push_back(normalize(VertexSet(sub.begin(), sub.end())));
      return true;
    });
  });
  if (minimal_only) {
    std::erase_if(sets, [&](const VertexSet& s) {
      if (s.size() == 1) return false;
      for (std::size_t i = 0; i < s.size(); ++i) {
        VertexSet rest = s;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        if (is_connected_forcing_set(g, rest)) return true;
      }
      return false;
    });
  }
  return SetFamily(g.order(), std::move(sets));
}

std::vector<VertexSet> minimum_zero_forcing_sets(const Graph& g) {
  const SolveResult z = zero_forcing_number(g);
  const std::size_t n = g.order(), k = z.value;
  std::vector<VertexSet> out;
  detail::with_forcing_kernel(g, [&](const auto& kernel) {
    VertexSet combo(k);
    for (std::size_t i = 0; i < k; ++i) combo[i] = i;
    while (true) {
      if (kernel.forces_all(combo)) out.push_back(combo);
      std::size_t i = k;
      while (i > 0 && combo[i - 1] == n - k + (i - 1)) --i;
      if (i == 0) break;
      ++combo[i - 1];
      for (std::size_t j = i; j < k; ++j) combo[j] = combo[j - 1] + 1;
    }
  });
  return out;
}

SpreadResult spread_zc(const Graph& g, const SpreadTarget& target, bool exact_only) {
  require_connected(g);
  Graph reduced;
  if (const Vertex* v = std::get_if<Vertex>(&target)) {
    if (*v >= g.order()) throw PreconditionError("vertex out of range");
    if (g.order() < 2) throw PreconditionError("cannot delete the only vertex");
    if (block_decomposition(g).is_articulation(*v)) {
      throw PreconditionError("spread is defined only for non-articulation vertices");
    }
    reduced = remove_vertex(g, *v);
  } else {
    const auto [a, b] = std::get<Edge>(target);
    if (!g.adjacent(a, b)) throw PreconditionError("not an edge of the graph");
    if (is_bridge(g, a, b)) throw PreconditionError("spread is defined only for non-bridge edges");
    reduced = remove_edge(g, a, b);
  }
  auto solve = [&](const Graph& h) {
    return exact_only ? connected_forcing_number_exact(h) : solve_connected_forcing(h);
  };
  const SolveResult before = solve(g);
  const SolveResult after = solve(reduced);
  SpreadResult out;
  out.zc_before = before.value;
  out.zc_after = after.value;
  out.method_before = before.method;
  out.method_after = after.method;
  out.spread = static_cast<long long>(before.value) - static_cast<long long>(after.value);
  return out;
}

}  // namespace zf
