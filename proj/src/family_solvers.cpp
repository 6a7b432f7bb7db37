#include "zf/family_solvers.hpp"

#include <algorithm>

#include "forcing_kernel.hpp"
#include "zf/forcing.hpp"

namespace zf {

namespace {

using Clock = std::chrono::steady_clock;

SolveResult finish(VertexSet witness, std::string method, Clock::time_point start) {
  SolveResult r;
  r.witness = normalize(std::move(witness));
  r.value = r.witness.size();
  r.method = std::move(method);
  r.elapsed = Clock::now() - start;
  return r;
}

// The vertices a case of f0/f1/f2 takes off a candidate segment. These are
// always ends of the segment.
using Trim = std::vector<Vertex>;

class UnicyclicCandidates {
 public:
  UnicyclicCandidates(const Graph& g, const CycleContext& ctx, const PendantIndex& pendants)
      : g_(g), ctx_(ctx), pendants_(pendants) {}

  std::size_t p(Vertex v) const { return pendants_.count(v); }
  bool adj(Vertex u, Vertex v) const { return g_.adjacent(u, v); }

  Segment open_arc(Vertex u, Vertex v) const {
    return {u, v, (ctx_.position(u) + 1) % ctx_.length(), ctx_.gap(u, v)};
  }

  void trim(Segment& s, const Trim& drop) const {
    for (Vertex x : drop) {
      if (s.length == 0) return;
      const Vertex first = ctx_.at(s.first);
      const Vertex last = ctx_.at(s.first + s.length - 1);
      if (x == first) {
        s.first = (s.first + 1) % ctx_.length();
        --s.length;
      } else if (x == last) {
        --s.length;
      }
    }
  }

  Trim f2(Vertex u, Vertex v) const {
    if (p(u) > 0 && p(v) > 0) return {ctx_.ccw_next(u), ctx_.cw_prev(v)};
    if ((p(u) > 0 && p(v) == 0) || (p(u) == 0 && v == u)) return {ctx_.ccw_next(u)};
    if (p(u) == 0 && p(v) > 0) return {ctx_.cw_prev(v)};
    return {};
  }

  Trim f1(Vertex u, Vertex v, Vertex w) const {
    const bool uv = adj(u, v), vw = adj(v, w);
    if (!uv && !vw) return f2(u, w);
    if (uv && !vw && p(w) > 0) return {ctx_.cw_prev(w)};
    if (!uv && vw && p(u) > 0) return {ctx_.ccw_next(u)};
    if (uv && vw && u != w && p(u) > 0 && p(w) > 0) return {v};
    if (u == w && uv) {
      Trim out;
      for (Vertex x : {ctx_.ccw_next(u), ctx_.cw_prev(u)}) {
        if (x != v) out.push_back(x);
      }
      return out;
    }
    return {};
  }

  Trim f0(Vertex u, Vertex v) const {
    if ((p(u) >= 1 && p(v) >= 1) || u == v) return {ctx_.ccw_next(u)};
    return {};
  }

 private:
  const Graph& g_;
  const CycleContext& ctx_;
  const PendantIndex& pendants_;
};

}  // namespace

std::vector<Vertex> Segment::vertices(const CycleContext& ctx) const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < length; ++i) out.push_back(ctx.at(first + i));
  return out;
}

bool Segment::contains(const CycleContext& ctx, Vertex v) const {
  if (!ctx.on_cycle(v)) return false;
  const std::size_t offset = (ctx.position(v) + ctx.length() - first) % ctx.length();
  return offset < length;
}

SolveResult tree_zc(const Graph& g) {
  const auto start = Clock::now();
  if (!is_connected(g) || g.size() + 1 != g.order()) {
    throw PreconditionError("tree_zc requires a tree");
  }
  if (is_path_graph(g)) {
    Vertex leaf = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (g.degree(v) <= 1) {
        leaf = v;
        break;
      }
    }
    return finish({leaf}, "tree", start);
  }
  return finish(structural_sets(g).m_set, "tree", start);
}

SolveResult unicyclic_zc(const Graph& g, UnicyclicDetail* detail) {
  const auto start = Clock::now();
  if (!is_connected(g) || g.size() != g.order()) {
    throw PreconditionError("unicyclic_zc requires a unicyclic graph");
  }
  const BlockDecomposition d = block_decomposition(g);
  const PendantIndex pendants(g);
  const StructuralSets ss = structural_sets(g, d, pendants);
  const CycleContext ctx = cycle_context(g, d);
  const auto& a = ctx.articulation_list();
  const std::size_t k = a.size();
  if (detail) {
    detail->cycle = ctx.cycle();
    detail->articulation_list = a;
  }

  if (k == 0) {
    return finish({ctx.at(0), ctx.at(1)}, "unicyclic", start);
  }

  const UnicyclicCandidates cand(g, ctx, pendants);
  std::vector<char> in_r1(g.order(), 0);
  for (Vertex v : ss.r1) in_r1[v] = 1;
  auto at = [&](std::size_t i) { return a[i % k]; };

  std::vector<FeasibleSegment> candidates;
  auto record = [&](Segment s, std::size_t cls, std::size_t i) {
    FeasibleSegment fs{s, 0, i, cls};
    for (Vertex v : a) fs.articulation_count += s.contains(ctx, v);
    candidates.push_back(fs);
  };

  // No articulation point inside: between consecutive articulation points.
  for (std::size_t i = 0; i < k; ++i) {
    Segment s = cand.open_arc(at(i), at(i + 1));
    cand.trim(s, cand.f0(at(i), at(i + 1)));
    record(s, 0, i);
  }
  // One articulation point inside, which must be in R1.
  if (k >= 2) {
    for (std::size_t i = 0; i < k; ++i) {
      if (!in_r1[at(i + 1)]) continue;
      Segment s = cand.open_arc(at(i), at(i + 2));
      cand.trim(s, cand.f1(at(i), at(i + 1), at(i + 2)));
      record(s, 1, i);
    }
  }
  // Two adjacent R1 articulation points inside.
  if (k >= 3) {
    for (std::size_t i = 0; i < k; ++i) {
      if (!in_r1[at(i + 1)] || !in_r1[at(i + 2)] || !g.adjacent(at(i + 1), at(i + 2))) continue;
      Segment s = cand.open_arc(at(i), at(i + 3));
      cand.trim(s, cand.f2(at(i), at(i + 3)));
      record(s, 2, i);
    }
  }

  // Candidates were generated by class then index, so the first maximum wins
  // the tie-break.
  const FeasibleSegment* best = &candidates.front();
  for (const auto& c : candidates) {
    if (c.segment.length > best->segment.length) best = &c;
  }

  VertexSet cycle_part = normalize(ctx.cycle());
  VertexSet excluded = normalize(best->segment.vertices(ctx));
  VertexSet witness = set_union(ss.m_set, set_difference(cycle_part, excluded));
  if (detail) {
    detail->chosen = *best;
    detail->candidates = candidates;
  }
  return finish(std::move(witness), "unicyclic", start);
}

SolveResult block_graph_zc(const Graph& g) {
  const auto start = Clock::now();
  const FamilyInfo info = classify_family(g);
  if (!info.block_graph) throw PreconditionError("block_graph_zc requires a block graph");
  if (info.path) throw PreconditionError("block_graph_zc does not apply to a path");
  if (!info.pendant_free) throw PreconditionError("block_graph_zc requires a graph without pendant paths");
  const BlockDecomposition d = block_decomposition(g);
  VertexSet dropped;
  for (const Block& b : d.blocks) {
    for (Vertex v : b.vertices) {
      if (!d.is_articulation(v)) {
        dropped.push_back(v);
        break;
      }
    }
  }
  VertexSet all(g.order());
  for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
  return finish(set_difference(all, normalize(dropped)), "block_graph", start);
}

SolveResult cactus_zc(const Graph& g) {
  const auto start = Clock::now();
  const FamilyInfo info = classify_family(g);
  if (!info.cactus) throw PreconditionError("cactus_zc requires a cactus graph");
  if (info.path) throw PreconditionError("cactus_zc does not apply to a path");
  if (!info.pendant_free) throw PreconditionError("cactus_zc requires a graph without pendant paths");
  const BlockDecomposition d = block_decomposition(g);
  if (info.cycle) {
    const CycleContext ctx(g, d.blocks.front().vertices, d);
    return finish({ctx.at(0), ctx.at(1)}, "cactus", start);
  }

  VertexSet removed;
  VertexSet keep_back;
  for (const Block& b : d.blocks) {
    if (b.kind != BlockKind::Cycle) continue;
    const CycleContext ctx(g, b.vertices, d);
    const auto& aps = ctx.articulation_list();
    // Largest segment free of articulation points: the widest gap between
    // cyclically consecutive ones (the whole cycle minus p if only one).
    std::size_t best_i = 0, best_len = 0;
    for (std::size_t i = 0; i < aps.size(); ++i) {
      const std::size_t len = ctx.gap(aps[i], aps[(i + 1) % aps.size()]);
      if (len > best_len) {
        best_len = len;
        best_i = i;
      }
    }
    for (Vertex v : ctx.segment(aps[best_i], aps[(best_i + 1) % aps.size()])) removed.push_back(v);
    if (b.outer) {
      const Vertex p = b.articulation_points.front();
      for (Vertex v : b.vertices) {
        if (v != p && g.adjacent(v, p)) {
          keep_back.push_back(v);
          break;
        }
      }
    }
  }
  VertexSet all(g.order());
  for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
  VertexSet witness = set_union(set_difference(all, normalize(removed)), normalize(keep_back));
  return finish(std::move(witness), "cactus", start);
}

SolveResult greedy_zc(const Graph& g) {
  const auto start = Clock::now();
  if (!is_connected(g)) throw PreconditionError("greedy_zc requires a connected graph");
  VertexSet current(g.order());
  for (Vertex v = 0; v < g.order(); ++v) current[v] = v;
  std::uint64_t examined = 0;
  detail::with_forcing_kernel(g, [&](const auto& kernel) {
    bool removed = true;
    while (removed && current.size() > 1) {
      removed = false;
      for (std::size_t i = 0; i < current.size(); ++i) {
        VertexSet next = current;
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
        ++examined;
        if (induces_connected(g, next) && kernel.forces_all(next)) {
          current = std::move(next);
          removed = true;
          break;
        }
      }
    }
  });
  SolveResult r = finish(std::move(current), "greedy", start);
  r.sets_examined = examined;
  return r;
}

SolveResult solve_connected_forcing(const Graph& g, const ExactOptions& options) {
  const FamilyInfo info = classify_family(g);
  if (info.tree) return tree_zc(g);
  if (info.unicyclic) return unicyclic_zc(g);
  if (info.pendant_free && info.block_graph) return block_graph_zc(g);
  if (info.pendant_free && info.cactus) return cactus_zc(g);
  return connected_forcing_number_exact(g, options);
}

}  // namespace zf
