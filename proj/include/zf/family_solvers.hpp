#pragma once

#include <optional>
#include <vector>

#include "zf/classify.hpp"
#include "zf/exact.hpp"
#include "zf/structure.hpp"

namespace zf {

/// The open counterclockwise interval (start -> end) of a cycle, stored as a
/// run of `length` cycle positions beginning at `first`.
struct Segment {
  Vertex start = 0;
  Vertex end = 0;
  std::size_t first = 0;
  std::size_t length = 0;

  std::vector<Vertex> vertices(const CycleContext& ctx) const;
  bool contains(const CycleContext& ctx, Vertex v) const;
};

/// Segment whose removal from M | C leaves a forcing set, tagged with the
/// candidate class j (number of articulation points it was built around) and
/// index i into the articulation list.
struct FeasibleSegment {
  Segment segment;
  std::size_t articulation_count = 0;
  std::size_t index = 0;
  std::size_t cls = 0;
};

/// Minimum connected forcing set of a tree: a leaf for a path, M otherwise.
SolveResult tree_zc(const Graph& g);

struct UnicyclicDetail {
  std::vector<Vertex> cycle;
  std::vector<Vertex> articulation_list;
  /// Every candidate segment D_i^j that was evaluated.
  std::vector<FeasibleSegment> candidates;
  /// The chosen maximum segment; empty when the graph is a cycle.
  std::optional<FeasibleSegment> chosen;
};

/// Linear-time minimum connected forcing set of a unicyclic graph: the cycle
/// minus the largest feasible segment, plus M.
SolveResult unicyclic_zc(const Graph& g, UnicyclicDetail* detail = nullptr);

/// n - b for a pendant-free block graph, where b counts blocks that have a
/// non-articulation vertex.
SolveResult block_graph_zc(const Graph& g);

/// n - sum |D_C| + b for a pendant-free cactus that is not a cycle, where D_C
/// is the largest articulation-free segment of cycle C and b counts outer
/// blocks; 2 for a cycle.
SolveResult cactus_zc(const Graph& g);

/// Starts from V and repeatedly drops the smallest-labeled vertex whose
/// removal leaves a connected forcing set. The result is minimal, and minimum
/// for non-path cacti whose cycles are all outer blocks.
SolveResult greedy_zc(const Graph& g);

/// Dispatches to the closed-form solver for the graph's family and falls back
/// to the exact search otherwise; `method` records which one ran.
SolveResult solve_connected_forcing(const Graph& g, const ExactOptions& options = {});

}  // namespace zf
