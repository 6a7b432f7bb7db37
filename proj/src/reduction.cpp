#include "zf/reduction.hpp"

#include <future>

namespace zf {

ReductionInstance czf_reduction(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Edge> edges = g.edges();
  const Vertex v_star = n, l1 = n + 1, l2 = n + 2;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, v_star);
  edges.emplace_back(v_star, l1);
  edges.emplace_back(v_star, l2);
  return {g, build_graph(n + 3, edges), v_star, l1, l2};
}

ReductionReport verify_reduction(const Graph& g, const ExactOptions& options) {
  if (!is_connected(g)) throw PreconditionError("reduction verification requires a connected graph");
  const ReductionInstance inst = czf_reduction(g);
  auto zf = std::async(std::launch::async, [&] { return zero_forcing_number(g, options); });
  ReductionReport report;
  report.czf = connected_forcing_number_exact(inst.transformed, options);
  report.zf = zf.get();
  report.value_match = report.czf.value == transformed_bound(report.zf.value);
  const auto& w = report.czf.witness;
  report.witness_has_gadget = contains(w, inst.v_star) && (contains(w, inst.l1) || contains(w, inst.l2));
  return report;
}

EqualityReport equality_report(const Graph& g) {
  const std::vector<VertexSet> minimum = minimum_zero_forcing_sets(g);
  EqualityReport out;
  out.z = minimum.front().size();
  out.minimum_sets = minimum.size();
  for (const VertexSet& s : minimum) {
    if (induces_connected(g, s)) {
      out.connected_witness = s;
      break;
    }
  }
  out.equal = out.connected_witness.has_value();
  out.zc = out.equal ? out.z : connected_forcing_number_exact(g).value;
  return out;
}

}  // namespace zf
