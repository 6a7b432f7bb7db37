#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "zf/axioms.hpp"
#include "zf/blocks.hpp"
#include "zf/classify.hpp"
#include "zf/exact.hpp"
#include "zf/family_solvers.hpp"
#include "zf/forcing.hpp"
#include "zf/generators.hpp"
#include "zf/io.hpp"
#include "zf/reduction.hpp"
#include "zf/structure.hpp"
#include "zf/validation.hpp"

namespace py = pybind11;
using namespace zf;

namespace {

py::dict solve_dict(const SolveResult& r) {
  py::dict d;
  d["value"] = r.value;
  d["witness"] = r.witness;
  d["sets_examined"] = r.sets_examined;
  d["elapsed"] = r.elapsed.count();
  d["method"] = r.method;
  return d;
}

Graph parse_text(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

GeneratorFamily family_from(const std::string& name) {
  auto f = parse_generator_family(name);
  if (!f) throw PreconditionError("unknown generator family '" + name + "'");
  return *f;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Zero forcing and connected zero forcing on simple undirected graphs";

  auto base = py::register_exception<Error>(m, "ZeroForcingError", PyExc_ValueError);
  py::register_exception<GraphError>(m, "GraphError", base.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return build_graph(n, edges); }),
           py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_static("parse", &parse_text, py::arg("text"), "Read edge-list or DIMACS text")
      .def_static("read", [](const std::string& path) { return read_graph_file(path); }, py::arg("path"))
      .def_property_readonly("n", &Graph::order)
      .def_property_readonly("m", &Graph::size)
      .def("edges", &Graph::edges)
      .def("neighbors", [](const Graph& g, Vertex v) {
        if (v >= g.order()) throw PreconditionError("vertex out of range");
        auto nb = g.neighbors(v);
        return std::vector<Vertex>(nb.begin(), nb.end());
      })
      .def("degree", [](const Graph& g, Vertex v) {
        if (v >= g.order()) throw PreconditionError("vertex out of range");
        return g.degree(v);
      })
      .def("adjacent", &Graph::adjacent)
      .def("is_connected", [](const Graph& g) { return is_connected(g); })
      .def("to_edge_list", [](const Graph& g) { return edge_list_string(g); })
      .def("to_dot", [](const Graph& g, const std::map<Vertex, std::string>& fill) {
        std::ostringstream out;
        write_dot(out, g, fill);
        return out.str();
      }, py::arg("fill") = std::map<Vertex, std::string>{})
      .def("remove_edge", [](const Graph& g, Vertex u, Vertex v) { return remove_edge(g, u, v); })
      .def("remove_vertex", [](const Graph& g, Vertex v) { return remove_vertex(g, v); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
      });

  py::class_<ColoringTrace>(m, "ColoringTrace")
      .def_readonly("initial_set", &ColoringTrace::initial_set)
      .def_readonly("derived_set", &ColoringTrace::derived_set)
      .def_property_readonly("forces", [](const ColoringTrace& t) {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (const auto& f : t.forces) out.emplace_back(f.forcer, f.forced);
        return out;
      })
      .def_readonly("chains", &ColoringTrace::chains);

  m.def("derive", [](const Graph& g, const VertexSet& s, std::optional<std::uint64_t> seed) {
    return seed ? derive(g, s, ForceOrder::SeededRandom, *seed) : derive(g, s);
  }, py::arg("g"), py::arg("initial"), py::arg("seed") = py::none(),
     "Run the color change rule; a seed picks a random force order");
  m.def("derived_set", [](const Graph& g, const VertexSet& s) { return derived_set(g, s); });
  m.def("is_forcing_set", [](const Graph& g, const VertexSet& s) { return is_forcing_set(g, s); });
  m.def("is_connected_set", [](const Graph& g, const VertexSet& s) { return is_connected_set(g, s); });
  m.def("is_connected_forcing_set",
        [](const Graph& g, const VertexSet& s) { return is_connected_forcing_set(g, s); });

  m.def("zero_forcing_number", [](const Graph& g, unsigned jobs) {
    SolveResult r;
    {
      py::gil_scoped_release release;
      r = zero_forcing_number(g, {jobs});
    }
    return solve_dict(r);
  }, py::arg("g"), py::arg("jobs") = 1);
  m.def("connected_forcing_number", [](const Graph& g, unsigned jobs) {
    SolveResult r;
    {
      py::gil_scoped_release release;
      r = connected_forcing_number_exact(g, {jobs});
    }
    return solve_dict(r);
  }, py::arg("g"), py::arg("jobs") = 1, "Exact Z_c by connected-subset search");
  m.def("solve_connected_forcing", [](const Graph& g) { return solve_dict(solve_connected_forcing(g)); },
        "Closed form when the family allows it, exact search otherwise");
  m.def("tree_zc", [](const Graph& g) { return solve_dict(tree_zc(g)); });
  m.def("unicyclic_zc", [](const Graph& g) { return solve_dict(unicyclic_zc(g)); });
  m.def("block_graph_zc", [](const Graph& g) { return solve_dict(block_graph_zc(g)); });
  m.def("cactus_zc", [](const Graph& g) { return solve_dict(cactus_zc(g)); });
  m.def("greedy_zc", [](const Graph& g) { return solve_dict(greedy_zc(g)); });

  m.def("spread", [](const Graph& g, std::optional<Edge> edge, std::optional<Vertex> vertex, bool exact) {
    if (edge.has_value() == vertex.has_value()) {
      throw PreconditionError("give exactly one of edge or vertex");
    }
    const SpreadTarget target = edge ? SpreadTarget(*edge) : SpreadTarget(*vertex);
    const SpreadResult r = spread_zc(g, target, exact);
    py::dict d;
    d["spread"] = r.spread;
    d["zc_before"] = r.zc_before;
    d["zc_after"] = r.zc_after;
    d["method_before"] = r.method_before;
    d["method_after"] = r.method_after;
    return d;
  }, py::arg("g"), py::arg("edge") = py::none(), py::arg("vertex") = py::none(),
     py::arg("exact") = false);

  m.def("classify_family", [](const Graph& g) {
    const FamilyInfo info = classify_family(g);
    py::dict d;
    d["tag"] = std::string(to_string(info.tag));
    d["path"] = info.path;
    d["cycle"] = info.cycle;
    d["tree"] = info.tree;
    d["unicyclic"] = info.unicyclic;
    d["block_graph"] = info.block_graph;
    d["cactus"] = info.cactus;
    d["pendant_free"] = info.pendant_free;
    return d;
  });

  m.def("block_decomposition", [](const Graph& g) {
    const BlockDecomposition d = block_decomposition(g);
    py::list blocks;
    for (const Block& b : d.blocks) {
      py::dict entry;
      entry["vertices"] = b.vertices;
      entry["kind"] = std::string(to_string(b.kind));
      entry["outer"] = b.outer;
      entry["depth"] = b.depth;
      blocks.append(entry);
    }
    py::dict out;
    out["blocks"] = blocks;
    out["articulation_points"] = d.articulation_points;
    out["membership"] = d.membership;
    return out;
  });

  m.def("structural_sets", [](const Graph& g) {
    const StructuralSets ss = structural_sets(g);
    const LowerBounds lb = lower_bounds(g);
    py::dict d;
    d["r1"] = ss.r1;
    d["r2"] = ss.r2;
    d["r3"] = ss.r3;
    d["l"] = ss.l_set;
    d["m"] = ss.m_set;
    d["p"] = ss.p;
    d["bound_m"] = lb.bound_m;
    d["bound_blocks"] = lb.bound_blocks;
    return d;
  });

  m.def("czf_reduction", [](const Graph& g) {
    const ReductionInstance inst = czf_reduction(g);
    py::dict d;
    d["graph"] = inst.transformed;
    d["v_star"] = inst.v_star;
    d["l1"] = inst.l1;
    d["l2"] = inst.l2;
    return d;
  });
  m.def("verify_reduction", [](const Graph& g) {
    ReductionReport r;
    {
      py::gil_scoped_release release;
      r = verify_reduction(g);
    }
    py::dict d;
    d["z"] = solve_dict(r.zf);
    d["zc_transformed"] = solve_dict(r.czf);
    d["passed"] = r.passed();
    return d;
  });
  m.def("equality_report", [](const Graph& g) {
    const EqualityReport r = equality_report(g);
    py::dict d;
    d["z"] = r.z;
    d["zc"] = r.zc;
    d["equal"] = r.equal;
    d["connected_witness"] = r.connected_witness;
    return d;
  });

  m.def("check_axioms", [](const Graph& g, std::size_t cap, const std::string& family) {
    AxiomOptions options;
    options.exhaustive_cap = cap;
    const SetFamily fam = family == "zero" ? zero_forcing_family(g) : connected_forcing_family(g);
    const AxiomReport r = check_axioms(fam, options);
    py::dict d;
    d["m1"] = r.m1;
    d["m2"] = r.m2;
    d["m3"] = r.m3;
    d["greedoid_m1_m3"] = r.greedoid_m1_m3();
    d["matroid"] = r.matroid();
    d["mode"] = std::string(to_string(r.mode));
    if (r.m2_witness) d["m2_witness"] = py::make_tuple(r.m2_witness->subset, r.m2_witness->superset);
    if (r.m3_witness) {
      d["m3_witness"] = py::make_tuple(r.m3_witness->a, r.m3_witness->smaller, r.m3_witness->larger);
    }
    return d;
  }, py::arg("g"), py::arg("cap") = 12, py::arg("family") = "connected",
     "Axioms (M1)-(M3) on the complements of the forcing sets of g");

  m.def("generate", [](const std::string& family, std::size_t n, std::size_t k, std::size_t legs,
                       std::size_t leg_length, std::uint64_t seed, bool pendant_free) {
    GeneratorSpec spec;
    spec.family = family_from(family);
    spec.n = n;
    spec.k = k;
    spec.legs = legs;
    spec.leg_length = leg_length;
    spec.seed = seed;
    spec.pendant_free = pendant_free;
    return generate(spec);
  }, py::arg("family"), py::arg("n") = 0, py::arg("k") = 0, py::arg("legs") = 0,
     py::arg("leg_length") = 0, py::arg("seed") = 0, py::arg("pendant_free") = true);
  m.def("spread_fixture", [](const std::string& family, std::size_t k) {
    const SpreadFixture f = family == "g1_spread" ? g1_spread(k)
                            : family == "g2_spread" ? g2_spread(k)
                                                    : throw PreconditionError("spread fixtures are g1_spread and g2_spread");
    return py::make_tuple(f.graph, f.deleted);
  }, py::arg("family"), py::arg("k"));

  m.def("validate_corpus", [](const std::vector<std::string>& families, std::size_t per_family,
                              std::size_t min_n, std::size_t max_n, std::uint64_t seed, unsigned jobs) {
    ValidationConfig config;
    if (!families.empty()) {
      config.families.clear();
      for (const auto& f : families) config.families.push_back(family_from(f));
    }
    config.per_family = per_family;
    config.min_n = min_n;
    config.max_n = max_n;
    config.seed = seed;
    config.jobs = jobs;
    ValidationReport report;
    {
      py::gil_scoped_release release;
      report = validate_corpus(config);
    }
    py::list rows;
    for (const auto& r : report.rows) {
      py::dict row;
      row["family"] = std::string(to_string(r.spec.family));
      row["n"] = r.spec.n;
      row["seed"] = r.spec.seed;
      row["method"] = r.method;
      row["family_value"] = r.family_value;
      row["exact_value"] = r.exact_value;
      row["passed"] = r.passed;
      row["error"] = r.error;
      rows.append(row);
    }
    py::dict d;
    d["passed"] = report.passed;
    d["failed"] = report.failed;
    d["rows"] = rows;
    return d;
  }, py::arg("families") = std::vector<std::string>{}, py::arg("per_family") = 20,
     py::arg("min_n") = 4, py::arg("max_n") = 10, py::arg("seed") = 1, py::arg("jobs") = 1);
}
