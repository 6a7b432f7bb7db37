// zf: command-line front end for the zero forcing library.
//
// Exit codes: 0 success, 1 a validation or verification failed,
// 2 usage, parse, or precondition error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "zf/axioms.hpp"
#include "zf/classify.hpp"
#include "zf/exact.hpp"
#include "zf/family_solvers.hpp"
#include "zf/forcing.hpp"
#include "zf/generators.hpp"
#include "zf/io.hpp"
#include "zf/reduction.hpp"
#include "zf/structure.hpp"
#include "zf/validation.hpp"

using json = nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

zf::Graph load(const std::string& path) {
  if (path == "-") return zf::read_graph(std::cin);
  return zf::read_graph_file(path);
}

zf::VertexSet parse_list(const std::string& text) {
  zf::VertexSet out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw zf::ParseError("not a vertex label: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

json solve_json(const zf::SolveResult& r, bool witness) {
  json j{{"value", r.value},
         {"sets_examined", r.sets_examined},
         {"elapsed", r.elapsed.count()},
         {"method", r.method}};
  if (witness) j["witness"] = r.witness;
  return j;
}

void print_solve(const std::string& label, const zf::SolveResult& r, bool witness) {
  std::cout << label << " = " << r.value << "  (" << r.method << ", " << r.sets_examined
            << " sets, " << std::fixed << std::setprecision(3) << r.elapsed.count() << " s)\n";
  if (witness) std::cout << "witness " << zf::to_string(r.witness) << '\n';
}

struct Common {
  std::string graph;
  bool json = false;
  bool witness = false;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zero forcing and connected zero forcing toolkit"};
  app.require_subcommand(1);
  std::function<int()> action;

  // gen
  std::string gen_family;
  zf::GeneratorSpec gen_spec;
  bool gen_pendants = false;
  std::string gen_format = "edges";
  auto* gen = app.add_subcommand("gen", "Generate a graph");
  gen->add_option("family", gen_family, "path|cycle|star|complete|spider|random_tree|"
                                        "random_unicyclic|random_cactus|random_block|"
                                        "random_outer_cactus|g1_spread|g2_spread")
      ->required();
  gen->add_option("-n,--n", gen_spec.n, "Vertex count");
  gen->add_option("-k,--k", gen_spec.k, "Spread fixture parameter");
  gen->add_option("--legs", gen_spec.legs, "Spider leg count");
  gen->add_option("--leg-length", gen_spec.leg_length, "Spider leg length");
  gen->add_option("--seed", gen_spec.seed, "Seed for random families");
  gen->add_flag("--with-pendants", gen_pendants, "Allow pendant vertices in random cactus/block");
  gen->add_option("--format", gen_format, "edges|dot")->check(CLI::IsMember({"edges", "dot"}));
  gen->callback([&] {
    action = [&] {
      auto family = zf::parse_generator_family(gen_family);
      if (!family) throw zf::ParseError("unknown family '" + gen_family + "'");
      gen_spec.family = *family;
      gen_spec.pendant_free = !gen_pendants;
      const zf::Graph g = zf::generate(gen_spec);
      if (gen_format == "dot") {
        zf::write_dot(std::cout, g);
        return kOk;
      }
      std::cout << "# " << gen_spec.describe() << '\n';
      if (*family == zf::GeneratorFamily::G1Spread || *family == zf::GeneratorFamily::G2Spread) {
        const auto fixture = *family == zf::GeneratorFamily::G1Spread ? zf::g1_spread(gen_spec.k)
                                                                      : zf::g2_spread(gen_spec.k);
        std::cout << "# spread edge " << fixture.deleted.first << ' ' << fixture.deleted.second
                  << '\n';
      }
      zf::write_edge_list(std::cout, g);
      return kOk;
    };
  });

  // exact
  Common exact_opts;
  bool exact_connected = false;
  unsigned exact_jobs = 1;
  auto* exact = app.add_subcommand("exact", "Exact Z(G), or Z_c(G) with --connected");
  exact->add_option("graph", exact_opts.graph, "Graph file, or - for stdin")->required();
  exact->add_flag("--connected", exact_connected, "Solve connected zero forcing");
  exact->add_option("--jobs", exact_jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  exact->add_flag("--witness", exact_opts.witness, "Print a minimum set");
  exact->add_flag("--json", exact_opts.json, "JSON output");
  exact->callback([&] {
    action = [&] {
      const zf::Graph g = load(exact_opts.graph);
      zf::ExactOptions options{exact_jobs};
      const auto r = exact_connected ? zf::connected_forcing_number_exact(g, options)
                                     : zf::zero_forcing_number(g, options);
      if (exact_opts.json) {
        std::cout << solve_json(r, exact_opts.witness).dump(2) << '\n';
      } else {
        print_solve(exact_connected ? "Z_c" : "Z", r, exact_opts.witness);
      }
      return kOk;
    };
  });

  // family
  Common family_opts;
  std::string expect;
  auto* family = app.add_subcommand("family", "Closed-form Z_c for trees, unicyclic, cactus, block graphs");
  family->add_option("graph", family_opts.graph, "Graph file, or - for stdin")->required();
  family->add_option("--expect", expect, "Require a family")
      ->check(CLI::IsMember({"tree", "unicyclic", "cactus", "block"}));
  family->add_flag("--witness", family_opts.witness, "Print a minimum set");
  family->add_flag("--json", family_opts.json, "JSON output");
  family->callback([&] {
    action = [&] {
      const zf::Graph g = load(family_opts.graph);
      zf::SolveResult r;
      if (expect == "tree") {
        r = zf::tree_zc(g);
      } else if (expect == "unicyclic") {
        r = zf::unicyclic_zc(g);
      } else if (expect == "cactus") {
        r = zf::cactus_zc(g);
      } else if (expect == "block") {
        r = zf::block_graph_zc(g);
      } else {
        r = zf::solve_connected_forcing(g);
        if (r.method == "exact") {
          std::cerr << "note: no closed form applies to this "
                    << zf::to_string(zf::classify_family(g).tag)
                    << " graph; used exact search\n";
        }
      }
      if (family_opts.json) {
        std::cout << solve_json(r, family_opts.witness).dump(2) << '\n';
      } else {
        print_solve("Z_c", r, family_opts.witness);
      }
      return kOk;
    };
  });

  // greedy
  Common greedy_opts;
  auto* greedy = app.add_subcommand("greedy", "Minimal connected forcing set by greedy removal");
  greedy->add_option("graph", greedy_opts.graph, "Graph file, or - for stdin")->required();
  greedy->add_flag("--json", greedy_opts.json, "JSON output");
  greedy->callback([&] {
    action = [&] {
      const zf::Graph g = load(greedy_opts.graph);
      const auto r = zf::greedy_zc(g);
      if (greedy_opts.json) {
        std::cout << solve_json(r, true).dump(2) << '\n';
      } else {
        print_solve("greedy", r, true);
      }
      return kOk;
    };
  });

  // structure
  Common structure_opts;
  auto* structure = app.add_subcommand("structure", "R1/R2/R3/L/M, p(v), lower bounds, block depths");
  structure->add_option("graph", structure_opts.graph, "Graph file, or - for stdin")->required();
  structure->add_flag("--json", structure_opts.json, "JSON output");
  structure->callback([&] {
    action = [&] {
      const zf::Graph g = load(structure_opts.graph);
      const auto d = zf::block_decomposition(g);
      const zf::PendantIndex pendants(g);
      const auto ss = zf::structural_sets(g, d, pendants);
      const auto lb = zf::lower_bounds(g, d, ss);
      if (structure_opts.json) {
        json blocks = json::array();
        for (const auto& b : d.blocks) {
          blocks.push_back({{"vertices", b.vertices},
                            {"kind", zf::to_string(b.kind)},
                            {"outer", b.outer},
                            {"depth", b.depth}});
        }
        json out{{"r1", ss.r1},         {"r2", ss.r2},
                 {"r3", ss.r3},         {"l", ss.l_set},
                 {"m", ss.m_set},       {"p", ss.p},
                 {"mu", d.membership},  {"bound_m", lb.bound_m},
                 {"bound_blocks", lb.bound_blocks},
                 {"blocks", blocks}};
        std::cout << out.dump(2) << '\n';
        return kOk;
      }
      std::cout << "R1 " << zf::to_string(ss.r1) << "\nR2 " << zf::to_string(ss.r2) << "\nR3 "
                << zf::to_string(ss.r3) << "\nL  " << zf::to_string(ss.l_set) << "\nM  "
                << zf::to_string(ss.m_set) << "\n\n";
      std::cout << std::left << std::setw(8) << "vertex" << std::setw(6) << "p" << "mu\n";
      for (zf::Vertex v = 0; v < g.order(); ++v) {
        std::cout << std::setw(8) << v << std::setw(6) << ss.p[v] << d.membership[v] << '\n';
      }
      std::cout << "\nbound |M|          " << lb.bound_m << "\nbound blocks       "
                << lb.bound_blocks << "\n\n";
      std::cout << std::setw(8) << "depth" << std::setw(8) << "kind" << std::setw(7) << "outer"
                << "vertices\n";
      for (const auto& b : d.blocks) {
        std::cout << std::setw(8) << b.depth << std::setw(8) << zf::to_string(b.kind)
                  << std::setw(7) << (b.outer ? "yes" : "no") << zf::to_string(b.vertices) << '\n';
      }
      return kOk;
    };
  });

  // trace
  std::string trace_graph, trace_set, trace_dot;
  std::optional<std::uint64_t> trace_seed;
  auto* trace = app.add_subcommand("trace", "Run the color change rule and print forces and chains");
  trace->add_option("graph", trace_graph, "Graph file, or - for stdin")->required();
  trace->add_option("--set", trace_set, "Initial colored set, e.g. 0,3,5")->required();
  trace->add_option("--seed", trace_seed, "Random force order from this seed");
  trace->add_option("--dot", trace_dot, "Also write a DOT file");
  trace->callback([&] {
    action = [&] {
      const zf::Graph g = load(trace_graph);
      const zf::VertexSet initial = zf::normalize(parse_list(trace_set));
      const auto t = trace_seed ? zf::derive(g, initial, zf::ForceOrder::SeededRandom, *trace_seed)
                                : zf::derive(g, initial);
      std::size_t step = 1;
      for (const auto& f : t.forces) std::cout << step++ << ": " << f.forcer << " -> " << f.forced << '\n';
      std::cout << "chains:\n";
      for (const auto& chain : t.chains) {
        std::cout << "  ";
        for (std::size_t i = 0; i < chain.size(); ++i) std::cout << (i ? " -> " : "") << chain[i];
        std::cout << '\n';
      }
      std::cout << "derived " << zf::to_string(t.derived_set) << '\n'
                << (t.colors_all(g) ? "forcing set" : "not a forcing set") << '\n';
      if (!trace_dot.empty()) {
        std::map<zf::Vertex, std::string> fill;
        for (zf::Vertex v : t.derived_set) fill[v] = "lightblue";
        for (zf::Vertex v : initial) fill[v] = "gold";
        std::ofstream out(trace_dot);
        if (!out) throw zf::ParseError("cannot write " + trace_dot);
        zf::write_dot(out, g, fill);
      }
      return kOk;
    };
  });

  // spread
  Common spread_opts;
  std::string spread_edge;
  std::optional<zf::Vertex> spread_vertex;
  bool spread_exact = false;
  auto* spread = app.add_subcommand("spread", "Z_c(G) - Z_c(G - x) for a vertex or edge x");
  spread->add_option("graph", spread_opts.graph, "Graph file, or - for stdin")->required();
  auto* edge_opt = spread->add_option("--edge", spread_edge, "Non-bridge edge u,v");
  auto* vertex_opt = spread->add_option("--vertex", spread_vertex, "Non-articulation vertex");
  edge_opt->excludes(vertex_opt);
  spread->add_flag("--exact", spread_exact, "Use exact search on both sides");
  spread->add_flag("--json", spread_opts.json, "JSON output");
  spread->callback([&] {
    action = [&] {
      const zf::Graph g = load(spread_opts.graph);
      zf::SpreadTarget target;
      if (spread_vertex) {
        target = *spread_vertex;
      } else if (!spread_edge.empty()) {
        const auto ends = parse_list(spread_edge);
        if (ends.size() != 2) throw zf::ParseError("--edge expects u,v");
        target = zf::Edge{ends[0], ends[1]};
      } else {
        throw zf::ParseError("spread needs --edge or --vertex");
      }
      const auto r = zf::spread_zc(g, target, spread_exact);
      if (spread_opts.json) {
        std::cout << json{{"spread", r.spread},
                          {"zc_before", r.zc_before},
                          {"zc_after", r.zc_after},
                          {"method_before", r.method_before},
                          {"method_after", r.method_after}}
                         .dump(2)
                  << '\n';
      } else {
        std::cout << "Z_c before " << r.zc_before << " (" << r.method_before << ")\nZ_c after  "
                  << r.zc_after << " (" << r.method_after << ")\nspread     " << r.spread << '\n';
      }
      return kOk;
    };
  });

  // reduce
  std::string reduce_graph;
  bool reduce_verify = false;
  unsigned reduce_jobs = 1;
  auto* reduce = app.add_subcommand("reduce", "Emit the connected zero forcing instance G'");
  reduce->add_option("graph", reduce_graph, "Graph file, or - for stdin")->required();
  reduce->add_flag("--verify", reduce_verify, "Check Z_c(G') = Z(G) + 2 exactly");
  reduce->add_option("--jobs", reduce_jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  reduce->callback([&] {
    action = [&] {
      const zf::Graph g = load(reduce_graph);
      const auto inst = zf::czf_reduction(g);
      std::cout << "# v* = " << inst.v_star << ", l1 = " << inst.l1 << ", l2 = " << inst.l2 << '\n';
      zf::write_edge_list(std::cout, inst.transformed);
      if (!reduce_verify) return kOk;
      const auto report = zf::verify_reduction(g, {reduce_jobs});
      std::cout << "# Z(G) = " << report.zf.value << ", Z_c(G') = " << report.czf.value
                << ", witness " << zf::to_string(report.czf.witness) << '\n'
                << "# " << (report.passed() ? "pass" : "FAIL") << '\n';
      return report.passed() ? kOk : kFailed;
    };
  });

  // axioms
  Common axioms_opts;
  zf::AxiomOptions axiom_options;
  std::string axiom_family = "connected";
  auto* axioms = app.add_subcommand("axioms", "Check (M1)-(M3) on the complemented forcing family");
  axioms->add_option("graph", axioms_opts.graph, "Graph file, or - for stdin")->required();
  axioms->add_option("--cap", axiom_options.exhaustive_cap, "Largest ground set checked exhaustively");
  axioms->add_option("--samples", axiom_options.samples, "Sampled sets A above the cap");
  axioms->add_option("--seed", axiom_options.seed, "Sampling seed");
  axioms->add_option("--family", axiom_family, "connected|zero")
      ->check(CLI::IsMember({"connected", "zero"}));
  axioms->add_flag("--json", axioms_opts.json, "JSON output");
  axioms->callback([&] {
    action = [&] {
      const zf::Graph g = load(axioms_opts.graph);
      const auto fam = axiom_family == "zero" ? zf::zero_forcing_family(g)
                                              : zf::connected_forcing_family(g);
      const auto r = zf::check_axioms(fam, axiom_options);
      if (axioms_opts.json) {
        json out{{"m1", r.m1},
                 {"m2", r.m2},
                 {"m3", r.m3},
                 {"greedoid_m1_m3", r.greedoid_m1_m3()},
                 {"matroid", r.matroid()},
                 {"mode", zf::to_string(r.mode)},
                 {"sets_checked", r.sets_checked},
                 {"forcing_sets", fam.size()}};
        if (r.m2_witness) out["m2_witness"] = {{"subset", r.m2_witness->subset}, {"superset", r.m2_witness->superset}};
        if (r.m3_witness) {
          out["m3_witness"] = {{"a", r.m3_witness->a},
                               {"smaller", r.m3_witness->smaller},
                               {"larger", r.m3_witness->larger}};
        }
        std::cout << out.dump(2) << '\n';
        return kOk;
      }
      std::cout << "family: complements of " << fam.size() << ' ' << axiom_family
                << " forcing sets (" << zf::to_string(r.mode) << ", " << r.sets_checked
                << " sets A)\n";
      std::cout << "M1 " << (r.m1 ? "holds" : "fails") << "\nM2 " << (r.m2 ? "holds" : "fails");
      if (r.m2_witness) {
        std::cout << ": " << zf::to_string(r.m2_witness->subset) << " subset of "
                  << zf::to_string(r.m2_witness->superset);
      }
      std::cout << "\nM3 " << (r.m3 ? "holds" : "fails");
      if (r.m3_witness) {
        std::cout << ": A = " << zf::to_string(r.m3_witness->a) << ", maximal "
                  << zf::to_string(r.m3_witness->smaller) << " and "
                  << zf::to_string(r.m3_witness->larger);
      }
      std::cout << "\ngreedoid (M1+M3) " << (r.greedoid_m1_m3() ? "yes" : "no") << "\nmatroid "
                << (r.matroid() ? "yes" : "no") << '\n';
      return kOk;
    };
  });

  // equality
  Common equality_opts;
  auto* equality = app.add_subcommand("equality", "Compare Z(G) with Z_c(G)");
  equality->add_option("graph", equality_opts.graph, "Graph file, or - for stdin")->required();
  equality->add_flag("--json", equality_opts.json, "JSON output");
  equality->callback([&] {
    action = [&] {
      const zf::Graph g = load(equality_opts.graph);
      const auto r = zf::equality_report(g);
      if (equality_opts.json) {
        json out{{"z", r.z}, {"zc", r.zc}, {"equal", r.equal}, {"minimum_sets", r.minimum_sets}};
        if (r.connected_witness) out["connected_witness"] = *r.connected_witness;
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << "Z   " << r.z << "\nZ_c " << r.zc << '\n'
                  << (r.equal ? "equal: connected minimum set " + zf::to_string(*r.connected_witness)
                              : "not equal: all " + std::to_string(r.minimum_sets) +
                                    " minimum zero forcing sets are disconnected")
                  << '\n';
      }
      return kOk;
    };
  });

  // validate
  zf::ValidationConfig vconfig;
  std::vector<std::string> vfamilies;
  std::string vformat = "table", vout;
  auto* validate = app.add_subcommand("validate", "Cross-check family solvers against exact search");
  validate->add_option("--families", vfamilies, "Random families to draw")->delimiter(',');
  validate->add_option("--count", vconfig.per_family, "Instances per family");
  validate->add_option("--min-n", vconfig.min_n, "Smallest vertex count");
  validate->add_option("--max-n", vconfig.max_n, "Largest vertex count");
  validate->add_option("--seed", vconfig.seed, "Corpus seed");
  validate->add_option("--jobs", vconfig.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  validate->add_option("--format", vformat, "table|csv|json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  validate->add_option("--out", vout, "Write the report to a file");
  validate->callback([&] {
    action = [&] {
      if (!vfamilies.empty()) {
        vconfig.families.clear();
        for (const auto& name : vfamilies) {
          auto f = zf::parse_generator_family(name);
          if (!f) throw zf::ParseError("unknown family '" + name + "'");
          vconfig.families.push_back(*f);
        }
      }
      const auto report = zf::validate_corpus(vconfig);
      std::ofstream file;
      if (!vout.empty()) {
        file.open(vout);
        if (!file) throw zf::ParseError("cannot write " + vout);
      }
      std::ostream& out = vout.empty() ? std::cout : file;
      if (vformat == "csv") {
        zf::write_csv(out, report);
      } else if (vformat == "json") {
        json rows = json::array();
        for (const auto& r : report.rows) {
          json row{{"family", zf::to_string(r.spec.family)},
                   {"n", r.spec.n},
                   {"seed", r.spec.seed},
                   {"method", r.method},
                   {"bound_m", r.bound_m},
                   {"bound_blocks", r.bound_blocks},
                   {"passed", r.passed}};
          row["family_value"] = r.family_value ? json(*r.family_value) : json(nullptr);
          row["exact_value"] = r.exact_value ? json(*r.exact_value) : json(nullptr);
          if (!r.passed) {
            row["error"] = r.error;
            row["edges"] = r.edge_list;
          }
          rows.push_back(std::move(row));
        }
        out << json{{"passed", report.passed}, {"failed", report.failed},
                    {"seconds", report.seconds}, {"rows", rows}}
                   .dump(2)
            << '\n';
      } else {
        zf::write_table(out, report);
      }
      if (!vout.empty()) {
        std::cout << report.passed << " passed, " << report.failed << " failed\n";
      }
      return report.ok() ? kOk : kFailed;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const zf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
