#include "zf/validation.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <random>
#include <thread>

#include "zf/family_solvers.hpp"
#include "zf/forcing.hpp"
#include "zf/io.hpp"

namespace zf {

namespace {

SolveResult family_solve(GeneratorFamily family, const Graph& g) {
  switch (family) {
    case GeneratorFamily::RandomTree: return tree_zc(g);
    case GeneratorFamily::RandomUnicyclic: return unicyclic_zc(g);
    case GeneratorFamily::RandomOuterCactus: return greedy_zc(g);
    case GeneratorFamily::RandomCactus:
    case GeneratorFamily::RandomBlock: {
      const FamilyInfo info = classify_family(g);
      if (!info.pendant_free) return solve_connected_forcing(g);
      return family == GeneratorFamily::RandomBlock ? block_graph_zc(g) : cactus_zc(g);
    }
    default: return solve_connected_forcing(g);
  }
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

ValidationRow validate_instance(const GeneratorSpec& spec) {
  ValidationRow row;
  row.spec = spec;
  try {
    const Graph g = generate(spec);
    row.edge_list = edge_list_string(g);
    const SolveResult fam = family_solve(spec.family, g);
    row.method = fam.method;
    row.family_value = fam.value;
    row.witness_ok = fam.witness.size() == fam.value && is_connected_forcing_set(g, fam.witness);
    const SolveResult exact = connected_forcing_number_exact(g);
    row.exact_value = exact.value;
    if (!is_path_graph(g)) {
      const LowerBounds lb = lower_bounds(g);
      row.bound_m = lb.bound_m;
      row.bound_blocks = lb.bound_blocks;
    }
    const auto bound = std::max(row.bound_m, row.bound_blocks);
    if (fam.value != exact.value) {
      row.error = "family value " + std::to_string(fam.value) + " != exact " +
                  std::to_string(exact.value);
    } else if (!row.witness_ok) {
      row.error = "witness " + to_string(fam.witness) + " is not a connected forcing set";
    } else if (static_cast<long long>(exact.value) < bound) {
      row.error = "exact value below lower bound " + std::to_string(bound);
    }
    row.passed = row.error.empty();
  } catch (const std::exception& e) {
    row.error = e.what();
    row.passed = false;
  }
  return row;
}

ValidationReport validate_corpus(const ValidationConfig& config) {
  if (config.min_n > config.max_n) throw PreconditionError("min_n exceeds max_n");
  if (config.min_n < 3) throw PreconditionError("random families need n >= 3");
  if (config.max_n > 20) throw PreconditionError("max_n above 20 is beyond exact search");
  std::vector<GeneratorSpec> specs;
  std::mt19937_64 rng(config.seed);
  for (GeneratorFamily family : config.families) {
    for (std::size_t i = 0; i < config.per_family; ++i) {
      GeneratorSpec spec;
      spec.family = family;
      spec.n = std::uniform_int_distribution<std::size_t>(config.min_n, config.max_n)(rng);
      spec.seed = rng();
      specs.push_back(spec);
    }
  }

  const auto start = std::chrono::steady_clock::now();
  ValidationReport report;
  report.rows.resize(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      report.rows[i] = validate_instance(specs[i]);
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned jobs = std::max(1u, config.jobs);
    for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::stable_sort(report.rows.begin(), report.rows.end(),
                   [](const ValidationRow& a, const ValidationRow& b) {
                     return std::tie(a.spec.family, a.spec.seed, a.spec.n) <
                            std::tie(b.spec.family, b.spec.seed, b.spec.n);
                   });
  for (const auto& row : report.rows) (row.passed ? report.passed : report.failed)++;
  return report;
}

void write_csv(std::ostream& out, const ValidationReport& report) {
  out << "family,n,seed,method,family_value,exact_value,bound_m,bound_blocks,passed,error,edges\n";
  auto opt = [](const std::optional<std::size_t>& v) {
    return v ? std::to_string(*v) : std::string();
  };
  for (const auto& r : report.rows) {
    std::string edges = r.edge_list;
    std::replace(edges.begin(), edges.end(), '\n', ';');
    out << to_string(r.spec.family) << ',' << r.spec.n << ',' << r.spec.seed << ','
        << r.method << ',' << opt(r.family_value) << ',' << opt(r.exact_value) << ','
        << r.bound_m << ',' << r.bound_blocks << ',' << (r.passed ? "pass" : "FAIL") << ','
        << csv_escape(r.error) << ',' << csv_escape(edges) << '\n';
  }
}

void write_table(std::ostream& out, const ValidationReport& report) {
  out << std::left << std::setw(20) << "family" << std::setw(5) << "n" << std::setw(22)
      << "seed" << std::setw(12) << "method" << std::setw(8) << "value" << std::setw(8)
      << "exact" << std::setw(8) << "bound" << "result\n";
  for (const auto& r : report.rows) {
    out << std::setw(20) << to_string(r.spec.family) << std::setw(5) << r.spec.n << std::setw(22)
        << r.spec.seed << std::setw(12) << r.method << std::setw(8)
        << (r.family_value ? std::to_string(*r.family_value) : "-") << std::setw(8)
        << (r.exact_value ? std::to_string(*r.exact_value) : "-") << std::setw(8)
        << std::max(r.bound_m, r.bound_blocks) << (r.passed ? "pass" : "FAIL " + r.error)
        << '\n';
  }
  out << report.rows.size() << " instances, " << report.passed << " passed, " << report.failed
      << " failed, " << std::fixed << std::setprecision(2) << report.seconds << " s\n";
}

}  // namespace zf
