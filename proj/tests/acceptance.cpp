// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "fixtures.hpp"
#include "zf/axioms.hpp"
#include "zf/exact.hpp"
#include "zf/family_solvers.hpp"
#include "zf/forcing.hpp"
#include "zf/io.hpp"
#include "zf/reduction.hpp"
#include "zf/structure.hpp"

using namespace zf;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

// Bound checks from every corpus feed criterion 7.
struct BoundTally {
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::string first_violation;

  void check(const Graph& g, std::size_t zc) {
    if (is_path_graph(g)) return;
    ++checked;
    const auto lb = lower_bounds(g);
    if (static_cast<long long>(zc) < lb.best()) {
      if (!violations++) first_violation = edge_list_string(g);
    }
  }
} bounds;

template <typename Gen, typename Solve>
Outcome oracle_corpus(std::size_t count, std::size_t min_n, std::size_t max_n, std::uint64_t seed,
                      Gen gen, Solve solve) {
  std::mt19937_64 rng(seed);
  std::size_t matched = 0;
  std::string first_bad;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(min_n, max_n)(rng);
    const std::uint64_t s = rng();
    const Graph g = gen(n, s);
    const SolveResult fam = solve(g);
    const SolveResult exact = connected_forcing_number_exact(g);
    bounds.check(g, exact.value);
    const bool ok = fam.value == exact.value && fam.witness.size() == fam.value &&
                    is_connected_forcing_set(g, fam.witness);
    if (ok) {
      ++matched;
    } else if (first_bad.empty()) {
      first_bad = " first mismatch n=" + std::to_string(n) + " seed=" + std::to_string(s) +
                  " family=" + std::to_string(fam.value) + " exact=" + std::to_string(exact.value);
    }
  }
  return {matched == count, std::to_string(matched) + "/" + std::to_string(count) + " match" + first_bad};
}

Outcome criterion_trees() {
  return oracle_corpus(500, 4, 12, 101, [](std::size_t n, std::uint64_t s) { return random_tree(n, s); },
                       [](const Graph& g) { return tree_zc(g); });
}

Outcome criterion_unicyclic() {
  return oracle_corpus(500, 4, 12, 202,
                       [](std::size_t n, std::uint64_t s) { return random_unicyclic(n, s); },
                       [](const Graph& g) { return unicyclic_zc(g); });
}

Outcome criterion_cactus_block() {
  const Outcome block = oracle_corpus(
      200, 4, 13, 303, [](std::size_t n, std::uint64_t s) { return random_block_graph(n, s); },
      [](const Graph& g) { return block_graph_zc(g); });
  const Outcome cactus = oracle_corpus(
      200, 4, 13, 404, [](std::size_t n, std::uint64_t s) { return random_cactus(n, s); },
      [](const Graph& g) { return cactus_zc(g); });
  return {block.passed && cactus.passed, "block " + block.detail + "; cactus " + cactus.detail};
}

Outcome criterion_spread() {
  Outcome out;
  auto expect = [&](const std::string& name, std::size_t got, std::size_t want) {
    out.detail += name + "=" + std::to_string(got) + (got == want ? "" : "(want " + std::to_string(want) + ")") + " ";
    out.passed = out.passed && got == want;
  };
  for (std::size_t k : {4, 5, 6}) {
    const auto f = g1_spread(k);
    const Graph minus = remove_edge(f.graph, f.deleted.first, f.deleted.second);
    expect("G1(" + std::to_string(k) + ")", connected_forcing_number_exact(f.graph).value, 4);
    expect("G1-e", connected_forcing_number_exact(minus).value, k + 4);
  }
  for (std::size_t k : {1, 2, 3, 4}) {
    const auto f = g2_spread(k);
    const Graph minus = remove_edge(f.graph, f.deleted.first, f.deleted.second);
    expect("G2(" + std::to_string(k) + ")", connected_forcing_number_exact(f.graph).value, k + 2);
    expect("G2-e", connected_forcing_number_exact(minus).value, 2);
  }
  return out;
}

// Smallest edge bitmask over all relabelings; n <= 6 so 720 permutations at most.
std::uint32_t canonical(std::size_t n, const std::vector<Edge>& edges) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> index(n, std::vector<int>(n, -1));
  int bit = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) index[u][v] = index[v][u] = bit++;
  }
  std::uint32_t best = ~0u;
  do {
    std::uint32_t m = 0;
    for (auto [u, v] : edges) m |= 1u << index[perm[u]][perm[v]];
    best = std::min(best, m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Outcome criterion_reduction() {
  std::size_t classes = 0, passed = 0;
  std::string first_bad;
  auto run = [&](const Graph& g) {
    const auto r = verify_reduction(g);
    if (r.passed()) {
      ++passed;
    } else if (first_bad.empty()) {
      first_bad = " first failure:\n" + edge_list_string(g);
    }
  };
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    std::set<std::uint32_t> seen;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (mask >> i & 1) edges.push_back(pairs[i]);
      }
      const Graph g = build_graph(n, edges);
      if (!is_connected(g) || !seen.insert(canonical(n, edges)).second) continue;
      ++classes;
      run(g);
    }
  }
  const std::size_t exhaustive = classes;
  for (std::uint64_t s = 0; s < 200; ++s) {
    ++classes;
    run(fixtures::random_connected(7, 0.1 + 0.4 * static_cast<double>(s % 9) / 8.0, 5000 + s));
  }
  // 1 + 1 + 2 + 6 + 21 + 112 connected graphs up to isomorphism for n = 1..6.
  const bool census = exhaustive == 143;
  return {census && passed == classes,
          std::to_string(exhaustive) + " isomorphism classes (n<=6) + 200 samples (n=7): " +
              std::to_string(passed) + "/" + std::to_string(classes) + " pass" + first_bad};
}

bool all_pendant_paths_length_one(const Graph& g) {
  const PendantIndex index(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    for (const auto& e : index.entries(v)) {
      if (e.length != 1) return false;
    }
  }
  return true;
}

Outcome criterion_axioms() {
  Outcome out;
  std::mt19937_64 rng(606);
  std::size_t greedoid = 0, matroid_trees = 0, matroid_blocks = 0, tries = 0;
  std::size_t g_total = 0, t_total = 0, b_total = 0;
  while ((g_total < 50 || t_total < 50) && tries < 100000) {
    ++tries;
    const std::size_t n = std::uniform_int_distribution<std::size_t>(3, 9)(rng);
    const Graph g = random_tree(n, rng());
    if (is_path_graph(g)) continue;
    const auto r = check_axioms(connected_forcing_family(g));
    if (g_total < 50) {
      ++g_total;
      greedoid += r.m1 && r.m3;
    }
    if (t_total < 50 && all_pendant_paths_length_one(g)) {
      ++t_total;
      matroid_trees += r.matroid();
    }
  }
  while (b_total < 50) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(3, 9)(rng);
    const Graph g = random_block_graph(n, rng());
    ++b_total;
    matroid_blocks += check_axioms(connected_forcing_family(g)).matroid();
  }
  out.passed = greedoid == g_total && matroid_trees == t_total && matroid_blocks == b_total &&
               g_total == 50 && t_total == 50;
  out.detail = "trees M1^M3 " + std::to_string(greedoid) + "/" + std::to_string(g_total) +
               "; length-one trees M1^M2^M3 " + std::to_string(matroid_trees) + "/" +
               std::to_string(t_total) + "; block graphs M1^M2^M3 " +
               std::to_string(matroid_blocks) + "/" + std::to_string(b_total);

  // Triangle 0-1-2 with leaves 3 on 0 and 4 on 1. The family holds complements,
  // so the witness sets map back to minimal connected forcing sets.
  const Graph tri = fixtures::triangle_two_pendants();
  const auto t = check_axioms(connected_forcing_family(tri));
  const VertexSet all{0, 1, 2, 3, 4};
  bool tri_ok = !t.m3 && t.m3_witness.has_value();
  if (tri_ok) {
    const VertexSet three = set_difference(all, t.m3_witness->smaller);
    const VertexSet two = set_difference(all, t.m3_witness->larger);
    tri_ok = three.size() == 3 && is_subset(VertexSet{0, 1}, three) &&
             (contains(three, 3) || contains(three, 4)) && two.size() == 2;
    out.detail += "; triangle M3 fails: forcing sets " + to_string(three) + " vs " + to_string(two);
  }
  const auto spider = check_axioms(connected_forcing_family(spider_graph(3, 2)));
  const bool spider_ok = !spider.m2 && spider.m2_witness.has_value();
  if (spider_ok) {
    out.detail += "; spider M2 fails: " + to_string(spider.m2_witness->subset) + " below " +
                  to_string(spider.m2_witness->superset);
  }
  out.passed = out.passed && tri_ok && spider_ok;
  return out;
}

Outcome criterion_bounds() {
  bool tight = true;
  std::string detail;
  for (std::size_t n = 3; n <= 10; ++n) {
    const Graph c = cycle_graph(n);
    const Graph k = complete_graph(n);
    const auto zc_c = connected_forcing_number_exact(c).value;
    const auto zc_k = connected_forcing_number_exact(k).value;
    bounds.check(c, zc_c);
    bounds.check(k, zc_k);
    tight = tight && lower_bounds(c).best() == static_cast<long long>(zc_c) &&
            lower_bounds(k).best() == static_cast<long long>(zc_k);
  }
  detail = std::to_string(bounds.checked) + " corpus instances, " +
           std::to_string(bounds.violations) + " violations; C_n and K_n (3<=n<=10) " +
           (tight ? "tight" : "NOT tight");
  if (bounds.violations) detail += "; first violation:\n" + bounds.first_violation;
  return {tight && bounds.violations == 0, detail};
}

Outcome criterion_uniqueness() {
  std::vector<std::pair<Graph, VertexSet>> cases;
  std::mt19937_64 rng(808);
  for (std::uint64_t i = 0; i < 20; ++i) {
    const Graph g = i % 4 == 0 ? random_cactus(8 + i % 6, i)
                    : i % 4 == 1 ? random_unicyclic(8 + i % 6, i)
                                 : fixtures::random_connected(6 + i % 8, 0.25, 900 + i);
    VertexSet s;
    if (i % 2 == 0) {
      s = zero_forcing_number(g).witness;
    } else {
      for (Vertex v = 0; v < g.order(); ++v) {
        if (rng() % 3 == 0) s.push_back(v);
      }
      if (s.empty()) s.push_back(0);
    }
    cases.emplace_back(g, s);
  }
  std::size_t runs = 0, agree = 0, partitions = 0, forcing_runs = 0;
  for (const auto& [g, s] : cases) {
    const VertexSet reference = derived_set(g, s);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      const auto t = derive(g, s, ForceOrder::SeededRandom, seed);
      ++runs;
      agree += t.derived_set == reference;
      if (!t.colors_all(g)) continue;
      ++forcing_runs;
      std::vector<int> hits(g.order(), 0);
      bool paths = t.chains.size() == s.size();
      for (const auto& chain : t.chains) {
        for (std::size_t i = 0; i < chain.size(); ++i) {
          ++hits[chain[i]];
          if (i + 1 < chain.size() && !g.adjacent(chain[i], chain[i + 1])) paths = false;
        }
      }
      paths = paths && std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
      partitions += paths;
    }
  }
  return {agree == runs && partitions == forcing_runs && forcing_runs > 0,
          std::to_string(agree) + "/" + std::to_string(runs) + " orders agree; chains partition V in " +
              std::to_string(partitions) + "/" + std::to_string(forcing_runs) + " forcing runs"};
}

Outcome criterion_greedy() {
  std::mt19937_64 rng(909);
  std::size_t equal = 0;
  const std::size_t count = 120;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(4, 13)(rng);
    const Graph g = random_outer_cactus(n, rng());
    const auto exact = connected_forcing_number_exact(g).value;
    bounds.check(g, exact);
    equal += greedy_zc(g).value == exact;
  }
  std::size_t minimal = 0, above = 0;
  const std::size_t general = 100;
  for (std::uint64_t s = 0; s < general; ++s) {
    const Graph g = fixtures::random_connected(5 + s % 8, 0.25, 7000 + s);
    const auto r = greedy_zc(g);
    bool is_min = is_connected_forcing_set(g, r.witness);
    for (std::size_t i = 0; i < r.witness.size() && r.witness.size() > 1 && is_min; ++i) {
      VertexSet less = r.witness;
      less.erase(less.begin() + static_cast<std::ptrdiff_t>(i));
      is_min = !is_connected_forcing_set(g, less);
    }
    minimal += is_min;
    above += r.value > connected_forcing_number_exact(g).value;
  }
  return {equal == count && minimal == general,
          "outer-cycle cacti " + std::to_string(equal) + "/" + std::to_string(count) +
              " equal exact; general graphs minimal " + std::to_string(minimal) + "/" +
              std::to_string(general) + " (" + std::to_string(above) + " above the minimum)"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "oracle equivalence, trees", 120, criterion_trees},
      {2, "oracle equivalence, unicyclic", 300, criterion_unicyclic},
      {3, "oracle equivalence, pendant-free block and cactus", 300, criterion_cactus_block},
      {4, "spread families G1, G2", 0, criterion_spread},
      {5, "reduction Z_c(G') = Z(G) + 2", 600, criterion_reduction},
      {6, "set-system axioms", 0, criterion_axioms},
      {9, "greedy optimality", 0, criterion_greedy},
      {7, "lower bounds", 0, criterion_bounds},
      {8, "derived-set uniqueness", 0, criterion_uniqueness},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      out.passed = false;
      out.detail += " (over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit)";
    }
    failures += !out.passed;
    std::printf("[%s] criterion %d: %s: %s (%.2f s)\n", out.passed ? "PASS" : "FAIL", c.id, c.name,
                out.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
