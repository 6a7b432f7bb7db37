#include "zf/generators.hpp"

#include <array>
#include <functional>
#include <queue>
#include <random>
#include <sstream>

namespace zf {

namespace {

constexpr std::array<std::pair<GeneratorFamily, std::string_view>, 12> kNames{{
    {GeneratorFamily::Path, "path"},
    {GeneratorFamily::Cycle, "cycle"},
    {GeneratorFamily::Star, "star"},
    {GeneratorFamily::Complete, "complete"},
    {GeneratorFamily::Spider, "spider"},
    {GeneratorFamily::RandomTree, "random_tree"},
    {GeneratorFamily::RandomUnicyclic, "random_unicyclic"},
    {GeneratorFamily::RandomCactus, "random_cactus"},
    {GeneratorFamily::RandomBlock, "random_block"},
    {GeneratorFamily::RandomOuterCactus, "random_outer_cactus"},
    {GeneratorFamily::G1Spread, "g1_spread"},
    {GeneratorFamily::G2Spread, "g2_spread"},
}};

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Pruefer decoding: a uniformly random code gives a uniform labeled tree.
std::vector<Edge> tree_edges(std::size_t n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  if (n < 2) return edges;
  if (n == 2) return {{0, 1}};
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = uniform(rng, 0, n - 1);
  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  for (Vertex c : code) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.push(c);
  }
  Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return edges;
}

void add_cycle(std::vector<Edge>& edges, const std::vector<Vertex>& cycle) {
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    edges.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
  }
}

void add_clique(std::vector<Edge>& edges, const std::vector<Vertex>& clique) {
  for (std::size_t i = 0; i < clique.size(); ++i) {
    for (std::size_t j = i + 1; j < clique.size(); ++j) edges.emplace_back(clique[i], clique[j]);
  }
}

// Grows a connected graph from blocks of size 3..max_block. A new block either
// shares one existing vertex or hangs off one by a bridge; with pendants
// allowed, single pendant vertices are mixed in too. Sizes are drawn so that
// exactly n vertices are used.
Graph compose_blocks(std::size_t n, std::uint64_t seed, bool pendant_free, std::size_t max_block,
                     void (*add_block)(std::vector<Edge>&, const std::vector<Vertex>&)) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  auto fresh = [](Vertex first, std::size_t count) {
    std::vector<Vertex> vs(count);
    for (std::size_t i = 0; i < count; ++i) vs[i] = first + i;
    return vs;
  };

  std::size_t first_size = 0;
  {
    std::vector<std::size_t> options;
    for (std::size_t c = 3; c <= std::min(n, max_block); ++c) {
      if (!pendant_free || n - c != 1) options.push_back(c);
    }
    require(!options.empty(), "no block composition reaches " + std::to_string(n) + " vertices");
    first_size = options[uniform(rng, 0, options.size() - 1)];
  }
  add_block(edges, fresh(0, first_size));
  std::size_t used = first_size;

  while (used < n) {
    const std::size_t left = n - used;
    // (added vertices, bridge?) pairs that keep the remainder fillable.
    std::vector<std::pair<std::size_t, int>> moves;
    for (std::size_t c = 3; c <= max_block; ++c) {
      if (c - 1 <= left && (!pendant_free || left - (c - 1) != 1)) moves.emplace_back(c - 1, 0);
      if (c <= left && (!pendant_free || left - c != 1)) moves.emplace_back(c, 1);
    }
    if (!pendant_free) moves.emplace_back(1, 2);
    const auto [added, kind] = moves[uniform(rng, 0, moves.size() - 1)];
    const Vertex anchor = uniform(rng, 0, used - 1);
    if (kind == 0) {
      std::vector<Vertex> block{anchor};
      for (Vertex v : fresh(used, added)) block.push_back(v);
      add_block(edges, block);
    } else if (kind == 1) {
      add_block(edges, fresh(used, added));
      edges.emplace_back(anchor, used + uniform(rng, 0, added - 1));
    } else {
      edges.emplace_back(anchor, used);
    }
    used += added;
  }
  return build_graph(n, edges);
}

}  // namespace

std::string_view to_string(GeneratorFamily family) {
  for (auto [f, name] : kNames) {
    if (f == family) return name;
  }
  return "unknown";
}

std::optional<GeneratorFamily> parse_generator_family(std::string_view name) {
  for (auto [f, n] : kNames) {
    if (n == name) return f;
  }
  return std::nullopt;
}

const std::vector<GeneratorFamily>& all_generator_families() {
  static const std::vector<GeneratorFamily> all = [] {
    std::vector<GeneratorFamily> out;
    for (auto [f, name] : kNames) out.push_back(f);
    return out;
  }();
  return all;
}

std::string GeneratorSpec::describe() const {
  std::ostringstream out;
  out << to_string(family);
  switch (family) {
    case GeneratorFamily::Spider:
      out << " legs=" << legs << " leg_length=" << leg_length;
      break;
    case GeneratorFamily::G1Spread:
    case GeneratorFamily::G2Spread:
      out << " k=" << k;
      break;
    case GeneratorFamily::RandomTree:
    case GeneratorFamily::RandomUnicyclic:
    case GeneratorFamily::RandomOuterCactus:
      out << " n=" << n << " seed=" << seed;
      break;
    case GeneratorFamily::RandomCactus:
    case GeneratorFamily::RandomBlock:
      out << " n=" << n << " seed=" << seed << (pendant_free ? "" : " pendants");
      break;
    default:
      out << " n=" << n;
  }
  return out.str();
}

Graph path_graph(std::size_t n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return build_graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  add_cycle(edges, [&] {
    std::vector<Vertex> vs(n);
    for (Vertex v = 0; v < n; ++v) vs[v] = v;
    return vs;
  }());
  return build_graph(n, edges);
}

Graph star_graph(std::size_t n) {
  require(n >= 2, "star needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return build_graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  std::vector<Vertex> vs(n);
  for (Vertex v = 0; v < n; ++v) vs[v] = v;
  add_clique(edges, vs);
  return build_graph(n, edges);
}

Graph spider_graph(std::size_t legs, std::size_t leg_length) {
  require(legs >= 1 && leg_length >= 1, "spider needs legs >= 1 and leg_length >= 1");
  std::vector<Edge> edges;
  Vertex next = 1;
  for (std::size_t l = 0; l < legs; ++l) {
    Vertex prev = 0;
    for (std::size_t i = 0; i < leg_length; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return build_graph(next, edges);
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  require(n >= 1, "random tree needs n >= 1");
  std::mt19937_64 rng(seed);
  return build_graph(n, tree_edges(n, rng));
}

Graph random_unicyclic(std::size_t n, std::uint64_t seed) {
  require(n >= 3, "random unicyclic graph needs n >= 3");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges = tree_edges(n, rng);
  const Graph tree = build_graph(n, edges);
  std::vector<Edge> missing;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!tree.adjacent(u, v)) missing.emplace_back(u, v);
    }
  }
  edges.push_back(missing[uniform(rng, 0, missing.size() - 1)]);
  return build_graph(n, edges);
}

Graph random_cactus(std::size_t n, std::uint64_t seed, bool pendant_free) {
  require(n >= 3, "random cactus needs n >= 3");
  return compose_blocks(n, seed, pendant_free, 6, add_cycle);
}

Graph random_block_graph(std::size_t n, std::uint64_t seed, bool pendant_free) {
  require(n >= 3, "random block graph needs n >= 3");
  return compose_blocks(n, seed, pendant_free, 5, add_clique);
}

Graph random_outer_cactus(std::size_t n, std::uint64_t seed) {
  require(n >= 3, "random outer cactus needs n >= 3");
  std::mt19937_64 rng(seed);
  // Each cycle brings 2..4 new vertices; at least one tree vertex remains.
  std::vector<std::size_t> extra;
  std::size_t left = n - 1;
  do {
    const std::size_t a = uniform(rng, 2, std::min<std::size_t>(4, left));
    extra.push_back(a);
    left -= a;
  } while (left >= 2 && uniform(rng, 0, 2) != 0);
  const std::size_t t = left + 1;
  std::vector<Edge> edges = tree_edges(t, rng);
  Vertex next = t;
  for (std::size_t a : extra) {
    std::vector<Vertex> cycle{uniform(rng, 0, t - 1)};
    for (std::size_t i = 0; i < a; ++i) cycle.push_back(next++);
    add_cycle(edges, cycle);
  }
  return build_graph(n, edges);
}

SpreadFixture g1_spread(std::size_t k) {
  require(k >= 4, "g1_spread needs k >= 4");
  const std::size_t c = 2 * k;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < c; ++v) edges.emplace_back(v, (v + 1) % c);
  const std::array<Vertex, 4> bearers{0, 1, k, k + 1};
  for (std::size_t i = 0; i < bearers.size(); ++i) edges.emplace_back(bearers[i], c + i);
  return {build_graph(c + 4, edges), {2, 3}};
}

SpreadFixture g2_spread(std::size_t k) {
  require(k >= 1, "g2_spread needs k >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < k; ++v) edges.emplace_back(v, v + 1);
  add_cycle(edges, {0, k, k + 1});
  add_cycle(edges, {k - 1, k + 2, k + 3});
  return {build_graph(k + 4, edges), {0, k}};
}

Graph generate(const GeneratorSpec& spec) {
  switch (spec.family) {
    case GeneratorFamily::Path: return path_graph(spec.n);
    case GeneratorFamily::Cycle: return cycle_graph(spec.n);
    case GeneratorFamily::Star: return star_graph(spec.n);
    case GeneratorFamily::Complete: return complete_graph(spec.n);
    case GeneratorFamily::Spider: return spider_graph(spec.legs, spec.leg_length);
    case GeneratorFamily::RandomTree: return random_tree(spec.n, spec.seed);
    case GeneratorFamily::RandomUnicyclic: return random_unicyclic(spec.n, spec.seed);
    case GeneratorFamily::RandomCactus: return random_cactus(spec.n, spec.seed, spec.pendant_free);
    case GeneratorFamily::RandomBlock:
      return random_block_graph(spec.n, spec.seed, spec.pendant_free);
    case GeneratorFamily::RandomOuterCactus: return random_outer_cactus(spec.n, spec.seed);
    case GeneratorFamily::G1Spread: return g1_spread(spec.k).graph;
    case GeneratorFamily::G2Spread: return g2_spread(spec.k).graph;
  }
  throw PreconditionError("unknown generator family");
}

}  // namespace zf
