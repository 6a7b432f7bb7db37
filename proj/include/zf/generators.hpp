#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zf/graph.hpp"

namespace zf {

enum class GeneratorFamily {
  Path,
  Cycle,
  Star,
  Complete,
  Spider,
  RandomTree,
  RandomUnicyclic,
  RandomCactus,
  RandomBlock,
  /// Random tree with cycles hung off single vertices, so every cycle is an
  /// outer block.
  RandomOuterCactus,
  G1Spread,
  G2Spread,
};

std::string_view to_string(GeneratorFamily family);
std::optional<GeneratorFamily> parse_generator_family(std::string_view name);
const std::vector<GeneratorFamily>& all_generator_families();

/// Parameters used per family:
///   path, cycle, complete, random_*: n
///   star: n (center 0 plus n - 1 leaves)
///   spider: legs, leg_length (center 0)
///   g1_spread, g2_spread: k
/// `pendant_free` applies to random_cactus and random_block.
struct GeneratorSpec {
  GeneratorFamily family = GeneratorFamily::Path;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t legs = 0;
  std::size_t leg_length = 0;
  std::uint64_t seed = 0;
  bool pendant_free = true;

  std::string describe() const;
};

/// Throws PreconditionError when the parameters are out of range. Random
/// families are a pure function of the spec.
Graph generate(const GeneratorSpec& spec);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph spider_graph(std::size_t legs, std::size_t leg_length);

Graph random_tree(std::size_t n, std::uint64_t seed);
Graph random_unicyclic(std::size_t n, std::uint64_t seed);
Graph random_cactus(std::size_t n, std::uint64_t seed, bool pendant_free = true);
Graph random_block_graph(std::size_t n, std::uint64_t seed, bool pendant_free = true);
Graph random_outer_cactus(std::size_t n, std::uint64_t seed);

/// A spread fixture together with the non-bridge edge to delete.
struct SpreadFixture {
  Graph graph;
  Edge deleted;
};

/// C_{2k} (k >= 4) with one pendant on each of 0, 1, k, k + 1; deleting the
/// edge (2, 3) raises Z_c from 4 to k + 4.
SpreadFixture g1_spread(std::size_t k);

/// Path 0..k-1 (k >= 1) whose ends each lie on a triangle; deleting the
/// triangle edge at vertex 0 drops Z_c from k + 2 to 2.
SpreadFixture g2_spread(std::size_t k);

}  // namespace zf
