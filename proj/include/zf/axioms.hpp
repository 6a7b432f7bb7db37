#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "zf/graph.hpp"
#include "zf/set_family.hpp"

namespace zf {

struct AxiomOptions {
  /// Largest ground set checked over every A; larger ones sample A.
  std::size_t exhaustive_cap = 12;
  /// Largest ground set accepted at all.
  std::size_t max_ground = 20;
  std::size_t samples = 256;
  std::uint64_t seed = 1;
};

enum class AxiomMode { Exhaustive, Sampled };
std::string_view to_string(AxiomMode mode);

/// J' is a subset of J, J is in the family and J' is not.
struct HereditaryWitness {
  VertexSet subset;
  VertexSet superset;
};

/// Two maximal subsets of `a` in the family with different cardinalities.
struct ExchangeWitness {
  VertexSet a;
  VertexSet smaller;
  VertexSet larger;
};

/// (M1) the empty set is in the family; (M2) the family is closed under
/// subsets; (M3) for every A, all maximal subsets of A in the family have
/// the same size. M1 + M3 is reported as `greedoid_m1_m3`, all three as
/// `matroid`.
struct AxiomReport {
  bool m1 = false;
  bool m2 = false;
  bool m3 = false;
  AxiomMode mode = AxiomMode::Exhaustive;
  std::size_t sets_checked = 0;
  std::optional<HereditaryWitness> m2_witness;
  std::optional<ExchangeWitness> m3_witness;

  bool greedoid_m1_m3() const { return m1 && m3; }
  bool matroid() const { return m1 && m2 && m3; }
};

/// Evaluates the three axioms literally. Subsets A are visited from the full
/// ground set downward, so the first failure found is the largest A.
/// Throws PreconditionError when the ground set exceeds `max_ground`.
AxiomReport check_axioms(const SetFamily& family, const AxiomOptions& options = {});

/// All connected forcing sets of g, flagged complemented: the family
/// described is {V \ X : X a connected forcing set}.
SetFamily connected_forcing_family(const Graph& g);

/// Same for all zero forcing sets (by power-set search; small n only).
SetFamily zero_forcing_family(const Graph& g);

}  // namespace zf
