#include "zf/axioms.hpp"

#include <bit>
#include <random>

#include "forcing_kernel.hpp"
#include "zf/exact.hpp"

namespace zf {

std::string_view to_string(AxiomMode mode) {
  return mode == AxiomMode::Exhaustive ? "exhaustive" : "sampled";
}

namespace {

std::optional<HereditaryWitness> find_hereditary_violation(const SetFamily& family) {
  const std::uint64_t full = family.full_mask();
  for (const VertexSet& member : family.members()) {
    const std::uint64_t x = to_mask(member);
    if (family.complemented()) {
      // The family holds V \ x; closure under subsets means every single
      // addition to x must again be a stored member.
      for (Vertex v = 0; v < family.ground_size(); ++v) {
        const std::uint64_t bit = std::uint64_t{1} << v;
        if ((x & bit) || family.has_member_mask(x | bit)) continue;
        return HereditaryWitness{from_mask(full & ~(x | bit)), from_mask(full & ~x)};
      }
    } else {
      for (Vertex v : member) {
        const std::uint64_t smaller = x & ~(std::uint64_t{1} << v);
        if (!family.has_member_mask(smaller)) return HereditaryWitness{from_mask(smaller), member};
      }
    }
  }
  return std::nullopt;
}

/// Checks M3 on one A. Scratch buffers are reused across calls.
class ExchangeChecker {
 public:
  explicit ExchangeChecker(const SetFamily& family) : family_(family) {}

  std::optional<ExchangeWitness> check(std::uint64_t a) {
    const int m = std::popcount(a);
    const std::size_t count = std::size_t{1} << m;
    std::uint64_t bits[64];
    {
      std::uint64_t rest = a;
      for (int i = 0; i < m; ++i) {
        bits[i] = rest & -rest;
        rest &= rest - 1;
      }
    }
    subset_.assign(count, 0);
    in_.assign(count, 0);
    for (std::size_t x = 1; x < count; ++x) {
      subset_[x] = subset_[x & (x - 1)] | bits[std::countr_zero(x)];
    }
    for (std::size_t x = 0; x < count; ++x) in_[x] = family_.in_family(subset_[x]);
    // above_[x]: some superset of x within A is in the family.
    above_ = in_;
    for (int i = 0; i < m; ++i) {
      const std::size_t bit = std::size_t{1} << i;
      for (std::size_t x = 0; x < count; ++x) {
        if (!(x & bit)) above_[x] |= above_[x | bit];
      }
    }
    std::optional<std::uint64_t> smallest, largest;
    for (std::size_t x = 0; x < count; ++x) {
      if (!in_[x]) continue;
      bool maximal = true;
      for (int i = 0; i < m && maximal; ++i) {
        const std::size_t bit = std::size_t{1} << i;
        if (!(x & bit) && above_[x | bit]) maximal = false;
      }
      if (!maximal) continue;
      const std::uint64_t y = subset_[x];
      if (!smallest || std::popcount(y) < std::popcount(*smallest)) smallest = y;
      if (!largest || std::popcount(y) > std::popcount(*largest)) largest = y;
    }
    if (smallest && std::popcount(*smallest) != std::popcount(*largest)) {
      return ExchangeWitness{from_mask(a), from_mask(*smallest), from_mask(*largest)};
    }
    return std::nullopt;
  }

 private:
  const SetFamily& family_;
  std::vector<std::uint64_t> subset_;
  std::vector<char> in_;
  std::vector<char> above_;
};

}  // namespace

AxiomReport check_axioms(const SetFamily& family, const AxiomOptions& options) {
  const std::size_t n = family.ground_size();
  if (n > options.max_ground || n > 64) {
    throw PreconditionError("ground set of size " + std::to_string(n) +
                            " exceeds the axiom-check cap of " + std::to_string(options.max_ground));
  }
  AxiomReport report;
  report.m1 = family.in_family(0);
  report.m2_witness = find_hereditary_violation(family);
  report.m2 = !report.m2_witness;

  ExchangeChecker checker(family);
  const std::uint64_t full = family.full_mask();
  auto visit = [&](std::uint64_t a) {
    ++report.sets_checked;
    report.m3_witness = checker.check(a);
    return !report.m3_witness;
  };
  if (n <= options.exhaustive_cap) {
    report.mode = AxiomMode::Exhaustive;
    for (std::uint64_t a = full;; --a) {
      if (!visit(a) || a == 0) break;
    }
  } else {
    report.mode = AxiomMode::Sampled;
    std::mt19937_64 rng(options.seed);
    if (visit(full)) {
      for (std::size_t i = 0; i < options.samples; ++i) {
        if (!visit(rng() & full)) break;
      }
    }
  }
  report.m3 = !report.m3_witness;
  return report;
}

SetFamily connected_forcing_family(const Graph& g) {
  return enumerate_connected_forcing_sets(g).with_complemented(true);
}

SetFamily zero_forcing_family(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 24) throw PreconditionError("zero forcing family enumeration is limited to 24 vertices");
  std::vector<VertexSet> sets;
  detail::with_forcing_kernel(g, [&](const auto& kernel) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
      VertexSet s = from_mask(mask);
      if (kernel.forces_all(s)) sets.push_back(std::move(s));
    }
  });
  return SetFamily(n, std::move(sets), true);
}

}  // namespace zf
