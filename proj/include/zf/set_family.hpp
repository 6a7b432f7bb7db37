#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "zf/types.hpp"

namespace zf {

/// An explicit collection of subsets of the ground set {0..ground_size-1}.
///
/// With `complemented` set, the family described is {V \ X : X in members}:
/// the members are stored (typically the connected forcing sets) and the
/// complements are answered through membership queries, never built.
class SetFamily {
 public:
  SetFamily() = default;
  SetFamily(std::size_t ground_size, std::vector<VertexSet> members, bool complemented = false);

  std::size_t ground_size() const { return ground_size_; }
  const std::vector<VertexSet>& members() const { return members_; }
  bool complemented() const { return complemented_; }
  std::size_t size() const { return members_.size(); }

  /// Whether `s` is one of the stored members (ignores `complemented`).
  bool has_member(const VertexSet& s) const;

  /// Bitmask queries; available when ground_size <= 64.
  bool has_member_mask(std::uint64_t mask) const { return index_.count(mask) != 0; }
  /// Whether `mask` belongs to the described family, honoring `complemented`.
  bool in_family(std::uint64_t mask) const;
  std::uint64_t full_mask() const;

  SetFamily with_complemented(bool flag) const;

 private:
  std::size_t ground_size_ = 0;
  std::vector<VertexSet> members_;
  bool complemented_ = false;
  std::unordered_set<std::uint64_t> index_;
};

std::uint64_t to_mask(const VertexSet& s);
VertexSet from_mask(std::uint64_t mask);

}  // namespace zf
