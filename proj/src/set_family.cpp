#include "zf/set_family.hpp"

#include <algorithm>
#include <bit>

namespace zf {

SetFamily::SetFamily(std::size_t ground_size, std::vector<VertexSet> members, bool complemented)
    : ground_size_(ground_size), complemented_(complemented) {
  for (auto& m : members) {
    m = normalize(std::move(m));
    if (!m.empty() && m.back() >= ground_size) {
      throw PreconditionError("family member " + to_string(m) + " is not within the ground set");
    }
  }
  std::sort(members.begin(), members.end(), [](const VertexSet& a, const VertexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  members.erase(std::unique(members.begin(), members.end()), members.end());
  members_ = std::move(members);
  if (ground_size_ <= 64) {
    for (const auto& m : members_) index_.insert(to_mask(m));
  }
}

bool SetFamily::has_member(const VertexSet& s) const {
  const VertexSet key = normalize(s);
  if (ground_size_ <= 64) return index_.count(to_mask(key)) != 0;
  return std::binary_search(members_.begin(), members_.end(), key,
                            [](const VertexSet& a, const VertexSet& b) {
                              return a.size() != b.size() ? a.size() < b.size() : a < b;
                            });
}

std::uint64_t SetFamily::full_mask() const {
  return ground_size_ >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ground_size_) - 1;
}

bool SetFamily::in_family(std::uint64_t mask) const {
  if (complemented_) return has_member_mask(full_mask() & ~mask);
  return has_member_mask(mask);
}

SetFamily SetFamily::with_complemented(bool flag) const {
  SetFamily copy = *this;
  copy.complemented_ = flag;
  return copy;
}

std::uint64_t to_mask(const VertexSet& s) {
  std::uint64_t mask = 0;
  for (Vertex v : s) {
    if (v >= 64) throw PreconditionError("bitmask sets hold at most 64 elements");
    mask |= std::uint64_t{1} << v;
  }
  return mask;
}

VertexSet from_mask(std::uint64_t mask) {
  VertexSet out;
  while (mask) {
    out.push_back(static_cast<Vertex>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace zf
