#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zf {

using Vertex = std::size_t;

/// Undirected edge; graph code stores it with first < second.
using Edge = std::pair<Vertex, Vertex>;

/// A set of vertices kept as a sorted, duplicate-free vector so that
/// witnesses print and compare stably.
using VertexSet = std::vector<Vertex>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph input (self-loop, endpoint out of range, duplicate edge).
class GraphError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on a graph outside its domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

inline VertexSet normalize(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline VertexSet make_set(std::initializer_list<Vertex> vs) {
  return normalize(VertexSet(vs));
}

inline bool contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

inline bool is_subset(const VertexSet& sub, const VertexSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

inline VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string to_string(const VertexSet& s);

}  // namespace zf
