#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace skelrecon {

using Vertex = int;

// Faces are identified with their vertex sets. A VertexSet is always kept
// sorted ascending without duplicates; lists of faces are kept in
// lexicographic order so every output is byte-deterministic.
using VertexSet = std::vector<Vertex>;

// Bit mask over at most 64 vertices; used by the small-graph algorithms.
using Mask = std::uint64_t;

inline constexpr int kMaskBits = 64;

inline Mask bit(Vertex v) { return Mask{1} << v; }

inline bool contains(std::span<const Vertex> set, Vertex v) {
  return std::binary_search(set.begin(), set.end(), v);
}

inline bool is_subset(std::span<const Vertex> small, std::span<const Vertex> big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

inline VertexSet set_intersection(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline void canonicalize(VertexSet& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

inline void canonicalize(std::vector<VertexSet>& faces) {
  for (auto& f : faces) canonicalize(f);
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
}

inline Mask to_mask(std::span<const Vertex> set) {
  Mask m = 0;
  for (Vertex v : set) m |= bit(v);
  return m;
}

inline VertexSet from_mask(Mask m) {
  VertexSet out;
  while (m) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

std::string to_string(std::span<const Vertex> set);

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Vertex v : s) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace skelrecon
