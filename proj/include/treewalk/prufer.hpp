#pragma once

#include <functional>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "treewalk/tree.hpp"

namespace treewalk {

using PruferCode = std::vector<VertexId>;

namespace detail {

/// Decodes into an edge list without validation beyond the entry range.
/// `degree` is scratch space of size n.
inline void prufer_edges(std::span<const VertexId> code, std::size_t n,
                         std::vector<std::uint32_t>& degree, std::vector<Edge>& edges) {
  degree.assign(n, 1);
  for (VertexId x : code) ++degree[x];
  edges.clear();
  // Linear-time decode: `ptr` scans for the smallest leaf; a vertex that
  // becomes a leaf below `ptr` is consumed immediately.
  std::size_t ptr = 0;
  while (ptr < n && degree[ptr] != 1) ++ptr;
  VertexId leaf = static_cast<VertexId>(ptr);
  for (VertexId x : code) {
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (ptr < n && degree[ptr] != 1) ++ptr;
      leaf = static_cast<VertexId>(ptr);
    }
  }
  // Two vertices of degree 1 remain: `leaf` and n-1.
  edges.emplace_back(leaf, static_cast<VertexId>(n - 1));
}

}  // namespace detail

inline Tree prufer_decode(std::span<const VertexId> code, std::size_t n) {
  if (n < 2) throw Error(ErrorCode::TreeTooSmall, "Prufer decoding needs n >= 2");
  if (code.size() != n - 2)
    throw Error(ErrorCode::EntryOutOfRange, "code length " + std::to_string(code.size()) +
                                                " != n-2 = " + std::to_string(n - 2));
  for (std::size_t i = 0; i < code.size(); ++i)
    if (code[i] >= n)
      throw Error(ErrorCode::EntryOutOfRange, "entry " + std::to_string(i) + " = " +
                                                  std::to_string(code[i]) + " with n=" + std::to_string(n));
  std::vector<std::uint32_t> degree;
  std::vector<Edge> edges;
  detail::prufer_edges(code, n, degree, edges);
  return Tree::from_edges(n, edges);
}

inline PruferCode prufer_encode(const Tree& t) {
  const std::size_t n = t.order();
  if (n < 2) throw Error(ErrorCode::TreeTooSmall, "Prufer encoding needs n >= 2");
  std::vector<std::size_t> degree(n);
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> leaves;
  for (VertexId v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<bool> removed(n, false);
  PruferCode code;
  code.reserve(n - 2);
  while (code.size() + 2 < n) {
    VertexId leaf = leaves.top();
    leaves.pop();
    removed[leaf] = true;
    for (VertexId nb : t.neighbors(leaf)) {
      if (removed[nb]) continue;
      code.push_back(nb);
      if (--degree[nb] == 1) leaves.push(nb);
    }
  }
  return code;
}

}  // namespace treewalk
