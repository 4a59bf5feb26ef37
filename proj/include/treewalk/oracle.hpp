#pragma once

// Independent evaluation routes for hitting and joining times. None of these
// share code with the bulk routines in walk.hpp; they exist to cross-check them.

#include <utility>
#include <vector>

#include "treewalk/exact.hpp"
#include "treewalk/tree.hpp"
#include "treewalk/walk.hpp"

namespace treewalk::oracle {

/// Number of edges reachable from `a` without crossing the edge (a,b).
inline std::size_t edges_on_side(const Tree& t, VertexId a, VertexId b) {
  std::vector<bool> seen(t.order(), false);
  seen[a] = seen[b] = true;
  std::vector<VertexId> stack{a};
  std::size_t vertices = 0;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    ++vertices;
    for (VertexId v : t.neighbors(u))
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
  }
  return vertices - 1;
}

/// Sum over the edges (a,b) of the u->w path of H(a,b) = 2 m_a + 1.
inline ExactInt edge_decomposition_hitting(const Tree& t, VertexId u, VertexId w) {
  std::vector<VertexId> parent(t.order(), UINT32_MAX);
  std::vector<VertexId> stack{w};
  parent[w] = w;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    for (VertexId y : t.neighbors(x))
      if (parent[y] == UINT32_MAX) {
        parent[y] = x;
        stack.push_back(y);
      }
  }
  ExactInt total = 0;
  for (VertexId a = u; a != w; a = parent[a]) total += 2 * static_cast<long long>(edges_on_side(t, a, parent[a])) + 1;
  return total;
}

/// Solves h(u) = 1 + mean_{x ~ u} h(x), h(w) = 0, by exact Gaussian elimination.
inline std::vector<ExactRational> first_step_hitting_times(const Tree& t, VertexId w) {
  const std::size_t n = t.order();
  std::vector<ExactRational> h(n, 0);
  if (n == 1) return h;
  // Unknowns: every vertex except w, indexed compactly.
  std::vector<std::size_t> idx(n, SIZE_MAX);
  std::vector<VertexId> var;
  for (VertexId v = 0; v < n; ++v)
    if (v != w) {
      idx[v] = var.size();
      var.push_back(v);
    }
  const std::size_t m = var.size();
  std::vector<std::vector<ExactRational>> a(m, std::vector<ExactRational>(m + 1, 0));
  for (std::size_t r = 0; r < m; ++r) {
    VertexId v = var[r];
    ExactRational inv(1, static_cast<long long>(t.degree(v)));
    a[r][r] = 1;
    for (VertexId x : t.neighbors(v))
      if (x != w) a[r][idx[x]] -= inv;
    a[r][m] = 1;
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    while (a[pivot][col] == 0) ++pivot;
    std::swap(a[pivot], a[col]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col || a[r][col] == 0) continue;
      ExactRational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= m; ++c) a[r][c] -= f * a[col][c];
    }
  }
  for (std::size_t r = 0; r < m; ++r) h[var[r]] = a[r][m] / a[r][r];
  return h;
}

/// J(w) = sum_u deg(u) H(u,w), with every H from the overlap formula.
inline ExactInt joining_time_by_overlaps(const Tree& t, VertexId w) {
  ExactInt total = 0;
  for (VertexId u = 0; u < t.order(); ++u) total += hitting_time(t, u, w) * t.degree(u);
  return total;
}

/// J(w) from the first-step linear system.
inline ExactRational joining_time_by_linear_solve(const Tree& t, VertexId w) {
  auto h = first_step_hitting_times(t, w);
  ExactRational total = 0;
  for (VertexId u = 0; u < t.order(); ++u) total += h[u] * static_cast<long long>(t.degree(u));
  return total;
}

}  // namespace treewalk::oracle
