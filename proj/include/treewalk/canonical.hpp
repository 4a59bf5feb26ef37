#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "treewalk/tree.hpp"

namespace treewalk {

/// AHU parenthesis encoding: equal iff the trees are isomorphic.
struct CanonicalForm {
  std::string code;
  auto operator<=>(const CanonicalForm&) const = default;
};

namespace detail {

struct AhuScratch {
  std::vector<VertexId> order;
  std::vector<VertexId> parent;
  std::vector<std::uint32_t> size;
  std::vector<std::string> code;
  std::vector<const std::string*> kids;
};

/// `G` exposes order() and neighbors(v).
template <class G>
std::string rooted_ahu(const G& g, VertexId root, AhuScratch& s) {
  const std::size_t n = g.order();
  s.order.clear();
  s.parent.assign(n, UINT32_MAX);
  s.order.push_back(root);
  s.parent[root] = root;
  for (std::size_t head = 0; head < s.order.size(); ++head) {
    VertexId u = s.order[head];
    for (VertexId v : g.neighbors(u))
      if (s.parent[v] == UINT32_MAX) {
        s.parent[v] = u;
        s.order.push_back(v);
      }
  }
  s.code.resize(n);
  for (std::size_t i = n; i-- > 0;) {
    VertexId u = s.order[i];
    s.kids.clear();
    for (VertexId v : g.neighbors(u))
      if (v != s.parent[u] || u == root) s.kids.push_back(&s.code[v]);
    std::sort(s.kids.begin(), s.kids.end(),
              [](const std::string* a, const std::string* b) { return *a < *b; });
    std::string& out = s.code[u];
    out.clear();
    out.push_back('(');
    for (const std::string* k : s.kids) out += *k;
    out.push_back(')');
  }
  return s.code[root];
}

/// One or two vertices whose removal leaves components of size <= n/2.
template <class G>
std::vector<VertexId> centroids(const G& g, AhuScratch& s) {
  const std::size_t n = g.order();
  s.order.clear();
  s.parent.assign(n, UINT32_MAX);
  s.size.assign(n, 1);
  s.order.push_back(0);
  s.parent[0] = 0;
  for (std::size_t head = 0; head < s.order.size(); ++head) {
    VertexId u = s.order[head];
    for (VertexId v : g.neighbors(u))
      if (s.parent[v] == UINT32_MAX) {
        s.parent[v] = u;
        s.order.push_back(v);
      }
  }
  for (std::size_t i = n; i-- > 1;) s.size[s.parent[s.order[i]]] += s.size[s.order[i]];
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n; ++v) {
    std::size_t largest = n - s.size[v];
    for (VertexId w : g.neighbors(v))
      if (w != s.parent[v] || v == 0) largest = std::max<std::size_t>(largest, s.size[w]);
    if (2 * largest <= n) out.push_back(v);
  }
  return out;
}

template <class G>
std::string free_ahu(const G& g, AhuScratch& s) {
  auto cs = centroids(g, s);
  std::string best = rooted_ahu(g, cs[0], s);
  if (cs.size() == 2) best = std::min(best, rooted_ahu(g, cs[1], s));
  return best;
}

}  // namespace detail

/// Rooted at the centroid; with two centroids the smaller code wins.
inline CanonicalForm canonical_form(const Tree& t) {
  detail::AhuScratch scratch;
  return {detail::free_ahu(t, scratch)};
}

/// Equal iff there is an isomorphism mapping root to root.
inline CanonicalForm rooted_canonical_form(const Tree& t, VertexId root) {
  detail::AhuScratch scratch;
  return {detail::rooted_ahu(t, root, scratch)};
}

inline bool isomorphic(const Tree& a, const Tree& b) {
  return a.order() == b.order() && canonical_form(a) == canonical_form(b);
}

}  // namespace treewalk
