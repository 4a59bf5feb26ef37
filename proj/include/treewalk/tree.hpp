#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "treewalk/error.hpp"

namespace treewalk {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Immutable tree on vertices 0..n-1, stored as sorted compressed adjacency.
class Tree {
 public:
  /// Validates the edge list; see build_tree.
  static Tree from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return nbrs_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return {nbrs_.data() + offsets_[v], nbrs_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const {
    return offsets_[v + 1] - offsets_[v];
  }
  bool is_leaf(VertexId v) const { return degree(v) == 1; }
  bool contains(VertexId v) const { return v < order(); }
  bool adjacent(VertexId u, VertexId v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
  }

  /// Edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count());
    for (VertexId u = 0; u < order(); ++u)
      for (VertexId v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  /// Labeled equality (same vertex ids, same edges).
  bool operator==(const Tree&) const = default;

 private:
  Tree() = default;

  std::vector<std::uint32_t> offsets_;
  std::vector<VertexId> nbrs_;
};

namespace detail {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::uint32_t> parent;
};

inline std::string edge_name(const Edge& e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

}  // namespace detail

inline Tree Tree::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw Error(ErrorCode::TreeTooSmall, "a tree needs at least one vertex");
  std::vector<Edge> seen;
  seen.reserve(edges.size());
  detail::DisjointSets sets(n);
  for (const Edge& e : edges) {
    if (e.first >= n || e.second >= n)
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge " + detail::edge_name(e) + " with n=" + std::to_string(n));
    if (e.first == e.second)
      throw Error(ErrorCode::SelfLoop, "edge " + detail::edge_name(e));
    Edge key = std::minmax(e.first, e.second);
    if (!sets.unite(e.first, e.second)) {
      // A repeated edge also closes a cycle; report it as the more specific error.
      if (std::find(seen.begin(), seen.end(), key) != seen.end())
        throw Error(ErrorCode::DuplicateEdge, "edge " + detail::edge_name(e));
      throw Error(ErrorCode::CycleDetected, "edge " + detail::edge_name(e) + " closes a cycle");
    }
    seen.push_back(key);
  }
  if (edges.size() != n - 1) {
    // Acyclic with fewer than n-1 edges: name a vertex outside 0's component.
    VertexId stray = 0;
    for (VertexId v = 1; v < n; ++v)
      if (sets.find(v) != sets.find(0)) { stray = v; break; }
    throw Error(ErrorCode::Disconnected,
                "vertex " + std::to_string(stray) + " unreachable from vertex 0 (" +
                    std::to_string(edges.size()) + " edges for n=" + std::to_string(n) + ")");
  }

  Tree t;
  t.offsets_.assign(n + 1, 0);
  for (const Edge& e : edges) {
    ++t.offsets_[e.first + 1];
    ++t.offsets_[e.second + 1];
  }
  for (std::size_t v = 0; v < n; ++v) t.offsets_[v + 1] += t.offsets_[v];
  t.nbrs_.resize(2 * edges.size());
  std::vector<std::uint32_t> fill(t.offsets_.begin(), t.offsets_.end() - 1);
  for (const Edge& e : edges) {
    t.nbrs_[fill[e.first]++] = e.second;
    t.nbrs_[fill[e.second]++] = e.first;
  }
  for (std::size_t v = 0; v < n; ++v)
    std::sort(t.nbrs_.begin() + t.offsets_[v], t.nbrs_.begin() + t.offsets_[v + 1]);
  return t;
}

inline Tree build_tree(std::span<const Edge> edges, std::size_t n) {
  return Tree::from_edges(n, edges);
}

inline Tree build_tree(std::initializer_list<Edge> edges, std::size_t n) {
  return Tree::from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

/// BFS tree from a root: visiting order, parents (root is its own parent),
/// depths, and subtree sizes.
struct RootedView {
  VertexId root = 0;
  std::vector<VertexId> order;
  std::vector<VertexId> parent;
  std::vector<std::uint32_t> depth;
  std::vector<std::uint32_t> subtree_size;

  RootedView(const Tree& t, VertexId r) : root(r) {
    const std::size_t n = t.order();
    order.reserve(n);
    parent.assign(n, r);
    depth.assign(n, 0);
    subtree_size.assign(n, 1);
    order.push_back(r);
    for (std::size_t head = 0; head < order.size(); ++head) {
      VertexId u = order[head];
      for (VertexId v : t.neighbors(u)) {
        if (v == parent[u] && u != r) continue;
        if (v == r) continue;
        parent[v] = u;
        depth[v] = depth[u] + 1;
        order.push_back(v);
      }
    }
    for (std::size_t i = n; i-- > 1;) subtree_size[parent[order[i]]] += subtree_size[order[i]];
  }

  /// Vertices from v up to the root, inclusive.
  std::vector<VertexId> path_to_root(VertexId v) const {
    std::vector<VertexId> p{v};
    while (v != root) p.push_back(v = parent[v]);
    return p;
  }
};

inline std::vector<std::uint32_t> bfs_distances(const Tree& t, VertexId source) {
  std::vector<std::uint32_t> dist(t.order(), UINT32_MAX);
  std::vector<VertexId> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    VertexId u = queue[head];
    for (VertexId v : t.neighbors(u))
      if (dist[v] == UINT32_MAX) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
  }
  return dist;
}

class DistanceTable {
 public:
  explicit DistanceTable(const Tree& t) : n_(t.order()), dist_(n_ * n_) {
    for (VertexId u = 0; u < n_; ++u) {
      auto row = bfs_distances(t, u);
      std::copy(row.begin(), row.end(), dist_.begin() + static_cast<std::ptrdiff_t>(u * n_));
    }
  }
  std::uint32_t operator()(VertexId u, VertexId v) const { return dist_[u * n_ + v]; }
  std::size_t order() const noexcept { return n_; }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> dist_;
};

inline DistanceTable distances(const Tree& t) { return DistanceTable(t); }

struct Geodesic {
  std::uint32_t diameter = 0;
  std::vector<VertexId> path;  // diameter + 1 vertices
};

/// Double BFS. The returned path is oriented so that path.front() < path.back().
inline Geodesic diameter_and_geodesic(const Tree& t) {
  auto farthest = [](const std::vector<std::uint32_t>& d) {
    return static_cast<VertexId>(std::max_element(d.begin(), d.end()) - d.begin());
  };
  VertexId a = farthest(bfs_distances(t, 0));
  RootedView from_a(t, a);
  VertexId b = farthest(from_a.depth);
  Geodesic g;
  g.diameter = from_a.depth[b];
  g.path = from_a.path_to_root(b);  // b .. a
  if (g.path.front() > g.path.back()) std::reverse(g.path.begin(), g.path.end());
  return g;
}

inline std::uint32_t eccentricity(const Tree& t, VertexId v) {
  auto d = bfs_distances(t, v);
  return *std::max_element(d.begin(), d.end());
}

/// One component of t - center, re-attached to the center. Local id 0 is the
/// center; to_parent maps local ids back to the parent tree.
struct SplitPart {
  Tree tree;
  std::vector<VertexId> to_parent;
  VertexId center_local = 0;
};

struct SplitResult {
  VertexId center = 0;
  std::vector<SplitPart> parts;  // ordered by the center's neighbor id
};

inline SplitResult v_split(const Tree& t, VertexId v) {
  if (!t.contains(v))
    throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
  if (t.degree(v) < 2)
    throw Error(ErrorCode::SplitAtLeaf,
                "vertex " + std::to_string(v) + " has degree " + std::to_string(t.degree(v)));
  SplitResult out;
  out.center = v;
  std::vector<VertexId> local(t.order(), UINT32_MAX);
  for (VertexId first : t.neighbors(v)) {
    std::vector<VertexId> members{v, first};
    std::vector<Edge> edges;
    local[v] = 0;
    local[first] = 1;
    edges.emplace_back(0, 1);
    for (std::size_t head = 1; head < members.size(); ++head) {
      VertexId u = members[head];
      for (VertexId w : t.neighbors(u)) {
        if (w == v || local[w] != UINT32_MAX) continue;
        local[w] = static_cast<VertexId>(members.size());
        members.push_back(w);
        edges.emplace_back(local[u], local[w]);
      }
    }
    SplitPart part{Tree::from_edges(members.size(), edges), members, 0};
    for (VertexId m : members) local[m] = UINT32_MAX;
    out.parts.push_back(std::move(part));
  }
  return out;
}

/// Glues rooted trees at their roots into one tree whose vertex 0 is the shared root.
inline Tree glue_at_root(std::span<const std::pair<Tree, VertexId>> parts) {
  std::vector<Edge> edges;
  VertexId next = 1;
  for (const auto& [part, root] : parts) {
    std::vector<VertexId> id(part.order());
    for (VertexId u = 0; u < part.order(); ++u) id[u] = u == root ? 0 : next++;
    for (auto [a, b] : part.edges()) edges.emplace_back(id[a], id[b]);
  }
  return Tree::from_edges(next, edges);
}

// Edge-list text format: "n" then n-1 lines "u v".

inline Tree parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) -> Error {
    return Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + why);
  };
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw fail("missing vertex count");
  std::istringstream head(line);
  long long n = 0;
  std::string extra;
  if (!(head >> n) || (head >> extra) || n < 1) throw fail("expected a positive vertex count");
  std::vector<Edge> edges;
  while (next_line()) {
    std::istringstream row(line);
    long long u = -1, v = -1;
    if (!(row >> u >> v) || (row >> extra)) throw fail("expected two vertex ids");
    if (u < 0 || v < 0 || u >= n || v >= n) throw fail("vertex id out of range 0.." + std::to_string(n - 1));
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  if (edges.size() != static_cast<std::size_t>(n - 1))
    throw Error(ErrorCode::ParseError, "edge count " + std::to_string(edges.size()) +
                                           " does not match n-1=" + std::to_string(n - 1));
  return Tree::from_edges(static_cast<std::size_t>(n), edges);
}

inline Tree parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

inline std::string format_edge_list(const Tree& t) {
  std::string out = std::to_string(t.order()) + "\n";
  for (auto [u, v] : t.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

inline std::string format_dot(const Tree& t, const std::string& name = "tree") {
  std::string out = "graph " + name + " {\n";
  for (VertexId v = 0; v < t.order(); ++v) out += "  " + std::to_string(v) + ";\n";
  for (auto [u, v] : t.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  return out + "}\n";
}

}  // namespace treewalk
