#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "treewalk/error.hpp"
#include "treewalk/exact.hpp"
#include "treewalk/tree.hpp"

namespace treewalk {

namespace detail {

inline void require_vertex(const Tree& t, VertexId v) {
  if (!t.contains(v))
    throw Error(ErrorCode::VertexOutOfRange,
                "vertex " + std::to_string(v) + " with n=" + std::to_string(t.order()));
}

inline void require_edges(const Tree& t) {
  if (t.order() < 2)
    throw Error(ErrorCode::TreeTooSmall, "stationary quantities need at least one edge");
}

}  // namespace detail

/// Length of the intersection of the (u,w)- and (v,w)-paths.
inline ExactInt path_overlap(const DistanceTable& dist, VertexId u, VertexId v, VertexId w) {
  long long twice = static_cast<long long>(dist(u, w)) + dist(v, w) - dist(u, v);
  return ExactInt(twice / 2);
}

inline ExactInt path_overlap(const Tree& t, VertexId u, VertexId v, VertexId w) {
  detail::require_vertex(t, u);
  detail::require_vertex(t, v);
  detail::require_vertex(t, w);
  auto from_w = bfs_distances(t, w);
  auto from_u = bfs_distances(t, u);
  long long twice = static_cast<long long>(from_u[w]) + from_w[v] - from_u[v];
  return ExactInt(twice / 2);
}

/// H(u,w) as the degree-weighted sum of path overlaps. O(n) per pair; this is
/// the reference formula, hitting_profile is the bulk path.
inline ExactInt hitting_time(const Tree& t, VertexId u, VertexId w) {
  detail::require_vertex(t, u);
  detail::require_vertex(t, w);
  if (u == w) return 0;
  auto from_w = bfs_distances(t, w);
  auto from_u = bfs_distances(t, u);
  ExactInt total = 0;
  for (VertexId v = 0; v < t.order(); ++v) {
    long long overlap = (static_cast<long long>(from_u[w]) + from_w[v] - from_u[v]) / 2;
    total += ExactInt(overlap) * t.degree(v);
  }
  return total;
}

/// H(u,w) for every start u, rooted at w: H(u,w) = H(parent(u),w) + 2*size(u) - 1,
/// where size(u) counts the vertices below u.
inline std::vector<ExactInt> hitting_times_to(const Tree& t, VertexId w) {
  detail::require_vertex(t, w);
  std::vector<ExactInt> h(t.order());
  RootedView view(t, w);
  for (std::size_t i = 1; i < t.order(); ++i) {
    VertexId u = view.order[i];
    h[u] = h[view.parent[u]] + (2 * static_cast<long long>(view.subtree_size[u]) - 1);
  }
  return h;
}

/// All-pairs hitting times, H(u,v) = expected steps from u to v.
class HittingProfile {
 public:
  explicit HittingProfile(std::size_t n) : n_(n), h_(n * n) {}

  const ExactInt& operator()(VertexId from, VertexId to) const { return h_[from * n_ + to]; }
  ExactInt& at(VertexId from, VertexId to) { return h_[from * n_ + to]; }
  std::size_t order() const noexcept { return n_; }

 private:
  std::size_t n_;
  std::vector<ExactInt> h_;
};

/// O(n^2) overall, one rooted pass per target.
inline HittingProfile hitting_profile(const Tree& t) {
  const std::size_t n = t.order();
  HittingProfile profile(n);
  for (VertexId w = 0; w < n; ++w) {
    auto column = hitting_times_to(t, w);
    for (VertexId u = 0; u < n; ++u) profile.at(u, w) = std::move(column[u]);
  }
  return profile;
}

/// J(w) = sum_u deg(u) H(u,w) in O(n): each edge contributes (2s - 1)^2,
/// s being the number of vertices on the side away from w.
inline ExactInt joining_time(const Tree& t, VertexId w) {
  detail::require_vertex(t, w);
  RootedView view(t, w);
  ExactInt total = 0;
  for (std::size_t i = 1; i < t.order(); ++i) {
    long long side = 2 * static_cast<long long>(view.subtree_size[view.order[i]]) - 1;
    total += ExactInt(side * side);
  }
  return total;
}

/// Joining times of every vertex in O(n) by rerooting across each edge.
inline std::vector<ExactInt> joining_times(const Tree& t) {
  const std::size_t n = t.order();
  std::vector<ExactInt> out(n);
  RootedView view(t, 0);
  out[0] = joining_time(t, 0);
  const long long nn = static_cast<long long>(n);
  for (std::size_t i = 1; i < n; ++i) {
    VertexId c = view.order[i];
    long long below = view.subtree_size[c];
    long long lost = 2 * below - 1, gained = 2 * (nn - below) - 1;
    out[c] = out[view.parent[c]] - ExactInt(lost * lost) + ExactInt(gained * gained);
  }
  return out;
}

/// H(pi, w) = J(w) / 2|E|.
inline ExactRational meeting_time(const Tree& t, VertexId w) {
  detail::require_edges(t);
  return ratio(joining_time(t, w), 2 * static_cast<long long>(t.edge_count()));
}

/// An extreme value with its smallest-id witness and the full tied set.
struct Extremum {
  ExactRational value;
  VertexId witness = 0;
  std::vector<VertexId> tied;
};

namespace detail {

template <class Better>
Extremum extremum_of(const std::vector<ExactInt>& values, long long scale, Better better) {
  std::size_t best = 0;
  for (std::size_t v = 1; v < values.size(); ++v)
    if (better(values[v], values[best])) best = v;
  Extremum e{ratio(values[best], scale), static_cast<VertexId>(best), {}};
  for (std::size_t v = 0; v < values.size(); ++v)
    if (values[v] == values[best]) e.tied.push_back(static_cast<VertexId>(v));
  return e;
}

}  // namespace detail

inline Extremum t_meet(const Tree& t) {
  detail::require_edges(t);
  return detail::extremum_of(joining_times(t), 2 * static_cast<long long>(t.edge_count()),
                             [](const ExactInt& a, const ExactInt& b) { return a > b; });
}

inline Extremum t_bestmeet(const Tree& t) {
  detail::require_edges(t);
  return detail::extremum_of(joining_times(t), 2 * static_cast<long long>(t.edge_count()),
                             [](const ExactInt& a, const ExactInt& b) { return a < b; });
}

inline ExactInt j_min(const Tree& t) {
  auto js = joining_times(t);
  return *std::min_element(js.begin(), js.end());
}

inline ExactInt j_max(const Tree& t) {
  auto js = joining_times(t);
  return *std::max_element(js.begin(), js.end());
}

/// Kemeny's constant: sum_v pi_v H(pi,v) = sum_v deg(v) J(v) / (2|E|)^2.
inline ExactRational kemeny(const Tree& t) {
  detail::require_edges(t);
  auto js = joining_times(t);
  ExactInt total = 0;
  for (VertexId v = 0; v < t.order(); ++v) total += js[v] * t.degree(v);
  ExactInt two_m = 2 * static_cast<long long>(t.edge_count());
  return ratio(total, two_m * two_m);
}

/// sum_v pi_v H(u,v); independent of u for every start vertex.
inline ExactRational kemeny_from_start(const Tree& t, const HittingProfile& h, VertexId u) {
  detail::require_edges(t);
  ExactInt total = 0;
  for (VertexId v = 0; v < t.order(); ++v) total += h(u, v) * t.degree(v);
  return ratio(total, 2 * static_cast<long long>(t.edge_count()));
}

struct BarycenterResult {
  std::vector<VertexId> centers;                          // one, or two adjacent
  std::vector<std::vector<std::size_t>> component_sizes;  // per center, sizes of t - c
};

/// Vertices whose removal leaves only components of at most n/2 vertices.
inline BarycenterResult barycenter(const Tree& t) {
  const std::size_t n = t.order();
  RootedView view(t, 0);
  BarycenterResult out;
  for (VertexId c = 0; c < n; ++c) {
    std::vector<std::size_t> sizes;
    for (VertexId w : t.neighbors(c))
      sizes.push_back(c != 0 && w == view.parent[c] ? n - view.subtree_size[c] : view.subtree_size[w]);
    if (std::all_of(sizes.begin(), sizes.end(), [n](std::size_t s) { return 2 * s <= n; })) {
      out.centers.push_back(c);
      out.component_sizes.push_back(std::move(sizes));
    }
  }
  return out;
}

/// The four characterizations of the barycenter, evaluated independently.
struct BarycenterEquivalence {
  std::vector<VertexId> min_distance_sum;     // (a) argmin of sum_w d(v,w)
  std::vector<VertexId> hitting_dominance;    // (b) H(v,c) <= H(c,v) for all v
  std::vector<VertexId> min_joining_time;     // (c) argmin of J
  std::vector<VertexId> component_bound;      // (d) components of t - c have <= n/2 vertices
};

inline BarycenterEquivalence check_barycenter_equivalences(const Tree& t) {
  const std::size_t n = t.order();
  BarycenterEquivalence eq;
  DistanceTable dist(t);
  std::vector<std::uint64_t> sums(n, 0);
  for (VertexId v = 0; v < n; ++v)
    for (VertexId w = 0; w < n; ++w) sums[v] += dist(v, w);
  auto least = *std::min_element(sums.begin(), sums.end());
  for (VertexId v = 0; v < n; ++v)
    if (sums[v] == least) eq.min_distance_sum.push_back(v);

  auto h = hitting_profile(t);
  for (VertexId c = 0; c < n; ++c) {
    bool dominant = true;
    for (VertexId v = 0; v < n && dominant; ++v) dominant = h(v, c) <= h(c, v);
    if (dominant) eq.hitting_dominance.push_back(c);
  }

  auto js = joining_times(t);
  auto jmin = *std::min_element(js.begin(), js.end());
  for (VertexId v = 0; v < n; ++v)
    if (js[v] == jmin) eq.min_joining_time.push_back(v);

  eq.component_bound = barycenter(t).centers;

  auto compare = [&](const std::vector<VertexId>& other, const char* name) {
    if (other == eq.component_bound) return;
    VertexId culprit = 0;
    for (VertexId v = 0; v < n; ++v) {
      bool in_a = std::find(other.begin(), other.end(), v) != other.end();
      bool in_d = std::find(eq.component_bound.begin(), eq.component_bound.end(), v) !=
                  eq.component_bound.end();
      if (in_a != in_d) { culprit = v; break; }
    }
    throw Error(ErrorCode::EquivalenceViolated,
                std::string("predicates ") + name + " and (d) disagree at vertex " + std::to_string(culprit));
  };
  compare(eq.min_distance_sum, "(a)");
  compare(eq.hitting_dominance, "(b)");
  compare(eq.min_joining_time, "(c)");
  return eq;
}

}  // namespace treewalk
