#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "treewalk/canonical.hpp"
#include "treewalk/error.hpp"
#include "treewalk/exact.hpp"
#include "treewalk/families.hpp"
#include "treewalk/tree.hpp"
#include "treewalk/walk.hpp"

namespace treewalk {

enum class TraceDirection { decreasing, increasing };

struct TraceStep {
  std::string phase;
  std::string description;
  CanonicalForm canonical;
  std::optional<Tree> snapshot;  // kept only for the first few steps
  ExactInt quantity;
  bool strict = true;  // false where only a non-strict change is guaranteed
  std::uint32_t diameter = 0;
};

struct TransformTrace {
  TraceDirection direction = TraceDirection::decreasing;
  ExactInt initial;
  std::vector<TraceStep> steps;

  const ExactInt& final_quantity() const { return steps.empty() ? initial : steps.back().quantity; }

  /// Index of the first step breaking the declared monotonicity, if any.
  std::optional<std::size_t> first_violation() const {
    const ExactInt* prev = &initial;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const ExactInt& q = steps[i].quantity;
      bool ok = direction == TraceDirection::decreasing ? (steps[i].strict ? q < *prev : q <= *prev)
                                                        : (steps[i].strict ? q > *prev : q >= *prev);
      if (!ok) return i;
      prev = &q;
    }
    return std::nullopt;
  }
};

struct TraceOptions {
  std::size_t snapshot_depth = 16;
  bool check_lemmas = true;
};

struct PipelineResult {
  Tree tree;
  TransformTrace trace;
};

namespace detail {

inline std::string json_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  return out;
}

inline void push_step(TransformTrace& trace, const TraceOptions& opts, const Tree& t, std::string phase,
                      std::string description, ExactInt quantity, bool strict) {
  TraceStep step;
  step.phase = std::move(phase);
  step.description = std::move(description);
  step.canonical = canonical_form(t);
  if (trace.steps.size() < opts.snapshot_depth) step.snapshot = t;
  step.quantity = std::move(quantity);
  step.strict = strict;
  step.diameter = diameter_and_geodesic(t).diameter;
  trace.steps.push_back(std::move(step));
  if (auto bad = trace.first_violation(); bad && *bad + 1 == trace.steps.size())
    throw Error(ErrorCode::InvariantViolated, "trace step " + std::to_string(*bad) + " (" +
                                                  trace.steps.back().description + ") is not monotone");
}

}  // namespace detail

/// One JSON object per line: step index, phase, description, quantity, strictness, diameter, canonical form.
inline std::string trace_to_jsonl(const TransformTrace& trace) {
  std::ostringstream out;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const TraceStep& s = trace.steps[i];
    out << "{\"step\":" << i << ",\"phase\":\"" << detail::json_escape(s.phase) << "\",\"description\":\""
        << detail::json_escape(s.description) << "\",\"quantity\":\"" << s.quantity.str()
        << "\",\"strict\":" << (s.strict ? "true" : "false") << ",\"diameter\":" << s.diameter
        << ",\"canonical\":\"" << s.canonical.code << "\"}\n";
  }
  return out.str();
}

/// Applies perm (old id -> new id) to every edge.
inline Tree relabel(const Tree& t, std::span<const VertexId> perm) {
  std::vector<Edge> edges;
  for (auto [a, b] : t.edges()) edges.emplace_back(perm[a], perm[b]);
  return Tree::from_edges(t.order(), edges);
}

/// Replaces the edge (y,z) by (x,z). With check_lemma, verifies H*(v,x) <= H(v,x)
/// for every v and J*(x) < J(x).
inline Tree move_leaf(const Tree& t, VertexId z, VertexId y, VertexId x, bool check_lemma = false) {
  detail::require_vertex(t, z);
  detail::require_vertex(t, y);
  detail::require_vertex(t, x);
  if (!t.is_leaf(z)) throw Error(ErrorCode::NotALeaf, "vertex " + std::to_string(z) + " has degree " +
                                                          std::to_string(t.degree(z)));
  if (!t.adjacent(z, y))
    throw Error(ErrorCode::WrongNeighbor, std::to_string(y) + " is not the neighbor of leaf " + std::to_string(z));
  if (x == z) throw Error(ErrorCode::SelfAttach, "cannot attach leaf " + std::to_string(z) + " to itself");
  if (x == y) return t;

  std::vector<Edge> edges;
  for (auto e : t.edges())
    if (e != Edge{std::min(y, z), std::max(y, z)}) edges.push_back(e);
  edges.emplace_back(x, z);
  Tree moved = Tree::from_edges(t.order(), edges);

  if (check_lemma) {
    auto before = hitting_times_to(t, x);
    auto after = hitting_times_to(moved, x);
    for (VertexId v = 0; v < t.order(); ++v)
      if (after[v] > before[v])
        throw Error(ErrorCode::InvariantViolated, "H*(" + std::to_string(v) + "," + std::to_string(x) +
                                                      ") = " + after[v].str() + " > " + before[v].str());
    ExactInt j_before = joining_time(t, x), j_after = joining_time(moved, x);
    if (!(j_after < j_before))
      throw Error(ErrorCode::InvariantViolated,
                  "J*(" + std::to_string(x) + ") = " + j_after.str() + " >= " + j_before.str());
  }
  return moved;
}

/// B_{n,r}, r = eccentricity of z, with z at the far end of the handle (its own id kept).
inline Tree broomify(const Tree& t, VertexId z) {
  detail::require_vertex(t, z);
  const std::size_t n = t.order();
  const std::uint32_t r = eccentricity(t, z);
  if (r <= 1) return t;
  Tree broom = broom_graph(n, r);
  std::vector<VertexId> perm(n);
  for (VertexId v = 0; v < n; ++v) perm[v] = v;
  std::swap(perm[r], perm[z]);
  return relabel(broom, perm);
}

// ---------------------------------------------------------------------------
// Minimizing pipeline: any tree of diameter d ends at the balanced lever.

inline PipelineResult minimize_pipeline(const Tree& input, const TraceOptions& opts = {}) {
  const std::size_t n = input.order();
  const Geodesic geo = diameter_and_geodesic(input);
  const std::size_t d = geo.diameter;
  if (d < 3 || d + 2 > n)
    throw Error(ErrorCode::DiameterOutOfRange,
                "need 3 <= d <= n-2, got n=" + std::to_string(n) + " d=" + std::to_string(d));

  PipelineResult res{input, {}};
  res.trace.direction = TraceDirection::decreasing;
  res.trace.initial = j_min(input);
  Tree& t = res.tree;

  const auto& P = geo.path;
  std::vector<int> index_on_path(n, -1);
  for (std::size_t i = 0; i < P.size(); ++i) index_on_path[P[i]] = static_cast<int>(i);
  const VertexId c = barycenter(input).centers.front();

  // Phase One: pull every leaf other than the geodesic ends onto c.
  for (;;) {
    std::optional<VertexId> leaf;
    for (VertexId z = 0; z < n && !leaf; ++z)
      if (t.is_leaf(z) && z != P.front() && z != P.back() && !t.adjacent(z, c)) leaf = z;
    if (!leaf) break;
    VertexId y = t.neighbors(*leaf)[0];
    t = move_leaf(t, *leaf, y, c, opts.check_lemmas);
    detail::push_step(res.trace, opts, t, "one",
                      "move leaf " + std::to_string(*leaf) + " from " + std::to_string(y) + " to " +
                          std::to_string(c),
                      joining_time(t, c), true);
  }

  // Phase Two: c is off the geodesic; everything off P becomes a leaf of the
  // geodesic vertex nearest c.
  VertexId fulcrum = c;
  if (index_on_path[c] < 0) {
    RootedView from_c(t, c);
    fulcrum = P.front();
    for (VertexId v : P)
      if (from_c.depth[v] < from_c.depth[fulcrum]) fulcrum = v;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < P.size(); ++i) edges.emplace_back(P[i], P[i + 1]);
    for (VertexId v = 0; v < n; ++v)
      if (index_on_path[v] < 0) edges.emplace_back(fulcrum, v);
    t = Tree::from_edges(n, edges);
    detail::push_step(res.trace, opts, t, "two",
                      "reattach all off-geodesic vertices to " + std::to_string(fulcrum), j_min(t), true);
  }

  // Phase Three: slide the fulcrum to the centre of the geodesic.
  const int k = index_on_path[fulcrum];
  int target = static_cast<int>(d / 2);
  if (d % 2 == 1 && k > target) target += 1;  // (d-1)/2 and (d+1)/2 give isomorphic levers
  if (k != target) {
    const VertexId to = P[static_cast<std::size_t>(target)];
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < P.size(); ++i) edges.emplace_back(P[i], P[i + 1]);
    for (VertexId v = 0; v < n; ++v)
      if (index_on_path[v] < 0) edges.emplace_back(to, v);
    t = Tree::from_edges(n, edges);
    detail::push_step(res.trace, opts, t, "three",
                      "move fulcrum from v" + std::to_string(k) + " to v" + std::to_string(target), j_min(t), true);
  }
  return res;
}

// ---------------------------------------------------------------------------
// Maximizing pipeline: any tree ends at a double broom with larger J_min.

namespace detail {

/// A component of the split at c, kept as the rooted broom B_{m,r} with c at
/// the handle tip. r = 1 is the group of all leaves hanging directly off c.
struct BroomPart {
  std::size_t m = 0;  // vertices, counting c
  std::size_t r = 0;  // eccentricity of c inside the part
  std::size_t key = 0;  // smallest original neighbor id of c in the part
  std::optional<std::pair<Tree, VertexId>> original;  // set until broomified

  std::size_t bristles() const { return m - r; }
  bool empty() const { return m <= 1; }
};

inline std::pair<Tree, VertexId> rooted_broom(std::size_t m, std::size_t r) {
  if (r == 1) {
    std::vector<Edge> edges;
    for (VertexId v = 1; v < m; ++v) edges.emplace_back(0, v);
    return {Tree::from_edges(m, edges), 0};
  }
  return {broom_graph(m, r), static_cast<VertexId>(r)};
}

inline long long broom_delta_plus(std::size_t m, std::size_t r) {
  long long mm = static_cast<long long>(m), rr = static_cast<long long>(r);
  return 4 * (rr - 1) * (2 * mm - rr) + 1;
}

inline Tree assemble(const std::vector<BroomPart>& parts) {
  std::vector<std::pair<Tree, VertexId>> pieces;
  for (const auto& p : parts) {
    if (p.empty()) continue;
    pieces.push_back(p.original ? *p.original : rooted_broom(p.m, p.r));
  }
  return glue_at_root(pieces);
}

inline void require_barycenter_root(const Tree& t) {
  auto bc = barycenter(t);
  if (std::find(bc.centers.begin(), bc.centers.end(), 0) == bc.centers.end())
    throw Error(ErrorCode::InvariantViolated, "the split vertex is no longer a barycenter");
}

}  // namespace detail

inline PipelineResult maximize_pipeline(const Tree& input, const TraceOptions& opts = {}) {
  PipelineResult res{input, {}};
  res.trace.direction = TraceDirection::increasing;
  res.trace.initial = input.order() >= 1 ? j_min(input) : ExactInt(0);
  if (is_double_broom(input)) return res;

  const std::size_t n = input.order();
  const std::size_t d = diameter_and_geodesic(input).diameter;
  const VertexId c = barycenter(input).centers.front();

  std::vector<detail::BroomPart> parts;
  std::optional<std::size_t> star;
  for (const SplitPart& sp : v_split(input, c).parts) {
    std::size_t key = sp.to_parent[1];
    if (sp.tree.order() == 2) {
      if (!star) {
        star = parts.size();
        parts.push_back({1, 1, key, std::nullopt});
      }
      parts[*star].m += 1;
      continue;
    }
    std::size_t r = eccentricity(sp.tree, 0);
    parts.push_back({sp.tree.order(), r, key, std::make_pair(sp.tree, VertexId{0})});
  }
  Tree& t = res.tree;
  auto record = [&](const std::string& phase, const std::string& what, bool strict) {
    t = detail::assemble(parts);
    detail::require_barycenter_root(t);
    detail::push_step(res.trace, opts, t, phase, what, joining_time(t, 0), strict);
  };

  // Phase One: every part becomes the broom maximizing J at c for its size and depth.
  for (std::size_t i = 0; i < parts.size(); ++i) {
    auto& p = parts[i];
    if (!p.original) continue;
    auto broom = detail::rooted_broom(p.m, p.r);
    bool already = rooted_canonical_form(p.original->first, p.original->second) ==
                   rooted_canonical_form(broom.first, broom.second);
    p.original.reset();
    if (!already)
      record("one", "broomify part at neighbor " + std::to_string(p.key) + " into B_{" + std::to_string(p.m) +
                        "," + std::to_string(p.r) + "}",
             true);
  }
  if (res.trace.steps.empty()) t = detail::assemble(parts);
  if (parts.size() <= 2) return res;

  // Order the two receiving brooms by delta-plus, then by size, then by position.
  std::vector<std::size_t> order(parts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto da = detail::broom_delta_plus(parts[a].m, parts[a].r), db = detail::broom_delta_plus(parts[b].m, parts[b].r);
    if (da != db) return da > db;
    return parts[a].m > parts[b].m;
  });
  const std::size_t g1 = order[0], g2 = order[1];

  auto next_source = [&]() -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < parts.size(); ++i)
      if (i != g1 && i != g2 && !parts[i].empty()) return i;
    return std::nullopt;
  };
  auto take_leaf = [&](std::size_t j) {
    auto& p = parts[j];
    if (p.bristles() >= 2 || p.r == 1) {
      p.m -= 1;
    } else {
      p.m -= 1;
      p.r -= 1;
    }
  };
  // A target may grow only while its component of t - c stays within n/2.
  auto pick_target = [&]() { return parts[g1].m < n / 2 + 1 ? g1 : g2; };

  // Phase Two: lengthen handles until the two receivers span the original diameter.
  while (parts[g1].r + parts[g2].r < d) {
    auto j = next_source();
    if (!j) break;
    take_leaf(*j);
    std::size_t g = pick_target();
    parts[g].m += 1;
    parts[g].r += 1;
    record("two", "leaf from part at neighbor " + std::to_string(parts[*j].key) +
                      " extends the handle of part at neighbor " + std::to_string(parts[g].key),
           false);
  }
  // Phase Three: every remaining vertex becomes a bristle of a receiver.
  while (auto j = next_source()) {
    take_leaf(*j);
    std::size_t g = pick_target();
    parts[g].m += 1;
    record("three", "leaf from part at neighbor " + std::to_string(parts[*j].key) +
                        " becomes a bristle of part at neighbor " + std::to_string(parts[g].key),
           false);
  }

  if (!is_double_broom(t)) throw Error(ErrorCode::InvariantViolated, "maximize pipeline ended off the double brooms");
  if (!(res.trace.final_quantity() > res.trace.initial))
    throw Error(ErrorCode::InvariantViolated, "J_min did not increase: " + res.trace.initial.str() + " -> " +
                                                  res.trace.final_quantity().str());
  return res;
}

}  // namespace treewalk
