#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "treewalk/canonical.hpp"
#include "treewalk/prufer.hpp"
#include "treewalk/tree.hpp"

namespace treewalk {

struct EnumerateOptions {
  std::size_t cap = 10;  // largest n accepted
  unsigned threads = 1;
};

struct RootedTree {
  Tree tree;
  VertexId root = 0;
};

namespace detail {

/// Reusable CSR adjacency for the enumeration hot loop.
struct ScratchGraph {
  std::size_t n = 0;
  std::vector<std::uint32_t> offsets;
  std::vector<VertexId> nbrs;
  std::vector<std::uint32_t> fill;

  void assign(std::size_t order_, std::span<const Edge> edges) {
    n = order_;
    offsets.assign(n + 1, 0);
    for (auto [a, b] : edges) {
      ++offsets[a + 1];
      ++offsets[b + 1];
    }
    for (std::size_t v = 0; v < n; ++v) offsets[v + 1] += offsets[v];
    nbrs.resize(2 * edges.size());
    fill.assign(offsets.begin(), offsets.end() - 1);
    for (auto [a, b] : edges) {
      nbrs[fill[a]++] = b;
      nbrs[fill[b]++] = a;
    }
  }
  std::size_t order() const { return n; }
  std::span<const VertexId> neighbors(VertexId v) const {
    return {nbrs.data() + offsets[v], nbrs.data() + offsets[v + 1]};
  }
};

inline std::uint64_t labeled_tree_count(std::size_t n) {
  std::uint64_t total = 1;
  for (std::size_t i = 2; i < n; ++i) total *= n;
  return total;
}

inline void code_from_index(std::uint64_t index, std::size_t n, PruferCode& code) {
  code.assign(n - 2, 0);
  for (std::size_t i = code.size(); i-- > 0;) {
    code[i] = static_cast<VertexId>(index % n);
    index /= n;
  }
}

/// First Prufer index (lexicographic sweep order) for each canonical code in [lo, hi).
inline std::unordered_map<std::string, std::uint64_t> sweep_range(std::size_t n, std::uint64_t lo,
                                                                  std::uint64_t hi) {
  std::unordered_map<std::string, std::uint64_t> first;
  PruferCode code;
  code_from_index(lo, n, code);
  std::vector<std::uint32_t> degree;
  std::vector<Edge> edges;
  ScratchGraph g;
  AhuScratch scratch;
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    prufer_edges(code, n, degree, edges);
    g.assign(n, edges);
    std::string key = free_ahu(g, scratch);
    first.try_emplace(std::move(key), idx);
    // Odometer increment.
    for (std::size_t i = code.size(); i-- > 0;) {
      if (++code[i] < n) break;
      code[i] = 0;
    }
  }
  return first;
}

}  // namespace detail

/// One representative per isomorphism class of trees of order n, in order of
/// first appearance in the lexicographic Prufer sweep; optionally restricted
/// to diameter `diameter_filter`. The result does not depend on `threads`.
inline std::vector<Tree> enumerate_trees(std::size_t n, std::optional<std::uint32_t> diameter_filter = {},
                                         const EnumerateOptions& opts = {}) {
  if (n > opts.cap)
    throw Error(ErrorCode::CapExceeded,
                "n=" + std::to_string(n) + " exceeds enumeration cap " + std::to_string(opts.cap));
  if (n == 0) throw Error(ErrorCode::TreeTooSmall, "n must be at least 1");
  std::vector<Tree> out;
  auto keep = [&](Tree t) {
    if (!diameter_filter || diameter_and_geodesic(t).diameter == *diameter_filter)
      out.push_back(std::move(t));
  };
  if (n <= 2) {
    std::vector<Edge> edges;
    if (n == 2) edges.emplace_back(0, 1);
    keep(Tree::from_edges(n, edges));
    return out;
  }

  const std::uint64_t total = detail::labeled_tree_count(n);
  const unsigned workers = std::max(1u, std::min<unsigned>(opts.threads, static_cast<unsigned>(std::min<std::uint64_t>(total, 64))));
  std::vector<std::unordered_map<std::string, std::uint64_t>> partial(workers);
  if (workers == 1) {
    partial[0] = detail::sweep_range(n, 0, total);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
      pool.emplace_back([&, w, lo, hi] { partial[w] = detail::sweep_range(n, lo, hi); });
    }
    for (auto& th : pool) th.join();
  }

  std::unordered_map<std::string, std::uint64_t> merged;
  for (auto& part : partial)
    for (auto& [key, idx] : part) {
      auto [it, inserted] = merged.try_emplace(key, idx);
      if (!inserted) it->second = std::min(it->second, idx);
    }
  std::vector<std::uint64_t> firsts;
  firsts.reserve(merged.size());
  for (auto& [key, idx] : merged) firsts.push_back(idx);
  std::sort(firsts.begin(), firsts.end());
  PruferCode code;
  for (std::uint64_t idx : firsts) {
    detail::code_from_index(idx, n, code);
    keep(prufer_decode(code, n));
  }
  return out;
}

/// Memoized enumerate_trees(n) without a diameter filter. Thread-safe.
inline const std::vector<Tree>& tree_classes(std::size_t n, const EnumerateOptions& opts = {}) {
  static std::mutex mu;
  static std::map<std::size_t, std::vector<Tree>> cache;
  if (n > opts.cap)
    throw Error(ErrorCode::CapExceeded,
                "n=" + std::to_string(n) + " exceeds enumeration cap " + std::to_string(opts.cap));
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto classes = enumerate_trees(n, std::nullopt, opts);
  std::lock_guard lock(mu);
  return cache.try_emplace(n, std::move(classes)).first->second;
}

/// One representative per rooted isomorphism class of rooted trees of order n.
inline std::vector<RootedTree> enumerate_rooted_trees(std::size_t n, const EnumerateOptions& opts = {}) {
  std::vector<RootedTree> out;
  for (const Tree& t : tree_classes(n, opts)) {
    std::vector<std::string> seen;
    for (VertexId z = 0; z < t.order(); ++z) {
      std::string code = rooted_canonical_form(t, z).code;
      if (std::find(seen.begin(), seen.end(), code) != seen.end()) continue;
      seen.push_back(std::move(code));
      out.push_back({t, z});
    }
  }
  return out;
}

}  // namespace treewalk
