#pragma once

// Fixtures shared by the test binaries.

#include <random>
#include <vector>

#include "treewalk/treewalk.hpp"

namespace treewalk::fixtures {

/// Uniform labeled tree from a random Prufer code.
inline Tree random_tree(std::size_t n, std::mt19937_64& rng) {
  if (n <= 2) return path_graph(n);
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
  PruferCode code(n - 2);
  for (auto& c : code) c = pick(rng);
  return prufer_decode(code, n);
}

/// Tree of the v-split figure: v = 0 with arms of 5, 5 and 2 further vertices.
inline Tree split_figure_tree() {
  return build_tree({{0, 1}, {1, 2}, {2, 3}, {2, 4}, {2, 5},
                     {0, 6}, {6, 7}, {7, 8}, {6, 9}, {7, 10},
                     {0, 11}, {11, 12}},
                    13);
}

/// Input of the minimizing-pipeline figure: n = 37, d = 12, barycenter (id 13) off the geodesic.
inline Tree minimize_figure_tree() {
  std::vector<Edge> e;
  for (VertexId i = 0; i < 12; ++i) e.emplace_back(i, i + 1);
  e.insert(e.end(), {{13, 14}, {14, 5}, {9, 15}, {15, 16}, {2, 17}, {2, 18}});
  for (VertexId i = 0; i < 9; ++i) {
    e.emplace_back(13, 19 + 2 * i);
    e.emplace_back(19 + 2 * i, 20 + 2 * i);
  }
  return Tree::from_edges(37, e);
}

/// Spider: a center (id 0) with `legs` legs of `length` edges each.
inline Tree spider(std::size_t legs, std::size_t length) {
  std::vector<Edge> e;
  VertexId next = 1;
  for (std::size_t l = 0; l < legs; ++l) {
    VertexId prev = 0;
    for (std::size_t i = 0; i < length; ++i) {
      e.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Tree::from_edges(next, e);
}

/// Every labeled tree on n vertices, in Prufer order.
inline std::vector<Tree> all_labeled_trees(std::size_t n) {
  std::vector<Tree> out;
  if (n <= 2) {
    out.push_back(path_graph(n));
    return out;
  }
  PruferCode code(n - 2, 0);
  for (;;) {
    out.push_back(prufer_decode(code, n));
    std::size_t i = code.size();
    while (i > 0 && ++code[i - 1] == n) code[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

}  // namespace treewalk::fixtures
