#include <gtest/gtest.h>

#include <sstream>

#include "helpers.hpp"

using namespace treewalk;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::ParseError;
}

}  // namespace

TEST(MoveLeaf, PathEndToSecondVertex) {
  Tree p4 = path_graph(4);
  EXPECT_EQ(joining_time(p4, 1), 11);
  Tree moved = move_leaf(p4, 3, 2, 1, true);
  EXPECT_TRUE(isomorphic(moved, star_graph(4)));
  EXPECT_EQ(joining_time(moved, 1), 3);
}

TEST(MoveLeaf, AwayFromTheCenterRaisesItsJoiningTime) {
  Tree s4 = star_graph(4);
  Tree moved = move_leaf(s4, 2, 1, 0, true);
  EXPECT_GT(joining_time(moved, 1), joining_time(s4, 1));
  EXPECT_LT(joining_time(moved, 0), joining_time(s4, 0));
}

TEST(MoveLeaf, Errors) {
  Tree p4 = path_graph(4);
  EXPECT_EQ(code_of([&] { move_leaf(p4, 1, 0, 3); }), ErrorCode::NotALeaf);
  EXPECT_EQ(code_of([&] { move_leaf(p4, 3, 1, 0); }), ErrorCode::WrongNeighbor);
  EXPECT_EQ(code_of([&] { move_leaf(p4, 3, 2, 3); }), ErrorCode::SelfAttach);
  EXPECT_EQ(move_leaf(p4, 3, 2, 2), p4);
}

TEST(MoveLeaf, LemmaOnRandomInstances) {
  std::mt19937_64 rng(2024);
  int checked = 0;
  while (checked < 200) {
    Tree t = fixtures::random_tree(4 + rng() % 12, rng);
    std::vector<VertexId> leaves;
    for (VertexId v = 0; v < t.order(); ++v)
      if (t.is_leaf(v)) leaves.push_back(v);
    VertexId z = leaves[rng() % leaves.size()];
    VertexId y = t.neighbors(z)[0];
    VertexId x = static_cast<VertexId>(rng() % t.order());
    if (x == z || x == y) continue;
    EXPECT_NO_THROW(move_leaf(t, z, y, x, true));
    ++checked;
  }
}

TEST(Broomify, PathAtSecondVertex) {
  Tree p4 = path_graph(4);
  Tree b = broomify(p4, 1);
  EXPECT_EQ(joining_time(p4, 1), 11);
  EXPECT_EQ(joining_time(b, 1), 27);
  EXPECT_TRUE(isomorphic(b, star_graph(4)));
  EXPECT_EQ(eccentricity(b, 1), eccentricity(p4, 1));
}

TEST(Broomify, BroomIsAFixedPoint) {
  Tree b = broom_graph(5, 3);
  Tree again = broomify(b, 3);
  EXPECT_EQ(again, b);
  EXPECT_EQ(joining_time(again, 3), 76);
}

TEST(Broomify, NeverDecreasesJoiningTime) {
  for (std::size_t n = 3; n <= 7; ++n)
    for (const RootedTree& r : enumerate_rooted_trees(n)) {
      Tree b = broomify(r.tree, r.root);
      EXPECT_GE(joining_time(b, r.root), joining_time(r.tree, r.root));
      EXPECT_EQ(eccentricity(b, r.root), eccentricity(r.tree, r.root));
    }
}

TEST(MinimizePipeline, FigureTreeEndsAtBalancedLever) {
  Tree t = fixtures::minimize_figure_tree();
  ASSERT_EQ(diameter_and_geodesic(t).diameter, 12u);
  ASSERT_EQ(barycenter(t).centers, (std::vector<VertexId>{13}));
  auto res = minimize_pipeline(t);
  EXPECT_TRUE(isomorphic(res.tree, balanced_lever(37, 12)));
  EXPECT_FALSE(res.trace.first_violation().has_value());
  EXPECT_EQ(res.trace.final_quantity(), j_min(balanced_lever(37, 12)));
  bool saw_two = false;
  for (const auto& s : res.trace.steps) saw_two = saw_two || s.phase == "two";
  EXPECT_TRUE(saw_two);
}

TEST(MinimizePipeline, SpiderAndFixedPoint) {
  Tree s = fixtures::spider(3, 2);
  auto res = minimize_pipeline(s);
  EXPECT_TRUE(isomorphic(res.tree, balanced_lever(7, 4)));
  EXPECT_LT(res.trace.final_quantity(), res.trace.initial);

  Tree lever = balanced_lever(9, 4);
  auto fixed = minimize_pipeline(lever);
  EXPECT_TRUE(fixed.trace.steps.empty());
  EXPECT_EQ(fixed.tree, lever);
}

TEST(MinimizePipeline, RejectsOutOfRangeDiameter) {
  EXPECT_EQ(code_of([] { minimize_pipeline(path_graph(6)); }), ErrorCode::DiameterOutOfRange);
  EXPECT_EQ(code_of([] { minimize_pipeline(star_graph(6)); }), ErrorCode::DiameterOutOfRange);
}

TEST(MaximizePipeline, SpiderEndsAtDoubleBroom) {
  Tree s = fixtures::spider(3, 2);
  auto res = maximize_pipeline(s);
  EXPECT_TRUE(is_double_broom(res.tree));
  EXPECT_GT(res.trace.final_quantity(), res.trace.initial);
  EXPECT_EQ(res.trace.final_quantity(), j_min(res.tree));
  EXPECT_FALSE(res.trace.first_violation().has_value());
}

TEST(MaximizePipeline, DoubleBroomIsAFixedPoint) {
  Tree d = balanced_double_broom(9, 5);
  auto res = maximize_pipeline(d);
  EXPECT_TRUE(res.trace.steps.empty());
  EXPECT_EQ(res.tree, d);
}

TEST(MaximizePipeline, AllSmallTrees) {
  for (std::size_t n = 3; n <= 8; ++n)
    for (const Tree& t : tree_classes(n)) {
      if (is_double_broom(t)) continue;
      auto res = maximize_pipeline(t);
      EXPECT_TRUE(is_double_broom(res.tree)) << canonical_form(t).code;
      EXPECT_GT(j_min(res.tree), j_min(t));
    }
}

TEST(Trace, JsonlHasOneLinePerStep) {
  auto res = minimize_pipeline(fixtures::minimize_figure_tree());
  std::string jsonl = trace_to_jsonl(res.trace);
  std::istringstream in(jsonl);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    EXPECT_EQ(line.front(), '{');
    EXPECT_NE(line.find("\"phase\""), std::string::npos);
    EXPECT_NE(line.find("\"quantity\""), std::string::npos);
  }
  EXPECT_EQ(lines, res.trace.steps.size());
}

TEST(Trace, SnapshotsOnlyForEarlySteps) {
  TraceOptions opts;
  opts.snapshot_depth = 2;
  auto res = minimize_pipeline(fixtures::minimize_figure_tree(), opts);
  ASSERT_GT(res.trace.steps.size(), 2u);
  EXPECT_TRUE(res.trace.steps[0].snapshot.has_value());
  EXPECT_FALSE(res.trace.steps[2].snapshot.has_value());
}
