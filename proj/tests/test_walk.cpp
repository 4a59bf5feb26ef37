#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace treewalk;

namespace {

ExactRational q(long long a, long long b = 1) { return ExactRational(a, b); }

}  // namespace

TEST(PathOverlap, Examples) {
  Tree p4 = path_graph(4);
  EXPECT_EQ(path_overlap(p4, 0, 1, 3), 2);
  for (VertexId u = 0; u < 4; ++u)
    for (VertexId w = 0; w < 4; ++w) {
      EXPECT_EQ(path_overlap(p4, u, u, w), distances(p4)(u, w));
      EXPECT_EQ(path_overlap(p4, u, (u + 1) % 4, u), 0);
    }
}

TEST(HittingTime, Examples) {
  Tree p3 = path_graph(3);
  EXPECT_EQ(hitting_time(p3, 0, 2), 4);
  EXPECT_EQ(hitting_time(p3, 1, 0), 3);
  EXPECT_EQ(hitting_time(p3, 2, 2), 0);
  EXPECT_EQ(hitting_time(broom_graph(5, 3), 1, 3), 12);
}

TEST(HittingTime, PathFormula) {
  // On P_{d+1}, H(v_i, v_j) = j^2 - i^2 for i < j.
  Tree p = path_graph(9);
  for (long long i = 0; i < 9; ++i)
    for (long long j = i + 1; j < 9; ++j) EXPECT_EQ(hitting_time(p, i, j), j * j - i * i);
}

TEST(HittingProfile, Examples) {
  auto h2 = hitting_profile(path_graph(2));
  EXPECT_EQ(h2(0, 1), 1);
  EXPECT_EQ(h2(1, 0), 1);
  EXPECT_EQ(h2(0, 0), 0);
  Tree s4 = star_graph(4);
  auto h = hitting_profile(s4);
  EXPECT_EQ(h(0, 2), 6);
  EXPECT_EQ(h(0, 2), hitting_time(s4, 0, 2));
  auto solved = oracle::first_step_hitting_times(s4, 2);
  EXPECT_EQ(solved[0], 6);
}

TEST(HittingProfile, MatchesOraclesOnRandomTrees) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Tree t = fixtures::random_tree(12, rng);
    auto h = hitting_profile(t);
    for (VertexId w = 0; w < t.order(); ++w) {
      auto solved = oracle::first_step_hitting_times(t, w);
      for (VertexId u = 0; u < t.order(); ++u) {
        ASSERT_EQ(h(u, w), hitting_time(t, u, w));
        ASSERT_EQ(h(u, w), oracle::edge_decomposition_hitting(t, u, w));
        ASSERT_EQ(ExactRational(h(u, w)), solved[u]);
      }
    }
  }
}

TEST(JoiningTime, Examples) {
  Tree p3 = path_graph(3);
  EXPECT_EQ(joining_time(p3, 2), 10);
  EXPECT_EQ(joining_time(p3, 1), 2);
  EXPECT_EQ(joining_time(star_graph(4), 1), 3);
  EXPECT_EQ(joining_times(p3), (std::vector<ExactInt>{10, 2, 10}));
}

TEST(JoiningTime, RerootingMatchesDefinition) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Tree t = fixtures::random_tree(3 + trial % 15, rng);
    auto all = joining_times(t);
    for (VertexId w = 0; w < t.order(); ++w) {
      ASSERT_EQ(all[w], joining_time(t, w));
      ASSERT_EQ(all[w], oracle::joining_time_by_overlaps(t, w));
    }
  }
}

TEST(MeetingTime, Examples) {
  EXPECT_EQ(meeting_time(star_graph(3), 0), q(5, 2));
  EXPECT_EQ(meeting_time(path_graph(2), 1), q(1, 2));
  EXPECT_EQ(meeting_time(path_graph(3), 1), q(1, 2));
  EXPECT_THROW(meeting_time(path_graph(1), 0), Error);
}

TEST(TMeet, Examples) {
  auto p4 = t_meet(path_graph(4));
  EXPECT_EQ(p4.value, q(35, 6));
  EXPECT_EQ(p4.witness, 0u);
  EXPECT_EQ(p4.tied, (std::vector<VertexId>{0, 3}));
  auto s4 = t_meet(star_graph(4));
  EXPECT_EQ(s4.value, q(9, 2));
  EXPECT_TRUE(star_graph(4).is_leaf(s4.witness));
  EXPECT_EQ(t_meet(path_graph(2)).value, q(1, 2));
}

TEST(TBestmeet, Examples) {
  for (std::size_t n = 3; n <= 12; ++n) {
    auto s = t_bestmeet(star_graph(n));
    EXPECT_EQ(s.value, q(1, 2));
    EXPECT_EQ(s.witness, 1u);
  }
  EXPECT_EQ(t_bestmeet(generate(double_broom_spec(5, 3, 1, 2))).value, q(3, 2));
  EXPECT_EQ(t_bestmeet(balanced_double_broom(5, 3)).value, q(3, 2));
  auto p9 = t_bestmeet(path_graph(9));
  EXPECT_EQ(p9.value, q(21, 2));
  EXPECT_EQ(p9.witness, 4u);
}

TEST(Kemeny, Examples) {
  EXPECT_EQ(kemeny(path_graph(2)), q(1, 2));
  EXPECT_EQ(kemeny(path_graph(3)), q(3, 2));
  Tree t = fixtures::split_figure_tree();
  auto h = hitting_profile(t);
  for (VertexId u = 0; u < t.order(); ++u) EXPECT_EQ(kemeny_from_start(t, h, u), kemeny(t));
}

TEST(Kemeny, SandwichedBetweenMeetingTimes) {
  for (std::size_t n = 3; n <= 8; ++n)
    for (const Tree& t : tree_classes(n)) {
      auto k = kemeny(t);
      EXPECT_LT(t_bestmeet(t).value, k);
      EXPECT_LT(k, t_meet(t).value);
    }
  EXPECT_EQ(t_bestmeet(path_graph(2)).value, kemeny(path_graph(2)));
  EXPECT_EQ(kemeny(path_graph(2)), t_meet(path_graph(2)).value);
}

TEST(Barycenter, Examples) {
  auto p4 = barycenter(path_graph(4));
  EXPECT_EQ(p4.centers, (std::vector<VertexId>{1, 2}));
  EXPECT_EQ(barycenter(star_graph(6)).centers, (std::vector<VertexId>{1}));
  // B_{9,7}: bristles v0 and v8 hang off v1; the barycenter is three steps from them.
  auto b = barycenter(broom_graph(9, 7));
  EXPECT_EQ(b.centers, (std::vector<VertexId>{3}));
  EXPECT_EQ(distances(broom_graph(9, 7))(8, 3), 3u);
  EXPECT_EQ(b.component_sizes[0], (std::vector<std::size_t>{4, 4}));
}

TEST(Barycenter, Equivalences) {
  auto p5 = check_barycenter_equivalences(path_graph(5));
  EXPECT_EQ(p5.min_distance_sum, (std::vector<VertexId>{2}));
  EXPECT_EQ(p5.hitting_dominance, (std::vector<VertexId>{2}));
  EXPECT_EQ(p5.min_joining_time, (std::vector<VertexId>{2}));
  auto p4 = check_barycenter_equivalences(path_graph(4));
  EXPECT_EQ(p4.min_joining_time, (std::vector<VertexId>{1, 2}));
  for (std::size_t n = 1; n <= 9; ++n)
    for (const Tree& t : tree_classes(n)) EXPECT_NO_THROW(check_barycenter_equivalences(t));
}

TEST(Properties, CommuteIdentityAndJoinDecomposition) {
  for (std::size_t n = 2; n <= 8; ++n)
    for (const Tree& t : tree_classes(n)) {
      auto h = hitting_profile(t);
      DistanceTable d(t);
      for (VertexId u = 0; u < n; ++u)
        for (VertexId v = 0; v < n; ++v) ASSERT_EQ(h(u, v) + h(v, u), ExactInt(2 * (n - 1) * d(u, v)));
      for (VertexId v = 0; v < n; ++v) {
        if (t.degree(v) < 2) continue;
        ExactInt sum = 0;
        for (const auto& part : v_split(t, v).parts) sum += joining_time(part.tree, part.center_local);
        ASSERT_EQ(sum, joining_time(t, v));
      }
      auto best = t_bestmeet(t);
      auto centers = barycenter(t).centers;
      EXPECT_NE(std::find(centers.begin(), centers.end(), best.witness), centers.end());
    }
}

TEST(Errors, VertexOutOfRange) {
  try {
    hitting_time(path_graph(3), 0, 7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::VertexOutOfRange);
  }
}
