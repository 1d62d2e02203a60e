#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "distinguish/error.hpp"
#include "distinguish/graph.hpp"
#include "distinguish/random.hpp"

namespace distinguish {
namespace {

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Every vertex permutation, kept when it maps edges to edges.
std::size_t brute_force_automorphism_count(const Graph& g) {
  std::vector<Point> p(g.vertex_count());
  std::iota(p.begin(), p.end(), Point{0});
  std::size_t count = 0;
  do {
    bool ok = true;
    for (auto [u, v] : g.edges())
      ok = ok && g.adjacent(p[u], p[v]);
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

const AutomorphismLimits kFigureLimits{14, kDefaultElementCap};

TEST(GraphTest, ValidatesEdges) {
  EXPECT_THROW(Graph(3, {{0, 0}}), InputError);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(Graph(3, {{0, 3}}), InputError);
  Graph g(3, {{2, 0}});
  EXPECT_EQ(g.edges().front(), Edge(0, 2));
}

TEST(GraphTest, BasicQueries) {
  Graph p4 = make_path(4);
  EXPECT_TRUE(p4.is_tree());
  EXPECT_EQ(p4.max_degree(), 2U);
  EXPECT_EQ(p4.neighbors(1), (std::vector<Point>{0, 2}));
  EXPECT_FALSE(make_cycle(4).is_tree());
  EXPECT_FALSE(disjoint_union(make_path(2), make_path(2)).is_connected());
  EXPECT_EQ(make_complete(4).complement(), make_empty(4));
}

TEST(GraphTest, FixtureShapes) {
  Graph c5 = make_cycle(5);
  EXPECT_EQ(c5.vertex_count(), 5U);
  EXPECT_EQ(c5.edges().size(), 5U);
  auto fig2 = make_figure2_graphs();
  EXPECT_EQ(fig2[0].vertex_count(), 6U);
  EXPECT_EQ(fig2[1].vertex_count(), 8U);
  EXPECT_EQ(fig2[2].vertex_count(), 14U);
  EXPECT_EQ(make_figure4_graph(), fig2[1]);
  Graph fig7 = make_figure7_tree();
  EXPECT_EQ(fig7, make_star_path_tree(3, {2, 3}));
  EXPECT_TRUE(fig7.is_tree());
  EXPECT_EQ(fig7.max_degree(), 5U);
}

TEST(GraphTest, InvalidFixtureParameters) {
  EXPECT_THROW(make_cycle(2), InputError);
  EXPECT_THROW(make_star_path_tree(2, {2, 2}), InputError);
  EXPECT_THROW(make_star_path_tree(2, {1, 3}), InputError);
}

TEST(AutomorphismTest, SmallGraphsMatchBruteForce) {
  for (const Graph& g : {make_cycle(5), make_cycle(6), make_path(5), make_complete(5),
                         make_empty(4), make_figure2_graphs()[0], make_figure4_graph(),
                         make_figure7_tree()})
    EXPECT_EQ(automorphism_group(g).order(), brute_force_automorphism_count(g));
}

TEST(AutomorphismTest, Figure2OrdersAre72) {
  // S_3 wr S_2 has order 3!^2 * 2 = 72.
  for (const Graph& g : make_figure2_graphs())
    EXPECT_EQ(automorphism_group(g, kFigureLimits).order(), 72U);
}

TEST(AutomorphismTest, CycleIsDihedral) {
  for (std::size_t n = 3; n <= 12; ++n)
    EXPECT_EQ(automorphism_group(make_cycle(n)).order(), 2 * n);
}

TEST(AutomorphismTest, LimitsRaise) {
  EXPECT_THROW(automorphism_group(make_figure2_graphs()[2]), ResourceError);
  EXPECT_THROW(automorphism_group(make_empty(9), {12, 1000}), ResourceError);
}

TEST(AutomorphismPropertyTest, RandomGraphs) {
  Rng rng(29);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
    Graph g = random_graph(rng, n, 0.4);
    PermGroup aut = automorphism_group(g);
    ASSERT_EQ(aut.order(), brute_force_automorphism_count(g));
    ASSERT_TRUE(aut.is_closed());
    for (const Perm& p : aut.elements())
      for (auto [u, v] : g.edges())
        ASSERT_TRUE(g.adjacent(p(u), p(v)));
    ASSERT_EQ(graph_action(g).kernel_indices().size(), 1U);
  }
}

TEST(GraphDistinguishingTest, Cycles) {
  for (std::size_t n = 3; n <= 12; ++n)
    EXPECT_EQ(graph_distinguishing_number(make_cycle(n)).k, n <= 5 ? 3U : 2U) << n;
}

TEST(GraphDistinguishingTest, Figure2) {
  auto fig2 = make_figure2_graphs();
  EXPECT_EQ(graph_distinguishing_number(fig2[0], kFigureLimits).k, 4U);
  EXPECT_EQ(graph_distinguishing_number(fig2[1], kFigureLimits).k, 3U);
  EXPECT_EQ(graph_distinguishing_number(fig2[2], kFigureLimits).k, 2U);
}

TEST(GraphDistinguishingTest, CompleteAndEmpty) {
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(graph_distinguishing_number(make_complete(n)).k, n);
    EXPECT_EQ(graph_distinguishing_number(make_empty(n)).k, n);
  }
}

TEST(FreeTreeTest, CountsMatchKnownSequence) {
  // Unlabelled trees on n vertices, n = 1..10.
  const std::size_t expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (std::size_t n = 1; n <= 10; ++n)
    EXPECT_EQ(enumerate_free_trees(n).size(), expected[n - 1]) << n;
}

TEST(FreeTreeTest, RepresentativesArePairwiseNonIsomorphicTrees) {
  for (std::size_t n = 1; n <= 9; ++n) {
    std::set<std::string> codes;
    for (const Graph& t : enumerate_free_trees(n)) {
      ASSERT_TRUE(t.is_tree());
      ASSERT_EQ(t.vertex_count(), n);
      codes.insert(tree_canonical_code(t));
    }
    EXPECT_EQ(codes.size(), enumerate_free_trees(n).size());
  }
}

TEST(FreeTreeTest, CanonicalCodeIgnoresVertexNames) {
  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    Graph t = random_tree(rng, 9);
    std::vector<Point> perm(9);
    std::iota(perm.begin(), perm.end(), Point{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> renamed;
    for (auto [u, v] : t.edges())
      renamed.emplace_back(perm[u], perm[v]);
    EXPECT_EQ(tree_canonical_code(t), tree_canonical_code(Graph(9, renamed)));
  }
}

TEST(TreeLabellingTest, Figure7) {
  Graph t = make_figure7_tree();
  TreeLabelling result = tree_labelling_with_decoration(t);
  EXPECT_LE(result.labelling.distinct_labels(), 5U);
  EXPECT_TRUE(is_distinguishing(graph_action(t), result.labelling).distinguishing);
  EXPECT_FALSE(result.decoration.leaf_orbit_sequence.empty());
  EXPECT_EQ(graph_distinguishing_number(t).k, 3U);
}

TEST(TreeLabellingTest, SmallTrees) {
  EXPECT_EQ(tree_distinguishing_labelling(Graph(1, {})).distinct_labels(), 1U);
  EXPECT_EQ(tree_distinguishing_labelling(make_path(2)).distinct_labels(), 2U);
  EXPECT_LE(tree_distinguishing_labelling(make_path(7)).distinct_labels(), 2U);
}

TEST(TreeLabellingTest, RejectsNonTrees) {
  EXPECT_THROW(tree_distinguishing_labelling(make_cycle(5)), PreconditionError);
  EXPECT_THROW(tree_distinguishing_labelling(make_empty(2)), PreconditionError);
}

TEST(TreeLabellingTest, StarPathSharpness) {
  for (std::size_t i = 2; i <= 4; ++i) {
    Graph t = make_star_path_tree(i, {2, 3});
    EXPECT_EQ(graph_distinguishing_number(t).k, i);
    EXPECT_EQ(t.max_degree(), i + 2);
  }
  EXPECT_EQ(graph_distinguishing_number(make_star_path_tree(3, {2, 3, 4}), {13, 10'000}).k, 3U);
}

TEST(TreeLabellingPropertyTest, AllTreesUpToNine) {
  for (std::size_t n = 1; n <= 9; ++n) {
    for (const Graph& t : enumerate_free_trees(n)) {
      const std::size_t bound = std::max<std::size_t>(t.max_degree(), 2);
      AutomorphismLimits limits{12, 400'000};
      Labelling phi = tree_distinguishing_labelling(t, limits);
      ASSERT_LE(phi.distinct_labels(), bound);
      ASSERT_TRUE(is_distinguishing(graph_action(t, limits), phi).distinguishing);
      ASSERT_LE(graph_distinguishing_number(t, limits).k, bound);
    }
  }
}

TEST(CompleteGraphTest, CompleteAndEmptyWithIsolatedVertex) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t isolated = 0; isolated <= 1; ++isolated) {
      auto k = check_complete_graph_characterization(
          disjoint_union(make_complete(n), make_empty(isolated)));
      EXPECT_EQ(k.verdict, Verdict::holds) << "K_" << n << " + " << isolated << ": " << k.detail;
      auto e = check_complete_graph_characterization(
          disjoint_union(make_empty(n), make_empty(isolated)));
      EXPECT_EQ(e.verdict, Verdict::holds) << "empty " << n << " + " << isolated;
    }
  }
}

TEST(CompleteGraphTest, TwoIsolatedVerticesLeaveTheHypothesis) {
  // |Aut(K_3 + 2 K_1)| = 3! * 2! is not a factorial.
  auto v = check_complete_graph_characterization(disjoint_union(make_complete(3), make_empty(2)));
  EXPECT_EQ(v.aut_order, 12U);
  EXPECT_EQ(v.verdict, Verdict::hypothesis_not_met);
}

TEST(CompleteGraphTest, CycleFiveMissesHypothesis) {
  auto v = check_complete_graph_characterization(make_cycle(5));
  EXPECT_EQ(v.aut_order, 10U);
  EXPECT_EQ(v.verdict, Verdict::hypothesis_not_met);
}

TEST(CompleteGraphTest, PathOnFourVerticesBreaksTheNEqualsTwoCase) {
  // Aut(P_4) = S_2 and D(P_4) = 2, yet both orbits have two vertices.
  auto v = check_complete_graph_characterization(make_path(4));
  EXPECT_EQ(v.aut_order, 2U);
  EXPECT_EQ(v.n, 2U);
  EXPECT_EQ(v.distinguishing_number, 2U);
  EXPECT_FALSE(v.structure_present);
  EXPECT_EQ(v.verdict, Verdict::violated);
}

TEST(CompleteGraphPropertyTest, ViolationsOnlyAtNEqualsTwo) {
  Rng rng(37);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = std::uniform_int_distribution<std::size_t>(1, 8)(rng);
    Graph g = random_graph(rng, n, 0.5);
    auto v = check_complete_graph_characterization(g);
    if (v.verdict == Verdict::violated)
      ASSERT_EQ(v.n, 2U) << v.detail;
  }
}

TEST(VerdictTest, Names) {
  EXPECT_EQ(to_string(Verdict::holds), "holds");
  EXPECT_EQ(to_string(Verdict::hypothesis_not_met), "hypothesis-not-met");
  EXPECT_EQ(to_string(Verdict::violated), "violated");
}

}  // namespace
}  // namespace distinguish
