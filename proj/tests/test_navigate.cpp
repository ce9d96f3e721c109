#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pnspan/construct.hpp"
#include "pnspan/navigate.hpp"

namespace pnspan {
namespace {

const EuclideanSpace& line013() {
  static const auto space = EuclideanSpace::from_rows({{0.0}, {1.0}, {3.0}});
  return space;
}

// Every reached route: adjacency, hop bookkeeping, strict descent toward the
// target and containment in the ball of radius d(u,v) around the target.
template <MetricSpace S>
void expect_well_formed(const RouteResult<distance_t<S>>& route, const MetricGraph<distance_t<S>>& g, const S& space,
                        PointId u, PointId v) {
  ASSERT_TRUE(route.reached());
  ASSERT_EQ(route.path.front(), u);
  ASSERT_EQ(route.path.back(), v);
  ASSERT_EQ(route.hop_lengths.size() + 1, route.path.size());
  distance_t<S> sum = ScalarTraits<distance_t<S>>::zero();
  for (std::size_t k = 0; k + 1 < route.path.size(); ++k) {
    EXPECT_TRUE(g.has_edge(route.path[k], route.path[k + 1]));
    EXPECT_EQ(route.hop_lengths[k], space.distance(route.path[k], route.path[k + 1]));
    EXPECT_LT(space.distance(route.path[k + 1], v), space.distance(route.path[k], v));
    EXPECT_LE(space.distance(route.path[k], v), space.distance(u, v));
    sum += route.hop_lengths[k];
  }
  EXPECT_EQ(route.total_length, sum);
}

TEST(IsPnGraph, CompleteGraph) {
  const auto space = testing::random_euclidean(25, 3, 2);
  EXPECT_TRUE(is_pn_graph(build_complete(space), space).holds);
}

TEST(IsPnGraph, CounterexampleGraphs) {
  for (std::uint32_t i = 0; i <= 15; ++i) {
    const auto inst = build_counterexample_graph(i);
    EXPECT_TRUE(is_pn_graph(inst.graph, inst.space).holds) << "i=" << i;
  }
}

TEST(IsPnGraph, LineWithSingleLongEdgeFails) {
  FloatGraph g(3, Directedness::Undirected);
  g.add_edge(0, 2, 3.0);
  const auto verdict = is_pn_graph(g, line013());
  EXPECT_FALSE(verdict.holds);
  ASSERT_TRUE(verdict.witness);
  EXPECT_EQ(*verdict.witness, std::make_pair(PointId{0}, PointId{1}));
}

TEST(IsPnGraph, HspIsNavigableDirectedAndSymmetrized) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto space = testing::random_euclidean(80, 2 + seed % 2, seed);
    const auto hsp = build_hsp(space).graph;
    EXPECT_TRUE(is_pn_graph(hsp, space).holds);
    EXPECT_TRUE(is_pn_graph(symmetrize(hsp), space).holds);
    EXPECT_TRUE(check_lune(hsp, space).holds);
  }
}

TEST(CheckLune, DetectsMissingWitness) {
  // 0 -> 2 only: for the non-arc (0,1) the neighbor 2 is not closer to 0 than 1.
  FloatGraph g(3, Directedness::Directed);
  g.add_edge(0, 2, 3.0);
  g.add_edge(1, 0, 1.0);
  g.add_edge(2, 1, 2.0);
  const auto verdict = check_lune(g, line013());
  EXPECT_FALSE(verdict.holds);
  EXPECT_EQ(*verdict.witness, std::make_pair(PointId{0}, PointId{1}));
}

TEST(ProximityPath, CompleteGraphIsOneHop) {
  const auto space = testing::random_euclidean(12, 2, 9);
  const auto g = build_complete(space);
  for (PointId u = 0; u < space.size(); ++u) {
    for (PointId v = 0; v < space.size(); ++v) {
      if (u == v) continue;
      const auto r = proximity_path(g, space, u, v);
      EXPECT_EQ(r.path, (std::vector<PointId>{u, v}));
      EXPECT_EQ(r.total_length, space.distance(u, v));
    }
  }
}

TEST(ProximityPath, CounterexampleChainIsHarmonic) {
  const auto inst = build_counterexample_graph(10, Rational(1, 2000));
  const auto r = proximity_path(inst.graph, inst.space, 0, inst.space.infinity_id());
  expect_well_formed(r, inst.graph, inst.space, 0, inst.space.infinity_id());
  EXPECT_EQ(r.hop_lengths.size(), 11u);
  EXPECT_EQ(r.total_length, Rational(83711, 27720));
}

TEST(ProximityPath, LocalMinimumWhenNoOutNeighbor) {
  FloatGraph g(3, Directedness::Directed);
  g.add_edge(2, 0, 3.0);
  const auto r = proximity_path(g, line013(), 0, 2);
  EXPECT_EQ(r.status, RouteStatus::LocalMinimum);
  EXPECT_EQ(r.stopped_at(), 0u);
  EXPECT_EQ(r.path, (std::vector<PointId>{0}));
}

TEST(ProximityPath, ArgumentErrors) {
  const auto g = build_complete(line013());
  EXPECT_THROW(proximity_path(g, line013(), 1, 1), std::invalid_argument);
  EXPECT_THROW(proximity_path(g, line013(), 0, 3), std::out_of_range);
}

TEST(ProximityPath, TiesGoToSmallestId) {
  // From 2 toward 3: neighbors 0 and 1 are both at distance 1 from 3.
  const TableSpace space({{0, 2, 2, 1}, {2, 0, 2, 1}, {2, 2, 0, 2}, {1, 1, 2, 0}});
  FloatGraph g(4, Directedness::Directed);
  g.add_edge(2, 1, 2.0);
  g.add_edge(2, 0, 2.0);
  g.add_edge(0, 3, 1.0);
  g.add_edge(1, 3, 1.0);
  EXPECT_EQ(proximity_path(g, space, 2, 3).path, (std::vector<PointId>{2, 0, 3}));
}

TEST(LengthInsideBall, WholePathAndSingleVertex) {
  const auto inst = build_counterexample_graph(6);
  const PointId inf = inst.space.infinity_id();
  const auto r = proximity_path(inst.graph, inst.space, 0, inf);
  EXPECT_EQ(length_inside_ball(r, inst.space, inf, Rational(1), inf), r.total_length);
  EXPECT_EQ(length_inside_ball(r, inst.space, inf, Rational(1, 3), inf), 0);
  EXPECT_EQ(length_inside_ball(r, inst.space, 3, Rational(0), inf), 0);
}

TEST(LengthInsideBall, MembershipFromExactDistances) {
  // Ball of radius 1/3 around f_4 on the path f_0 .. f_4, f_inf holds f_2
  // (1/4 + 2e), f_3 (1/5 + e) and f_4, but not f_1 (1/3 + 3e) or f_inf.
  // Farthest-from-target member is f_2, closest is f_4.
  const Rational eps = default_epsilon(4);
  const auto inst = build_counterexample_graph(4, eps);
  const PointId inf = inst.space.infinity_id();
  const auto r = proximity_path(inst.graph, inst.space, 0, inf);
  EXPECT_EQ(length_inside_ball(r, inst.space, 4, Rational(1, 3), inf), Rational(9, 20) + 2 * eps);
}

TEST(LengthInsideBall, Errors) {
  FloatGraph g(3, Directedness::Directed);
  const auto stuck = proximity_path(g, line013(), 0, 2);
  EXPECT_THROW(length_inside_ball(stuck, line013(), 0, 1.0, 2), std::invalid_argument);
  const auto ok = proximity_path(build_complete(line013()), line013(), 0, 2);
  EXPECT_THROW(length_inside_ball(ok, line013(), 0, -1.0, 2), std::invalid_argument);
  EXPECT_THROW(length_inside_ball(ok, line013(), 0, 1.0, 1), std::invalid_argument);
}

TEST(GreedyStretch, CompleteGraphIsOne) {
  const auto space = testing::random_euclidean(15, 2, 4);
  const auto report = greedy_stretch(build_complete(space), space);
  EXPECT_EQ(report.stretch, 1.0);
  EXPECT_EQ(report.pair_count, 15u * 14u);
}

TEST(GreedyStretch, LineChain) {
  FloatGraph g(3, Directedness::Undirected);
  g.add_edge(0, 1, 1.0);
  g.add_edge(1, 2, 2.0);
  EXPECT_EQ(greedy_stretch(g, line013()).stretch, 1.0);
}

TEST(GreedyStretch, CounterexampleTreeMatchesShortestPaths) {
  // G_i is a tree, so the greedy route is the unique path.
  const auto inst = build_counterexample_graph(10, Rational(1, 2000));
  const auto greedy = greedy_stretch(inst.graph, inst.space, true);
  EXPECT_EQ(greedy.stretch, testing::brute_force_stretch(inst.graph, inst.space));
  EXPECT_GE(greedy.stretch, Rational(83711, 27720));
  ASSERT_TRUE(greedy.pairs);
  const auto& pairs = *greedy.pairs;
  const auto it = std::find_if(pairs.begin(), pairs.end(),
                               [&](const auto& p) { return p.u == 0 && p.v == inst.space.infinity_id(); });
  ASSERT_NE(it, pairs.end());
  EXPECT_EQ(it->ratio, Rational(83711, 27720));
}

TEST(GreedyStretch, RejectsNonNavigable) {
  FloatGraph g(3, Directedness::Undirected);
  g.add_edge(0, 2, 3.0);
  try {
    greedy_stretch(g, line013());
    FAIL() << "expected NotNavigableError";
  } catch (const NotNavigableError& e) {
    EXPECT_EQ(e.source(), 0u);
    EXPECT_EQ(e.target(), 1u);
  }
}

TEST(GreedyRouting, EveryPairReachesOnHsp) {
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    const auto space = testing::random_euclidean(50, 2 + seed % 3, seed);
    const auto g = build_hsp(space).graph;
    for (PointId u = 0; u < space.size(); ++u) {
      for (PointId v = 0; v < space.size(); ++v) {
        if (u != v) expect_well_formed(proximity_path(g, space, u, v), g, space, u, v);
      }
    }
  }
}

TEST(GreedyRouting, HammingHopAndLengthBounds) {
  const auto space = testing::random_hamming(60, 12, 7);
  const auto g = build_hsp(space).graph;
  for (PointId u = 0; u < space.size(); ++u) {
    for (PointId v = 0; v < space.size(); ++v) {
      if (u == v) continue;
      const auto r = proximity_path(g, space, u, v);
      expect_well_formed(r, g, space, u, v);
      const double d = space.distance(u, v);
      EXPECT_LE(static_cast<double>(r.hop_lengths.size()), d);
      EXPECT_LE(r.total_length, 2 * d * d);
    }
  }
}

}  // namespace
}  // namespace pnspan
