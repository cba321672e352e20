#include <gtest/gtest.h>

#include <random>

#include "mbqc/errors.hpp"
#include "mbqc/rewrite.hpp"
#include "support/instances.hpp"
#include "support/oracle.hpp"

using namespace mbqc;

namespace {

instances::RandomParams square_params() {
  instances::RandomParams p;
  p.min_vertices = 3;
  p.max_vertices = 7;
  p.square = true;
  p.xy_bias = 0.6;
  return p;
}

VertexSet splittable(const LabelledOpenGraph& g) {
  return g.non_outputs_where([](MeasLabel l) { return l == MeasLabel::XY; }) - g.inputs();
}

SplitSpec make_spec(const LabelledOpenGraph& g, VertexId x, VertexSet W) {
  SplitSpec s;
  s.x = x;
  s.W = std::move(W);
  s.x1 = g.fresh_id();
  s.x2 = VertexId(s.x1.value + 1);
  return s;
}

}  // namespace

TEST(SplitGraph, DirectFormula) {
  std::mt19937_64 rng(80);
  int checked = 0;
  while (checked < 300) {
    LabelledOpenGraph g = instances::random_graph(rng, square_params());
    VertexSet xs = splittable(g);
    if (xs.empty()) continue;
    VertexId x = instances::random_element(rng, xs);
    SplitSpec s = make_spec(g, x, instances::random_subset(rng, g.vertices() - VertexSet{x}));
    LabelledOpenGraph h = split_graph(g, s);
    EXPECT_EQ(h.size(), g.size() + 2);
    EXPECT_EQ(h.measurement(s.x1), MeasLabel::XY);
    EXPECT_EQ(h.measurement(s.x2), MeasLabel::XY);
    EXPECT_TRUE(h.adjacent(x, s.x1));
    EXPECT_TRUE(h.adjacent(s.x1, s.x2));
    for (VertexId w : g.vertices()) {
      if (w == x) continue;
      EXPECT_EQ(h.adjacent(x, w), g.adjacent(x, w) != s.W.contains(w));
      EXPECT_EQ(h.adjacent(s.x2, w), s.W.contains(w));
      EXPECT_FALSE(h.adjacent(s.x1, w));
    }
    ++checked;
  }
}

TEST(VertexSplit, SquareCaseAcceptsExactlyWhenAFlowExists) {
  // vertex_split also cross-checks the composite graph and the V-verdict
  // internally and throws on disagreement.
  std::mt19937_64 rng(81);
  int applied = 0, rejected = 0, checked = 0;
  while (checked < 800) {
    auto [g, cert] = instances::random_with_flow(rng, square_params());
    VertexSet xs = splittable(g);
    if (xs.empty()) continue;
    VertexId x = instances::random_element(rng, xs);
    SplitSpec s = make_spec(g, x, instances::random_subset(rng, g.vertices() - VertexSet{x}));
    PauliReport r = vertex_split(g, cert, s);
    EXPECT_EQ(r.new_graph, split_graph(g, s));
    ASSERT_EQ(r.applied, instances::oracle_has_flow(r.new_graph)) << checked;
    if (r.applied) {
      EXPECT_TRUE(instances::oracle_accepts(r.new_graph, *r.new_cert));
      ++applied;
    } else {
      EXPECT_EQ(r.reason->condition.front(), 'V');
      EXPECT_EQ(evaluate_split(g, cert, s).failure.has_value(), true);
      ++rejected;
    }
    ++checked;
  }
  EXPECT_GT(applied, 100);
  EXPECT_GT(rejected, 50);
}

TEST(VertexSplit, EmptyNeighbourSetIsRejectedInTheSquareCase) {
  // With |I| = |O| the focused flow has empty K, and |c(x) ∩ ∅| is even,
  // so x2 never gets a correction set.
  std::mt19937_64 rng(82);
  int checked = 0;
  while (checked < 300) {
    auto [g, cert] = instances::random_with_flow(rng, square_params());
    VertexSet xs = splittable(g);
    if (xs.empty()) continue;
    PauliReport r = vertex_split(g, cert, make_spec(g, instances::random_element(rng, xs), {}));
    EXPECT_FALSE(r.applied);
    EXPECT_EQ(r.reason->condition, "V4");
    EXPECT_FALSE(instances::oracle_has_flow(r.new_graph));
    ++checked;
  }
}

TEST(VertexSplit, PreconditionsThrow) {
  std::mt19937_64 rng(83);
  auto [g, cert] = instances::random_with_flow(rng, square_params());
  VertexId out = *g.outputs().begin();
  EXPECT_THROW(vertex_split(g, cert, make_spec(g, out, {})), InvalidArgument);
  instances::RandomParams p = square_params();
  p.square = false;
  for (int t = 0; t < 200; ++t) {
    auto [h, hc] = instances::random_with_flow(rng, p);
    VertexSet xs = splittable(h);
    if (h.inputs().size() == h.outputs().size() || xs.empty()) continue;
    EXPECT_THROW(vertex_split(h, hc, make_spec(h, *xs.begin(), {})), InvalidArgument);
    break;
  }
}

TEST(NeighbourUnfuse, SquareCaseAcceptsExactlyWhenAFlowExistsAndIsSymmetric) {
  std::mt19937_64 rng(84);
  int applied = 0, rejected = 0, checked = 0;
  while (checked < 600) {
    auto [g, cert] = instances::random_with_flow(rng, square_params());
    std::vector<Edge> pairs;
    for (auto [a, b] : g.edges()) {
      auto xy = [&](VertexId v) { return !g.is_output(v) && g.measurement(v) == MeasLabel::XY; };
      if (xy(a) && xy(b) && !g.is_input(a) && !g.is_input(b)) pairs.emplace_back(a, b);
    }
    if (pairs.empty()) continue;
    auto [a, b] = pairs[rng() % pairs.size()];
    VertexId x1 = g.fresh_id(), x2(x1.value + 1);
    PauliReport r = neighbour_unfuse(g, cert, a, b, x1, x2);
    PauliReport mirrored = neighbour_unfuse(g, cert, b, a, x1, x2);
    EXPECT_EQ(r.applied, mirrored.applied);
    ASSERT_EQ(r.applied, instances::oracle_has_flow(r.new_graph)) << checked;
    if (r.applied) {
      EXPECT_TRUE(instances::oracle_accepts(r.new_graph, *r.new_cert));
      ++applied;
    } else {
      EXPECT_EQ(r.reason->condition.front(), 'U');
      ++rejected;
    }
    ++checked;
  }
  EXPECT_GT(applied, 50);
  EXPECT_GT(rejected, 20);
}

TEST(NeighbourUnfuse, RequiresAdjacentXyPair) {
  std::mt19937_64 rng(85);
  for (int t = 0; t < 100; ++t) {
    auto [g, cert] = instances::random_with_flow(rng, square_params());
    VertexSet xs = splittable(g);
    if (xs.size() < 2) continue;
    VertexId a = xs.items()[0], b = xs.items()[1];
    if (g.adjacent(a, b)) continue;
    EXPECT_THROW(neighbour_unfuse(g, cert, a, b, g.fresh_id(), VertexId(g.fresh_id().value + 1)), InvalidArgument);
    return;
  }
}
