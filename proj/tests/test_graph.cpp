#include <gtest/gtest.h>

#include <random>

#include "mbqc/errors.hpp"
#include "mbqc/graph.hpp"
#include "support/instances.hpp"
#include "support/oracle.hpp"

using namespace mbqc;

namespace {

LabelledOpenGraph random_plain(std::mt19937_64& rng, int max_vertices = 9) {
  instances::RandomParams p;
  p.min_vertices = 2;
  p.max_vertices = max_vertices;
  return instances::random_graph(rng, p);
}

/** Brute-force local complement on bitmasks. */
std::vector<oracle::Mask> lc_masks(std::vector<oracle::Mask> adj, int u) {
  oracle::Mask nu = adj[u];
  for (std::size_t a = 0; a < adj.size(); ++a) {
    if (!oracle::has(nu, static_cast<int>(a))) continue;
    adj[a] ^= nu & ~(oracle::Mask{1} << a);
  }
  return adj;
}

}  // namespace

TEST(VertexSet, SetAlgebra) {
  VertexSet a{VertexId(1), VertexId(3), VertexId(5)};
  VertexSet b{VertexId(3), VertexId(4)};
  EXPECT_EQ(a ^ b, (VertexSet{VertexId(1), VertexId(4), VertexId(5)}));
  EXPECT_EQ(a & b, VertexSet{VertexId(3)});
  EXPECT_EQ(a - b, (VertexSet{VertexId(1), VertexId(5)}));
  EXPECT_EQ((a | b).size(), 4u);
  EXPECT_EQ(a.intersection_size(b), 1u);
  EXPECT_TRUE(a.odd_intersection(b));
  EXPECT_TRUE((a & b).is_subset_of(a));
  VertexSet c = VertexSet::from_unsorted({VertexId(5), VertexId(1), VertexId(5)});
  EXPECT_EQ(c, (VertexSet{VertexId(1), VertexId(5)}));
  c.toggle(VertexId(1));
  c.toggle(VertexId(2));
  EXPECT_EQ(c, (VertexSet{VertexId(2), VertexId(5)}));
}

TEST(Builder, RejectsInvalidGraphs) {
  {
    GraphBuilder b;
    b.add_vertex(VertexId(0), MeasLabel::XY, false, true);
    EXPECT_THROW(b.build(), InvalidArgument);
  }
  {
    GraphBuilder b;
    b.add_vertex(VertexId(0), std::nullopt);
    EXPECT_THROW(b.build(), InvalidArgument);
  }
  {
    GraphBuilder b;
    b.add_vertex(VertexId(0), MeasLabel::XY);
    b.add_edge(VertexId(0), VertexId(0));
    EXPECT_THROW(b.build(), InvalidArgument);
  }
  {
    GraphBuilder b;
    b.add_vertex(VertexId(0), MeasLabel::XY);
    b.add_vertex(VertexId(1), std::nullopt, false, true);
    b.add_edge(VertexId(0), VertexId(1));
    b.add_edge(VertexId(1), VertexId(0));
    EXPECT_THROW(b.build(), InvalidArgument);
  }
  {
    GraphBuilder b;
    b.add_vertex(VertexId(0), MeasLabel::XY);
    b.add_edge(VertexId(0), VertexId(7));
    EXPECT_THROW(b.build(), InvalidArgument);
  }
}

TEST(Graph, InputOutputOverlapAndDerivedSets) {
  GraphBuilder b;
  b.add_vertex(VertexId(0), std::nullopt, true, true);
  b.add_vertex(VertexId(1), MeasLabel::YZ, true, false);
  b.add_vertex(VertexId(2), std::nullopt, false, true);
  b.add_edge(VertexId(1), VertexId(2));
  LabelledOpenGraph g = b.build();
  EXPECT_EQ(g.non_outputs(), VertexSet{VertexId(1)});
  EXPECT_EQ(g.non_inputs(), VertexSet{VertexId(2)});
  EXPECT_FALSE(g.label(VertexId(0)).has_value());
  EXPECT_THROW(g.measurement(VertexId(0)), InvalidArgument);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_GE(g.fresh_id().value, 3u);
}

TEST(OddNeighbourhood, MatchesMaskOracleAndIsLinear) {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 300; ++t) {
    LabelledOpenGraph g = random_plain(rng);
    oracle::Small s = oracle::from_graph(g);
    VertexSet A = instances::random_subset(rng, g.vertices());
    VertexSet B = instances::random_subset(rng, g.vertices());
    EXPECT_EQ(oracle::to_mask(s, odd_neighbourhood(g, A)), oracle::odd(s, oracle::to_mask(s, A)));
    EXPECT_EQ(odd_neighbourhood(g, A ^ B), odd_neighbourhood(g, A) ^ odd_neighbourhood(g, B));
    EXPECT_EQ(closed_odd_neighbourhood(g, A), odd_neighbourhood(g, A) ^ A);
  }
}

TEST(LocalComplement, MatchesMaskOracleAndIsInvolution) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    LabelledOpenGraph g = random_plain(rng);
    VertexId u = instances::random_element(rng, g.vertices());
    LabelledOpenGraph h = local_complement(g, u);
    oracle::Small s = oracle::from_graph(g);
    int ui = static_cast<int>(std::find(s.ids.begin(), s.ids.end(), u) - s.ids.begin());
    EXPECT_EQ(oracle::from_graph(h).adj, lc_masks(s.adj, ui));
    EXPECT_EQ(local_complement(h, u), g);
  }
}

TEST(Pivot, EqualsTripleLocalComplementBothWays) {
  std::mt19937_64 rng(12);
  int checked = 0;
  while (checked < 300) {
    LabelledOpenGraph g = random_plain(rng);
    auto edges = g.edges();
    if (edges.empty()) continue;
    auto [u, v] = edges[rng() % edges.size()];
    LabelledOpenGraph p = pivot(g, u, v);
    EXPECT_EQ(p, local_complement(local_complement(local_complement(g, u), v), u));
    EXPECT_EQ(p, local_complement(local_complement(local_complement(g, v), u), v));
    EXPECT_EQ(pivot(g, v, u), p);
    EXPECT_EQ(pivot(p, u, v), g);
    EXPECT_TRUE(p.adjacent(u, v));
    ++checked;
  }
}

TEST(Pivot, ClosedOddNeighbourhoodTransport) {
  // After pivoting, A' = A Δ ({u,v} ∩ Codd(A)) has Codd_{G∧uv}(A') = Codd_G(A).
  std::mt19937_64 rng(13);
  int checked = 0;
  while (checked < 500) {
    LabelledOpenGraph g = random_plain(rng);
    auto edges = g.edges();
    if (edges.empty()) continue;
    auto [u, v] = edges[rng() % edges.size()];
    LabelledOpenGraph p = pivot(g, u, v);
    VertexSet A = instances::random_subset(rng, g.vertices());
    VertexSet A2 = A ^ (VertexSet{u, v} & closed_odd_neighbourhood(g, A));
    EXPECT_EQ(closed_odd_neighbourhood(p, A2), closed_odd_neighbourhood(g, A));
    ++checked;
  }
}

TEST(Pivot, RequiresEdge) {
  GraphBuilder b;
  b.add_vertex(VertexId(0), MeasLabel::XY);
  b.add_vertex(VertexId(1), MeasLabel::XY);
  EXPECT_THROW(pivot(b.build(), VertexId(0), VertexId(1)), InvalidArgument);
}

TEST(InsertRemove, RoundTrip) {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 200; ++t) {
    LabelledOpenGraph g = random_plain(rng);
    VertexId z = g.fresh_id();
    VertexSet S = instances::random_subset(rng, g.vertices());
    LabelledOpenGraph h = insert_vertex(g, z, S, MeasLabel::YZ, "z");
    EXPECT_EQ(h.neighbours(z), S);
    EXPECT_EQ(h.measurement(z), MeasLabel::YZ);
    EXPECT_EQ(h.find_by_name("z"), z);
    EXPECT_GT(h.fresh_id(), z);
    EXPECT_EQ(remove_vertex(h, z), g);
    EXPECT_THROW(insert_vertex(h, z, {}, MeasLabel::YZ), InvalidArgument);
  }
}

TEST(Relabel, ChangesOnlyTheLabel) {
  GraphBuilder b;
  b.add_vertex(VertexId(0), MeasLabel::XY);
  b.add_vertex(VertexId(1), std::nullopt, false, true);
  b.add_edge(VertexId(0), VertexId(1));
  LabelledOpenGraph g = b.build();
  LabelledOpenGraph h = relabel(g, VertexId(0), MeasLabel::Z);
  EXPECT_EQ(h.measurement(VertexId(0)), MeasLabel::Z);
  EXPECT_EQ(h.edges(), g.edges());
  EXPECT_THROW(relabel(g, VertexId(1), MeasLabel::X), InvalidArgument);
  EXPECT_EQ(toggle_edges(g, {{VertexId(0), VertexId(1)}}).edge_count(), 0u);
}

TEST(Labels, ParseAndClassify) {
  for (MeasLabel l : kAllLabels) EXPECT_EQ(parse_label(to_string(l)), l);
  EXPECT_FALSE(parse_label("XQ").has_value());
  EXPECT_TRUE(is_x_like(MeasLabel::Y));
  EXPECT_TRUE(is_z_like(MeasLabel::XZ));
  EXPECT_TRUE(is_planar(MeasLabel::YZ));
  EXPECT_TRUE(is_pauli(MeasLabel::X));
}
