#include <gtest/gtest.h>

#include <random>

#include "mbqc/errors.hpp"
#include "mbqc/flow.hpp"
#include "support/instances.hpp"
#include "support/oracle.hpp"

using namespace mbqc;

namespace {

instances::RandomParams params() {
  instances::RandomParams p;
  p.min_vertices = 1;
  p.max_vertices = 8;
  return p;
}

CorrectionFunction random_correction(std::mt19937_64& rng, const LabelledOpenGraph& g) {
  CorrectionFunction c;
  for (VertexId v : g.non_outputs()) c.set(v, instances::random_subset(rng, g.non_inputs()));
  return c;
}

}  // namespace

TEST(FlowMatrices, DemandRowsMatchMeasurementEffects) {
  // Row u of M applied to a set A is the bit that decides whether A disturbs
  // u's measurement; row u of N is the bit that forces u before the corrected
  // vertex. Both are written out here directly from the labels.
  std::mt19937_64 rng(30);
  for (int t = 0; t < 300; ++t) {
    LabelledOpenGraph g = instances::random_graph(rng, params());
    gf2::Gf2Matrix M = flow_demand_matrix(g);
    gf2::Gf2Matrix N = order_demand_matrix(g);
    ASSERT_EQ(M.row_labels(), g.non_outputs().items());
    ASSERT_EQ(M.col_labels(), g.non_inputs().items());
    ASSERT_EQ(N.row_labels(), g.non_outputs().items());
    VertexSet A = instances::random_subset(rng, g.non_inputs());
    gf2::Gf2Vector a = gf2::Gf2Vector::indicator(g.non_inputs().items(), A);
    VertexSet odd = odd_neighbourhood(g, A);
    gf2::Gf2Vector Ma = gf2::mat_vec(M, a);
    gf2::Gf2Vector Na = gf2::mat_vec(N, a);
    for (std::size_t r = 0; r < M.rows(); ++r) {
      VertexId u = M.row_labels()[r];
      MeasLabel l = g.measurement(u);
      bool in_a = A.contains(u), in_odd = odd.contains(u);
      bool m = is_x_like(l) ? (in_odd != (l == MeasLabel::Y && in_a)) : in_a;
      bool n = false;
      if (l == MeasLabel::XY) n = in_a;
      if (l == MeasLabel::YZ) n = in_odd;
      if (l == MeasLabel::XZ) n = in_odd != in_a;
      EXPECT_EQ(Ma.bits.get(r), m) << "u=" << u << " label " << l;
      EXPECT_EQ(Na.bits.get(r), n) << "u=" << u << " label " << l;
    }
  }
}

TEST(FlowMatrices, ExtendedAdjacencyHasSelfLoopsOnYAndXZ) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    LabelledOpenGraph g = instances::random_graph(rng, params());
    gf2::Gf2Matrix A = extended_adjacency(g);
    const auto& ids = g.vertices().items();
    for (std::size_t i = 0; i < ids.size(); ++i) {
      auto l = g.label(ids[i]);
      bool loop = l && (*l == MeasLabel::Y || *l == MeasLabel::XZ);
      EXPECT_EQ(A.get(i, i), loop);
      for (std::size_t j = 0; j < ids.size(); ++j) {
        if (i != j) EXPECT_EQ(A.get(i, j), g.adjacent(ids[i], ids[j]));
      }
    }
  }
}

TEST(FlowMatrices, CorrectionMatrixRoundTrip) {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 100; ++t) {
    LabelledOpenGraph g = instances::random_graph(rng, params());
    CorrectionFunction c = random_correction(rng, g);
    gf2::Gf2Matrix C = correction_matrix(g, c);
    EXPECT_EQ(C.row_labels(), g.non_inputs().items());
    EXPECT_EQ(C.col_labels(), g.non_outputs().items());
    EXPECT_EQ(correction_function_from_matrix(C), c);
  }
}

TEST(FlowMatrices, IllFormedCorrectionThrows) {
  GraphBuilder b;
  b.add_vertex(VertexId(0), MeasLabel::XY, true);
  b.add_vertex(VertexId(1), std::nullopt, false, true);
  b.add_edge(VertexId(0), VertexId(1));
  LabelledOpenGraph g = b.build();
  EXPECT_THROW(correction_matrix(g, CorrectionFunction{{VertexId(0), {VertexId(0)}}}), InvalidArgument);
  EXPECT_THROW(correction_matrix(g, CorrectionFunction{}), InvalidArgument);
  EXPECT_NO_THROW(correction_matrix(g, CorrectionFunction{{VertexId(0), {VertexId(1)}}}));
}

TEST(FlowMatrices, MaxFocusSupportIsZeroRowsOfMa) {
  std::mt19937_64 rng(33);
  for (int t = 0; t < 300; ++t) {
    LabelledOpenGraph g = instances::random_graph(rng, params());
    oracle::Small s = oracle::from_graph(g);
    VertexSet A = instances::random_subset(rng, g.non_inputs());
    VertexSet support = max_focus_support(g, A);
    oracle::Mask a = oracle::to_mask(s, A);
    for (VertexId u : g.non_outputs()) {
      oracle::Mask single = oracle::to_mask(s, VertexSet{u});
      EXPECT_EQ(support.contains(u), oracle::focused(s, a, single)) << "u=" << u;
    }
    EXPECT_EQ(is_focused_set(g, A, support), true);
  }
}
