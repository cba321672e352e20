#include <gtest/gtest.h>

#include <random>

#include "mbqc/causal_flow.hpp"
#include "mbqc/errors.hpp"
#include "mbqc/generators.hpp"
#include "support/instances.hpp"
#include "support/oracle.hpp"

using namespace mbqc;

namespace {

instances::RandomParams causal_params(bool square = false) {
  instances::RandomParams p;
  p.min_vertices = 2;
  p.max_vertices = 7;
  p.labels = {MeasLabel::XY, MeasLabel::YZ};
  p.square = square;
  return p;
}

std::map<VertexId, VertexId> successor_map(const oracle::Small& s, const std::vector<int>& c) {
  std::map<VertexId, VertexId> out;
  for (int u = 0; u < s.n; ++u) {
    if (s.lab[u] != oracle::NONE) out[s.ids[u]] = s.ids[c[u]];
  }
  return out;
}

}  // namespace

TEST(CausalFlow, FinderAgreesWithEnumeration) {
  std::mt19937_64 rng(50);
  int found = 0;
  for (int t = 0; t < 3000; ++t) {
    LabelledOpenGraph g = instances::random_graph(rng, causal_params());
    oracle::Small s = oracle::from_graph(g);
    auto flows = oracle::causal_flows(s);
    auto cert = find_extended_causal_flow(g);
    ASSERT_EQ(cert.has_value(), !flows.empty()) << "trial " << t;
    if (cert) {
      ++found;
      EXPECT_TRUE(verify_extended_causal_flow(g, *cert).ok());
      EXPECT_EQ(cert->order.carrier(), g.vertices());
    }
  }
  EXPECT_GT(found, 300);
}

TEST(CausalFlow, EveryEnumeratedFlowVerifiesUnderItsLeastOrder) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 800; ++t) {
    LabelledOpenGraph g = instances::random_graph(rng, causal_params());
    oracle::Small s = oracle::from_graph(g);
    for (const auto& c : oracle::causal_flows(s)) {
      auto succ = successor_map(s, c);
      auto order = causal_induced_order(g, succ);
      ASSERT_TRUE(order.has_value());
      EXPECT_TRUE(verify_extended_causal_flow(g, {succ, *order}).ok());
    }
  }
}

TEST(CausalFlow, SquareXyGraphsHaveAtMostOneFlow) {
  std::mt19937_64 rng(52);
  instances::RandomParams p = causal_params(true);
  p.labels = {MeasLabel::XY};
  p.xy_bias = 1.0;
  for (int t = 0; t < 1500; ++t) {
    LabelledOpenGraph g = instances::random_graph(rng, p);
    EXPECT_LE(oracle::causal_flows(oracle::from_graph(g)).size(), 1u);
  }
}

TEST(CausalFlow, CircuitGraphsHaveFlow) {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 50; ++t) {
    CircuitGraphParams p;
    p.wires = 1 + rng() % 5;
    p.fresh_wires = rng() % 3;
    p.steps = rng() % 20;
    LabelledOpenGraph g = circuit_graph(rng, p);
    EXPECT_EQ(g.outputs().size(), p.wires + p.fresh_wires);
    EXPECT_EQ(g.inputs().size(), p.wires);
    auto cert = find_extended_causal_flow(g);
    ASSERT_TRUE(cert.has_value());
    EXPECT_TRUE(verify_extended_causal_flow(g, *cert).ok());
  }
}

TEST(CausalFlow, ConditionFailuresAreWitnessed) {
  // i - a - o with a wrong order: a must precede o.
  GraphBuilder b;
  b.add_vertex(VertexId(0), MeasLabel::XY, true);
  b.add_vertex(VertexId(1), MeasLabel::XY);
  b.add_vertex(VertexId(2), std::nullopt, false, true);
  b.add_edge(VertexId(0), VertexId(1));
  b.add_edge(VertexId(1), VertexId(2));
  LabelledOpenGraph g = b.build();
  CausalFlowCert bad{{{VertexId(0), VertexId(1)}, {VertexId(1), VertexId(2)}}, PartialOrder::discrete(g.vertices())};
  auto rep = verify_extended_causal_flow(g, bad);
  EXPECT_FALSE(rep.passes(1));
  EXPECT_TRUE(rep.passes(2));
  EXPECT_FALSE(rep.passes(4));
  CausalFlowCert self{{{VertexId(0), VertexId(1)}, {VertexId(1), VertexId(1)}}, PartialOrder::discrete(g.vertices())};
  EXPECT_FALSE(verify_extended_causal_flow(g, self).passes(2));
  CausalFlowCert to_input{{{VertexId(0), VertexId(0)}, {VertexId(1), VertexId(2)}}, PartialOrder::discrete(g.vertices())};
  EXPECT_THROW(verify_extended_causal_flow(g, to_input), InvalidArgument);
}

TEST(CausalFlow, RejectsLabelsOutsideFragment) {
  GraphBuilder b;
  b.add_vertex(VertexId(0), MeasLabel::XZ);
  b.add_vertex(VertexId(1), std::nullopt, false, true);
  b.add_edge(VertexId(0), VertexId(1));
  EXPECT_THROW(find_extended_causal_flow(b.build()), UnsupportedLabel);
}

TEST(CausalFlow, ExtensionObstruction) {
  auto chain = *PartialOrder::from_relation(
                    VertexSet{VertexId(0), VertexId(1), VertexId(2)},
                    {{VertexId(0), VertexId(1)}, {VertexId(1), VertexId(2)}})
                    .order;
  EXPECT_FALSE(extension_obstruction(chain, {VertexId(0)}, {VertexId(2)}).has_value());
  EXPECT_EQ(extension_obstruction(chain, {VertexId(2)}, {VertexId(0)}), (Edge{VertexId(2), VertexId(0)}));
  EXPECT_EQ(extension_obstruction(chain, {VertexId(1)}, {VertexId(1)}), (Edge{VertexId(1), VertexId(1)}));
  auto ext = extend_order(chain, {VertexId(0)}, {VertexId(1)}, VertexId(9));
  ASSERT_TRUE(ext.has_value());
  EXPECT_TRUE(ext->precedes(VertexId(9), VertexId(2)));
  EXPECT_FALSE(extend_order(chain, {VertexId(1)}, {VertexId(0)}, VertexId(9)).has_value());
}
