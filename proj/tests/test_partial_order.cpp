#include <gtest/gtest.h>

#include <random>

#include "mbqc/errors.hpp"
#include "mbqc/partial_order.hpp"

using namespace mbqc;

namespace {

VertexSet range_set(std::uint32_t n) {
  std::vector<VertexId> v;
  for (std::uint32_t i = 0; i < n; ++i) v.push_back(VertexId(i));
  return VertexSet::from_sorted(v);
}

/** Random DAG relation: edges only from smaller to larger position in a shuffled order. */
std::vector<Edge> random_dag(std::mt19937_64& rng, std::uint32_t n, double p) {
  std::vector<std::uint32_t> perm(n);
  for (std::uint32_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution bit(p);
  std::vector<Edge> out;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (bit(rng)) out.emplace_back(VertexId(perm[i]), VertexId(perm[j]));
    }
  }
  return out;
}

std::vector<std::vector<bool>> warshall(std::uint32_t n, const std::vector<Edge>& rel) {
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (auto [a, b] : rel) r[a.value][b.value] = true;
  for (std::uint32_t k = 0; k < n; ++k) {
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) {
        if (r[i][k] && r[k][j]) r[i][j] = true;
      }
    }
  }
  return r;
}

}  // namespace

TEST(PartialOrder, ClosureMatchesWarshall) {
  std::mt19937_64 rng(20);
  for (int t = 0; t < 100; ++t) {
    std::uint32_t n = 1 + rng() % 10;
    auto rel = random_dag(rng, n, 0.3);
    auto built = PartialOrder::from_relation(range_set(n), rel);
    ASSERT_TRUE(built.order.has_value());
    auto ref = warshall(n, rel);
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) EXPECT_EQ(built.order->precedes(VertexId(i), VertexId(j)), ref[i][j]);
    }
    auto cover = built.order->covering_relation();
    auto again = PartialOrder::from_relation(range_set(n), cover);
    EXPECT_EQ(*again.order, *built.order);
    EXPECT_TRUE(built.order->extends(PartialOrder::discrete(range_set(n))));
  }
}

TEST(PartialOrder, CycleIsReportedAndGenuine) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 100; ++t) {
    std::uint32_t n = 2 + rng() % 8;
    auto rel = random_dag(rng, n, 0.3);
    auto [a, b] = std::pair{VertexId(rng() % n), VertexId(rng() % n)};
    if (a == b) continue;
    rel.emplace_back(a, b);
    rel.emplace_back(b, a);
    auto built = PartialOrder::from_relation(range_set(n), rel);
    EXPECT_FALSE(built.order.has_value());
    const auto& cyc = built.cycle;
    ASSERT_GE(cyc.size(), 2u);
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Edge e{cyc[i], cyc[(i + 1) % cyc.size()]};
      EXPECT_NE(std::find(rel.begin(), rel.end(), e), rel.end());
    }
    EXPECT_FALSE(find_cycle(range_set(n), rel).empty());
  }
}

TEST(PartialOrder, SelfLoopIsACycle) {
  auto built = PartialOrder::from_relation(range_set(2), {{VertexId(1), VertexId(1)}});
  EXPECT_FALSE(built.order.has_value());
  EXPECT_EQ(built.cycle, std::vector<VertexId>{VertexId(1)});
}

TEST(PartialOrder, RelationOutsideCarrierThrows) {
  EXPECT_THROW(PartialOrder::from_relation(range_set(2), {{VertexId(0), VertexId(5)}}), InvalidArgument);
}

TEST(PartialOrder, RestrictionAndWithElement) {
  auto chain = PartialOrder::from_relation(
      range_set(4), {{VertexId(0), VertexId(1)}, {VertexId(1), VertexId(2)}, {VertexId(2), VertexId(3)}});
  PartialOrder r = chain.order->restricted(VertexSet{VertexId(0), VertexId(3)});
  EXPECT_EQ(r.carrier(), (VertexSet{VertexId(0), VertexId(3)}));
  EXPECT_TRUE(r.precedes(VertexId(0), VertexId(3)));

  PartialOrder w = chain.order->with_element(VertexId(9), VertexSet{VertexId(1)}, VertexSet{VertexId(2)});
  EXPECT_TRUE(w.precedes(VertexId(0), VertexId(9)));
  EXPECT_TRUE(w.precedes(VertexId(9), VertexId(3)));
  EXPECT_FALSE(w.precedes(VertexId(9), VertexId(1)));
  EXPECT_TRUE(w.extends(*chain.order));
  EXPECT_EQ(w.successors(VertexId(9)), (VertexSet{VertexId(2), VertexId(3)}));
  EXPECT_EQ(w.predecessors(VertexId(9)), (VertexSet{VertexId(0), VertexId(1)}));
  EXPECT_THROW(w.with_element(VertexId(9), {}, {}), InvalidArgument);
}

TEST(PartialOrder, PairsAreTheClosure) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 50; ++t) {
    std::uint32_t n = 1 + rng() % 8;
    auto built = PartialOrder::from_relation(range_set(n), random_dag(rng, n, 0.4));
    std::size_t count = 0;
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) count += built.order->precedes(VertexId(i), VertexId(j));
    }
    EXPECT_EQ(built.order->pairs().size(), count);
    for (auto [a, b] : built.order->pairs()) EXPECT_FALSE(built.order->precedes(b, a));
  }
}
