#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "mbqc/gf2.hpp"
#include "mbqc/graph.hpp"

namespace mbqc {

/**
 * Strict partial order given by a generating DAG, with the transitive
 * closure cached as successor bitsets.
 */
class PartialOrder {
 public:
  struct Build;

  PartialOrder() = default;

  /** Closure of `relation` on `carrier`; a cycle is reported on failure. */
  static Build from_relation(const VertexSet& carrier, const std::vector<Edge>& relation);
  /** Discrete order on `carrier`. */
  static PartialOrder discrete(const VertexSet& carrier);

  const VertexSet& carrier() const { return carrier_; }
  bool contains(VertexId v) const { return index_.count(v.value) != 0; }
  bool precedes(VertexId a, VertexId b) const;
  VertexSet successors(VertexId v) const;
  VertexSet predecessors(VertexId v) const;

  /** Every (a,b) with a ≺ b, sorted. */
  std::vector<Edge> pairs() const;
  /** Transitive reduction, sorted. */
  std::vector<Edge> covering_relation() const;
  const std::vector<Edge>& generators() const { return generators_; }

  /** True when every pair of `other` is also a pair of this order. */
  bool extends(const PartialOrder& other) const;
  /** Restriction to `keep` ∩ carrier. */
  PartialOrder restricted(const VertexSet& keep) const;
  /**
   * Adds a fresh element z with the given strict predecessors and
   * successors. The caller guarantees that no successor precedes or equals
   * a predecessor; the result is then the transitive closure.
   */
  PartialOrder with_element(VertexId z, const VertexSet& preds, const VertexSet& succs) const;

  friend bool operator==(const PartialOrder& a, const PartialOrder& b);

 private:
  std::size_t index(VertexId v) const;

  VertexSet carrier_;
  std::vector<VertexId> elems_;
  std::unordered_map<std::uint32_t, std::size_t> index_;
  std::vector<gf2::BitVector> succ_;
  std::vector<Edge> generators_;
};

struct PartialOrder::Build {
  std::optional<PartialOrder> order;
  /** Vertices of a directed cycle v0 → v1 → … → v0 when the relation is cyclic. */
  std::vector<VertexId> cycle;
};

/**
 * Kahn-style check; returns a cycle or an empty vector when `relation` is
 * acyclic on `carrier`. Ties in the queue go to the smallest id.
 */
std::vector<VertexId> find_cycle(const VertexSet& carrier, const std::vector<Edge>& relation);

}  // namespace mbqc
