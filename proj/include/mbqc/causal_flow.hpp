#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "mbqc/flow.hpp"
#include "mbqc/graph.hpp"
#include "mbqc/partial_order.hpp"

namespace mbqc {

/** Successor function on the non-outputs plus a strict order over all of V. */
struct CausalFlowCert {
  std::map<VertexId, VertexId> successor;
  PartialOrder order;
};

struct CausalConditionReport {
  /** failures[k] lists witnesses for condition C(k+1). */
  std::array<std::vector<ConditionWitness>, 4> failures;

  bool ok() const;
  bool passes(int condition) const { return failures.at(condition - 1).empty(); }
};

/** Throws UnsupportedLabel outside the {XY, YZ} fragment. */
void require_causal_fragment(const LabelledOpenGraph& g);

/**
 * Literal C1–C4 check. The successor map must be defined exactly on V∖O
 * with values in V∖I; anything else throws InvalidArgument.
 */
CausalConditionReport verify_extended_causal_flow(const LabelledOpenGraph& g, const CausalFlowCert& cert);

/** Backward layering; candidate successors are tried in ascending id order. */
std::optional<CausalFlowCert> find_extended_causal_flow(const LabelledOpenGraph& g);

/** Least order over V satisfying C1 and C4 for `successor`, or empty when cyclic. */
std::optional<PartialOrder> causal_induced_order(
    const LabelledOpenGraph& g, const std::map<VertexId, VertexId>& successor);

/** First pair (v,w) ∈ S1×S2 with w ≺ v or v = w, if any. */
std::optional<Edge> extension_obstruction(const PartialOrder& order, const VertexSet& S1, const VertexSet& S2);

/** Closure of order ∪ S1×{z} ∪ {z}×S2 when it is strict. */
std::optional<PartialOrder> extend_order(
    const PartialOrder& order, const VertexSet& S1, const VertexSet& S2, VertexId z);

}  // namespace mbqc
