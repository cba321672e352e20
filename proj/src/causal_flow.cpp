#include "mbqc/causal_flow.hpp"

#include <string>

#include "mbqc/errors.hpp"

namespace mbqc {

bool CausalConditionReport::ok() const {
  for (const auto& f : failures) {
    if (!f.empty()) return false;
  }
  return true;
}

void require_causal_fragment(const LabelledOpenGraph& g) {
  for (VertexId v : g.non_outputs()) {
    MeasLabel l = g.measurement(v);
    if (l != MeasLabel::XY && l != MeasLabel::YZ) {
      throw UnsupportedLabel(
          "extended causal flow needs XY or YZ labels, vertex " + std::to_string(v.value) +
          " is " + std::string(to_string(l)));
    }
  }
}

namespace {

void check_successor_map(const LabelledOpenGraph& g, const std::map<VertexId, VertexId>& successor) {
  VertexSet domain;
  for (const auto& [u, v] : successor) {
    domain.insert(u);
    if (!g.contains(v)) {
      throw InvalidArgument(
          "successor of " + std::to_string(u.value) + " is unknown vertex " +
          std::to_string(v.value));
    }
    if (g.is_input(v)) {
      throw InvalidArgument(
          "successor of " + std::to_string(u.value) + " is input " + std::to_string(v.value));
    }
  }
  if (domain != g.non_outputs()) {
    throw InvalidArgument("successor map domain differs from the non-outputs");
  }
}

}  // namespace

CausalConditionReport verify_extended_causal_flow(const LabelledOpenGraph& g, const CausalFlowCert& cert) {
  require_causal_fragment(g);
  check_successor_map(g, cert.successor);
  CausalConditionReport report;
  const PartialOrder& order = cert.order;
  for (const auto& [u, cu] : cert.successor) {
    if (!(order.precedes(u, cu) || u == cu)) report.failures[0].push_back({u, cu});
    MeasLabel l = g.measurement(u);
    if (l == MeasLabel::XY && !g.adjacent(u, cu)) report.failures[1].push_back({u, cu});
    if (l == MeasLabel::YZ && cu != u) report.failures[2].push_back({u, cu});
    for (VertexId v : g.neighbours(cu)) {
      if (v != u && !order.precedes(u, v)) report.failures[3].push_back({u, v});
    }
  }
  return report;
}

std::optional<PartialOrder> causal_induced_order(
    const LabelledOpenGraph& g, const std::map<VertexId, VertexId>& successor) {
  std::vector<Edge> relation;
  for (const auto& [u, cu] : successor) {
    if (cu != u) relation.emplace_back(u, cu);
    for (VertexId v : g.neighbours(cu)) {
      if (v != u) relation.emplace_back(u, v);
    }
  }
  return PartialOrder::from_relation(g.vertices(), relation).order;
}

std::optional<CausalFlowCert> find_extended_causal_flow(const LabelledOpenGraph& g) {
  require_causal_fragment(g);
  VertexSet processed = g.outputs();
  VertexSet correctors;
  for (VertexId o : g.outputs()) {
    if (!g.is_input(o)) correctors.insert(o);
  }
  std::map<VertexId, VertexId> successor;
  std::map<VertexId, std::size_t> layer;
  for (VertexId o : g.outputs()) layer[o] = 0;

  for (std::size_t round = 1; processed.size() < g.size(); ++round) {
    std::vector<std::pair<VertexId, VertexId>> assigned;
    VertexSet used;
    VertexSet claimed;
    for (VertexId v : correctors) {
      VertexSet open = g.neighbours(v) - processed;
      if (open.size() != 1) continue;
      VertexId u = *open.begin();
      if (g.measurement(u) != MeasLabel::XY || claimed.contains(u)) continue;
      assigned.emplace_back(u, v);
      used.insert(v);
      claimed.insert(u);
    }
    for (VertexId u : g.non_outputs() - processed) {
      if (g.measurement(u) != MeasLabel::YZ || g.is_input(u)) continue;
      if (g.neighbours(u).is_subset_of(processed)) {
        assigned.emplace_back(u, u);
        claimed.insert(u);
      }
    }
    if (assigned.empty()) return std::nullopt;
    correctors = correctors - used;
    for (const auto& [u, v] : assigned) {
      successor[u] = v;
      layer[u] = round;
      if (!g.is_input(u) && g.measurement(u) == MeasLabel::XY) correctors.insert(u);
    }
    processed = processed | claimed;
  }

  std::vector<Edge> relation;
  for (const auto& [u, lu] : layer) {
    for (const auto& [v, lv] : layer) {
      if (lu == lv + 1) relation.emplace_back(u, v);
    }
  }
  CausalFlowCert cert{std::move(successor), *PartialOrder::from_relation(g.vertices(), relation).order};
  return cert;
}

std::optional<Edge> extension_obstruction(const PartialOrder& order, const VertexSet& S1, const VertexSet& S2) {
  for (VertexId v : S1) {
    for (VertexId w : S2) {
      if (w == v || order.precedes(w, v)) return Edge{v, w};
    }
  }
  return std::nullopt;
}

std::optional<PartialOrder> extend_order(
    const PartialOrder& order, const VertexSet& S1, const VertexSet& S2, VertexId z) {
  if (order.contains(z)) {
    throw InvalidArgument("vertex " + std::to_string(z.value) + " is already ordered");
  }
  for (VertexId v : S1 | S2) {
    if (!order.contains(v)) {
      throw InvalidArgument("vertex " + std::to_string(v.value) + " is not in the order");
    }
  }
  if (extension_obstruction(order, S1, S2)) return std::nullopt;
  return order.with_element(z, S1, S2);
}

}  // namespace mbqc
