#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mbqc/gf2.hpp"
#include "mbqc/graph.hpp"
#include "mbqc/partial_order.hpp"

namespace mbqc {

/** Map from each non-output to its correction set. */
class CorrectionFunction {
 public:
  using const_iterator = std::map<VertexId, VertexSet>::const_iterator;

  CorrectionFunction() = default;
  CorrectionFunction(std::initializer_list<std::pair<const VertexId, VertexSet>> init)
      : sets_(init) {}

  const VertexSet& at(VertexId v) const;
  bool has(VertexId v) const { return sets_.count(v) != 0; }
  void set(VertexId v, VertexSet s) { sets_[v] = std::move(s); }
  void erase(VertexId v) { sets_.erase(v); }
  std::size_t size() const { return sets_.size(); }
  VertexSet domain() const;
  const_iterator begin() const { return sets_.begin(); }
  const_iterator end() const { return sets_.end(); }

  /** Throws InvalidArgument unless the domain is V∖O and images avoid I. */
  void check_well_formed(const LabelledOpenGraph& g) const;

  friend bool operator==(const CorrectionFunction&, const CorrectionFunction&) = default;

 private:
  std::map<VertexId, VertexSet> sets_;
};

struct PauliFlowCert {
  CorrectionFunction correction;
  PartialOrder order;
  bool focused = false;
};

// Matrices. Rows and columns follow ascending vertex ids.

gf2::Gf2Matrix extended_adjacency(const LabelledOpenGraph& g);
/** Rows V∖O, columns V∖I. */
gf2::Gf2Matrix flow_demand_matrix(const LabelledOpenGraph& g);
/** Rows V∖O, columns V∖I. */
gf2::Gf2Matrix order_demand_matrix(const LabelledOpenGraph& g);
/** Rows V∖I, columns V∖O. */
gf2::Gf2Matrix correction_matrix(const LabelledOpenGraph& g, const CorrectionFunction& c);
CorrectionFunction correction_function_from_matrix(const gf2::Gf2Matrix& C);

// Algebraic verification.

struct MatrixEntry {
  VertexId row;
  VertexId col;
  bool value;
};

struct AlgebraicReport {
  bool ok = false;
  bool identity_holds = false;
  /** Entries of M·C that differ from the identity. */
  std::vector<MatrixEntry> identity_violations;
  /** Relation read off N·C: (v,u) whenever (NC)[u][v] = 1 and u ≠ v. */
  std::vector<Edge> relation;
  std::optional<PartialOrder> order;
  /** Cycle of N·C; a diagonal 1 at u appears as the single-vertex cycle [u]. */
  std::vector<VertexId> cycle;
};

AlgebraicReport verify_pauli_flow_algebraic(const LabelledOpenGraph& g, const CorrectionFunction& c);

// Literal condition checks.

struct ConditionWitness {
  VertexId u;
  std::optional<VertexId> v;
};

struct PauliConditionReport {
  /** failures[k] lists witnesses for condition P(k+1). */
  std::array<std::vector<ConditionWitness>, 9> failures;

  bool ok() const;
  bool passes(int condition) const { return failures.at(condition - 1).empty(); }
};

/** Checks P1–P9 for every non-output under the given order. */
PauliConditionReport verify_pauli_flow_conditions(
    const LabelledOpenGraph& g, const CorrectionFunction& c, const PartialOrder& order);

struct FocusFailure {
  VertexId corrected;
  int condition;  // 1, 2 or 3
  VertexId witness;
};

/** F1–F3 for A over S, checked literally. */
bool is_focused_set(const LabelledOpenGraph& g, const VertexSet& A, const VertexSet& S);
/** Witnessed F1–F3 failures of every c(v) over V∖O∖{v}. */
std::vector<FocusFailure> focusing_failures(const LabelledOpenGraph& g, const CorrectionFunction& c);
/** Largest S over which A is focused: the non-outputs u with (M·a)_u = 0. */
VertexSet max_focus_support(const LabelledOpenGraph& g, const VertexSet& A);

struct InducedRelation {
  /** Pairs (u,v) with u ⋖ v. */
  std::vector<Edge> edges;
  std::optional<PartialOrder> order;
  std::vector<VertexId> cycle;
};

InducedRelation induced_relation(const LabelledOpenGraph& g, const CorrectionFunction& c);

// Finding.

enum class SearchStatus { Found, NoFlow, Indeterminate };

std::string_view to_string(SearchStatus s);

struct FlowSearchOptions {
  /** Kernel offsets are searched exhaustively up to 2^budget_bits choices. */
  unsigned budget_bits = 12;
};

struct PauliFlowSearch {
  SearchStatus status = SearchStatus::NoFlow;
  std::optional<PauliFlowCert> cert;
  std::uint64_t nodes = 0;
  /** Dimension of the kernel of M. */
  std::size_t kernel_dimension = 0;
};

PauliFlowSearch find_focused_pauli_flow(const LabelledOpenGraph& g, const FlowSearchOptions& options = {});

}  // namespace mbqc
