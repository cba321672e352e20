#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mbqc/angle.hpp"
#include "mbqc/causal_flow.hpp"
#include "mbqc/flow.hpp"
#include "mbqc/graph.hpp"

namespace mbqc {

struct GraphDelta {
  std::vector<VertexId> added;
  std::vector<VertexId> removed;
  /** Edges present in exactly one of the old and new graph, smaller id first. */
  std::vector<Edge> toggled;
  std::vector<std::pair<VertexId, MeasLabel>> relabelled;
};

/**
 * Which condition of a rewrite failed. Insertions use "1", "2" and "3",
 * splitting uses "V1" to "V4", neighbour unfusion "U1" and "U2", and the
 * causal insertion "order".
 */
struct Rejection {
  std::string condition;
  std::string message;
  std::vector<VertexId> witnesses;
};

struct WorkCost {
  std::uint64_t elapsed_ns = 0;
  /** Order queries made while checking conditions. */
  std::uint64_t order_queries = 0;
  /** Vertices touched while assembling the new correction sets. */
  std::uint64_t vertices_touched = 0;
};

template <class Cert>
struct RewriteReport {
  bool applied = false;
  std::optional<Rejection> reason;
  /** The rewritten graph; also filled in when the rewrite is rejected. */
  LabelledOpenGraph new_graph;
  /** Present exactly when applied. */
  std::optional<Cert> new_cert;
  GraphDelta delta;
  WorkCost cost;
  /**
   * Set when |I| < |O|: a rejection then only says that the supplied
   * certificate cannot be extended, not that no flow exists.
   */
  bool certificate_only = false;
  std::vector<std::string> notes;
};

using PauliReport = RewriteReport<PauliFlowCert>;
using CausalReport = RewriteReport<CausalFlowCert>;

struct RewriteOptions {
  /** Verify the input certificate and normalise its order to the induced one. */
  bool check_input = true;
  /** Re-verify every produced certificate; a failure throws std::logic_error. */
  bool verify_output = true;
  /** When |I| < |O| and the certificate check fails, search Γ' for a flow. */
  bool existence_search = false;
  std::size_t existence_search_limit = 10;
  /**
   * Pivot only: restore focus after transporting the certificate. When off,
   * the plain transport c(w) Δ ({u,v} ∩ Codd(c(w))) is returned as is.
   */
  bool refocus_after_pivot = true;
};

struct InsertionSpec {
  VertexId z;
  VertexSet S;
  MeasLabel label = MeasLabel::YZ;
  std::optional<VertexSet> K;
  std::string name;
};

struct InsertionDiagnostics {
  VertexSet K;
  /** Where K came from: "supplied", "inverse", "single-neighbour", "all-outputs" or "all-inputs". */
  std::string k_source;
  VertexSet focus_support;
  VertexSet expected_support;
  std::size_t s_cap_k = 0;
  VertexSet w_pred;
  VertexSet v_succ;
  std::optional<Rejection> failure;
};

/**
 * Evaluates insertion conditions 1 to 3 for a YZ or XZ vertex against the
 * given focused certificate and order, without building Γ'.
 */
InsertionDiagnostics evaluate_insertion(
    const LabelledOpenGraph& g, const PauliFlowCert& cert, const InsertionSpec& spec);

PauliReport insert_z(
    const LabelledOpenGraph& g, const PauliFlowCert& cert, VertexId z, const VertexSet& W,
    const RewriteOptions& options = {}, std::string name = {});

CausalReport insert_yz_causal(
    const LabelledOpenGraph& g, const CausalFlowCert& cert, VertexId z, const VertexSet& S,
    const RewriteOptions& options = {}, std::string name = {});

PauliReport insert_yz_pauli(
    const LabelledOpenGraph& g, const PauliFlowCert& cert, const InsertionSpec& spec,
    const RewriteOptions& options = {});

PauliReport insert_xz_pauli(
    const LabelledOpenGraph& g, const PauliFlowCert& cert, const InsertionSpec& spec,
    const RewriteOptions& options = {});

PauliReport delete_planar_z_like(
    const LabelledOpenGraph& g, const PauliFlowCert& cert, VertexId z,
    const RewriteOptions& options = {});

CausalReport delete_planar_z_like(
    const LabelledOpenGraph& g, const CausalFlowCert& cert, VertexId z,
    const RewriteOptions& options = {});

/** Label after pivoting: X↔Z and XY↔YZ, everything else fixed. */
MeasLabel pivot_label(MeasLabel l);

PauliReport pivot_with_flow(
    const LabelledOpenGraph& g, const PauliFlowCert& cert, VertexId u, VertexId v,
    const RewriteOptions& options = {});

struct SplitSpec {
  VertexId x;
  VertexSet W;
  VertexId x1;  // x'
  VertexId x2;  // x''
  std::string name1;
  std::string name2;
  /** Angles for x and x''; only the semantic layer reads them. */
  std::optional<std::pair<Angle, Angle>> angle_split;
};

struct SplitDiagnostics {
  VertexSet K;
  VertexSet w_pred;
  VertexSet v_succ;
  std::optional<Rejection> failure;
};

/** Direct edge formula E Δ {{x,x'},{x',x''}} Δ ({x,x''}×W). */
LabelledOpenGraph split_graph(const LabelledOpenGraph& g, const SplitSpec& spec);

/** V1 to V4 against the given focused certificate. */
SplitDiagnostics evaluate_split(
    const LabelledOpenGraph& g, const PauliFlowCert& cert, const SplitSpec& spec);

PauliReport vertex_split(
    const LabelledOpenGraph& g, const PauliFlowCert& cert, const SplitSpec& spec,
    const RewriteOptions& options = {});

/** Splits a over {b}; x' and x'' are the two fresh ids. */
PauliReport neighbour_unfuse(
    const LabelledOpenGraph& g, const PauliFlowCert& cert, VertexId a, VertexId b,
    VertexId x1, VertexId x2, const RewriteOptions& options = {});

/** Edges present in exactly one of the two graphs. */
std::vector<Edge> edge_difference(const LabelledOpenGraph& before, const LabelledOpenGraph& after);

}  // namespace mbqc
