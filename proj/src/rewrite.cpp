#include "mbqc/rewrite.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>
#include <string>

#include "mbqc/errors.hpp"

namespace mbqc {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t nanos_since(Clock::time_point start) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start).count());
}

std::string id_text(VertexId v) { return std::to_string(v.value); }

std::string set_text(const VertexSet& s) {
  std::string out = "{";
  for (VertexId v : s) {
    if (out.size() > 1) out += ",";
    out += id_text(v);
  }
  return out + "}";
}

bool is_square(const LabelledOpenGraph& g) { return g.inputs().size() == g.outputs().size(); }

void require_vertex(const LabelledOpenGraph& g, VertexId v) {
  if (!g.contains(v)) throw InvalidArgument("unknown vertex " + id_text(v));
}

void require_fresh(const LabelledOpenGraph& g, VertexId z) {
  if (g.contains(z)) throw InvalidArgument("vertex " + id_text(z) + " already exists");
}

void require_subset(const LabelledOpenGraph& g, const VertexSet& S) {
  for (VertexId v : S) require_vertex(g, v);
}

VertexSet planar_non_outputs(const LabelledOpenGraph& g) { return g.non_outputs_where(is_planar); }

PauliFlowCert prepare_pauli(
    const LabelledOpenGraph& g, const PauliFlowCert& cert, const RewriteOptions& options,
    bool need_focus) {
  if (!options.check_input) {
    if (need_focus && !cert.focused) {
      throw InvalidArgument("operation needs a focused certificate");
    }
    return cert;
  }
  cert.correction.check_well_formed(g);
  if (cert.order.carrier() != g.non_outputs()) {
    throw InvalidArgument("certificate order must be defined on exactly the non-outputs");
  }
  PauliConditionReport conditions =
      verify_pauli_flow_conditions(g, cert.correction, cert.order);
  if (!conditions.ok()) {
    for (int k = 1; k <= 9; ++k) {
      if (!conditions.passes(k)) {
        const ConditionWitness& w = conditions.failures[k - 1].front();
        throw InvalidArgument(
            "stale certificate: P" + std::to_string(k) + " fails at vertex " + id_text(w.u));
      }
    }
  }
  PauliFlowCert out = cert;
  out.focused = focusing_failures(g, cert.correction).empty();
  if (need_focus && !out.focused) throw InvalidArgument("certificate is not focused");
  if (out.focused) {
    InducedRelation induced = induced_relation(g, cert.correction);
    out.order = std::move(*induced.order);
  }
  return out;
}

void verify_pauli_output(const LabelledOpenGraph& g, const PauliFlowCert& cert, const char* op) {
  PauliConditionReport conditions =
      verify_pauli_flow_conditions(g, cert.correction, cert.order);
  bool ok = conditions.ok();
  if (ok && cert.focused) {
    ok = focusing_failures(g, cert.correction).empty() &&
         verify_pauli_flow_algebraic(g, cert.correction).ok;
  }
  if (!ok) throw std::logic_error(std::string(op) + " produced a certificate that does not verify");
}

CausalFlowCert prepare_causal(
    const LabelledOpenGraph& g, const CausalFlowCert& cert, const RewriteOptions& options) {
  require_causal_fragment(g);
  if (!options.check_input) return cert;
  if (cert.order.carrier() != g.vertices()) {
    throw InvalidArgument("causal order must be defined on every vertex");
  }
  if (!verify_extended_causal_flow(g, cert).ok()) {
    throw InvalidArgument("stale certificate: extended causal flow conditions fail");
  }
  CausalFlowCert out = cert;
  out.order = *causal_induced_order(g, cert.successor);
  return out;
}

void verify_causal_output(const LabelledOpenGraph& g, const CausalFlowCert& cert, const char* op) {
  if (!verify_extended_causal_flow(g, cert).ok()) {
    throw std::logic_error(std::string(op) + " produced a certificate that does not verify");
  }
}

/** Non-outputs u with (M·k)_u = 1, read off Odd(K). */
VertexSet focus_hits(const LabelledOpenGraph& g, const VertexSet& K, const VertexSet& odd_k) {
  std::vector<VertexId> out;
  for (VertexId u : g.non_outputs()) {
    MeasLabel l = g.measurement(u);
    bool hit = is_x_like(l) ? (odd_k.contains(u) != (l == MeasLabel::Y && K.contains(u)))
                            : K.contains(u);
    if (hit) out.push_back(u);
  }
  return VertexSet::from_sorted(std::move(out));
}

VertexSet x_like_part(const LabelledOpenGraph& g, const VertexSet& S) {
  std::vector<VertexId> out;
  for (VertexId s : S) {
    if (!g.is_output(s) && is_x_like(g.measurement(s))) out.push_back(s);
  }
  return VertexSet::from_sorted(std::move(out));
}

/** K = C·x for the indicator x of `targets` ⊆ 𝒳. */
VertexSet combine_corrections(const CorrectionFunction& c, const VertexSet& targets) {
  VertexSet K;
  for (VertexId s : targets) K ^= c.at(s);
  return K;
}

VertexSet odd_preimage(const LabelledOpenGraph& g, const CorrectionFunction& c, const VertexSet& S) {
  std::vector<VertexId> out;
  for (VertexId w : g.non_outputs()) {
    if (c.at(w).odd_intersection(S)) out.push_back(w);
  }
  return VertexSet::from_sorted(std::move(out));
}

/** First (v, w) in succs × preds with v = w or v ≺ w. */
std::optional<Edge> order_clash(
    const PartialOrder& order, const VertexSet& succs, const VertexSet& preds, WorkCost* cost) {
  for (VertexId v : succs) {
    for (VertexId w : preds) {
      if (cost) ++cost->order_queries;
      if (v == w || order.precedes(v, w)) return Edge{v, w};
    }
  }
  return std::nullopt;
}

std::vector<Edge> star_edges(VertexId z, const VertexSet& S) {
  std::vector<Edge> out;
  for (VertexId s : S) out.push_back(s < z ? Edge{s, z} : Edge{z, s});
  std::sort(out.begin(), out.end());
  return out;
}

void maybe_search_pauli(
    const LabelledOpenGraph& g2, const RewriteOptions& options, PauliReport* report) {
  if (!report->certificate_only || !options.existence_search) return;
  if (g2.size() > options.existence_search_limit) {
    report->notes.push_back("existence search skipped: graph exceeds the vertex limit");
    return;
  }
  FlowSearchOptions search;
  search.budget_bits = 24;
  PauliFlowSearch found = find_focused_pauli_flow(g2, search);
  if (found.status == SearchStatus::Found) {
    report->applied = true;
    report->new_cert = std::move(found.cert);
    report->notes.push_back("supplied certificate does not extend; a flow was found by search");
  } else if (found.status == SearchStatus::NoFlow) {
    report->certificate_only = false;
    report->notes.push_back("exhaustive search found no flow on the rewritten graph");
  } else {
    report->notes.push_back("existence search was indeterminate");
  }
}

std::optional<std::pair<VertexSet, std::string>> special_case_k(
    const LabelledOpenGraph& g, const CorrectionFunction& c, const VertexSet& S) {
  if (S.size() == 1) {
    VertexId x = *S.begin();
    if (!g.is_output(x) && g.measurement(x) == MeasLabel::XY) {
      return std::pair{c.at(x), std::string("single-neighbour")};
    }
  }
  if (S.is_subset_of(g.outputs())) return std::pair{VertexSet{}, std::string("all-outputs")};
  if (S.is_subset_of(g.inputs())) {
    return std::pair{combine_corrections(c, S - g.outputs()), std::string("all-inputs")};
  }
  return std::nullopt;
}

PauliReport insert_planar(
    const LabelledOpenGraph& g, const PauliFlowCert& cert, const InsertionSpec& spec,
    const RewriteOptions& options, MeasLabel label, const char* op) {
  if (spec.label != label) {
    throw InvalidArgument(std::string(op) + " needs an insertion spec labelled " +
                          std::string(to_string(label)));
  }
  auto start = Clock::now();
  PauliFlowCert prepared = prepare_pauli(g, cert, options, true);
  InsertionDiagnostics diag = evaluate_insertion(g, prepared, spec);

  PauliReport report;
  report.new_graph = insert_vertex(g, spec.z, spec.S, label, spec.name);
  report.delta.added = {spec.z};
  report.delta.toggled = star_edges(spec.z, spec.S);
  report.certificate_only = !is_square(g);
  report.cost.order_queries = diag.w_pred.size() * diag.v_succ.size();
  report.notes.push_back("K from " + diag.k_source);

  if (diag.failure) {
    report.reason = diag.failure;
    report.cost.elapsed_ns = nanos_since(start);
    maybe_search_pauli(report.new_graph, options, &report);
    if (report.applied && options.verify_output) {
      verify_pauli_output(report.new_graph, *report.new_cert, op);
    }
    return report;
  }

  PauliFlowCert next;
  next.correction = prepared.correction;
  VertexSet cz = diag.K;
  cz.insert(spec.z);
  report.cost.vertices_touched = cz.size() + g.size();
  next.correction.set(spec.z, std::move(cz));
  next.order = prepared.order.with_element(spec.z, diag.w_pred, diag.v_succ);
  next.focused = true;
  report.applied = true;
  report.new_cert = std::move(next);
  report.cost.elapsed_ns = nanos_since(start);
  if (options.verify_output) verify_pauli_output(report.new_graph, *report.new_cert, op);
  return report;
}

}  // namespace

InsertionDiagnostics evaluate_insertion(
    const LabelledOpenGraph& g, const PauliFlowCert& cert, const InsertionSpec& spec) {
  if (spec.label != MeasLabel::YZ && spec.label != MeasLabel::XZ && spec.label != MeasLabel::Z) {
    throw InvalidArgument("inserted vertices must be YZ, XZ or Z");
  }
  require_fresh(g, spec.z);
  require_subset(g, spec.S);
  const CorrectionFunction& c = cert.correction;

  InsertionDiagnostics diag;
  VertexSet sx = x_like_part(g, spec.S);
  if (spec.K) {
    for (VertexId k : *spec.K) {
      require_vertex(g, k);
      if (g.is_input(k)) throw InvalidArgument("K contains input " + id_text(k));
    }
    diag.K = *spec.K;
    diag.k_source = "supplied";
  } else if (is_square(g) || spec.label == MeasLabel::Z) {
    diag.K = combine_corrections(c, sx);
    diag.k_source = "inverse";
  } else if (auto sc = special_case_k(g, c, spec.S)) {
    diag.K = std::move(sc->first);
    diag.k_source = std::move(sc->second);
  } else {
    throw InvalidArgument("K must be supplied when |I| differs from |O|");
  }

  VertexSet odd_k = odd_neighbourhood(g, diag.K);
  VertexSet hits = focus_hits(g, diag.K, odd_k);
  diag.focus_support = g.non_outputs() - hits;
  diag.expected_support = g.non_outputs() - sx;
  diag.s_cap_k = spec.S.intersection_size(diag.K);
  if (spec.label != MeasLabel::Z) diag.w_pred = odd_preimage(g, c, spec.S);
  diag.v_succ = planar_non_outputs(g) & (diag.K | (odd_k ^ spec.S));

  if (diag.focus_support != diag.expected_support) {
    diag.failure = Rejection{
        "1",
        "largest set over which K = " + set_text(diag.K) + " is focused is " +
            set_text(diag.focus_support) + ", expected " + set_text(diag.expected_support),
        (diag.focus_support ^ diag.expected_support).items()};
    return diag;
  }
  bool odd = diag.s_cap_k % 2 == 1;
  if ((spec.label == MeasLabel::YZ && odd) || (spec.label == MeasLabel::XZ && !odd)) {
    diag.failure = Rejection{
        "2",
        "|S ∩ K| = " + std::to_string(diag.s_cap_k) + " has the wrong parity for " +
            std::string(to_string(spec.label)),
        (spec.S & diag.K).items()};
    return diag;
  }
  if (auto clash = order_clash(cert.order, diag.v_succ, diag.w_pred, nullptr)) {
    diag.failure = Rejection{
        "3",
        "vertex " + id_text(clash->first) + " of V_succ equals or precedes vertex " +
            id_text(clash->second) + " of W_pred",
        {clash->first, clash->second}};
  }
  return diag;
}

PauliReport insert_z(
    const LabelledOpenGraph& g, const PauliFlowCert& cert, VertexId z, const VertexSet& W,
    const RewriteOptions& options, std::string name) {
  InsertionSpec spec{z, W, MeasLabel::Z, std::nullopt, std::move(name)};
  PauliReport report = insert_planar(g, cert, spec, options, MeasLabel::Z, "insert_z");
  report.certificate_only = false;
  if (!report.applied) {
    throw std::logic_error("Z-insertion rejected: " + report.reason->message);
  }
  return report;
}

PauliReport insert_yz_pauli(
    const LabelledOpenGraph& g, const PauliFlowCert& cert, const InsertionSpec& spec,
    const RewriteOptions& options) {
  return insert_planar(g, cert, spec, options, MeasLabel::YZ, "insert_yz_pauli");
}

PauliReport insert_xz_pauli(
    const LabelledOpenGraph& g, const PauliFlowCert& cert, const InsertionSpec& spec,
    const RewriteOptions& options) {
  return insert_planar(g, cert, spec, options, MeasLabel::XZ, "insert_xz_pauli");
}

CausalReport insert_yz_causal(
    const LabelledOpenGraph& g, const CausalFlowCert& cert, VertexId z, const VertexSet& S,
    const RewriteOptions& options, std::string name) {
  auto start = Clock::now();
  require_fresh(g, z);
  require_subset(g, S);
  for (VertexId s : S) {
    if (!g.is_output(s) && g.measurement(s) == MeasLabel::YZ) {
      throw InvalidArgument("neighbour " + id_text(s) + " is YZ-measured");
    }
  }
  CausalFlowCert prepared = prepare_causal(g, cert, options);

  VertexSet preimage;
  for (const auto& [w, cw] : prepared.successor) {
    if (S.contains(cw)) preimage.insert(w);
  }

  CausalReport report;
  report.new_graph = insert_vertex(g, z, S, MeasLabel::YZ, std::move(name));
  report.delta.added = {z};
  report.delta.toggled = star_edges(z, S);
  report.certificate_only = g.inputs().size() < g.outputs().size();
  report.cost.order_queries = preimage.size() * S.size();

  if (auto clash = order_clash(prepared.order, S, preimage, nullptr)) {
    report.reason = Rejection{
        "order",
        "vertex " + id_text(clash->first) + " of S equals or precedes vertex " +
            id_text(clash->second) + " of c^-1(S)",
        {clash->first, clash->second}};
    report.cost.elapsed_ns = nanos_since(start);
    if (report.certificate_only && options.existence_search) {
      if (report.new_graph.size() > options.existence_search_limit) {
        report.notes.push_back("existence search skipped: graph exceeds the vertex limit");
      } else if (auto found = find_extended_causal_flow(report.new_graph)) {
        report.applied = true;
        report.new_cert = std::move(found);
        report.notes.push_back("supplied certificate does not extend; a flow was found by search");
      } else {
        report.certificate_only = false;
        report.notes.push_back("no extended causal flow exists on the rewritten graph");
      }
    }
    if (report.applied && options.verify_output) {
      verify_causal_output(report.new_graph, *report.new_cert, "insert_yz_causal");
    }
    return report;
  }

  CausalFlowCert next;
  next.successor = prepared.successor;
  next.successor[z] = z;
  next.order = prepared.order.with_element(z, preimage, S);
  report.applied = true;
  report.new_cert = std::move(next);
  report.cost.elapsed_ns = nanos_since(start);
  if (options.verify_output) verify_causal_output(report.new_graph, *report.new_cert, "insert_yz_causal");
  return report;
}

namespace {

void require_deletable(const LabelledOpenGraph& g, VertexId z) {
  require_vertex(g, z);
  if (g.is_input(z) || g.is_output(z)) {
    throw InvalidArgument("vertex " + id_text(z) + " is an input or output");
  }
  if (is_x_like(g.measurement(z))) {
    throw InvalidArgument("vertex " + id_text(z) + " is not YZ, XZ or Z measured");
  }
}

}  // namespace

PauliReport delete_planar_z_like(
    const LabelledOpenGraph& g, const PauliFlowCert& cert, VertexId z,
    const RewriteOptions& options) {
  auto start = Clock::now();
  require_deletable(g, z);
  PauliFlowCert prepared = prepare_pauli(g, cert, options, false);

  PauliReport report;
  report.new_graph = remove_vertex(g, z);
  report.delta.removed = {z};
  report.delta.toggled = star_edges(z, g.neighbours(z));

  bool mentions_z = false;
  for (const auto& [w, cw] : prepared.correction) {
    if (w != z && cw.contains(z)) mentions_z = true;
  }
  if (!mentions_z) {
    PauliFlowCert next;
    for (const auto& [w, cw] : prepared.correction) {
      if (w != z) next.correction.set(w, cw);
    }
    next.order = prepared.order.restricted(report.new_graph.non_outputs());
    next.focused = prepared.focused;
    report.cost.vertices_touched = g.size();
    report.new_cert = std::move(next);
  } else {
    PauliFlowSearch found = find_focused_pauli_flow(report.new_graph);
    if (found.status != SearchStatus::Found) {
      throw std::logic_error("deletion left a graph without a flow the search could find");
    }
    report.new_cert = std::move(found.cert);
    report.notes.push_back("correction sets mentioned the deleted vertex; flow re-found");
  }
  report.applied = true;
  report.cost.elapsed_ns = nanos_since(start);
  if (options.verify_output) {
    verify_pauli_output(report.new_graph, *report.new_cert, "delete_planar_z_like");
  }
  return report;
}

CausalReport delete_planar_z_like(
    const LabelledOpenGraph& g, const CausalFlowCert& cert, VertexId z,
    const RewriteOptions& options) {
  auto start = Clock::now();
  require_deletable(g, z);
  CausalFlowCert prepared = prepare_causal(g, cert, options);

  CausalReport report;
  report.new_graph = remove_vertex(g, z);
  report.delta.removed = {z};
  report.delta.toggled = star_edges(z, g.neighbours(z));
  CausalFlowCert next;
  for (const auto& [w, cw] : prepared.successor) {
    if (w == z) continue;
    if (cw == z) throw std::logic_error("vertex corrected by a YZ vertex");
    next.successor[w] = cw;
  }
  next.order = prepared.order.restricted(report.new_graph.vertices());
  report.new_cert = std::move(next);
  report.applied = true;
  report.cost.elapsed_ns = nanos_since(start);
  if (options.verify_output) {
    verify_causal_output(report.new_graph, *report.new_cert, "delete_planar_z_like");
  }
  return report;
}

MeasLabel pivot_label(MeasLabel l) {
  switch (l) {
    case MeasLabel::X: return MeasLabel::Z;
    case MeasLabel::Z: return MeasLabel::X;
    case MeasLabel::XY: return MeasLabel::YZ;
    case MeasLabel::YZ: return MeasLabel::XY;
    default: return l;
  }
}

PauliReport pivot_with_flow(
    const LabelledOpenGraph& g, const PauliFlowCert& cert, VertexId u, VertexId v,
    const RewriteOptions& options) {
  auto start = Clock::now();
  require_vertex(g, u);
  require_vertex(g, v);
  if (!g.adjacent(u, v)) {
    throw InvalidArgument("pivot requires an edge between " + id_text(u) + " and " + id_text(v));
  }
  for (VertexId e : {u, v}) {
    if (g.is_input(e) || g.is_output(e)) {
      throw InvalidArgument("pivot endpoint " + id_text(e) + " is an input or output");
    }
  }
  PauliFlowCert prepared = prepare_pauli(g, cert, options, false);

  PauliReport report;
  LabelledOpenGraph g2 = pivot(g, u, v);
  for (VertexId e : {u, v}) {
    MeasLabel before = g.measurement(e);
    MeasLabel after = pivot_label(before);
    if (after != before) {
      g2 = relabel(g2, e, after);
      report.delta.relabelled.emplace_back(e, after);
    }
  }
  report.new_graph = g2;
  report.delta.toggled = edge_difference(g, g2);

  VertexSet uv{u, v};
  CorrectionFunction transported;
  std::map<VertexId, VertexSet> odd_before;
  for (const auto& [w, cw] : prepared.correction) {
    VertexSet odd = odd_neighbourhood(g, cw);
    transported.set(w, cw ^ (uv & (odd ^ cw)));
    odd_before.emplace(w, std::move(odd));
  }

  PauliFlowCert next{transported, prepared.order, false};
  bool refocused = false;
  if (prepared.focused && options.refocus_after_pivot) {
    for (VertexId e : {u, v}) {
      if (g.measurement(e) != MeasLabel::XZ) continue;
      VertexSet ce = next.correction.at(e);
      for (const auto& [w, odd] : odd_before) {
        if (w != e && odd.contains(e)) next.correction.set(w, next.correction.at(w) ^ ce);
      }
      refocused = true;
    }
  }
  if (refocused) report.notes.push_back("refocused through the XZ endpoint");

  next.focused = focusing_failures(g2, next.correction).empty();
  bool valid = verify_pauli_flow_conditions(g2, next.correction, next.order).ok();
  if (!valid && next.focused) {
    InducedRelation induced = induced_relation(g2, next.correction);
    if (induced.order) {
      next.order = std::move(*induced.order);
      valid = verify_pauli_flow_conditions(g2, next.correction, next.order).ok();
      if (valid) report.notes.push_back("order replaced by the induced order");
    }
  }
  if (!valid && refocused) {
    next = PauliFlowCert{transported, prepared.order, false};
    next.focused = focusing_failures(g2, next.correction).empty();
    valid = verify_pauli_flow_conditions(g2, next.correction, next.order).ok();
    if (valid) report.notes.push_back("refocusing abandoned; transported certificate kept");
  }
  if (!valid) throw std::logic_error("transported certificate does not verify after pivot");
  if (prepared.focused && !next.focused && options.refocus_after_pivot) {
    PauliFlowSearch found = find_focused_pauli_flow(g2);
    if (found.status == SearchStatus::Found) {
      next = std::move(*found.cert);
      report.notes.push_back("focused certificate re-found");
    }
  }

  report.cost.vertices_touched = g.size();
  report.applied = true;
  report.new_cert = std::move(next);
  report.cost.elapsed_ns = nanos_since(start);
  if (options.verify_output) verify_pauli_output(g2, *report.new_cert, "pivot_with_flow");
  return report;
}

namespace {

void require_split_spec(const LabelledOpenGraph& g, const SplitSpec& spec) {
  require_vertex(g, spec.x);
  if (g.is_input(spec.x) || g.is_output(spec.x)) {
    throw InvalidArgument("split vertex " + id_text(spec.x) + " is an input or output");
  }
  if (g.measurement(spec.x) != MeasLabel::XY) {
    throw InvalidArgument("split vertex " + id_text(spec.x) + " is not XY-measured");
  }
  require_subset(g, spec.W);
  if (spec.W.contains(spec.x)) throw InvalidArgument("W must not contain the split vertex");
  require_fresh(g, spec.x1);
  require_fresh(g, spec.x2);
  if (spec.x1 == spec.x2) throw InvalidArgument("the two new vertices need distinct ids");
}

}  // namespace

LabelledOpenGraph split_graph(const LabelledOpenGraph& g, const SplitSpec& spec) {
  require_split_spec(g, spec);
  LabelledOpenGraph out = insert_vertex(g, spec.x2, {}, MeasLabel::XY, spec.name2);
  out = insert_vertex(out, spec.x1, {}, MeasLabel::XY, spec.name1);
  std::vector<Edge> toggles = {{spec.x, spec.x1}, {spec.x1, spec.x2}};
  for (VertexId w : spec.W) {
    toggles.emplace_back(spec.x, w);
    toggles.emplace_back(spec.x2, w);
  }
  return toggle_edges(out, toggles);
}

SplitDiagnostics evaluate_split(
    const LabelledOpenGraph& g, const PauliFlowCert& cert, const SplitSpec& spec) {
  require_split_spec(g, spec);
  if (!is_square(g)) throw InvalidArgument("vertex splitting needs |I| = |O|");
  const CorrectionFunction& c = cert.correction;
  const PartialOrder& order = cert.order;
  VertexId x = spec.x;

  SplitDiagnostics diag;
  diag.K = combine_corrections(c, x_like_part(g, spec.W));
  diag.w_pred = odd_preimage(g, c, spec.W);
  diag.v_succ = planar_non_outputs(g) & (diag.K | (odd_neighbourhood(g, diag.K) ^ spec.W));

  std::size_t wk = spec.W.intersection_size(diag.K);
  if (wk % 2 == 1) {
    diag.failure = Rejection{"V1", "|W ∩ K| = " + std::to_string(wk) + " is odd", (spec.W & diag.K).items()};
    return diag;
  }
  if (auto clash = order_clash(order, diag.v_succ, diag.w_pred, nullptr)) {
    diag.failure = Rejection{
        "V2",
        "vertex " + id_text(clash->first) + " of V_succ equals or precedes vertex " +
            id_text(clash->second) + " of W_pred",
        {clash->first, clash->second}};
    return diag;
  }
  for (VertexId w : diag.w_pred) {
    if (order.precedes(x, w)) {
      diag.failure = Rejection{"V3", "vertex " + id_text(w) + " of W_pred succeeds x", {x, w}};
      return diag;
    }
  }
  for (VertexId v : diag.v_succ) {
    if (order.precedes(v, x)) {
      diag.failure = Rejection{"V3", "vertex " + id_text(v) + " of V_succ precedes x", {v, x}};
      return diag;
    }
  }
  bool x_in_k = diag.K.contains(x);
  bool even = !c.at(x).odd_intersection(spec.W);
  if (x_in_k != even) {
    diag.failure = Rejection{
        "V4",
        std::string("x is ") + (x_in_k ? "" : "not ") + "in K but |c(x) ∩ W| is " +
            (even ? "even" : "odd"),
        {x}};
  }
  return diag;
}

PauliReport vertex_split(
    const LabelledOpenGraph& g, const PauliFlowCert& cert, const SplitSpec& spec,
    const RewriteOptions& options) {
  auto start = Clock::now();
  require_split_spec(g, spec);
  if (!is_square(g)) throw InvalidArgument("vertex splitting needs |I| = |O|");
  PauliFlowCert prepared = prepare_pauli(g, cert, options, true);
  SplitDiagnostics diag = evaluate_split(g, prepared, spec);

  RewriteOptions inner = options;
  inner.check_input = true;
  inner.existence_search = false;
  InsertionSpec first{spec.x2, VertexSet{spec.x}, MeasLabel::YZ, std::nullopt, spec.name2};
  PauliReport step1 = insert_yz_pauli(g, prepared, first, inner);
  if (!step1.applied) throw std::logic_error("single-neighbour insertion was rejected");
  VertexSet s3 = spec.W;
  s3.insert(spec.x2);
  InsertionSpec third{spec.x1, s3, MeasLabel::YZ, std::nullopt, spec.name1};
  PauliReport step3 = insert_yz_pauli(step1.new_graph, *step1.new_cert, third, inner);

  LabelledOpenGraph direct = split_graph(g, spec);
  LabelledOpenGraph composite = pivot(step3.new_graph, spec.x1, spec.x2);
  composite = relabel(relabel(composite, spec.x1, MeasLabel::XY), spec.x2, MeasLabel::XY);
  if (!(composite == direct)) {
    throw std::logic_error("insert/insert/pivot composite differs from the splitting graph");
  }
  if (diag.failure.has_value() == step3.applied) {
    throw std::logic_error("splitting conditions disagree with the second insertion");
  }

  PauliReport report;
  report.new_graph = direct;
  report.delta.added = {spec.x1, spec.x2};
  report.delta.toggled = edge_difference(g, direct);
  if (diag.failure) {
    report.reason = diag.failure;
    report.notes.push_back("second insertion rejected on condition " + step3.reason->condition);
    report.cost.elapsed_ns = nanos_since(start);
    return report;
  }
  PauliReport step4 = pivot_with_flow(step3.new_graph, *step3.new_cert, spec.x1, spec.x2, inner);
  report.applied = true;
  report.new_cert = std::move(step4.new_cert);
  report.notes = {"composed from two YZ insertions and a pivot"};
  report.cost.elapsed_ns = nanos_since(start);
  if (options.verify_output) verify_pauli_output(direct, *report.new_cert, "vertex_split");
  return report;
}

PauliReport neighbour_unfuse(
    const LabelledOpenGraph& g, const PauliFlowCert& cert, VertexId a, VertexId b,
    VertexId x1, VertexId x2, const RewriteOptions& options) {
  require_vertex(g, a);
  require_vertex(g, b);
  if (!is_square(g)) throw InvalidArgument("neighbour unfusion needs |I| = |O|");
  if (g.is_input(a) || g.is_output(a)) {
    throw InvalidArgument("vertex " + id_text(a) + " is an input or output");
  }
  if (g.measurement(a) != MeasLabel::XY) throw InvalidArgument("vertex " + id_text(a) + " is not XY");
  if (!g.adjacent(a, b)) throw InvalidArgument("vertices " + id_text(a) + " and " + id_text(b) + " are not adjacent");
  if (g.is_output(b) || g.measurement(b) != MeasLabel::XY) {
    throw InvalidArgument("vertex " + id_text(b) + " is not XY");
  }
  PauliFlowCert prepared = prepare_pauli(g, cert, options, true);
  const CorrectionFunction& c = prepared.correction;
  const PartialOrder& order = prepared.order;

  std::optional<Rejection> failure;
  if (!c.at(b).contains(a) && !c.at(a).contains(b)) {
    failure = Rejection{"U1", "neither vertex is in the correction set of the other", {a, b}};
  } else {
    for (VertexId u : g.non_outputs()) {
      bool between = (order.precedes(a, u) && order.precedes(u, b)) ||
                     (order.precedes(b, u) && order.precedes(u, a));
      if (between) {
        failure = Rejection{"U2", "vertex " + id_text(u) + " lies between the two", {a, u, b}};
        break;
      }
    }
  }

  RewriteOptions inner = options;
  inner.check_input = false;
  SplitSpec spec{a, VertexSet{b}, x1, x2, {}, {}, std::nullopt};
  PauliReport report = vertex_split(g, prepared, spec, inner);
  if (failure.has_value() == report.applied) {
    throw std::logic_error("unfusion conditions disagree with the splitting conditions");
  }
  if (failure) {
    report.notes.push_back("splitting rejected on condition " + report.reason->condition);
    report.reason = failure;
  }
  return report;
}

std::vector<Edge> edge_difference(const LabelledOpenGraph& before, const LabelledOpenGraph& after) {
  std::vector<Edge> a = before.edges();
  std::vector<Edge> b = after.edges();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<Edge> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace mbqc
