#include "mbqc/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "mbqc/benchmark.hpp"
#include "mbqc/causal_flow.hpp"
#include "mbqc/errors.hpp"
#include "mbqc/flow.hpp"
#include "mbqc/io.hpp"
#include "mbqc/rewrite.hpp"
#include "mbqc/script.hpp"
#include "mbqc/semantics.hpp"

namespace mbqc::cli {

namespace {

using nlohmann::json;

/** Ordered key/value report printed as "key: value" lines or as one JSON object. */
class Report {
 public:
  void add(std::string key, json value) { fields_.emplace_back(std::move(key), std::move(value)); }

  void emit(std::ostream& out, bool as_json) const {
    if (as_json) {
      json doc = json::object();
      for (const auto& [k, v] : fields_) doc[k] = v;
      out << doc.dump(2) << "\n";
      return;
    }
    for (const auto& [k, v] : fields_) out << k << ": " << text(v) << "\n";
  }

 private:
  static std::string text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
      std::string s;
      for (const json& item : v) {
        if (!s.empty()) s += " ";
        s += text(item);
      }
      return s;
    }
    return v.dump();
  }

  std::vector<std::pair<std::string, json>> fields_;
};

struct Flags {
  std::string graph;
  std::string cert;
  std::string out;
  std::string out_cert;
  std::string vertex;
  std::string neighbours;
  std::string set_k;
  std::string edge;
  std::string names;
  std::string angles;
  std::string script;
  std::string kind = "pauli";
  std::string flow;
  std::string insert_type;
  double tol = 1e-9;
  std::uint64_t seed = 1;
  unsigned budget = 12;
  std::size_t size = 256;
  std::size_t trials = 20;
  bool json = false;
};

std::string join(const LabelledOpenGraph& g, const VertexSet& s) {
  std::string out;
  for (VertexId v : s) {
    if (!out.empty()) out += ",";
    out += g.display(v);
  }
  return out.empty() ? "{}" : out;
}

json order_json(const LabelledOpenGraph& g, const PartialOrder& order) {
  json pairs = json::array();
  for (const auto& [a, b] : order.covering_relation()) pairs.push_back(g.display(a) + "<" + g.display(b));
  return pairs;
}

json correction_json(const LabelledOpenGraph& g, const CorrectionFunction& c) {
  json lines = json::array();
  for (const auto& [v, s] : c) lines.push_back(g.display(v) + "->" + join(g, s));
  return lines;
}

json rejection_json(const LabelledOpenGraph& g, const Rejection& r) {
  json w = json::array();
  for (VertexId v : r.witnesses) w.push_back(g.contains(v) ? g.display(v) : std::to_string(v.value));
  return json{{"condition", r.condition}, {"message", r.message}, {"witnesses", w}};
}

void add_rejection(Report& report, const LabelledOpenGraph& g, const Rejection& r, bool as_json) {
  if (as_json) {
    report.add("reason", rejection_json(g, r));
    return;
  }
  report.add("reason.condition", r.condition);
  report.add("reason.message", r.message);
  json w = json::array();
  for (VertexId v : r.witnesses) w.push_back(g.contains(v) ? g.display(v) : std::to_string(v.value));
  report.add("reason.witnesses", w);
}

GraphDocument load_graph(const Flags& f) {
  if (f.graph.empty()) throw InvalidArgument("--graph is required");
  std::string text = read_text_file(f.graph);
  try {
    return parse_graph_document(text);
  } catch (const ParseError& e) {
    throw ParseError(f.graph + ": " + e.what(), 0, 0);
  }
}

std::optional<CertKind> cert_kind(const Flags& f, std::string* text) {
  if (f.cert.empty()) return std::nullopt;
  *text = read_text_file(f.cert);
  try {
    return parse_cert_kind(*text);
  } catch (const ParseError& e) {
    throw ParseError(f.cert + ": " + e.what(), 0, 0);
  }
}

template <class Fn>
auto parse_cert_file(const Flags& f, Fn fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    throw ParseError(f.cert + ": " + e.what(), 0, 0);
  }
}

PauliFlowCert load_or_find_pauli(const Flags& f, const LabelledOpenGraph& g, Report& report) {
  std::string text;
  auto kind = cert_kind(f, &text);
  if (kind) {
    if (*kind != CertKind::Pauli) throw InvalidArgument("certificate is not a Pauli flow");
    return parse_cert_file(f, [&] { return parse_pauli_cert(text, g); });
  }
  FlowSearchOptions options;
  options.budget_bits = f.budget;
  PauliFlowSearch found = find_focused_pauli_flow(g, options);
  if (found.status != SearchStatus::Found) {
    throw InvalidArgument("no --cert given and no focused Pauli flow was found");
  }
  report.add("note", "certificate found by search");
  return *found.cert;
}

CausalFlowCert load_or_find_causal(const Flags& f, const LabelledOpenGraph& g, Report& report) {
  std::string text;
  auto kind = cert_kind(f, &text);
  if (kind) {
    if (*kind != CertKind::Causal) throw InvalidArgument("certificate is not a causal flow");
    return parse_cert_file(f, [&] { return parse_causal_cert(text, g); });
  }
  auto found = find_extended_causal_flow(g);
  if (!found) throw InvalidArgument("no --cert given and no extended causal flow was found");
  report.add("note", "certificate found by search");
  return *found;
}

bool wants_causal(const Flags& f) {
  if (!f.flow.empty()) {
    if (f.flow != "pauli" && f.flow != "causal") throw InvalidArgument("--flow must be pauli or causal");
    return f.flow == "causal";
  }
  if (f.cert.empty()) return false;
  std::string text;
  return cert_kind(f, &text) == CertKind::Causal;
}

std::string new_name(const LabelledOpenGraph& g, const std::string& requested, const std::string& fallback) {
  std::string name = requested.empty() ? fallback : requested;
  if (g.find_by_name(name)) {
    if (!requested.empty()) throw InvalidArgument("vertex name " + name + " is already in use");
    return {};
  }
  return name;
}

std::pair<std::string, std::string> name_pair(const Flags& f, const std::string& base) {
  if (f.names.empty()) return {base + "'", base + "''"};
  auto comma = f.names.find(',');
  if (comma == std::string::npos) throw InvalidArgument("--names needs two comma-separated names");
  return {f.names.substr(0, comma), f.names.substr(comma + 1)};
}

void write_outputs(const Flags& f, const LabelledOpenGraph& g, const AngleMap& angles,
                   const std::optional<PauliFlowCert>& pauli,
                   const std::optional<CausalFlowCert>& causal) {
  if (!f.out.empty()) write_text_file(f.out, write_graph_document(g, angles));
  if (!f.out_cert.empty()) {
    if (pauli) write_text_file(f.out_cert, write_pauli_cert(*pauli));
    if (causal) write_text_file(f.out_cert, write_causal_cert(*causal));
  }
}

template <class Cert>
void describe(Report& report, const RewriteReport<Cert>& r, const LabelledOpenGraph& before, bool as_json) {
  report.add("applied", r.applied);
  if (r.reason) add_rejection(report, r.applied ? r.new_graph : before, *r.reason, as_json);
  if (r.certificate_only) report.add("certificate_only", true);
  json added = json::array();
  for (VertexId v : r.delta.added) added.push_back(r.new_graph.display(v));
  if (!added.empty()) report.add("added", added);
  json removed = json::array();
  for (VertexId v : r.delta.removed) removed.push_back(before.display(v));
  if (!removed.empty()) report.add("removed", removed);
  report.add("toggled_edges", r.delta.toggled.size());
  for (const std::string& note : r.notes) report.add("note", note);
}

void describe_cert(Report& report, const LabelledOpenGraph& g, const PauliFlowCert& cert) {
  report.add("focused", cert.focused);
  report.add("correction", correction_json(g, cert.correction));
  report.add("order", order_json(g, cert.order));
}

void describe_cert(Report& report, const LabelledOpenGraph& g, const CausalFlowCert& cert) {
  json succ = json::array();
  for (const auto& [u, v] : cert.successor) succ.push_back(g.display(u) + "->" + g.display(v));
  report.add("successor", succ);
  report.add("order", order_json(g, cert.order));
}

template <class Cert>
int finish(Report& report, const Flags& f, const RewriteReport<Cert>& r, const LabelledOpenGraph& before,
           const AngleMap& angles, std::ostream& out) {
  describe(report, r, before, f.json);
  if (r.applied) {
    describe_cert(report, r.new_graph, *r.new_cert);
    std::optional<PauliFlowCert> pauli;
    std::optional<CausalFlowCert> causal;
    if constexpr (std::is_same_v<Cert, PauliFlowCert>) {
      pauli = r.new_cert;
    } else {
      causal = r.new_cert;
    }
    write_outputs(f, r.new_graph, angles, pauli, causal);
  }
  report.emit(out, f.json);
  return r.applied ? kExitOk : kExitRejected;
}

int cmd_check_flow(const Flags& f, std::ostream& out) {
  GraphDocument doc = load_graph(f);
  const LabelledOpenGraph& g = doc.graph;
  std::string text;
  auto kind = cert_kind(f, &text);
  if (!kind) throw InvalidArgument("--cert is required");
  Report report;
  bool valid = false;
  if (*kind == CertKind::Pauli) {
    PauliFlowCert cert = parse_cert_file(f, [&] { return parse_pauli_cert(text, g); });
    PauliConditionReport conditions = verify_pauli_flow_conditions(g, cert.correction, cert.order);
    std::vector<FocusFailure> focus = focusing_failures(g, cert.correction);
    AlgebraicReport algebraic = verify_pauli_flow_algebraic(g, cert.correction);
    report.add("kind", "pauli");
    json failed = json::array();
    for (int k = 1; k <= 9; ++k) {
      for (const ConditionWitness& w : conditions.failures[k - 1]) {
        std::string item = "P" + std::to_string(k) + "@" + g.display(w.u);
        if (w.v) item += "," + g.display(*w.v);
        failed.push_back(item);
      }
    }
    report.add("conditions", conditions.ok() ? json("ok") : failed);
    report.add("focused", focus.empty());
    report.add("algebraic", algebraic.ok);
    valid = conditions.ok() && (!cert.focused || focus.empty());
  } else {
    CausalFlowCert cert = parse_cert_file(f, [&] { return parse_causal_cert(text, g); });
    CausalConditionReport conditions = verify_extended_causal_flow(g, cert);
    report.add("kind", "causal");
    json failed = json::array();
    for (int k = 1; k <= 4; ++k) {
      for (const ConditionWitness& w : conditions.failures[k - 1]) {
        std::string item = "C" + std::to_string(k) + "@" + g.display(w.u);
        if (w.v) item += "," + g.display(*w.v);
        failed.push_back(item);
      }
    }
    report.add("conditions", conditions.ok() ? json("ok") : failed);
    valid = conditions.ok();
  }
  report.add("valid", valid);
  report.emit(out, f.json);
  return valid ? kExitOk : kExitRejected;
}

int cmd_find_flow(const Flags& f, std::ostream& out) {
  GraphDocument doc = load_graph(f);
  const LabelledOpenGraph& g = doc.graph;
  Report report;
  if (f.kind == "causal") {
    auto found = find_extended_causal_flow(g);
    report.add("kind", "causal");
    report.add("status", found ? "found" : "none");
    if (found) {
      describe_cert(report, g, *found);
      if (!f.out.empty()) write_text_file(f.out, write_causal_cert(*found));
    }
    report.emit(out, f.json);
    return found ? kExitOk : kExitRejected;
  }
  if (f.kind != "pauli") throw InvalidArgument("--kind must be pauli or causal");
  FlowSearchOptions options;
  options.budget_bits = f.budget;
  PauliFlowSearch found = find_focused_pauli_flow(g, options);
  report.add("kind", "pauli");
  report.add("status", std::string(to_string(found.status)));
  report.add("kernel_dimension", found.kernel_dimension);
  report.add("nodes", found.nodes);
  if (found.cert) {
    describe_cert(report, g, *found.cert);
    if (!f.out.empty()) write_text_file(f.out, write_pauli_cert(*found.cert));
  }
  report.emit(out, f.json);
  return found.status == SearchStatus::Found ? kExitOk : kExitRejected;
}

RewriteOptions rewrite_options() {
  RewriteOptions options;
  options.existence_search = true;
  return options;
}

int cmd_insert(const Flags& f, std::ostream& out) {
  GraphDocument doc = load_graph(f);
  const LabelledOpenGraph& g = doc.graph;
  VertexSet S = resolve_vertices(g, f.neighbours);
  VertexId z = g.fresh_id();
  std::string name = new_name(g, f.vertex, "z");
  AngleMap angles = doc.angles;
  angles[z] = Angle{};
  Report report;
  report.add("operation", "insert-" + f.insert_type);
  if (wants_causal(f)) {
    if (f.insert_type != "yz") throw InvalidArgument("causal insertion supports only yz");
    CausalFlowCert cert = load_or_find_causal(f, g, report);
    CausalReport r = insert_yz_causal(g, cert, z, S, rewrite_options(), name);
    return finish(report, f, r, g, angles, out);
  }
  PauliFlowCert cert = load_or_find_pauli(f, g, report);
  PauliReport r;
  if (f.insert_type == "z") {
    r = insert_z(g, cert, z, S, rewrite_options(), name);
  } else {
    InsertionSpec spec;
    spec.z = z;
    spec.S = S;
    spec.name = name;
    spec.label = f.insert_type == "yz" ? MeasLabel::YZ : MeasLabel::XZ;
    if (!f.set_k.empty()) spec.K = resolve_vertices(g, f.set_k);
    r = spec.label == MeasLabel::YZ ? insert_yz_pauli(g, cert, spec, rewrite_options())
                                    : insert_xz_pauli(g, cert, spec, rewrite_options());
  }
  return finish(report, f, r, g, angles, out);
}

int cmd_delete(const Flags& f, std::ostream& out) {
  GraphDocument doc = load_graph(f);
  const LabelledOpenGraph& g = doc.graph;
  VertexId z = resolve_vertex(g, f.vertex);
  AngleMap angles = doc.angles;
  angles.erase(z);
  Report report;
  report.add("operation", "delete");
  if (wants_causal(f)) {
    CausalFlowCert cert = load_or_find_causal(f, g, report);
    return finish(report, f, delete_planar_z_like(g, cert, z, rewrite_options()), g, angles, out);
  }
  PauliFlowCert cert = load_or_find_pauli(f, g, report);
  return finish(report, f, delete_planar_z_like(g, cert, z, rewrite_options()), g, angles, out);
}

int cmd_pivot(const Flags& f, std::ostream& out) {
  GraphDocument doc = load_graph(f);
  const LabelledOpenGraph& g = doc.graph;
  VertexSet ends = resolve_vertices(g, f.edge);
  if (ends.size() != 2) throw InvalidArgument("--edge needs two distinct vertices");
  VertexId u = ends.items()[0];
  VertexId v = ends.items()[1];
  Report report;
  report.add("operation", "pivot");
  PauliFlowCert cert = load_or_find_pauli(f, g, report);
  PauliReport r = pivot_with_flow(g, cert, u, v, rewrite_options());
  AngleMap angles = doc.angles;
  bool complete = std::all_of(g.non_outputs().begin(), g.non_outputs().end(),
                              [&](VertexId w) { return angles.count(w) != 0; });
  if (complete) {
    PivotedPattern pivoted = pivot_pattern({g, angles}, u, v);
    angles = pivoted.pattern.angles;
    if (!pivoted.boundary_z.empty()) report.add("boundary_z", join(g, pivoted.boundary_z));
  }
  return finish(report, f, r, g, angles, out);
}

int cmd_split(const Flags& f, std::ostream& out, bool unfuse) {
  GraphDocument doc = load_graph(f);
  const LabelledOpenGraph& g = doc.graph;
  SplitSpec spec;
  spec.x = resolve_vertex(g, f.vertex);
  spec.W = resolve_vertices(g, f.neighbours);
  spec.x1 = g.fresh_id();
  spec.x2 = VertexId(spec.x1.value + 1);
  auto [n1, n2] = name_pair(f, g.display(spec.x));
  spec.name1 = new_name(g, n1, n1);
  spec.name2 = new_name(g, n2, n2);
  if (!f.angles.empty()) {
    auto comma = f.angles.find(',');
    auto a1 = Angle::parse(f.angles.substr(0, comma));
    auto a2 = comma == std::string::npos ? std::nullopt : Angle::parse(f.angles.substr(comma + 1));
    if (!a1 || !a2) throw InvalidArgument("--angles needs two angles");
    spec.angle_split = std::pair{*a1, *a2};
  }
  Report report;
  report.add("operation", unfuse ? "unfuse" : "split");
  PauliFlowCert cert = load_or_find_pauli(f, g, report);
  PauliReport r;
  if (unfuse) {
    if (spec.W.size() != 1) throw InvalidArgument("unfuse needs exactly one neighbour");
    r = neighbour_unfuse(g, cert, spec.x, *spec.W.begin(), spec.x1, spec.x2, rewrite_options());
  } else {
    r = vertex_split(g, cert, spec, rewrite_options());
  }
  AngleMap angles = doc.angles;
  if (r.applied && angles.count(spec.x)) angles = split_angles(g, angles, spec);
  return finish(report, f, r, g, angles, out);
}

ScriptState initial_state(const Flags& f, const GraphDocument& doc, Report& report) {
  ScriptState state;
  state.graph = doc.graph;
  state.angles = doc.angles;
  if (wants_causal(f)) {
    state.causal = load_or_find_causal(f, doc.graph, report);
  } else {
    state.pauli = load_or_find_pauli(f, doc.graph, report);
  }
  return state;
}

std::vector<ScriptCommand> load_script(const Flags& f) {
  if (f.script.empty()) throw InvalidArgument("--script is required");
  std::string text = read_text_file(f.script);
  try {
    return parse_script(text);
  } catch (const ParseError& e) {
    throw ParseError(f.script + ": " + e.what(), 0, 0);
  }
}

void describe_steps(Report& report, const ScriptRun& run, bool as_json) {
  for (const ScriptStep& step : run.steps) {
    std::string key = "step." + std::to_string(step.line);
    std::string value = step.op + (step.applied ? " applied" : " rejected");
    report.add(key, value);
    if (step.reason) add_rejection(report, run.state.graph, *step.reason, as_json);
  }
  report.add("completed", run.completed);
}

int cmd_run_script(const Flags& f, std::ostream& out) {
  GraphDocument doc = load_graph(f);
  std::vector<ScriptCommand> commands = load_script(f);
  Report report;
  ScriptState state = initial_state(f, doc, report);
  ScriptRun run = run_script(std::move(state), commands, rewrite_options());
  describe_steps(report, run, f.json);
  const ScriptState& s = run.state;
  if (s.pauli) describe_cert(report, s.graph, *s.pauli);
  if (s.causal) describe_cert(report, s.graph, *s.causal);
  write_outputs(f, s.graph, s.angles, s.pauli, s.causal);
  report.emit(out, f.json);
  return run.completed ? kExitOk : kExitRejected;
}

int cmd_export_dot(const Flags& f, std::ostream& out) {
  GraphDocument doc = load_graph(f);
  std::string dot = to_dot(doc.graph, doc.angles);
  if (f.out.empty()) {
    out << dot;
  } else {
    write_text_file(f.out, dot);
  }
  return kExitOk;
}

int cmd_verify_semantics(const Flags& f, std::ostream& out) {
  GraphDocument doc = load_graph(f);
  Report report;
  MeasuredPattern before{doc.graph, doc.angles};
  for (VertexId v : doc.graph.non_outputs()) {
    if (!before.angles.count(v)) {
      before.angles[v] = Angle{};
      report.add("note", "angle of " + doc.graph.display(v) + " defaults to 0");
    }
  }
  GraphDocument with_angles{doc.graph, before.angles};
  ScriptState state = initial_state(f, with_angles, report);
  std::vector<ScriptCommand> commands = f.script.empty() ? std::vector<ScriptCommand>{} : load_script(f);
  ScriptRun run = run_script(std::move(state), commands, rewrite_options());
  describe_steps(report, run, f.json);
  MeasuredPattern after{run.state.graph, run.state.angles};
  LinearMap a = evaluate_pattern(before);
  LinearMap b = apply_output_z(evaluate_pattern(after), run.state.boundary_z);
  bool equal = maps_equal_up_to_scalar(a, b, f.tol);
  report.add("dimension", std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  report.add("tolerance", f.tol);
  report.add("equal_up_to_scalar", equal);
  report.emit(out, f.json);
  return equal && run.completed ? kExitOk : kExitRejected;
}

int cmd_bench_insert(const Flags& f, std::ostream& out) {
  InsertionTimings t = time_yz_insertion(f.size, f.trials, f.seed);
  Report report;
  report.add("size", f.size);
  report.add("trials", f.trials);
  report.add("seed", f.seed);
  report.add("insert_median_us", t.insert_median());
  report.add("refind_median_us", t.refind_median());
  report.add("speedup", t.refind_median() / t.insert_median());
  report.emit(out, f.json);
  return kExitOk;
}

void add_graph(CLI::App* sub, Flags& f) {
  sub->add_option("--graph", f.graph, "Graph document")->required();
}

void add_cert(CLI::App* sub, Flags& f) {
  sub->add_option("--cert", f.cert, "Flow certificate; searched for when absent");
  sub->add_option("--flow", f.flow, "Certificate kind when --cert is absent: pauli or causal");
}

void add_outputs(CLI::App* sub, Flags& f) {
  sub->add_option("--out", f.out, "Write the rewritten graph here");
  sub->add_option("--out-cert", f.out_cert, "Write the new certificate here");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Flow-preserving rewrites of labelled open graphs", "mbqcflow"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", f.json, "Print the report as JSON");

  CLI::App* check = app.add_subcommand("check-flow", "Verify a certificate");
  add_graph(check, f);
  check->add_option("--cert", f.cert, "Flow certificate")->required();

  CLI::App* find = app.add_subcommand("find-flow", "Search for a flow");
  add_graph(find, f);
  find->add_option("--kind", f.kind, "pauli or causal");
  find->add_option("--budget", f.budget, "Kernel search budget in bits");
  find->add_option("--out", f.out, "Write the certificate here");

  CLI::App* insert = app.add_subcommand("insert", "Insert a Z, YZ or XZ vertex");
  insert->add_option("type", f.insert_type, "z, yz or xz")->required()->check(CLI::IsMember({"z", "yz", "xz"}));
  add_graph(insert, f);
  add_cert(insert, f);
  add_outputs(insert, f);
  insert->add_option("--vertex", f.vertex, "Name of the new vertex");
  insert->add_option("--neighbours", f.neighbours, "Comma-separated neighbourhood");
  insert->add_option("--set-k", f.set_k, "Correction core K for the new vertex");
  insert->add_option("--budget", f.budget, "Kernel search budget when no certificate is given");

  CLI::App* del = app.add_subcommand("delete", "Delete a YZ, XZ or Z vertex");
  add_graph(del, f);
  add_cert(del, f);
  add_outputs(del, f);
  del->add_option("--vertex", f.vertex, "Vertex to delete")->required();

  CLI::App* piv = app.add_subcommand("pivot", "Pivot about an edge and transport the flow");
  add_graph(piv, f);
  add_cert(piv, f);
  add_outputs(piv, f);
  piv->add_option("--edge", f.edge, "The two endpoints, comma separated")->required();

  CLI::App* split = app.add_subcommand("split", "Split an XY vertex over a set");
  CLI::App* unfuse = app.add_subcommand("unfuse", "Unfuse a neighbour of an XY vertex");
  for (CLI::App* sub : {split, unfuse}) {
    add_graph(sub, f);
    add_cert(sub, f);
    add_outputs(sub, f);
    sub->add_option("--vertex", f.vertex, "Vertex to split")->required();
    sub->add_option("--neighbours", f.neighbours, "The set W, or the single neighbour for unfuse");
    sub->add_option("--names", f.names, "Names of the two new vertices, comma separated");
    sub->add_option("--angles", f.angles, "Angles for the split vertex and its far copy");
  }

  CLI::App* script = app.add_subcommand("run-script", "Apply a rewrite script");
  add_graph(script, f);
  add_cert(script, f);
  add_outputs(script, f);
  script->add_option("--script", f.script, "Rewrite script")->required();

  CLI::App* dot = app.add_subcommand("export-dot", "Render the graph as Graphviz");
  add_graph(dot, f);
  dot->add_option("--out", f.out, "Write the DOT text here");

  CLI::App* sem = app.add_subcommand("verify-semantics", "Compare linear maps before and after a script");
  add_graph(sem, f);
  add_cert(sem, f);
  sem->add_option("--script", f.script, "Rewrite script");
  sem->add_option("--tol", f.tol, "Relative tolerance");

  CLI::App* bench = app.add_subcommand("bench-insert", "Time incremental insertion against re-finding");
  bench->add_option("--size", f.size, "Vertices per graph");
  bench->add_option("--trials", f.trials, "Number of graphs");
  bench->add_option("--seed", f.seed, "Random seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    if (*check) return cmd_check_flow(f, out);
    if (*find) return cmd_find_flow(f, out);
    if (*insert) return cmd_insert(f, out);
    if (*del) return cmd_delete(f, out);
    if (*piv) return cmd_pivot(f, out);
    if (*split) return cmd_split(f, out, false);
    if (*unfuse) return cmd_split(f, out, true);
    if (*script) return cmd_run_script(f, out);
    if (*dot) return cmd_export_dot(f, out);
    if (*sem) return cmd_verify_semantics(f, out);
    if (*bench) return cmd_bench_insert(f, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace mbqc::cli
