#include "mbqc/script.hpp"

#include <algorithm>
#include <charconv>

#include "mbqc/errors.hpp"
#include "mbqc/semantics.hpp"

namespace mbqc {

namespace {

const std::map<std::string, std::vector<std::string>>& known_ops() {
  static const std::map<std::string, std::vector<std::string>> ops = {
      {"insert-z", {"name", "W"}},
      {"insert-yz", {"name", "S", "K"}},
      {"insert-xz", {"name", "S", "K"}},
      {"insert-yz-causal", {"name", "S"}},
      {"delete", {"v"}},
      {"pivot", {"u", "v"}},
      {"split", {"x", "W", "names", "angles"}},
      {"unfuse", {"a", "b", "names"}},
  };
  return ops;
}

std::vector<std::string> split_list(std::string_view list) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    std::string_view item = list.substr(start, comma - start);
    if (!item.empty()) out.emplace_back(item);
    start = comma + 1;
  }
  return out;
}

const std::string& required(const ScriptCommand& cmd, const std::string& key) {
  auto it = cmd.args.find(key);
  if (it == cmd.args.end()) {
    throw InvalidArgument("line " + std::to_string(cmd.line) + ": " + cmd.op + " needs " + key + "=");
  }
  return it->second;
}

std::string optional_arg(const ScriptCommand& cmd, const std::string& key) {
  auto it = cmd.args.find(key);
  return it == cmd.args.end() ? std::string() : it->second;
}

std::string require_new_name(const LabelledOpenGraph& g, const std::string& name) {
  if (!name.empty() && g.find_by_name(name)) {
    throw InvalidArgument("vertex name " + name + " is already in use");
  }
  return name;
}

std::pair<std::string, std::string> two_names(const ScriptCommand& cmd) {
  std::vector<std::string> names = split_list(optional_arg(cmd, "names"));
  if (names.empty()) return {};
  if (names.size() != 2) throw InvalidArgument("names= needs exactly two entries");
  return {names[0], names[1]};
}

bool tracks_angles(const ScriptState& s) {
  for (VertexId v : s.graph.non_outputs()) {
    if (!s.angles.count(v)) return false;
  }
  return true;
}

const PauliFlowCert& need_pauli(const ScriptState& s, const ScriptCommand& cmd) {
  if (!s.pauli) throw InvalidArgument(cmd.op + " needs a Pauli flow certificate");
  return *s.pauli;
}

template <class Cert>
void record(ScriptStep* step, const RewriteReport<Cert>& report) {
  step->applied = report.applied;
  step->reason = report.reason;
  step->notes = report.notes;
  step->certificate_only = report.certificate_only;
}

}  // namespace

VertexId resolve_vertex(const LabelledOpenGraph& g, std::string_view ref) {
  if (auto byname = g.find_by_name(ref)) return *byname;
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(ref.data(), ref.data() + ref.size(), value);
  if (ec == std::errc() && ptr == ref.data() + ref.size() && g.contains(VertexId(value))) {
    return VertexId(value);
  }
  throw InvalidArgument("unknown vertex " + std::string(ref));
}

VertexSet resolve_vertices(const LabelledOpenGraph& g, std::string_view list) {
  std::vector<VertexId> out;
  for (const std::string& item : split_list(list)) out.push_back(resolve_vertex(g, item));
  return VertexSet::from_unsorted(std::move(out));
}

std::vector<ScriptCommand> parse_script(std::string_view text) {
  std::vector<ScriptCommand> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    pos = end + 1;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    ScriptCommand cmd;
    cmd.line = line_no;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      if (i >= line.size()) break;
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
      std::string_view token = line.substr(start, i - start);
      if (cmd.op.empty()) {
        if (!known_ops().count(std::string(token))) {
          throw ParseError("unknown operation '" + std::string(token) + "'", line_no, start + 1);
        }
        cmd.op = token;
        continue;
      }
      std::size_t eq = token.find('=');
      if (eq == std::string_view::npos || eq == 0) {
        throw ParseError("expected key=value, got '" + std::string(token) + "'", line_no, start + 1);
      }
      std::string key(token.substr(0, eq));
      const auto& allowed = known_ops().at(cmd.op);
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        throw ParseError("operation " + cmd.op + " has no argument '" + key + "'", line_no, start + 1);
      }
      if (!cmd.args.emplace(key, std::string(token.substr(eq + 1))).second) {
        throw ParseError("argument '" + key + "' given twice", line_no, start + 1);
      }
    }
    if (!cmd.op.empty()) out.push_back(std::move(cmd));
    if (end == text.size()) break;
  }
  return out;
}

ScriptRun run_script(
    ScriptState state, const std::vector<ScriptCommand>& commands, const RewriteOptions& options) {
  ScriptRun run;
  for (const ScriptCommand& cmd : commands) {
    ScriptStep step;
    step.line = cmd.line;
    step.op = cmd.op;
    LabelledOpenGraph& g = state.graph;
    bool angles = tracks_angles(state);

    if (cmd.op == "insert-z" || cmd.op == "insert-yz" || cmd.op == "insert-xz") {
      const PauliFlowCert& cert = need_pauli(state, cmd);
      std::string name = require_new_name(g, optional_arg(cmd, "name"));
      VertexId z = g.fresh_id();
      PauliReport report;
      if (cmd.op == "insert-z") {
        report = insert_z(g, cert, z, resolve_vertices(g, optional_arg(cmd, "W")), options, name);
      } else {
        InsertionSpec spec;
        spec.z = z;
        spec.S = resolve_vertices(g, optional_arg(cmd, "S"));
        spec.label = cmd.op == "insert-yz" ? MeasLabel::YZ : MeasLabel::XZ;
        spec.name = name;
        if (cmd.args.count("K")) spec.K = resolve_vertices(g, cmd.args.at("K"));
        report = spec.label == MeasLabel::YZ ? insert_yz_pauli(g, cert, spec, options)
                                             : insert_xz_pauli(g, cert, spec, options);
      }
      record(&step, report);
      if (report.applied) {
        g = report.new_graph;
        state.pauli = report.new_cert;
        state.angles[z] = Angle{};
      }
    } else if (cmd.op == "insert-yz-causal") {
      if (!state.causal) throw InvalidArgument("insert-yz-causal needs a causal flow certificate");
      std::string name = require_new_name(g, optional_arg(cmd, "name"));
      VertexId z = g.fresh_id();
      CausalReport report = insert_yz_causal(
          g, *state.causal, z, resolve_vertices(g, optional_arg(cmd, "S")), options, name);
      record(&step, report);
      if (report.applied) {
        g = report.new_graph;
        state.causal = report.new_cert;
        state.angles[z] = Angle{};
      }
    } else if (cmd.op == "delete") {
      VertexId z = resolve_vertex(g, required(cmd, "v"));
      if (state.pauli) {
        PauliReport report = delete_planar_z_like(g, *state.pauli, z, options);
        record(&step, report);
        g = report.new_graph;
        state.pauli = report.new_cert;
      } else if (state.causal) {
        CausalReport report = delete_planar_z_like(g, *state.causal, z, options);
        record(&step, report);
        g = report.new_graph;
        state.causal = report.new_cert;
      } else {
        throw InvalidArgument("delete needs a certificate");
      }
      state.angles.erase(z);
    } else if (cmd.op == "pivot") {
      const PauliFlowCert& cert = need_pauli(state, cmd);
      VertexId u = resolve_vertex(g, required(cmd, "u"));
      VertexId v = resolve_vertex(g, required(cmd, "v"));
      PauliReport report = pivot_with_flow(g, cert, u, v, options);
      record(&step, report);
      if (angles) {
        PivotedPattern pivoted = pivot_pattern({g, state.angles}, u, v);
        state.angles = pivoted.pattern.angles;
        state.boundary_z ^= pivoted.boundary_z;
      }
      g = report.new_graph;
      state.pauli = report.new_cert;
    } else if (cmd.op == "split" || cmd.op == "unfuse") {
      const PauliFlowCert& cert = need_pauli(state, cmd);
      auto [name1, name2] = two_names(cmd);
      require_new_name(g, name1);
      require_new_name(g, name2);
      SplitSpec spec;
      spec.x1 = g.fresh_id();
      spec.x2 = VertexId(spec.x1.value + 1);
      spec.name1 = name1;
      spec.name2 = name2;
      PauliReport report;
      if (cmd.op == "split") {
        spec.x = resolve_vertex(g, required(cmd, "x"));
        spec.W = resolve_vertices(g, optional_arg(cmd, "W"));
        if (cmd.args.count("angles")) {
          std::vector<std::string> parts = split_list(cmd.args.at("angles"));
          if (parts.size() != 2) throw InvalidArgument("angles= needs exactly two entries");
          auto a1 = Angle::parse(parts[0]);
          auto a2 = Angle::parse(parts[1]);
          if (!a1 || !a2) throw InvalidArgument("malformed angle in angles=");
          spec.angle_split = std::pair{*a1, *a2};
        }
        report = vertex_split(g, cert, spec, options);
      } else {
        spec.x = resolve_vertex(g, required(cmd, "a"));
        spec.W = VertexSet{resolve_vertex(g, required(cmd, "b"))};
        report = neighbour_unfuse(g, cert, spec.x, *spec.W.begin(), spec.x1, spec.x2, options);
      }
      record(&step, report);
      if (report.applied) {
        if (angles) state.angles = split_angles(g, state.angles, spec);
        g = report.new_graph;
        state.pauli = report.new_cert;
      }
    }

    bool applied = step.applied;
    run.steps.push_back(std::move(step));
    if (!applied) {
      run.completed = false;
      break;
    }
  }
  run.state = std::move(state);
  return run;
}

}  // namespace mbqc
