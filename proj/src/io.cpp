#include "mbqc/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mbqc/errors.hpp"

namespace mbqc {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    std::size_t limit = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < limit; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    auto pos = what.find("syntax error");
    throw ParseError(pos == std::string::npos ? what : what.substr(pos), line, column);
  }
}

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError(path + ": " + message, 0, 0);
}

void require_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (const auto& item : obj.items()) {
    bool ok = false;
    for (const char* k : allowed) ok = ok || item.key() == k;
    if (!ok) fail(path, "unexpected field \"" + item.key() + "\"");
  }
}

VertexId read_id(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() || j.get<std::uint64_t>() > 0xffffffffULL) {
    fail(path, "expected a non-negative integer vertex id");
  }
  return VertexId(j.get<std::uint32_t>());
}

std::string quote(const std::string& s) { return json(s).dump(); }

std::string id_list(const VertexSet& s) {
  std::string out = "[";
  bool first = true;
  for (VertexId v : s) {
    if (!first) out += ", ";
    out += std::to_string(v.value);
    first = false;
  }
  return out + "]";
}

std::string pair_lines(const std::vector<Edge>& pairs) {
  if (pairs.empty()) return "[]";
  std::string out = "[\n";
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    out += "    [" + std::to_string(pairs[i].first.value) + ", " +
           std::to_string(pairs[i].second.value) + "]";
    out += i + 1 < pairs.size() ? ",\n" : "\n";
  }
  return out + "  ]";
}

std::vector<Edge> read_pairs(const json& arr, const std::string& path) {
  if (!arr.is_array()) fail(path, "expected a list of pairs");
  std::vector<Edge> out;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::string p = path + "[" + std::to_string(i) + "]";
    if (!arr[i].is_array() || arr[i].size() != 2) fail(p, "expected a pair of vertex ids");
    out.emplace_back(read_id(arr[i][0], p), read_id(arr[i][1], p));
  }
  return out;
}

VertexSet read_id_set(const json& arr, const std::string& path) {
  if (!arr.is_array()) fail(path, "expected a list of vertex ids");
  std::vector<VertexId> ids;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    ids.push_back(read_id(arr[i], path + "[" + std::to_string(i) + "]"));
  }
  VertexSet s = VertexSet::from_unsorted(ids);
  if (s.size() != ids.size()) fail(path, "repeated vertex id");
  return s;
}

}  // namespace

GraphDocument parse_graph_document(std::string_view text) {
  json doc = parse_json(text);
  require_keys(doc, "document", {"vertices", "edges"});
  if (!doc.contains("vertices")) fail("document", "missing field \"vertices\"");
  const json& vertices = doc["vertices"];
  if (!vertices.is_array()) fail("vertices", "expected a list");

  GraphBuilder builder;
  GraphDocument out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    std::string path = "vertices[" + std::to_string(i) + "]";
    const json& v = vertices[i];
    require_keys(v, path, {"id", "name", "label", "angle", "input", "output"});
    if (!v.contains("id")) fail(path, "missing field \"id\"");
    VertexId id = read_id(v["id"], path + ".id");
    std::optional<MeasLabel> label;
    if (v.contains("label")) {
      if (!v["label"].is_string()) fail(path + ".label", "expected a label string");
      label = parse_label(v["label"].get<std::string>());
      if (!label) fail(path + ".label", "unknown label " + v["label"].dump());
    }
    auto flag = [&](const char* key) {
      if (!v.contains(key)) return false;
      if (!v[key].is_boolean()) fail(path + "." + key, "expected true or false");
      return v[key].get<bool>();
    };
    bool input = flag("input");
    bool output = flag("output");
    std::string name;
    if (v.contains("name")) {
      if (!v["name"].is_string()) fail(path + ".name", "expected a string");
      name = v["name"].get<std::string>();
    }
    if (v.contains("angle")) {
      const json& a = v["angle"];
      std::optional<Angle> angle;
      if (a.is_string()) {
        angle = Angle::parse(a.get<std::string>());
      } else if (a.is_number()) {
        angle = Angle::radians(a.get<double>());
      }
      if (!angle) fail(path + ".angle", "expected a symbolic angle string or a number");
      if (output) fail(path + ".angle", "outputs carry no angle");
      out.angles[id] = *angle;
    }
    builder.add_vertex(id, label, input, output, std::move(name));
  }
  if (doc.contains("edges")) {
    for (const auto& [a, b] : read_pairs(doc["edges"], "edges")) builder.add_edge(a, b);
  }
  try {
    out.graph = builder.build();
  } catch (const InvalidArgument& e) {
    fail("document", e.what());
  }
  return out;
}

std::string write_graph_document(const LabelledOpenGraph& g, const AngleMap& angles) {
  std::string out = "{\n  \"vertices\": [";
  const auto& ids = g.vertices().items();
  if (!ids.empty()) out += "\n";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    VertexId v = ids[i];
    out += "    {\"id\": " + std::to_string(v.value);
    if (!g.name(v).empty()) out += ", \"name\": " + quote(g.name(v));
    if (auto l = g.label(v)) out += ", \"label\": \"" + std::string(to_string(*l)) + "\"";
    if (auto it = angles.find(v); it != angles.end()) {
      const Angle& a = it->second;
      out += ", \"angle\": " + (a.exact() ? quote(a.to_string()) : a.to_string());
    }
    if (g.is_input(v)) out += ", \"input\": true";
    if (g.is_output(v)) out += ", \"output\": true";
    out += i + 1 < ids.size() ? "},\n" : "}\n";
  }
  out += ids.empty() ? "],\n" : "  ],\n";
  out += "  \"edges\": " + pair_lines(g.edges()) + "\n}\n";
  return out;
}

CertKind parse_cert_kind(std::string_view text) {
  json doc = parse_json(text);
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
    fail("document", "missing string field \"kind\"");
  }
  std::string kind = doc["kind"].get<std::string>();
  if (kind == "pauli") return CertKind::Pauli;
  if (kind == "causal") return CertKind::Causal;
  fail("kind", "expected \"pauli\" or \"causal\"");
}

PauliFlowCert parse_pauli_cert(std::string_view text, const LabelledOpenGraph& g) {
  json doc = parse_json(text);
  require_keys(doc, "document", {"kind", "focused", "correction", "order"});
  if (parse_cert_kind(text) != CertKind::Pauli) fail("kind", "expected \"pauli\"");
  PauliFlowCert cert;
  if (doc.contains("focused")) {
    if (!doc["focused"].is_boolean()) fail("focused", "expected true or false");
    cert.focused = doc["focused"].get<bool>();
  }
  if (!doc.contains("correction") || !doc["correction"].is_array()) {
    fail("correction", "expected a list of correction records");
  }
  const json& corr = doc["correction"];
  for (std::size_t i = 0; i < corr.size(); ++i) {
    std::string path = "correction[" + std::to_string(i) + "]";
    require_keys(corr[i], path, {"vertex", "set"});
    if (!corr[i].contains("vertex") || !corr[i].contains("set")) {
      fail(path, "expected fields \"vertex\" and \"set\"");
    }
    VertexId v = read_id(corr[i]["vertex"], path + ".vertex");
    if (cert.correction.has(v)) fail(path, "repeated vertex");
    cert.correction.set(v, read_id_set(corr[i]["set"], path + ".set"));
  }
  try {
    cert.correction.check_well_formed(g);
  } catch (const InvalidArgument& e) {
    fail("correction", e.what());
  }
  std::vector<Edge> relation = doc.contains("order") ? read_pairs(doc["order"], "order") : std::vector<Edge>{};
  PartialOrder::Build built;
  try {
    built = PartialOrder::from_relation(g.non_outputs(), relation);
  } catch (const InvalidArgument& e) {
    fail("order", e.what());
  }
  if (!built.order) fail("order", "relation is cyclic");
  cert.order = std::move(*built.order);
  return cert;
}

CausalFlowCert parse_causal_cert(std::string_view text, const LabelledOpenGraph& g) {
  json doc = parse_json(text);
  require_keys(doc, "document", {"kind", "correction", "order"});
  if (parse_cert_kind(text) != CertKind::Causal) fail("kind", "expected \"causal\"");
  CausalFlowCert cert;
  if (!doc.contains("correction") || !doc["correction"].is_array()) {
    fail("correction", "expected a list of correction records");
  }
  const json& corr = doc["correction"];
  for (std::size_t i = 0; i < corr.size(); ++i) {
    std::string path = "correction[" + std::to_string(i) + "]";
    require_keys(corr[i], path, {"vertex", "successor"});
    if (!corr[i].contains("vertex") || !corr[i].contains("successor")) {
      fail(path, "expected fields \"vertex\" and \"successor\"");
    }
    VertexId v = read_id(corr[i]["vertex"], path + ".vertex");
    if (cert.successor.count(v)) fail(path, "repeated vertex");
    cert.successor[v] = read_id(corr[i]["successor"], path + ".successor");
  }
  std::vector<Edge> relation = doc.contains("order") ? read_pairs(doc["order"], "order") : std::vector<Edge>{};
  PartialOrder::Build built;
  try {
    built = PartialOrder::from_relation(g.vertices(), relation);
  } catch (const InvalidArgument& e) {
    fail("order", e.what());
  }
  if (!built.order) fail("order", "relation is cyclic");
  cert.order = std::move(*built.order);
  return cert;
}

std::string write_pauli_cert(const PauliFlowCert& cert) {
  std::string out = "{\n  \"kind\": \"pauli\",\n  \"focused\": ";
  out += cert.focused ? "true" : "false";
  out += ",\n  \"correction\": [";
  if (cert.correction.size() != 0) out += "\n";
  std::size_t i = 0;
  for (const auto& [v, s] : cert.correction) {
    out += "    {\"vertex\": " + std::to_string(v.value) + ", \"set\": " + id_list(s) + "}";
    out += ++i < cert.correction.size() ? ",\n" : "\n";
  }
  out += cert.correction.size() != 0 ? "  ],\n" : "],\n";
  out += "  \"order\": " + pair_lines(cert.order.covering_relation()) + "\n}\n";
  return out;
}

std::string write_causal_cert(const CausalFlowCert& cert) {
  std::string out = "{\n  \"kind\": \"causal\",\n  \"correction\": [";
  if (!cert.successor.empty()) out += "\n";
  std::size_t i = 0;
  for (const auto& [v, s] : cert.successor) {
    out += "    {\"vertex\": " + std::to_string(v.value) + ", \"successor\": " +
           std::to_string(s.value) + "}";
    out += ++i < cert.successor.size() ? ",\n" : "\n";
  }
  out += cert.successor.empty() ? "],\n" : "  ],\n";
  out += "  \"order\": " + pair_lines(cert.order.covering_relation()) + "\n}\n";
  return out;
}

std::string to_dot(const LabelledOpenGraph& g, const AngleMap& angles) {
  std::ostringstream os;
  os << "graph G {\n";
  for (VertexId v : g.vertices()) {
    std::string shape = "circle";
    std::string text = g.display(v);
    if (auto l = g.label(v)) {
      switch (*l) {
        case MeasLabel::XY: shape = "circle"; break;
        case MeasLabel::XZ: shape = "diamond"; break;
        case MeasLabel::YZ: shape = "box"; break;
        case MeasLabel::X: shape = "triangle"; break;
        case MeasLabel::Y: shape = "hexagon"; break;
        case MeasLabel::Z: shape = "square"; break;
      }
      text += "\\n" + std::string(to_string(*l));
      if (auto it = angles.find(v); it != angles.end()) text += " " + it->second.to_string();
    }
    os << "  " << v.value << " [label=\"" << text << "\", shape=" << shape;
    if (g.is_input(v)) os << ", peripheries=2";
    if (g.is_output(v)) os << ", style=filled, fillcolor=lightgrey";
    os << "];\n";
  }
  for (const auto& [a, b] : g.edges()) os << "  " << a.value << " -- " << b.value << ";\n";
  os << "}\n";
  return os.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path, 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

}  // namespace mbqc
