#pragma once

#include <map>
#include <string>
#include <string_view>

#include "mbqc/angle.hpp"
#include "mbqc/causal_flow.hpp"
#include "mbqc/flow.hpp"
#include "mbqc/graph.hpp"

namespace mbqc {

using AngleMap = std::map<VertexId, Angle>;

struct GraphDocument {
  LabelledOpenGraph graph;
  /** Only vertices whose record carried an angle. */
  AngleMap angles;
};

/** Throws ParseError for malformed text or an invalid graph. */
GraphDocument parse_graph_document(std::string_view text);
/** Canonical text; parsing it back and writing again is byte-identical. */
std::string write_graph_document(const LabelledOpenGraph& g, const AngleMap& angles = {});

enum class CertKind { Pauli, Causal };

/** Reads the "kind" field of a certificate document. */
CertKind parse_cert_kind(std::string_view text);
PauliFlowCert parse_pauli_cert(std::string_view text, const LabelledOpenGraph& g);
CausalFlowCert parse_causal_cert(std::string_view text, const LabelledOpenGraph& g);
std::string write_pauli_cert(const PauliFlowCert& cert);
std::string write_causal_cert(const CausalFlowCert& cert);

/** Graphviz rendering: shape by label, inputs doubled, outputs filled. */
std::string to_dot(const LabelledOpenGraph& g, const AngleMap& angles = {});

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace mbqc
