#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mbqc/causal_flow.hpp"
#include "mbqc/flow.hpp"
#include "mbqc/graph.hpp"
#include "mbqc/io.hpp"
#include "mbqc/rewrite.hpp"

namespace mbqc {

/**
 * One line of a rewrite script: an operation name followed by key=value
 * arguments. Vertices are referred to by name or by decimal id; lists are
 * comma separated.
 *
 *   insert-z name=z W=a,b
 *   insert-yz name=z S=a,b [K=c,d]
 *   insert-xz name=z S=a,b [K=c,d]
 *   insert-yz-causal name=z S=a,b
 *   delete v=z
 *   pivot u=a v=b
 *   split x=a W=b,c names=x1,x2 [angles=pi/4,pi/2]
 *   unfuse a=a b=b names=x1,x2
 *
 * Blank lines and text after '#' are ignored.
 */
struct ScriptCommand {
  std::string op;
  std::map<std::string, std::string> args;
  std::size_t line = 0;
};

/** Throws ParseError with the offending line and column. */
std::vector<ScriptCommand> parse_script(std::string_view text);

struct ScriptState {
  LabelledOpenGraph graph;
  AngleMap angles;
  std::optional<PauliFlowCert> pauli;
  std::optional<CausalFlowCert> causal;
  /** Outputs carrying a pending Z from pivots. */
  VertexSet boundary_z;
};

struct ScriptStep {
  std::size_t line = 0;
  std::string op;
  bool applied = false;
  std::optional<Rejection> reason;
  std::vector<std::string> notes;
  bool certificate_only = false;
};

struct ScriptRun {
  ScriptState state;
  std::vector<ScriptStep> steps;
  /** False when a step was rejected; later steps are not run. */
  bool completed = true;
};

/**
 * Applies the commands in order. New vertices get fresh ids and angle 0;
 * a pivot updates the angles as the semantic layer requires. Malformed
 * commands throw InvalidArgument.
 */
ScriptRun run_script(
    ScriptState state, const std::vector<ScriptCommand>& commands,
    const RewriteOptions& options = {});

/** Resolves a vertex by display name first and decimal id second. */
VertexId resolve_vertex(const LabelledOpenGraph& g, std::string_view ref);
VertexSet resolve_vertices(const LabelledOpenGraph& g, std::string_view list);

}  // namespace mbqc
