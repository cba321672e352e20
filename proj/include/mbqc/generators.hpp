#pragma once

#include <cstddef>
#include <random>

#include "mbqc/graph.hpp"

namespace mbqc {

struct CircuitGraphParams {
  std::size_t wires = 4;
  /** Wires that start at a non-input vertex, giving |I| < |O|. */
  std::size_t fresh_wires = 0;
  /** Single-qubit steps; each appends one XY vertex to a random wire. */
  std::size_t steps = 8;
  /** Expected controlled-Z gates between wire tips after each step. */
  double cz_rate = 0.5;
};

/**
 * Graph of a random J/CZ circuit. Every non-output is XY-labelled and the
 * graph has causal flow with each wire vertex corrected by its successor.
 */
LabelledOpenGraph circuit_graph(std::mt19937_64& rng, const CircuitGraphParams& params);

}  // namespace mbqc
