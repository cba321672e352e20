#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

#include "mbqc/angle.hpp"
#include "mbqc/graph.hpp"
#include "mbqc/io.hpp"
#include "mbqc/rewrite.hpp"

namespace mbqc {

using Complex = std::complex<double>;

struct MeasuredPattern {
  LabelledOpenGraph graph;
  /** One angle per non-output. */
  AngleMap angles;
};

/**
 * Dense 2^|O| × 2^|I| matrix. Bit k of a row index is the value on the
 * k-th output in ascending id order; columns likewise for inputs.
 */
struct LinearMap {
  std::vector<VertexId> outputs;
  std::vector<VertexId> inputs;
  std::vector<Complex> data;  // row-major

  std::size_t rows() const { return std::size_t{1} << outputs.size(); }
  std::size_t cols() const { return std::size_t{1} << inputs.size(); }
  const Complex& at(std::size_t r, std::size_t c) const { return data[r * cols() + c]; }
  Complex& at(std::size_t r, std::size_t c) { return data[r * cols() + c]; }
};

struct EvaluationOptions {
  std::size_t max_vertices = 12;
  /** Order in which internal vertices are summed out; empty means ascending id. */
  std::vector<VertexId> elimination_order;
};

/** Effect ⟨e| of a measurement as the pair (⟨e|0⟩, ⟨e|1⟩). */
std::array<Complex, 2> measurement_effect(MeasLabel label, const Angle& angle);

/**
 * Contracts the ZX network: a phase-free Z-spider per vertex, a Hadamard
 * on every edge and the measurement effect on every non-output.
 */
LinearMap evaluate_pattern(const MeasuredPattern& p, const EvaluationOptions& options = {});

/**
 * ∃ s ≠ 0 with max|A − sB| ≤ tol · max|A|, s read off the largest entry of B.
 * A map whose entries are all within tol of zero counts as the zero map.
 */
bool maps_equal_up_to_scalar(const LinearMap& A, const LinearMap& B, double tol = 1e-9);

/** Multiplies by Z on each listed output. */
LinearMap apply_output_z(const LinearMap& m, const VertexSet& outputs);

/** Moving β from the XY vertex x onto its sole YZ neighbour z keeps the map. */
bool check_phase_shift(
    const MeasuredPattern& p, VertexId x, VertexId z, const Angle& alpha, const Angle& beta,
    double tol = 1e-9);

struct PivotedPattern {
  MeasuredPattern pattern;
  /** Outputs that need a Z on their wire to match the original map. */
  VertexSet boundary_z;
};

/**
 * Pattern on G∧uv with the same map as p up to scalar and boundary Z's:
 * Hadamards absorbed into u and v, Z's into the common neighbours.
 * A Y-measured endpoint must carry angle 0 or π.
 */
PivotedPattern pivot_pattern(const MeasuredPattern& p, VertexId u, VertexId v);

/** Angles after splitting: α1 on x, α2 on x'' and 0 on x'. */
AngleMap split_angles(const LabelledOpenGraph& g, const AngleMap& angles, const SplitSpec& spec);

}  // namespace mbqc
