#include "mbqc/semantics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "mbqc/errors.hpp"

namespace mbqc {

namespace {

constexpr double kPi = std::numbers::pi;

Complex phase(double a) { return std::polar(1.0, a); }

struct Factor {
  std::vector<int> vars;  // ascending
  std::vector<Complex> table;  // bit k of the index is the value of vars[k]
};

std::size_t sub_index(const std::vector<int>& sub, const std::vector<int>& full, std::size_t assignment) {
  std::size_t out = 0;
  std::size_t j = 0;
  for (std::size_t k = 0; k < full.size() && j < sub.size(); ++k) {
    if (full[k] == sub[j]) {
      if ((assignment >> k) & 1U) out |= std::size_t{1} << j;
      ++j;
    }
  }
  return out;
}

Factor multiply(const Factor& a, const Factor& b) {
  Factor out;
  std::set_union(a.vars.begin(), a.vars.end(), b.vars.begin(), b.vars.end(), std::back_inserter(out.vars));
  out.table.resize(std::size_t{1} << out.vars.size());
  for (std::size_t x = 0; x < out.table.size(); ++x) {
    out.table[x] = a.table[sub_index(a.vars, out.vars, x)] * b.table[sub_index(b.vars, out.vars, x)];
  }
  return out;
}

Factor sum_out(const Factor& f, int var) {
  auto pos = std::find(f.vars.begin(), f.vars.end(), var);
  std::size_t k = static_cast<std::size_t>(pos - f.vars.begin());
  Factor out;
  out.vars = f.vars;
  out.vars.erase(out.vars.begin() + static_cast<std::ptrdiff_t>(k));
  out.table.assign(std::size_t{1} << out.vars.size(), Complex{});
  for (std::size_t x = 0; x < f.table.size(); ++x) {
    std::size_t low = x & ((std::size_t{1} << k) - 1);
    std::size_t high = (x >> (k + 1)) << k;
    out.table[low | high] += f.table[x];
  }
  return out;
}

/** Label and angle of the effect e·H. */
std::pair<MeasLabel, Angle> through_hadamard(MeasLabel l, const Angle& a) {
  switch (l) {
    case MeasLabel::XY: return {MeasLabel::YZ, a};
    case MeasLabel::YZ: return {MeasLabel::XY, a};
    case MeasLabel::X: return {MeasLabel::Z, a};
    case MeasLabel::Z: return {MeasLabel::X, a};
    case MeasLabel::XZ: return {MeasLabel::XZ, Angle::quarters(2) - a};
    case MeasLabel::Y: return {MeasLabel::Y, a + Angle::quarters(4)};
  }
  return {l, a};
}

/** Angle of the effect e·Z; the label is unchanged. */
Angle through_z(MeasLabel l, const Angle& a) {
  switch (l) {
    case MeasLabel::XY:
    case MeasLabel::X:
    case MeasLabel::Y: return a + Angle::quarters(4);
    case MeasLabel::XZ:
    case MeasLabel::YZ:
    case MeasLabel::Z: return -a;
  }
  return a;
}

const Angle& angle_of(const MeasuredPattern& p, VertexId v) {
  auto it = p.angles.find(v);
  if (it == p.angles.end()) {
    throw InvalidArgument("no angle for measured vertex " + std::to_string(v.value));
  }
  return it->second;
}

}  // namespace

std::array<Complex, 2> measurement_effect(MeasLabel label, const Angle& angle) {
  const double a = angle.value();
  const double r = 1.0 / std::sqrt(2.0);
  switch (label) {
    case MeasLabel::XY:
    case MeasLabel::X: return {Complex{1.0}, phase(-a)};
    case MeasLabel::Y: return {Complex{1.0}, phase(-a - kPi / 2)};
    case MeasLabel::YZ:
    case MeasLabel::Z: return {(1.0 + phase(-a)) * r, (1.0 - phase(-a)) * r};
    case MeasLabel::XZ: return {(1.0 + phase(-a)) * r, (1.0 - phase(-a)) * r * Complex{0.0, -1.0}};
  }
  return {};
}

LinearMap evaluate_pattern(const MeasuredPattern& p, const EvaluationOptions& options) {
  const LabelledOpenGraph& g = p.graph;
  if (g.size() > options.max_vertices) {
    throw SizeLimitExceeded(
        "pattern has " + std::to_string(g.size()) + " vertices, limit is " +
        std::to_string(options.max_vertices));
  }
  const std::vector<VertexId>& ids = g.vertices().items();
  auto index = [&](VertexId v) {
    return static_cast<int>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
  };

  std::vector<Factor> factors;
  const double r = 1.0 / std::sqrt(2.0);
  for (const Edge& e : g.edges()) {
    int a = index(e.first);
    int b = index(e.second);
    factors.push_back({{std::min(a, b), std::max(a, b)}, {r, r, r, -r}});
  }
  for (VertexId v : g.non_outputs()) {
    auto eff = measurement_effect(g.measurement(v), angle_of(p, v));
    factors.push_back({{index(v)}, {eff[0], eff[1]}});
  }

  VertexSet internal = g.non_outputs() - g.inputs();
  std::vector<VertexId> order = options.elimination_order;
  if (order.empty()) {
    order = internal.items();
  } else if (VertexSet::from_unsorted(order) != internal || order.size() != internal.size()) {
    throw InvalidArgument("elimination order must list every internal vertex once");
  }

  for (VertexId v : order) {
    int var = index(v);
    Factor merged{{}, {Complex{1.0}}};
    std::vector<Factor> rest;
    for (Factor& f : factors) {
      if (std::binary_search(f.vars.begin(), f.vars.end(), var)) {
        merged = multiply(merged, f);
      } else {
        rest.push_back(std::move(f));
      }
    }
    rest.push_back(sum_out(merged, var));
    factors = std::move(rest);
  }
  Factor total{{}, {Complex{1.0}}};
  for (const Factor& f : factors) total = multiply(total, f);

  LinearMap m;
  m.outputs = g.outputs().items();
  m.inputs = g.inputs().items();
  m.data.assign(m.rows() * m.cols(), Complex{});
  for (std::size_t row = 0; row < m.rows(); ++row) {
    for (std::size_t col = 0; col < m.cols(); ++col) {
      std::vector<int> value(ids.size(), -1);
      bool consistent = true;
      auto assign = [&](VertexId v, int bit) {
        int& slot = value[index(v)];
        if (slot != -1 && slot != bit) consistent = false;
        slot = bit;
      };
      for (std::size_t k = 0; k < m.outputs.size(); ++k) assign(m.outputs[k], (row >> k) & 1U);
      for (std::size_t k = 0; k < m.inputs.size(); ++k) assign(m.inputs[k], (col >> k) & 1U);
      if (!consistent) continue;
      std::size_t x = 0;
      for (std::size_t k = 0; k < total.vars.size(); ++k) {
        if (value[total.vars[k]] == 1) x |= std::size_t{1} << k;
      }
      m.at(row, col) = total.table[x];
    }
  }
  return m;
}

bool maps_equal_up_to_scalar(const LinearMap& A, const LinearMap& B, double tol) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) {
    throw InvalidArgument("linear maps have different dimensions");
  }
  std::size_t best = 0;
  double max_a = 0.0;
  for (std::size_t k = 0; k < B.data.size(); ++k) {
    if (std::abs(B.data[k]) > std::abs(B.data[best])) best = k;
    max_a = std::max(max_a, std::abs(A.data[k]));
  }
  double max_b = B.data.empty() ? 0.0 : std::abs(B.data[best]);
  // Round-off leaves cancelled maps at ~1e-16 rather than exactly zero.
  if (max_b <= tol || max_a <= tol) return max_a <= tol && max_b <= tol;
  Complex s = A.data[best] / B.data[best];
  if (std::abs(s) == 0.0) return false;
  for (std::size_t k = 0; k < A.data.size(); ++k) {
    if (std::abs(A.data[k] - s * B.data[k]) > tol * max_a) return false;
  }
  return true;
}

LinearMap apply_output_z(const LinearMap& m, const VertexSet& outputs) {
  LinearMap out = m;
  std::size_t mask = 0;
  for (std::size_t k = 0; k < m.outputs.size(); ++k) {
    if (outputs.contains(m.outputs[k])) mask |= std::size_t{1} << k;
  }
  for (std::size_t row = 0; row < m.rows(); ++row) {
    if (__builtin_popcountll(row & mask) % 2 == 0) continue;
    for (std::size_t col = 0; col < m.cols(); ++col) out.at(row, col) = -out.at(row, col);
  }
  return out;
}

bool check_phase_shift(
    const MeasuredPattern& p, VertexId x, VertexId z, const Angle& alpha, const Angle& beta,
    double tol) {
  const LabelledOpenGraph& g = p.graph;
  if (!g.contains(x) || !g.contains(z)) throw InvalidArgument("unknown vertex");
  if (g.is_output(x) || g.measurement(x) != MeasLabel::XY) {
    throw InvalidArgument("vertex x must be XY-measured");
  }
  if (g.is_output(z) || g.measurement(z) != MeasLabel::YZ) {
    throw InvalidArgument("vertex z must be YZ-measured");
  }
  if (g.neighbours(z) != VertexSet{x}) throw InvalidArgument("z must have x as its only neighbour");
  MeasuredPattern merged = p;
  merged.angles[x] = alpha + beta;
  merged.angles[z] = Angle{};
  MeasuredPattern shifted = p;
  shifted.angles[x] = alpha;
  shifted.angles[z] = beta;
  return maps_equal_up_to_scalar(evaluate_pattern(merged), evaluate_pattern(shifted), tol);
}

PivotedPattern pivot_pattern(const MeasuredPattern& p, VertexId u, VertexId v) {
  const LabelledOpenGraph& g = p.graph;
  PivotedPattern out;
  out.pattern.graph = pivot(g, u, v);
  out.pattern.angles = p.angles;
  for (VertexId e : {u, v}) {
    if (g.is_output(e) || g.is_input(e)) throw InvalidArgument("pivot endpoints must be measured non-inputs");
    if (g.measurement(e) == MeasLabel::Y) {
      double off = std::remainder(angle_of(p, e).value(), kPi);
      if (std::abs(off) > 1e-12) {
        throw InvalidArgument("Y-measured pivot endpoint " + std::to_string(e.value) + " needs angle 0 or pi");
      }
    }
    auto [label, angle] = through_hadamard(g.measurement(e), angle_of(p, e));
    out.pattern.graph = relabel(out.pattern.graph, e, label);
    out.pattern.angles[e] = angle;
  }
  for (VertexId w : g.neighbours(u) & g.neighbours(v)) {
    if (g.is_output(w)) {
      out.boundary_z.insert(w);
    } else {
      out.pattern.angles[w] = through_z(g.measurement(w), angle_of(p, w));
    }
  }
  return out;
}

AngleMap split_angles(const LabelledOpenGraph& g, const AngleMap& angles, const SplitSpec& spec) {
  auto it = angles.find(spec.x);
  if (it == angles.end()) throw InvalidArgument("no angle for the split vertex");
  if (!g.contains(spec.x)) throw InvalidArgument("unknown split vertex");
  Angle a1 = it->second;
  Angle a2;
  if (spec.angle_split) {
    std::tie(a1, a2) = *spec.angle_split;
    double gap = std::remainder((a1 + a2).value() - it->second.value(), 2 * kPi);
    if (std::abs(gap) > 1e-12) throw InvalidArgument("split angles do not sum to the original angle");
  }
  AngleMap out = angles;
  out[spec.x] = a1;
  out[spec.x2] = a2;
  out[spec.x1] = Angle{};
  return out;
}

}  // namespace mbqc
