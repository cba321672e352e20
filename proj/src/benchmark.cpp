#include "mbqc/benchmark.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

#include "mbqc/errors.hpp"
#include "mbqc/flow.hpp"
#include "mbqc/generators.hpp"
#include "mbqc/rewrite.hpp"

namespace mbqc {

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  std::size_t n = values.size();
  return n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

double InsertionTimings::insert_median() const { return median(insert_us); }
double InsertionTimings::refind_median() const { return median(refind_us); }

InsertionTimings time_yz_insertion(std::size_t size, std::size_t trials, std::uint64_t seed) {
  if (size < 8 || trials == 0) throw InvalidArgument("size must be at least 8 and trials positive");
  using Clock = std::chrono::steady_clock;
  std::mt19937_64 rng(seed);
  CircuitGraphParams params;
  params.wires = std::max<std::size_t>(2, size / 8);
  params.steps = size - params.wires;
  params.cz_rate = 0.5;
  RewriteOptions options;
  options.check_input = false;
  options.verify_output = false;

  InsertionTimings out;
  out.size = size;
  for (std::size_t t = 0; t < trials; ++t) {
    LabelledOpenGraph g = circuit_graph(rng, params);
    PauliFlowCert cert = *find_focused_pauli_flow(g).cert;
    std::vector<VertexId> xy = g.non_outputs().items();
    VertexId x = xy[std::uniform_int_distribution<std::size_t>(0, xy.size() - 1)(rng)];
    InsertionSpec spec{g.fresh_id(), VertexSet{x}, MeasLabel::YZ, std::nullopt, {}};
    auto t0 = Clock::now();
    PauliReport r = insert_yz_pauli(g, cert, spec, options);
    auto t1 = Clock::now();
    PauliFlowSearch again = find_focused_pauli_flow(r.new_graph);
    auto t2 = Clock::now();
    if (!r.applied || again.status != SearchStatus::Found) {
      throw std::logic_error("benchmark insertion did not apply");
    }
    out.insert_us.push_back(std::chrono::duration<double, std::micro>(t1 - t0).count());
    out.refind_us.push_back(std::chrono::duration<double, std::micro>(t2 - t1).count());
  }
  return out;
}

}  // namespace mbqc
