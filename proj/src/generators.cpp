#include "mbqc/generators.hpp"

#include <vector>

#include "mbqc/errors.hpp"

namespace mbqc {

LabelledOpenGraph circuit_graph(std::mt19937_64& rng, const CircuitGraphParams& params) {
  const std::size_t total = params.wires + params.fresh_wires;
  if (total == 0) throw InvalidArgument("circuit graph needs at least one wire");

  std::vector<std::vector<std::uint32_t>> wires(total);
  std::uint32_t next = 0;
  for (std::size_t w = 0; w < total; ++w) wires[w].push_back(next++);

  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::vector<std::vector<bool>> adjacent;
  auto toggle = [&](std::uint32_t a, std::uint32_t b) {
    if (adjacent.size() < next) adjacent.resize(next);
    for (auto& row : adjacent) row.resize(next, false);
    adjacent[a][b] = !adjacent[a][b];
    adjacent[b][a] = adjacent[a][b];
  };

  std::uniform_int_distribution<std::size_t> pick(0, total - 1);
  std::poisson_distribution<int> cz_count(params.cz_rate);
  for (std::size_t s = 0; s < params.steps; ++s) {
    std::size_t w = pick(rng);
    std::uint32_t v = next++;
    toggle(wires[w].back(), v);
    wires[w].push_back(v);
    if (total < 2) continue;
    for (int k = cz_count(rng); k > 0; --k) {
      std::size_t a = pick(rng);
      std::size_t b = pick(rng);
      if (a == b) continue;
      toggle(wires[a].back(), wires[b].back());
    }
  }
  if (adjacent.size() < next) adjacent.resize(next);
  for (auto& row : adjacent) row.resize(next, false);

  GraphBuilder builder;
  std::vector<bool> is_output(next, false);
  for (const auto& wire : wires) is_output[wire.back()] = true;
  for (std::size_t w = 0; w < total; ++w) {
    for (std::uint32_t v : wires[w]) {
      bool input = w < params.wires && v == wires[w].front();
      std::optional<MeasLabel> label;
      if (!is_output[v]) label = MeasLabel::XY;
      builder.add_vertex(VertexId(v), label, input, is_output[v]);
    }
  }
  for (std::uint32_t a = 0; a < next; ++a) {
    for (std::uint32_t b = a + 1; b < next; ++b) {
      if (adjacent[a][b]) builder.add_edge(VertexId(a), VertexId(b));
    }
  }
  return builder.build();
}

}  // namespace mbqc
