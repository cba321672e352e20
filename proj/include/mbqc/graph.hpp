#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mbqc {

struct VertexId {
  std::uint32_t value = 0;

  constexpr VertexId() = default;
  constexpr explicit VertexId(std::uint32_t v) : value(v) {}

  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

std::ostream& operator<<(std::ostream& os, VertexId v);

using Edge = std::pair<VertexId, VertexId>;

enum class MeasLabel : std::uint8_t { XY, XZ, YZ, X, Y, Z };

inline constexpr std::array<MeasLabel, 6> kAllLabels = {
    MeasLabel::XY, MeasLabel::XZ, MeasLabel::YZ,
    MeasLabel::X,  MeasLabel::Y,  MeasLabel::Z};

constexpr bool is_planar(MeasLabel l) {
  return l == MeasLabel::XY || l == MeasLabel::XZ || l == MeasLabel::YZ;
}
constexpr bool is_pauli(MeasLabel l) { return !is_planar(l); }
constexpr bool is_x_like(MeasLabel l) {
  return l == MeasLabel::XY || l == MeasLabel::X || l == MeasLabel::Y;
}
constexpr bool is_z_like(MeasLabel l) { return !is_x_like(l); }

std::string_view to_string(MeasLabel l);
std::optional<MeasLabel> parse_label(std::string_view text);
std::ostream& operator<<(std::ostream& os, MeasLabel l);

/** Finite set of vertices kept as a sorted vector. */
class VertexSet {
 public:
  using const_iterator = std::vector<VertexId>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<VertexId> ids);
  static VertexSet from_unsorted(std::vector<VertexId> ids);
  /** Caller guarantees strictly ascending input. */
  static VertexSet from_sorted(std::vector<VertexId> ids);

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const_iterator begin() const { return items_.begin(); }
  const_iterator end() const { return items_.end(); }
  const std::vector<VertexId>& items() const { return items_; }

  bool contains(VertexId v) const;
  void insert(VertexId v);
  void erase(VertexId v);
  void toggle(VertexId v);

  VertexSet symmetric_difference(const VertexSet& other) const;
  VertexSet set_union(const VertexSet& other) const;
  VertexSet intersection(const VertexSet& other) const;
  VertexSet difference(const VertexSet& other) const;
  std::size_t intersection_size(const VertexSet& other) const;
  bool odd_intersection(const VertexSet& other) const {
    return intersection_size(other) % 2 == 1;
  }
  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  VertexSet& operator^=(const VertexSet& other);

  friend VertexSet operator^(const VertexSet& a, const VertexSet& b) {
    return a.symmetric_difference(b);
  }
  friend VertexSet operator|(const VertexSet& a, const VertexSet& b) {
    return a.set_union(b);
  }
  friend VertexSet operator&(const VertexSet& a, const VertexSet& b) {
    return a.intersection(b);
  }
  friend VertexSet operator-(const VertexSet& a, const VertexSet& b) {
    return a.difference(b);
  }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<VertexId> items_;
};

std::ostream& operator<<(std::ostream& os, const VertexSet& s);

class GraphBuilder;

/**
 * Simple graph with input and output subsets and a label on every
 * non-output. Values are immutable; operations return new graphs.
 */
class LabelledOpenGraph {
 public:
  LabelledOpenGraph() = default;

  std::size_t size() const { return ids_.size(); }
  const VertexSet& vertices() const { return vertex_set_; }
  const VertexSet& inputs() const { return inputs_; }
  const VertexSet& outputs() const { return outputs_; }
  const VertexSet& non_inputs() const { return non_inputs_; }
  const VertexSet& non_outputs() const { return non_outputs_; }

  bool contains(VertexId v) const { return index_of(v).has_value(); }
  const VertexSet& neighbours(VertexId v) const;
  bool adjacent(VertexId a, VertexId b) const;
  bool is_input(VertexId v) const;
  bool is_output(VertexId v) const;
  /** Empty for outputs. */
  std::optional<MeasLabel> label(VertexId v) const;
  /** Label of a non-output; throws for outputs. */
  MeasLabel measurement(VertexId v) const;
  const std::string& name(VertexId v) const;
  /** Display name when set, otherwise the decimal id. */
  std::string display(VertexId v) const;
  std::optional<VertexId> find_by_name(std::string_view name) const;

  std::vector<Edge> edges() const;
  std::size_t edge_count() const;

  /** Smallest id never handed out by this graph's lineage. */
  VertexId fresh_id() const { return VertexId(next_id_); }

  /** Non-outputs whose label satisfies the predicate. */
  VertexSet non_outputs_where(bool (*pred)(MeasLabel)) const;

  /** Structural equality; the fresh-id counter is ignored. */
  bool operator==(const LabelledOpenGraph& other) const;

 private:
  friend class GraphBuilder;
  friend LabelledOpenGraph local_complement(
      const LabelledOpenGraph& g, VertexId u);
  friend LabelledOpenGraph pivot(
      const LabelledOpenGraph& g, VertexId u, VertexId v);
  friend LabelledOpenGraph insert_vertex(
      const LabelledOpenGraph& g, VertexId z, const VertexSet& S,
      MeasLabel label, std::string name);
  friend LabelledOpenGraph remove_vertex(
      const LabelledOpenGraph& g, VertexId z);
  friend LabelledOpenGraph relabel(
      const LabelledOpenGraph& g, VertexId v, MeasLabel label);
  friend LabelledOpenGraph toggle_edges(
      const LabelledOpenGraph& g, const std::vector<Edge>& edges);

  struct Node {
    VertexSet neighbours;
    std::optional<MeasLabel> label;
    bool input = false;
    bool output = false;
    std::string name;
  };

  std::optional<std::size_t> index_of(VertexId v) const;
  std::size_t require(VertexId v) const;
  Node& node(VertexId v) { return nodes_[require(v)]; }
  void toggle_edge_unchecked(VertexId a, VertexId b);
  void rebuild_sets();

  std::vector<VertexId> ids_;
  std::vector<Node> nodes_;
  VertexSet vertex_set_, inputs_, outputs_, non_inputs_, non_outputs_;
  std::uint32_t next_id_ = 0;
};

/** Mutable staging area for building a validated graph. */
class GraphBuilder {
 public:
  VertexId add_vertex(
      std::optional<MeasLabel> label, bool input = false, bool output = false,
      std::string name = {});
  void add_vertex(
      VertexId id, std::optional<MeasLabel> label, bool input = false,
      bool output = false, std::string name = {});
  void add_edge(VertexId a, VertexId b);
  /** Throws InvalidArgument when the staged data is not a valid graph. */
  LabelledOpenGraph build() const;

 private:
  struct Staged {
    VertexId id;
    std::optional<MeasLabel> label;
    bool input, output;
    std::string name;
  };
  std::vector<Staged> vertices_;
  std::vector<Edge> edges_;
  std::uint32_t next_id_ = 0;
};

VertexSet odd_neighbourhood(const LabelledOpenGraph& g, const VertexSet& A);
VertexSet closed_odd_neighbourhood(
    const LabelledOpenGraph& g, const VertexSet& A);

LabelledOpenGraph local_complement(const LabelledOpenGraph& g, VertexId u);
/** Pivot about the edge {u,v}; labels are left untouched. */
LabelledOpenGraph pivot(const LabelledOpenGraph& g, VertexId u, VertexId v);
LabelledOpenGraph insert_vertex(
    const LabelledOpenGraph& g, VertexId z, const VertexSet& S,
    MeasLabel label, std::string name = {});
LabelledOpenGraph remove_vertex(const LabelledOpenGraph& g, VertexId z);
LabelledOpenGraph relabel(
    const LabelledOpenGraph& g, VertexId v, MeasLabel label);
LabelledOpenGraph toggle_edges(
    const LabelledOpenGraph& g, const std::vector<Edge>& edges);

}  // namespace mbqc

template <>
struct std::hash<mbqc::VertexId> {
  std::size_t operator()(mbqc::VertexId v) const noexcept {
    return std::hash<std::uint32_t>{}(v.value);
  }
};
