#include "mbqc/graph.hpp"

#include <algorithm>
#include <sstream>

#include "mbqc/errors.hpp"

namespace mbqc {

std::ostream& operator<<(std::ostream& os, VertexId v) {
  return os << v.value;
}

std::string_view to_string(MeasLabel l) {
  switch (l) {
    case MeasLabel::XY: return "XY";
    case MeasLabel::XZ: return "XZ";
    case MeasLabel::YZ: return "YZ";
    case MeasLabel::X: return "X";
    case MeasLabel::Y: return "Y";
    case MeasLabel::Z: return "Z";
  }
  return "?";
}

std::optional<MeasLabel> parse_label(std::string_view text) {
  for (MeasLabel l : kAllLabels) {
    if (to_string(l) == text) return l;
  }
  return std::nullopt;
}

std::ostream& operator<<(std::ostream& os, MeasLabel l) {
  return os << to_string(l);
}

// VertexSet

VertexSet::VertexSet(std::initializer_list<VertexId> ids)
    : items_(ids) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

VertexSet VertexSet::from_unsorted(std::vector<VertexId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return from_sorted(std::move(ids));
}

VertexSet VertexSet::from_sorted(std::vector<VertexId> ids) {
  VertexSet s;
  s.items_ = std::move(ids);
  return s;
}

bool VertexSet::contains(VertexId v) const {
  return std::binary_search(items_.begin(), items_.end(), v);
}

void VertexSet::insert(VertexId v) {
  auto it = std::lower_bound(items_.begin(), items_.end(), v);
  if (it == items_.end() || *it != v) items_.insert(it, v);
}

void VertexSet::erase(VertexId v) {
  auto it = std::lower_bound(items_.begin(), items_.end(), v);
  if (it != items_.end() && *it == v) items_.erase(it);
}

void VertexSet::toggle(VertexId v) {
  auto it = std::lower_bound(items_.begin(), items_.end(), v);
  if (it != items_.end() && *it == v) {
    items_.erase(it);
  } else {
    items_.insert(it, v);
  }
}

VertexSet VertexSet::symmetric_difference(const VertexSet& other) const {
  std::vector<VertexId> out;
  out.reserve(items_.size() + other.items_.size());
  std::set_symmetric_difference(
      items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
      std::back_inserter(out));
  return from_sorted(std::move(out));
}

VertexSet VertexSet::set_union(const VertexSet& other) const {
  std::vector<VertexId> out;
  out.reserve(items_.size() + other.items_.size());
  std::set_union(
      items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
      std::back_inserter(out));
  return from_sorted(std::move(out));
}

VertexSet VertexSet::intersection(const VertexSet& other) const {
  std::vector<VertexId> out;
  std::set_intersection(
      items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
      std::back_inserter(out));
  return from_sorted(std::move(out));
}

VertexSet VertexSet::difference(const VertexSet& other) const {
  std::vector<VertexId> out;
  std::set_difference(
      items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
      std::back_inserter(out));
  return from_sorted(std::move(out));
}

std::size_t VertexSet::intersection_size(const VertexSet& other) const {
  std::size_t count = 0;
  auto a = items_.begin();
  auto b = other.items_.begin();
  while (a != items_.end() && b != other.items_.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      ++count;
      ++a;
      ++b;
    }
  }
  return count;
}

bool VertexSet::intersects(const VertexSet& other) const {
  auto a = items_.begin();
  auto b = other.items_.begin();
  while (a != items_.end() && b != other.items_.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      return true;
    }
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  return std::includes(
      other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

VertexSet& VertexSet::operator^=(const VertexSet& other) {
  *this = symmetric_difference(other);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  os << '{';
  bool first = true;
  for (VertexId v : s) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  return os << '}';
}

// LabelledOpenGraph

std::optional<std::size_t> LabelledOpenGraph::index_of(VertexId v) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - ids_.begin());
}

std::size_t LabelledOpenGraph::require(VertexId v) const {
  auto idx = index_of(v);
  if (!idx) {
    throw InvalidArgument("unknown vertex " + std::to_string(v.value));
  }
  return *idx;
}

const VertexSet& LabelledOpenGraph::neighbours(VertexId v) const {
  return nodes_[require(v)].neighbours;
}

bool LabelledOpenGraph::adjacent(VertexId a, VertexId b) const {
  return nodes_[require(a)].neighbours.contains(b);
}

bool LabelledOpenGraph::is_input(VertexId v) const {
  return nodes_[require(v)].input;
}

bool LabelledOpenGraph::is_output(VertexId v) const {
  return nodes_[require(v)].output;
}

std::optional<MeasLabel> LabelledOpenGraph::label(VertexId v) const {
  return nodes_[require(v)].label;
}

MeasLabel LabelledOpenGraph::measurement(VertexId v) const {
  const Node& n = nodes_[require(v)];
  if (!n.label) {
    throw InvalidArgument(
        "vertex " + std::to_string(v.value) + " is an output and has no label");
  }
  return *n.label;
}

const std::string& LabelledOpenGraph::name(VertexId v) const {
  return nodes_[require(v)].name;
}

std::string LabelledOpenGraph::display(VertexId v) const {
  const std::string& n = name(v);
  return n.empty() ? std::to_string(v.value) : n;
}

std::optional<VertexId> LabelledOpenGraph::find_by_name(
    std::string_view name) const {
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (nodes_[i].name == name) return ids_[i];
  }
  return std::nullopt;
}

std::vector<Edge> LabelledOpenGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    for (VertexId w : nodes_[i].neighbours) {
      if (ids_[i] < w) out.emplace_back(ids_[i], w);
    }
  }
  return out;
}

std::size_t LabelledOpenGraph::edge_count() const {
  std::size_t total = 0;
  for (const Node& n : nodes_) total += n.neighbours.size();
  return total / 2;
}

VertexSet LabelledOpenGraph::non_outputs_where(bool (*pred)(MeasLabel)) const {
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (nodes_[i].label && pred(*nodes_[i].label)) out.push_back(ids_[i]);
  }
  return VertexSet::from_sorted(std::move(out));
}

bool LabelledOpenGraph::operator==(const LabelledOpenGraph& other) const {
  if (ids_ != other.ids_) return false;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    const Node& a = nodes_[i];
    const Node& b = other.nodes_[i];
    if (a.neighbours != b.neighbours || a.label != b.label ||
        a.input != b.input || a.output != b.output || a.name != b.name) {
      return false;
    }
  }
  return true;
}

void LabelledOpenGraph::toggle_edge_unchecked(VertexId a, VertexId b) {
  nodes_[*index_of(a)].neighbours.toggle(b);
  nodes_[*index_of(b)].neighbours.toggle(a);
}

void LabelledOpenGraph::rebuild_sets() {
  std::vector<VertexId> in, out, non_in, non_out;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    (nodes_[i].input ? in : non_in).push_back(ids_[i]);
    (nodes_[i].output ? out : non_out).push_back(ids_[i]);
  }
  vertex_set_ = VertexSet::from_sorted(ids_);
  inputs_ = VertexSet::from_sorted(std::move(in));
  outputs_ = VertexSet::from_sorted(std::move(out));
  non_inputs_ = VertexSet::from_sorted(std::move(non_in));
  non_outputs_ = VertexSet::from_sorted(std::move(non_out));
}

// GraphBuilder

VertexId GraphBuilder::add_vertex(
    std::optional<MeasLabel> label, bool input, bool output,
    std::string name) {
  VertexId id(next_id_);
  add_vertex(id, label, input, output, std::move(name));
  return id;
}

void GraphBuilder::add_vertex(
    VertexId id, std::optional<MeasLabel> label, bool input, bool output,
    std::string name) {
  vertices_.push_back({id, label, input, output, std::move(name)});
  next_id_ = std::max(next_id_, id.value + 1);
}

void GraphBuilder::add_edge(VertexId a, VertexId b) {
  edges_.emplace_back(a, b);
}

LabelledOpenGraph GraphBuilder::build() const {
  LabelledOpenGraph g;
  std::vector<Staged> staged = vertices_;
  std::sort(staged.begin(), staged.end(), [](const auto& a, const auto& b) {
    return a.id < b.id;
  });
  for (std::size_t i = 0; i < staged.size(); ++i) {
    const Staged& s = staged[i];
    if (i > 0 && staged[i - 1].id == s.id) {
      throw InvalidArgument("duplicate vertex id " + std::to_string(s.id.value));
    }
    if (s.output && s.label) {
      throw InvalidArgument(
          "output vertex " + std::to_string(s.id.value) +
          " must not carry a label");
    }
    if (!s.output && !s.label) {
      throw InvalidArgument(
          "non-output vertex " + std::to_string(s.id.value) +
          " requires a label");
    }
    g.ids_.push_back(s.id);
    g.nodes_.push_back({{}, s.label, s.input, s.output, s.name});
  }
  std::vector<std::vector<VertexId>> adj(staged.size());
  for (const auto& [a, b] : edges_) {
    auto ia = g.index_of(a);
    auto ib = g.index_of(b);
    if (!ia || !ib) {
      throw InvalidArgument(
          "edge {" + std::to_string(a.value) + "," + std::to_string(b.value) +
          "} has an unknown endpoint");
    }
    if (a == b) {
      throw InvalidArgument("self-loop on vertex " + std::to_string(a.value));
    }
    adj[*ia].push_back(b);
    adj[*ib].push_back(a);
  }
  for (std::size_t i = 0; i < adj.size(); ++i) {
    std::vector<VertexId>& list = adj[i];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw InvalidArgument(
          "multi-edge at vertex " + std::to_string(g.ids_[i].value));
    }
    g.nodes_[i].neighbours = VertexSet::from_sorted(std::move(list));
  }
  g.next_id_ = next_id_;
  g.rebuild_sets();
  return g;
}

// Graph operations

namespace {

void require_subset(const LabelledOpenGraph& g, const VertexSet& A) {
  for (VertexId v : A) {
    if (!g.contains(v)) {
      throw InvalidArgument("unknown vertex " + std::to_string(v.value));
    }
  }
}

}  // namespace

VertexSet odd_neighbourhood(const LabelledOpenGraph& g, const VertexSet& A) {
  require_subset(g, A);
  std::vector<VertexId> all;
  for (VertexId v : A) {
    const VertexSet& n = g.neighbours(v);
    all.insert(all.end(), n.begin(), n.end());
  }
  std::sort(all.begin(), all.end());
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < all.size();) {
    std::size_t j = i;
    while (j < all.size() && all[j] == all[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(all[i]);
    i = j;
  }
  return VertexSet::from_sorted(std::move(out));
}

VertexSet closed_odd_neighbourhood(
    const LabelledOpenGraph& g, const VertexSet& A) {
  return odd_neighbourhood(g, A) ^ A;
}

LabelledOpenGraph local_complement(const LabelledOpenGraph& g, VertexId u) {
  LabelledOpenGraph out = g;
  const std::vector<VertexId>& n = g.neighbours(u).items();
  for (std::size_t i = 0; i < n.size(); ++i) {
    for (std::size_t j = i + 1; j < n.size(); ++j) {
      out.toggle_edge_unchecked(n[i], n[j]);
    }
  }
  return out;
}

LabelledOpenGraph pivot(const LabelledOpenGraph& g, VertexId u, VertexId v) {
  if (!g.adjacent(u, v)) {
    throw InvalidArgument(
        "pivot requires an edge, {" + std::to_string(u.value) + "," +
        std::to_string(v.value) + "} is not one");
  }
  const VertexSet& nu = g.neighbours(u);
  const VertexSet& nv = g.neighbours(v);
  VertexSet uv{u, v};
  VertexSet only_u = nu - nv - uv;
  VertexSet only_v = nv - nu - uv;
  VertexSet both = nu & nv;

  LabelledOpenGraph out = g;
  auto toggle_between = [&](const VertexSet& a, const VertexSet& b) {
    for (VertexId x : a) {
      for (VertexId y : b) out.toggle_edge_unchecked(x, y);
    }
  };
  toggle_between(only_u, only_v);
  toggle_between(only_u, both);
  toggle_between(only_v, both);

  // Exchange the remaining neighbourhoods of u and v.
  VertexSet rest_u = out.neighbours(u) - VertexSet{v};
  VertexSet rest_v = out.neighbours(v) - VertexSet{u};
  for (VertexId w : rest_u ^ rest_v) {
    out.toggle_edge_unchecked(u, w);
    out.toggle_edge_unchecked(v, w);
  }
  return out;
}

LabelledOpenGraph insert_vertex(
    const LabelledOpenGraph& g, VertexId z, const VertexSet& S,
    MeasLabel label, std::string name) {
  if (g.contains(z)) {
    throw InvalidArgument("vertex " + std::to_string(z.value) + " already exists");
  }
  require_subset(g, S);
  LabelledOpenGraph out = g;
  auto pos = std::lower_bound(out.ids_.begin(), out.ids_.end(), z);
  auto idx = pos - out.ids_.begin();
  out.ids_.insert(pos, z);
  out.nodes_.insert(
      out.nodes_.begin() + idx,
      LabelledOpenGraph::Node{S, label, false, false, std::move(name)});
  for (VertexId s : S) out.node(s).neighbours.insert(z);
  out.next_id_ = std::max(out.next_id_, z.value + 1);
  out.rebuild_sets();
  return out;
}

LabelledOpenGraph remove_vertex(const LabelledOpenGraph& g, VertexId z) {
  std::size_t idx = g.require(z);
  LabelledOpenGraph out = g;
  for (VertexId s : g.neighbours(z)) out.node(s).neighbours.erase(z);
  out.ids_.erase(out.ids_.begin() + idx);
  out.nodes_.erase(out.nodes_.begin() + idx);
  out.rebuild_sets();
  return out;
}

LabelledOpenGraph relabel(
    const LabelledOpenGraph& g, VertexId v, MeasLabel label) {
  if (g.is_output(v)) {
    throw InvalidArgument(
        "cannot label output vertex " + std::to_string(v.value));
  }
  LabelledOpenGraph out = g;
  out.node(v).label = label;
  return out;
}

LabelledOpenGraph toggle_edges(
    const LabelledOpenGraph& g, const std::vector<Edge>& edges) {
  LabelledOpenGraph out = g;
  for (const auto& [a, b] : edges) {
    g.require(a);
    g.require(b);
    if (a == b) {
      throw InvalidArgument("self-loop on vertex " + std::to_string(a.value));
    }
    out.toggle_edge_unchecked(a, b);
  }
  return out;
}

}  // namespace mbqc
