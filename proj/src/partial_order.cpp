#include "mbqc/partial_order.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>

#include "mbqc/errors.hpp"

namespace mbqc {

using gf2::BitVector;

namespace {

struct IndexedRelation {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> indegree;
};

IndexedRelation index_relation(
    const std::vector<VertexId>& elems, const std::vector<Edge>& relation) {
  IndexedRelation r;
  r.out.resize(elems.size());
  r.indegree.assign(elems.size(), 0);
  auto idx = [&](VertexId v) {
    auto it = std::lower_bound(elems.begin(), elems.end(), v);
    if (it == elems.end() || *it != v) {
      throw InvalidArgument(
          "order relation mentions vertex " + std::to_string(v.value) +
          " outside its carrier");
    }
    return static_cast<std::size_t>(it - elems.begin());
  };
  for (const auto& [a, b] : relation) {
    std::size_t ia = idx(a);
    std::size_t ib = idx(b);
    r.out[ia].push_back(ib);
    ++r.indegree[ib];
  }
  return r;
}

// Kahn's algorithm; returns the topological prefix it managed to build.
std::vector<std::size_t> kahn(IndexedRelation r) {
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
  for (std::size_t i = 0; i < r.indegree.size(); ++i) {
    if (r.indegree[i] == 0) ready.push(i);
  }
  std::vector<std::size_t> order;
  order.reserve(r.indegree.size());
  while (!ready.empty()) {
    std::size_t v = ready.top();
    ready.pop();
    order.push_back(v);
    for (std::size_t w : r.out[v]) {
      if (--r.indegree[w] == 0) ready.push(w);
    }
  }
  return order;
}

std::vector<VertexId> extract_cycle(
    const std::vector<VertexId>& elems, const IndexedRelation& r,
    const std::vector<std::size_t>& topo) {
  std::vector<bool> removed(elems.size(), false);
  for (std::size_t v : topo) removed[v] = true;
  // Every remaining vertex has a remaining predecessor; walk backwards.
  std::vector<std::vector<std::size_t>> pred(elems.size());
  for (std::size_t a = 0; a < elems.size(); ++a) {
    if (removed[a]) continue;
    for (std::size_t b : r.out[a]) {
      if (!removed[b]) pred[b].push_back(a);
    }
  }
  std::size_t start = 0;
  while (removed[start]) ++start;
  std::vector<std::size_t> seen_at(elems.size(), SIZE_MAX);
  std::vector<std::size_t> walk;
  std::size_t v = start;
  while (seen_at[v] == SIZE_MAX) {
    seen_at[v] = walk.size();
    walk.push_back(v);
    v = *std::min_element(pred[v].begin(), pred[v].end());
  }
  std::vector<VertexId> cycle;
  for (std::size_t i = walk.size(); i-- > seen_at[v];) cycle.push_back(elems[walk[i]]);
  return cycle;
}

}  // namespace

std::vector<VertexId> find_cycle(const VertexSet& carrier, const std::vector<Edge>& relation) {
  const std::vector<VertexId>& elems = carrier.items();
  IndexedRelation r = index_relation(elems, relation);
  std::vector<std::size_t> topo = kahn(r);
  if (topo.size() == elems.size()) return {};
  return extract_cycle(elems, r, topo);
}

PartialOrder::Build PartialOrder::from_relation(
    const VertexSet& carrier, const std::vector<Edge>& relation) {
  const std::vector<VertexId>& elems = carrier.items();
  IndexedRelation r = index_relation(elems, relation);
  std::vector<std::size_t> topo = kahn(r);
  if (topo.size() != elems.size()) return {std::nullopt, extract_cycle(elems, r, topo)};

  PartialOrder po;
  po.carrier_ = carrier;
  po.elems_ = elems;
  for (std::size_t i = 0; i < elems.size(); ++i) po.index_.emplace(elems[i].value, i);
  po.succ_.assign(elems.size(), BitVector(elems.size()));
  for (std::size_t k = topo.size(); k-- > 0;) {
    std::size_t v = topo[k];
    for (std::size_t w : r.out[v]) {
      po.succ_[v].set(w);
      po.succ_[v] |= po.succ_[w];
    }
  }
  po.generators_ = relation;
  std::sort(po.generators_.begin(), po.generators_.end());
  po.generators_.erase(
      std::unique(po.generators_.begin(), po.generators_.end()), po.generators_.end());
  return {std::move(po), {}};
}

PartialOrder PartialOrder::discrete(const VertexSet& carrier) {
  return *from_relation(carrier, {}).order;
}

std::size_t PartialOrder::index(VertexId v) const {
  auto it = index_.find(v.value);
  if (it == index_.end()) {
    throw InvalidArgument("vertex " + std::to_string(v.value) + " is not in the order");
  }
  return it->second;
}

bool PartialOrder::precedes(VertexId a, VertexId b) const {
  auto ia = index_.find(a.value);
  auto ib = index_.find(b.value);
  if (ia == index_.end() || ib == index_.end()) return false;
  return succ_[ia->second].get(ib->second);
}

VertexSet PartialOrder::successors(VertexId v) const {
  const BitVector& row = succ_[index(v)];
  std::vector<VertexId> out;
  for (std::size_t j = row.first_set(); j < row.size(); j = row.next_set(j + 1)) {
    out.push_back(elems_[j]);
  }
  return VertexSet::from_unsorted(std::move(out));
}

VertexSet PartialOrder::predecessors(VertexId v) const {
  std::size_t iv = index(v);
  std::vector<VertexId> out;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (succ_[i].get(iv)) out.push_back(elems_[i]);
  }
  return VertexSet::from_unsorted(std::move(out));
}

std::vector<Edge> PartialOrder::pairs() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    const BitVector& row = succ_[i];
    for (std::size_t j = row.first_set(); j < row.size(); j = row.next_set(j + 1)) {
      out.emplace_back(elems_[i], elems_[j]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> PartialOrder::covering_relation() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    const BitVector& row = succ_[i];
    BitVector indirect(elems_.size());
    for (std::size_t j = row.first_set(); j < row.size(); j = row.next_set(j + 1)) {
      indirect |= succ_[j];
    }
    for (std::size_t j = row.first_set(); j < row.size(); j = row.next_set(j + 1)) {
      if (!indirect.get(j)) out.emplace_back(elems_[i], elems_[j]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool PartialOrder::extends(const PartialOrder& other) const {
  for (std::size_t i = 0; i < other.elems_.size(); ++i) {
    const BitVector& row = other.succ_[i];
    for (std::size_t j = row.first_set(); j < row.size(); j = row.next_set(j + 1)) {
      if (!precedes(other.elems_[i], other.elems_[j])) return false;
    }
  }
  return true;
}

PartialOrder PartialOrder::restricted(const VertexSet& keep) const {
  VertexSet carrier = carrier_ & keep;
  std::vector<Edge> relation;
  for (const auto& [a, b] : pairs()) {
    if (carrier.contains(a) && carrier.contains(b)) relation.emplace_back(a, b);
  }
  PartialOrder po = *from_relation(carrier, relation).order;
  po.generators_ = po.covering_relation();
  return po;
}

PartialOrder PartialOrder::with_element(
    VertexId z, const VertexSet& preds, const VertexSet& succs) const {
  if (contains(z)) {
    throw InvalidArgument("vertex " + std::to_string(z.value) + " is already ordered");
  }
  PartialOrder po = *this;
  const std::size_t n = elems_.size();
  po.carrier_.insert(z);
  po.elems_.push_back(z);
  po.index_.emplace(z.value, n);
  for (BitVector& row : po.succ_) row.resize(n + 1);

  BitVector down(n + 1);
  for (VertexId s : succs) {
    std::size_t is = index(s);
    down.set(is);
    down |= po.succ_[is];
  }
  BitVector z_and_down = down;
  z_and_down.set(n);
  for (VertexId p : preds) {
    std::size_t ip = index(p);
    po.succ_[ip] |= z_and_down;
  }
  // Predecessors of predecessors of z inherit the same successors.
  for (std::size_t i = 0; i < n; ++i) {
    for (VertexId p : preds) {
      if (succ_[i].get(index(p))) {
        po.succ_[i] |= z_and_down;
        break;
      }
    }
  }
  po.succ_.push_back(std::move(down));
  for (VertexId p : preds) po.generators_.emplace_back(p, z);
  for (VertexId s : succs) po.generators_.emplace_back(z, s);
  std::sort(po.generators_.begin(), po.generators_.end());
  return po;
}

bool operator==(const PartialOrder& a, const PartialOrder& b) {
  return a.carrier_ == b.carrier_ && a.pairs() == b.pairs();
}

}  // namespace mbqc
