#include "mbqc/flow.hpp"

#include <algorithm>
#include <string>

#include "mbqc/errors.hpp"

namespace mbqc {

using gf2::BitVector;
using gf2::Gf2Matrix;
using gf2::Gf2Vector;

const VertexSet& CorrectionFunction::at(VertexId v) const {
  auto it = sets_.find(v);
  if (it == sets_.end()) {
    throw InvalidArgument("no correction set for vertex " + std::to_string(v.value));
  }
  return it->second;
}

VertexSet CorrectionFunction::domain() const {
  std::vector<VertexId> out;
  for (const auto& [v, s] : sets_) out.push_back(v);
  return VertexSet::from_sorted(std::move(out));
}

void CorrectionFunction::check_well_formed(const LabelledOpenGraph& g) const {
  if (domain() != g.non_outputs()) {
    throw InvalidArgument("correction function domain differs from the non-outputs");
  }
  for (const auto& [v, s] : sets_) {
    for (VertexId w : s) {
      if (!g.contains(w)) {
        throw InvalidArgument(
            "correction set of " + std::to_string(v.value) + " mentions unknown vertex " +
            std::to_string(w.value));
      }
      if (g.is_input(w)) {
        throw InvalidArgument(
            "correction set of " + std::to_string(v.value) + " contains input " +
            std::to_string(w.value));
      }
    }
  }
}

namespace {

bool has_self_loop(MeasLabel l) { return l == MeasLabel::Y || l == MeasLabel::XZ; }

}  // namespace

Gf2Matrix extended_adjacency(const LabelledOpenGraph& g) {
  const std::vector<VertexId>& ids = g.vertices().items();
  Gf2Matrix A(ids, ids);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (VertexId w : g.neighbours(ids[i])) A.set(i, *A.col_index(w));
    auto l = g.label(ids[i]);
    if (l && has_self_loop(*l)) A.set(i, i);
  }
  return A;
}

Gf2Matrix flow_demand_matrix(const LabelledOpenGraph& g) {
  const std::vector<VertexId>& rows = g.non_outputs().items();
  Gf2Matrix M(rows, g.non_inputs().items());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    VertexId u = rows[r];
    MeasLabel l = g.measurement(u);
    if (is_x_like(l)) {
      for (VertexId w : g.neighbours(u)) {
        if (auto c = M.col_index(w)) M.set(r, *c);
      }
      if (l == MeasLabel::Y) {
        if (auto c = M.col_index(u)) M.set(r, *c);
      }
    } else if (auto c = M.col_index(u)) {
      M.set(r, *c);
    }
  }
  return M;
}

Gf2Matrix order_demand_matrix(const LabelledOpenGraph& g) {
  const std::vector<VertexId>& rows = g.non_outputs().items();
  Gf2Matrix N(rows, g.non_inputs().items());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    VertexId u = rows[r];
    MeasLabel l = g.measurement(u);
    if (l == MeasLabel::XZ || l == MeasLabel::YZ) {
      for (VertexId w : g.neighbours(u)) {
        if (auto c = N.col_index(w)) N.set(r, *c);
      }
      if (l == MeasLabel::XZ) {
        if (auto c = N.col_index(u)) N.set(r, *c);
      }
    } else if (l == MeasLabel::XY) {
      if (auto c = N.col_index(u)) N.set(r, *c);
    }
  }
  return N;
}

Gf2Matrix correction_matrix(const LabelledOpenGraph& g, const CorrectionFunction& c) {
  c.check_well_formed(g);
  const std::vector<VertexId>& cols = g.non_outputs().items();
  Gf2Matrix C(g.non_inputs().items(), cols);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (VertexId w : c.at(cols[j])) C.set(*C.row_index(w), j);
  }
  return C;
}

CorrectionFunction correction_function_from_matrix(const Gf2Matrix& C) {
  CorrectionFunction c;
  for (std::size_t j = 0; j < C.cols(); ++j) {
    std::vector<VertexId> set;
    for (std::size_t i = 0; i < C.rows(); ++i) {
      if (C.get(i, j)) set.push_back(C.row_labels()[i]);
    }
    c.set(C.col_labels()[j], VertexSet::from_unsorted(std::move(set)));
  }
  return c;
}

AlgebraicReport verify_pauli_flow_algebraic(const LabelledOpenGraph& g, const CorrectionFunction& c) {
  AlgebraicReport report;
  Gf2Matrix C = correction_matrix(g, c);
  Gf2Matrix MC = gf2::mat_mul(flow_demand_matrix(g), C);
  const std::vector<VertexId>& labels = g.non_outputs().items();
  for (std::size_t r = 0; r < MC.rows(); ++r) {
    for (std::size_t k = 0; k < MC.cols(); ++k) {
      bool expected = r == k;
      if (MC.get(r, k) != expected) {
        report.identity_violations.push_back({labels[r], labels[k], MC.get(r, k)});
      }
    }
  }
  report.identity_holds = report.identity_violations.empty();

  Gf2Matrix NC = gf2::mat_mul(order_demand_matrix(g), C);
  for (std::size_t r = 0; r < NC.rows(); ++r) {
    const BitVector& row = NC.row(r);
    for (std::size_t k = row.first_set(); k < NC.cols(); k = row.next_set(k + 1)) {
      if (k == r) {
        if (report.cycle.empty()) report.cycle = {labels[r]};
      } else {
        report.relation.emplace_back(labels[k], labels[r]);
      }
    }
  }
  std::sort(report.relation.begin(), report.relation.end());
  if (report.cycle.empty()) {
    PartialOrder::Build built = PartialOrder::from_relation(g.non_outputs(), report.relation);
    report.order = std::move(built.order);
    report.cycle = std::move(built.cycle);
  }
  report.ok = report.identity_holds && report.cycle.empty();
  return report;
}

bool PauliConditionReport::ok() const {
  for (const auto& f : failures) {
    if (!f.empty()) return false;
  }
  return true;
}

PauliConditionReport verify_pauli_flow_conditions(
    const LabelledOpenGraph& g, const CorrectionFunction& c, const PartialOrder& order) {
  c.check_well_formed(g);
  PauliConditionReport report;
  auto fail = [&](int k, VertexId u, std::optional<VertexId> v = std::nullopt) {
    report.failures[k - 1].push_back({u, v});
  };
  for (VertexId u : g.non_outputs()) {
    const VertexSet& cu = c.at(u);
    VertexSet odd = odd_neighbourhood(g, cu);
    VertexSet codd = odd ^ cu;
    for (VertexId v : cu) {
      auto lv = g.label(v);
      if (!lv || v == u) continue;
      if (*lv != MeasLabel::X && *lv != MeasLabel::Y && !order.precedes(u, v)) fail(1, u, v);
    }
    for (VertexId v : odd) {
      auto lv = g.label(v);
      if (!lv || v == u) continue;
      if (*lv != MeasLabel::Y && *lv != MeasLabel::Z && !order.precedes(u, v)) fail(2, u, v);
    }
    for (VertexId v : g.non_outputs()) {
      if (v == u || order.precedes(u, v) || g.measurement(v) != MeasLabel::Y) continue;
      if (codd.contains(v)) fail(3, u, v);
    }
    bool in_c = cu.contains(u);
    bool in_odd = odd.contains(u);
    switch (g.measurement(u)) {
      case MeasLabel::XY:
        if (in_c || !in_odd) fail(4, u);
        break;
      case MeasLabel::XZ:
        if (!in_c || !in_odd) fail(5, u);
        break;
      case MeasLabel::YZ:
        if (!in_c || in_odd) fail(6, u);
        break;
      case MeasLabel::X:
        if (!in_odd) fail(7, u);
        break;
      case MeasLabel::Z:
        if (!in_c) fail(8, u);
        break;
      case MeasLabel::Y:
        if (in_c == in_odd) fail(9, u);
        break;
    }
  }
  return report;
}

namespace {

void focusing_witnesses(
    const LabelledOpenGraph& g, const VertexSet& A, const VertexSet& S, VertexId corrected,
    std::vector<FocusFailure>* out) {
  VertexSet odd = odd_neighbourhood(g, A);
  for (VertexId w : S & A) {
    if (!is_x_like(g.measurement(w))) out->push_back({corrected, 1, w});
  }
  for (VertexId w : S & odd) {
    MeasLabel l = g.measurement(w);
    if (l == MeasLabel::XY || l == MeasLabel::X) out->push_back({corrected, 2, w});
  }
  for (VertexId w : S) {
    if (g.measurement(w) != MeasLabel::Y) continue;
    if (odd.contains(w) != A.contains(w)) out->push_back({corrected, 3, w});
  }
}

}  // namespace

bool is_focused_set(const LabelledOpenGraph& g, const VertexSet& A, const VertexSet& S) {
  if (!A.is_subset_of(g.non_inputs())) {
    throw InvalidArgument("focused-set candidate must avoid inputs");
  }
  if (!S.is_subset_of(g.non_outputs())) {
    throw InvalidArgument("focusing domain must consist of non-outputs");
  }
  std::vector<FocusFailure> failures;
  focusing_witnesses(g, A, S, VertexId{}, &failures);
  return failures.empty();
}

std::vector<FocusFailure> focusing_failures(const LabelledOpenGraph& g, const CorrectionFunction& c) {
  std::vector<FocusFailure> out;
  for (VertexId v : g.non_outputs()) {
    focusing_witnesses(g, c.at(v), g.non_outputs() - VertexSet{v}, v, &out);
  }
  return out;
}

VertexSet max_focus_support(const LabelledOpenGraph& g, const VertexSet& A) {
  if (!A.is_subset_of(g.non_inputs())) {
    throw InvalidArgument("focused-set candidate must avoid inputs");
  }
  Gf2Matrix M = flow_demand_matrix(g);
  Gf2Vector Ma = gf2::mat_vec(M, Gf2Vector::indicator(M.col_labels(), A));
  std::vector<VertexId> out;
  for (std::size_t r = 0; r < M.rows(); ++r) {
    if (!Ma.bits.get(r)) out.push_back(M.row_labels()[r]);
  }
  return VertexSet::from_sorted(std::move(out));
}

InducedRelation induced_relation(const LabelledOpenGraph& g, const CorrectionFunction& c) {
  c.check_well_formed(g);
  InducedRelation rel;
  for (VertexId u : g.non_outputs()) {
    const VertexSet& cu = c.at(u);
    VertexSet odd = odd_neighbourhood(g, cu);
    VertexSet codd = odd ^ cu;
    for (VertexId v : g.non_outputs()) {
      if (v == u) continue;
      MeasLabel l = g.measurement(v);
      bool p1 = cu.contains(v) && l != MeasLabel::X && l != MeasLabel::Y;
      bool p2 = odd.contains(v) && l != MeasLabel::Y && l != MeasLabel::Z;
      bool p3 = codd.contains(v) && l == MeasLabel::Y;
      if (p1 || p2 || p3) rel.edges.emplace_back(u, v);
    }
  }
  PartialOrder::Build built = PartialOrder::from_relation(g.non_outputs(), rel.edges);
  rel.order = std::move(built.order);
  rel.cycle = std::move(built.cycle);
  return rel;
}

std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::NoFlow: return "none";
    case SearchStatus::Indeterminate: return "indeterminate";
  }
  return "?";
}

namespace {

/** Column-by-column search over kernel offsets with incremental cycle pruning. */
class KernelSearch {
 public:
  KernelSearch(
      const Gf2Matrix& C0, const std::vector<Gf2Vector>& kernel, const Gf2Matrix& N,
      std::uint64_t node_limit)
      : m_(C0.cols()), d_(kernel.size()), node_limit_(node_limit) {
    Gf2Matrix C0t = C0.transpose();
    for (std::size_t u = 0; u < m_; ++u) {
      particular_.push_back(C0t.row(u));
      n_particular_.push_back(mat_vec_bits(N, C0t.row(u)));
    }
    for (const Gf2Vector& k : kernel) {
      kernel_.push_back(k.bits);
      n_kernel_.push_back(mat_vec_bits(N, k.bits));
    }
    out_.assign(m_, BitVector(m_));
    chosen_.assign(m_, BitVector(C0.rows()));
  }

  /** Returns true when a consistent assignment was found. */
  bool run() { return descend(0); }
  bool exhausted() const { return nodes_ >= node_limit_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<BitVector>& chosen() const { return chosen_; }

 private:
  static BitVector mat_vec_bits(const Gf2Matrix& N, const BitVector& x) {
    BitVector out(N.rows());
    for (std::size_t r = 0; r < N.rows(); ++r) {
      if (N.row(r).dot(x)) out.set(r);
    }
    return out;
  }

  bool creates_cycle(std::size_t u) const {
    // Is u reachable from its own successors through assigned columns?
    BitVector seen(m_);
    BitVector frontier = out_[u];
    while (frontier.any()) {
      if (frontier.get(u)) return true;
      seen |= frontier;
      BitVector next(m_);
      for (std::size_t w = frontier.first_set(); w < m_; w = frontier.next_set(w + 1)) {
        next |= out_[w];
      }
      for (std::size_t i = 0; i < next.words().size(); ++i) {
        next.words()[i] &= ~seen.words()[i];
      }
      frontier = std::move(next);
    }
    return false;
  }

  bool descend(std::size_t u) {
    if (u == m_) return true;
    const std::uint64_t choices = d_ >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << d_);
    for (std::uint64_t t = 0; t < choices; ++t) {
      if (nodes_ >= node_limit_) return false;
      ++nodes_;
      BitVector a = particular_[u];
      BitVector na = n_particular_[u];
      for (std::size_t j = 0; j < d_; ++j) {
        if ((t >> j) & 1U) {
          a ^= kernel_[j];
          na ^= n_kernel_[j];
        }
      }
      if (na.get(u)) continue;
      out_[u] = na;
      if (creates_cycle(u)) {
        out_[u] = BitVector(m_);
        continue;
      }
      chosen_[u] = a;
      if (descend(u + 1)) return true;
      out_[u] = BitVector(m_);
    }
    return false;
  }

  std::size_t m_;
  std::size_t d_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  std::vector<BitVector> particular_, n_particular_, kernel_, n_kernel_;
  std::vector<BitVector> out_;
  std::vector<BitVector> chosen_;
};

}  // namespace

PauliFlowSearch find_focused_pauli_flow(const LabelledOpenGraph& g, const FlowSearchOptions& options) {
  PauliFlowSearch result;
  auto finish = [&](CorrectionFunction c) {
    AlgebraicReport rep = verify_pauli_flow_algebraic(g, c);
    if (!rep.ok) return false;
    result.status = SearchStatus::Found;
    result.cert = PauliFlowCert{std::move(c), std::move(*rep.order), true};
    return true;
  };

  if (g.non_outputs().empty()) {
    finish(CorrectionFunction{});
    return result;
  }
  Gf2Matrix M = flow_demand_matrix(g);
  std::optional<Gf2Matrix> C0 = gf2::right_inverse(M);
  if (!C0) {
    result.status = SearchStatus::NoFlow;
    return result;
  }
  std::vector<Gf2Vector> kernel = gf2::kernel_basis(M);
  result.kernel_dimension = kernel.size();
  if (kernel.empty()) {
    result.nodes = 1;
    if (!finish(correction_function_from_matrix(*C0))) result.status = SearchStatus::NoFlow;
    return result;
  }

  const std::size_t m = M.rows();
  const std::uint64_t limit =
      (std::uint64_t{1} << std::min(options.budget_bits, 40U)) * (m + 1);
  KernelSearch search(*C0, kernel, order_demand_matrix(g), limit);
  bool found = search.run();
  result.nodes = search.nodes();
  if (found) {
    Gf2Matrix C(M.col_labels(), M.row_labels());
    for (std::size_t u = 0; u < m; ++u) {
      const BitVector& a = search.chosen()[u];
      for (std::size_t i = a.first_set(); i < a.size(); i = a.next_set(i + 1)) C.set(i, u);
    }
    finish(correction_function_from_matrix(C));
    return result;
  }
  result.status = search.exhausted() ? SearchStatus::Indeterminate : SearchStatus::NoFlow;
  return result;
}

}  // namespace mbqc
