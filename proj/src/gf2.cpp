#include "mbqc/gf2.hpp"

#include <algorithm>
#include <string>

#include "mbqc/errors.hpp"

namespace mbqc::gf2 {

std::size_t BitVector::next_set(std::size_t from) const {
  if (from >= size_) return size_;
  std::size_t w = from >> 6;
  std::uint64_t word = words_[w] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (word != 0) {
      std::size_t idx = (w << 6) + static_cast<std::size_t>(std::countr_zero(word));
      return idx < size_ ? idx : size_;
    }
    if (++w >= words_.size()) return size_;
    word = words_[w];
  }
}

Gf2Vector Gf2Vector::indicator(std::vector<VertexId> labels, const VertexSet& set) {
  Gf2Vector v{std::move(labels), {}};
  v.bits = BitVector(v.labels.size());
  for (std::size_t i = 0; i < v.labels.size(); ++i) {
    if (set.contains(v.labels[i])) v.bits.set(i);
  }
  return v;
}

VertexSet Gf2Vector::to_set() const {
  std::vector<VertexId> out;
  for (std::size_t i = bits.first_set(); i < bits.size(); i = bits.next_set(i + 1)) {
    out.push_back(labels[i]);
  }
  return VertexSet::from_unsorted(std::move(out));
}

Gf2Matrix::Gf2Matrix(std::vector<VertexId> row_labels, std::vector<VertexId> col_labels)
    : row_labels_(std::move(row_labels)),
      col_labels_(std::move(col_labels)),
      rows_(row_labels_.size(), BitVector(col_labels_.size())) {}

Gf2Matrix Gf2Matrix::identity(const std::vector<VertexId>& labels) {
  Gf2Matrix m(labels, labels);
  for (std::size_t i = 0; i < labels.size(); ++i) m.set(i, i);
  return m;
}

BitVector Gf2Matrix::column(std::size_t c) const {
  BitVector out(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    if (rows_[r].get(c)) out.set(r);
  }
  return out;
}

namespace {

std::optional<std::size_t> find_label(const std::vector<VertexId>& labels, VertexId v) {
  if (std::is_sorted(labels.begin(), labels.end())) {
    auto it = std::lower_bound(labels.begin(), labels.end(), v);
    if (it == labels.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - labels.begin());
  }
  auto it = std::find(labels.begin(), labels.end(), v);
  if (it == labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

/**
 * Gauss-Jordan elimination on the first `width` columns of `rows`,
 * choosing the leftmost available pivot. Extra columns ride along.
 */
std::vector<std::size_t> reduce(std::vector<BitVector>& rows, std::size_t width) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < width && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

BitVector augment(const BitVector& left, std::size_t extra) {
  BitVector out(left.size() + extra);
  for (std::size_t i = left.first_set(); i < left.size(); i = left.next_set(i + 1)) {
    out.set(i);
  }
  return out;
}

}  // namespace

std::optional<std::size_t> Gf2Matrix::row_index(VertexId v) const {
  return find_label(row_labels_, v);
}

std::optional<std::size_t> Gf2Matrix::col_index(VertexId v) const {
  return find_label(col_labels_, v);
}

bool Gf2Matrix::is_identity() const {
  if (row_labels_ != col_labels_) return false;
  for (std::size_t r = 0; r < rows(); ++r) {
    if (rows_[r].count() != 1 || !rows_[r].get(r)) return false;
  }
  return true;
}

Gf2Matrix Gf2Matrix::transpose() const {
  Gf2Matrix t(col_labels_, row_labels_);
  for (std::size_t r = 0; r < rows(); ++r) {
    const BitVector& row = rows_[r];
    for (std::size_t c = row.first_set(); c < cols(); c = row.next_set(c + 1)) {
      t.set(c, r);
    }
  }
  return t;
}

Gf2Matrix mat_mul(const Gf2Matrix& A, const Gf2Matrix& B) {
  if (A.col_labels() != B.row_labels()) {
    throw InvalidArgument(
        "mat_mul label mismatch: " + std::to_string(A.cols()) + " columns vs " +
        std::to_string(B.rows()) + " rows");
  }
  Gf2Matrix out(A.row_labels(), B.col_labels());
  for (std::size_t r = 0; r < A.rows(); ++r) {
    const BitVector& row = A.row(r);
    BitVector& dst = out.row(r);
    for (std::size_t k = row.first_set(); k < A.cols(); k = row.next_set(k + 1)) {
      dst ^= B.row(k);
    }
  }
  return out;
}

Gf2Vector mat_vec(const Gf2Matrix& M, const Gf2Vector& x) {
  if (M.col_labels() != x.labels) {
    throw InvalidArgument("mat_vec label mismatch");
  }
  Gf2Vector out{M.row_labels(), BitVector(M.rows())};
  for (std::size_t r = 0; r < M.rows(); ++r) {
    if (M.row(r).dot(x.bits)) out.bits.set(r);
  }
  return out;
}

SolveResult solve(const Gf2Matrix& M, const Gf2Vector& b) {
  if (M.row_labels() != b.labels) {
    throw InvalidArgument("solve label mismatch between matrix rows and vector");
  }
  const std::size_t n = M.cols();
  std::vector<BitVector> rows;
  rows.reserve(M.rows());
  for (std::size_t r = 0; r < M.rows(); ++r) {
    BitVector row = augment(M.row(r), 1);
    if (b.bits.get(r)) row.set(n);
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> pivots = reduce(rows, n);

  SolveResult result;
  bool consistent = true;
  for (std::size_t r = pivots.size(); r < rows.size(); ++r) {
    if (rows[r].get(n)) consistent = false;
  }
  if (consistent) {
    Gf2Vector x{M.col_labels(), BitVector(n)};
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (rows[i].get(n)) x.bits.set(pivots[i]);
    }
    result.solution = std::move(x);
  }
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Gf2Vector k{M.col_labels(), BitVector(n)};
    k.bits.set(f);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (rows[i].get(f)) k.bits.set(pivots[i]);
    }
    result.kernel_basis.push_back(std::move(k));
  }
  return result;
}

std::vector<Gf2Vector> kernel_basis(const Gf2Matrix& M) {
  Gf2Vector zero{M.row_labels(), BitVector(M.rows())};
  return solve(M, zero).kernel_basis;
}

std::optional<Gf2Matrix> right_inverse(const Gf2Matrix& M) {
  const std::size_t m = M.rows();
  const std::size_t n = M.cols();
  std::vector<BitVector> rows;
  rows.reserve(m);
  for (std::size_t r = 0; r < m; ++r) {
    BitVector row = augment(M.row(r), m);
    row.set(n + r);
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> pivots = reduce(rows, n);
  if (pivots.size() < m) return std::nullopt;
  Gf2Matrix C(M.col_labels(), M.row_labels());
  for (std::size_t i = 0; i < m; ++i) {
    const BitVector& row = rows[i];
    for (std::size_t j = row.next_set(n); j < n + m; j = row.next_set(j + 1)) {
      C.set(pivots[i], j - n);
    }
  }
  return C;
}

std::size_t rank(const Gf2Matrix& M) {
  std::vector<BitVector> rows;
  for (std::size_t r = 0; r < M.rows(); ++r) rows.push_back(M.row(r));
  return reduce(rows, M.cols()).size();
}

}  // namespace mbqc::gf2
