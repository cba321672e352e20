#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "mbqc/graph.hpp"

namespace mbqc::gf2 {

/** Dynamic bitset packed into 64-bit words. */
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size)
      : words_((size + 63) / 64, 0), size_(size) {}

  std::size_t size() const { return size_; }
  /** Grows or shrinks, keeping the surviving bits. */
  void resize(std::size_t size) {
    words_.resize((size + 63) / 64, 0);
    size_ = size;
    if (size_ % 64 != 0) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool bit = true) {
    std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (bit) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  BitVector& operator&=(const BitVector& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  BitVector& operator|=(const BitVector& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
  friend bool operator==(const BitVector&, const BitVector&) = default;

  bool any() const {
    for (std::uint64_t w : words_) {
      if (w != 0) return true;
    }
    return false;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  /** Inner product over GF(2). */
  bool dot(const BitVector& o) const {
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
    return std::popcount(acc) & 1;
  }
  /** Index of the first set bit at or after `from`, or size() when none. */
  std::size_t next_set(std::size_t from) const;
  std::size_t first_set() const { return next_set(0); }

  std::vector<std::uint64_t>& words() { return words_; }
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

/** Indicator vector over a labelled coordinate sequence. */
struct Gf2Vector {
  std::vector<VertexId> labels;
  BitVector bits;

  static Gf2Vector indicator(std::vector<VertexId> labels, const VertexSet& set);
  VertexSet to_set() const;
  friend bool operator==(const Gf2Vector&, const Gf2Vector&) = default;
};

/** Dense row-major matrix over GF(2) with vertex labels on both axes. */
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  Gf2Matrix(std::vector<VertexId> row_labels, std::vector<VertexId> col_labels);
  static Gf2Matrix identity(const std::vector<VertexId>& labels);

  std::size_t rows() const { return row_labels_.size(); }
  std::size_t cols() const { return col_labels_.size(); }
  const std::vector<VertexId>& row_labels() const { return row_labels_; }
  const std::vector<VertexId>& col_labels() const { return col_labels_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool bit = true) { rows_[r].set(c, bit); }
  const BitVector& row(std::size_t r) const { return rows_[r]; }
  BitVector& row(std::size_t r) { return rows_[r]; }
  BitVector column(std::size_t c) const;

  std::optional<std::size_t> row_index(VertexId v) const;
  std::optional<std::size_t> col_index(VertexId v) const;

  /** True when square, labels agree and the entries form the identity. */
  bool is_identity() const;
  Gf2Matrix transpose() const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  std::vector<VertexId> row_labels_;
  std::vector<VertexId> col_labels_;
  std::vector<BitVector> rows_;
};

Gf2Matrix mat_mul(const Gf2Matrix& A, const Gf2Matrix& B);
Gf2Vector mat_vec(const Gf2Matrix& M, const Gf2Vector& x);

struct SolveResult {
  std::optional<Gf2Vector> solution;
  std::vector<Gf2Vector> kernel_basis;
};

/** One particular solution of M·x = b (if consistent) and a kernel basis. */
SolveResult solve(const Gf2Matrix& M, const Gf2Vector& b);
std::vector<Gf2Vector> kernel_basis(const Gf2Matrix& M);
/** C with M·C = Id; the two-sided inverse when M is square and invertible. */
std::optional<Gf2Matrix> right_inverse(const Gf2Matrix& M);
std::size_t rank(const Gf2Matrix& M);

}  // namespace mbqc::gf2
