#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace nodalcodes {

/// Fixed-length vector over F2, packed 64 bits per word. Bits past size() are always zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static BitVector from_indices(std::size_t size, std::span<const std::size_t> indices);

  std::size_t size() const { return size_; }
  std::span<const std::uint64_t> words() const { return words_; }

  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value) {
      words_[i / 64] |= mask;
    } else {
      words_[i / 64] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  std::size_t count() const;
  bool none() const;
  /// Popcount of the intersection. Sizes must match.
  std::size_t intersection_count(const BitVector& o) const;

  BitVector& operator^=(const BitVector& o);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

  std::vector<std::size_t> indices() const;
  /// "0110..." with bit 0 first.
  std::string to_string() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b);

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Matrix over F2 stored as packed rows; at most 4096 columns.
class BitMatrix {
 public:
  static constexpr std::size_t kMaxColumns = 4096;

  BitMatrix() = default;
  /// Throws ResourceError if cols exceeds kMaxColumns.
  BitMatrix(std::size_t rows, std::size_t cols);
  /// All rows must have the same size; throws DataError otherwise.
  static BitMatrix from_rows(std::vector<BitVector> rows, std::size_t cols);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  const BitVector& row(std::size_t r) const { return rows_[r]; }
  BitVector& row(std::size_t r) { return rows_[r]; }
  bool test(std::size_t r, std::size_t c) const { return rows_[r].test(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }

  void append_row(BitVector row);

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

/// Incrementally maintained echelon basis of a subspace of F2^n.
class F2Basis {
 public:
  explicit F2Basis(std::size_t n) : n_(n) {}

  /// Adds v if it is independent of the stored vectors; returns whether it was added.
  bool insert(BitVector v);
  bool contains(BitVector v) const;
  std::size_t dim() const { return rows_.size(); }

 private:
  BitVector reduce(BitVector v) const;

  std::size_t n_;
  std::vector<std::size_t> pivots_;
  std::vector<BitVector> rows_;
};

struct BitEchelon {
  std::size_t rank = 0;
  BitMatrix rref;
  std::vector<std::size_t> pivot_columns;
};

/// Packed-word Gauss-Jordan elimination mod 2.
BitEchelon f2_rref(const BitMatrix& m);
std::size_t f2_rank(const BitMatrix& m);

}  // namespace nodalcodes
