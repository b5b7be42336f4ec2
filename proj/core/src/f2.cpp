#include "nodalcodes/f2.hpp"

#include <utility>

#include "nodalcodes/errors.hpp"

namespace nodalcodes {

BitVector BitVector::from_indices(std::size_t size, std::span<const std::size_t> indices) {
  BitVector v(size);
  for (std::size_t i : indices) {
    if (i >= size) {
      throw DataError("index " + std::to_string(i) + " out of range for length " + std::to_string(size));
    }
    v.set(i);
  }
  return v;
}

std::size_t BitVector::count() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool BitVector::none() const {
  for (std::uint64_t w : words_) {
    if (w != 0) return false;
  }
  return true;
}

std::size_t BitVector::intersection_count(const BitVector& o) const {
  if (o.size_ != size_) throw DataError("bit vector length mismatch");
  std::size_t n = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    n += static_cast<std::size_t>(std::popcount(words_[i] & o.words_[i]));
  }
  return n;
}

BitVector& BitVector::operator^=(const BitVector& o) {
  if (o.size_ != size_) throw DataError("bit vector length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

std::vector<std::size_t> BitVector::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (test(i)) s[i] = '1';
  }
  return s;
}

std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  for (std::size_t i = 0; i < a.size_; ++i) {
    if (a.test(i) != b.test(i)) return a.test(i) ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols) {
  if (cols > kMaxColumns) {
    throw ResourceError("bit matrix has " + std::to_string(cols) + " columns, cap is " +
                        std::to_string(kMaxColumns));
  }
  rows_.assign(rows, BitVector(cols));
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows, std::size_t cols) {
  BitMatrix m(0, cols);
  for (auto& r : rows) m.append_row(std::move(r));
  return m;
}

void BitMatrix::append_row(BitVector row) {
  if (row.size() != cols_) throw DataError("row length does not match column count");
  rows_.push_back(std::move(row));
}

BitVector F2Basis::reduce(BitVector v) const {
  if (v.size() != n_) throw DataError("vector length does not match the ambient space");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (v.test(pivots_[i])) v ^= rows_[i];
  }
  return v;
}

bool F2Basis::insert(BitVector v) {
  v = reduce(std::move(v));
  const auto bits = v.indices();
  if (bits.empty()) return false;
  pivots_.push_back(bits.front());
  rows_.push_back(std::move(v));
  return true;
}

bool F2Basis::contains(BitVector v) const { return reduce(std::move(v)).none(); }

BitEchelon f2_rref(const BitMatrix& m) {
  BitEchelon out;
  out.rref = m;
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    std::size_t r = pivot_row;
    while (r < m.rows() && !out.rref.test(r, c)) ++r;
    if (r == m.rows()) continue;
    std::swap(out.rref.row(r), out.rref.row(pivot_row));
    for (std::size_t k = 0; k < m.rows(); ++k) {
      if (k != pivot_row && out.rref.test(k, c)) out.rref.row(k) ^= out.rref.row(pivot_row);
    }
    out.pivot_columns.push_back(c);
    ++pivot_row;
  }
  out.rank = pivot_row;
  return out;
}

std::size_t f2_rank(const BitMatrix& m) { return f2_rref(m).rank; }

}  // namespace nodalcodes
