#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "nodalcodes/scalar.hpp"

namespace nodalcodes {

/// Dense row-major matrix whose entries all live in one field.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols, Field field);

  static ExactMatrix identity(std::size_t n, Field field);
  /// Throws DataError on ragged rows or entries from different fields.
  static ExactMatrix from_rows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Throws DataError if value belongs to another field.
  void set(std::size_t r, std::size_t c, Scalar value);

  std::span<const Scalar> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  friend class Eliminator;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_{};
  std::vector<Scalar> data_;
};

struct RowEchelon {
  std::size_t rank = 0;
  ExactMatrix rref;
  std::vector<std::size_t> pivot_columns;
};

/// Gauss-Jordan elimination to the unique reduced row-echelon form.
RowEchelon rank_and_rref(const ExactMatrix& m);

/// Basis of the right kernel, one vector per free column (cols - rank vectors).
std::vector<std::vector<Scalar>> nullspace_basis(const ExactMatrix& m);

/// Rank of a rational matrix reduced mod p. Never exceeds the rational rank.
/// Throws ModulusError when p divides a denominator; DataError if m is not rational.
std::size_t modular_rank(const ExactMatrix& m, std::uint64_t p);

/// Uniformly random prime with exactly `bits` bits.
std::uint64_t random_prime(std::mt19937_64& rng, unsigned bits = 30);

/// Rank of m in its own field. For rational input a modular rank at a random 30-bit prime is
/// tried first: it is a lower bound, so when it already equals min(rows, cols) no rational
/// elimination is needed. Otherwise the rational elimination decides.
std::size_t exact_rank(const ExactMatrix& m, std::uint64_t seed = 0x5eed);

}  // namespace nodalcodes
