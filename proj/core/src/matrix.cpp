#include "nodalcodes/matrix.hpp"

#include <algorithm>
#include <utility>

#include "nodalcodes/errors.hpp"

namespace nodalcodes {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, Scalar::zero(field)) {}

ExactMatrix ExactMatrix::identity(std::size_t n, Field field) {
  ExactMatrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = Scalar::one(field);
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
  if (rows.empty()) return {};
  const std::size_t cols = rows.front().size();
  Field field = cols > 0 ? rows.front().front().field() : Field::rational();
  ExactMatrix m(rows.size(), cols, field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DataError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void ExactMatrix::set(std::size_t r, std::size_t c, Scalar value) {
  if (value.field() != field_) {
    throw DataError("matrix over " + field_.to_string() + " cannot hold an entry from " +
                    value.field().to_string());
  }
  data_[r * cols_ + c] = std::move(value);
}

class Eliminator {
 public:
  static RowEchelon run(ExactMatrix m) {
    RowEchelon out;
    const std::size_t rows = m.rows_;
    const std::size_t cols = m.cols_;
    auto at = [&](std::size_t r, std::size_t c) -> Scalar& { return m.data_[r * cols + c]; };
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
      // Smallest coefficient wins: keeps rational growth down, result is pivot-independent.
      std::size_t best = rows;
      std::size_t best_size = 0;
      for (std::size_t r = pivot_row; r < rows; ++r) {
        if (at(r, c).is_zero()) continue;
        const std::size_t size = at(r, c).bit_size();
        if (best == rows || size < best_size) {
          best = r;
          best_size = size;
        }
      }
      if (best == rows) continue;
      if (best != pivot_row) {
        for (std::size_t k = 0; k < cols; ++k) std::swap(at(best, k), at(pivot_row, k));
      }
      const Scalar inv = at(pivot_row, c).inverse();
      for (std::size_t k = c; k < cols; ++k) {
        if (!at(pivot_row, k).is_zero()) at(pivot_row, k) *= inv;
      }
      for (std::size_t r = 0; r < rows; ++r) {
        if (r == pivot_row || at(r, c).is_zero()) continue;
        const Scalar factor = at(r, c);
        for (std::size_t k = c; k < cols; ++k) {
          if (!at(pivot_row, k).is_zero()) at(r, k) -= factor * at(pivot_row, k);
        }
      }
      out.pivot_columns.push_back(c);
      ++pivot_row;
    }
    out.rank = pivot_row;
    out.rref = std::move(m);
    return out;
  }
};

RowEchelon rank_and_rref(const ExactMatrix& m) { return Eliminator::run(m); }

std::vector<std::vector<Scalar>> nullspace_basis(const ExactMatrix& m) {
  const RowEchelon e = rank_and_rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_columns) is_pivot[c] = true;

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), Scalar::zero(m.field()));
    v[free] = Scalar::one(m.field());
    for (std::size_t i = 0; i < e.pivot_columns.size(); ++i) {
      v[e.pivot_columns[i]] = -e.rref(i, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t modular_rank(const ExactMatrix& m, std::uint64_t p) {
  if (!m.field().is_rational()) throw DataError("modular_rank expects a rational matrix");
  const Field fp = Field::prime(p);
  ExactMatrix reduced(m.rows(), m.cols(), fp);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpq_class& q = m(r, c).rational();
      if (mpz_divisible_ui_p(q.get_den_mpz_t(), p) != 0) {
        throw ModulusError("prime " + std::to_string(p) + " divides a denominator");
      }
      reduced.set(r, c, Scalar::from_ratio(fp, q.get_num(), q.get_den()));
    }
  }
  return rank_and_rref(reduced).rank;
}

std::uint64_t random_prime(std::mt19937_64& rng, unsigned bits) {
  if (bits < 3 || bits > 32) throw DomainError("random_prime supports 3..32 bits");
  std::uniform_int_distribution<std::uint64_t> dist(1ULL << (bits - 1), (1ULL << bits) - 1);
  for (;;) {
    const std::uint64_t candidate = dist(rng) | 1ULL;
    if (is_prime(candidate)) return candidate;
  }
}

std::size_t exact_rank(const ExactMatrix& m, std::uint64_t seed) {
  if (m.field().is_rational()) {
    const std::size_t full = std::min(m.rows(), m.cols());
    std::mt19937_64 rng(seed);
    try {
      if (modular_rank(m, random_prime(rng)) == full) return full;
    } catch (const ModulusError&) {
      // unlucky prime; fall through to the rational elimination
    }
  }
  return rank_and_rref(m).rank;
}

}  // namespace nodalcodes
