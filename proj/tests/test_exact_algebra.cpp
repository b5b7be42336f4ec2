#include <doctest.h>

#include <random>

#include "nodalcodes/errors.hpp"
#include "nodalcodes/matrix.hpp"
#include "nodalcodes/scalar.hpp"
#include "oracles.hpp"
#include "random_inputs.hpp"

using namespace nodalcodes;
using nodalcodes::testing::low_rank;
using nodalcodes::testing::random_matrix;

namespace {

using Grid = std::vector<std::vector<mpq_class>>;

// Laplace expansion along the first row.
mpq_class cofactor_det(const Grid& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  mpq_class det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] == 0) continue;
    Grid minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<mpq_class> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(a[r][k]);
      }
      minor.push_back(std::move(row));
    }
    const mpq_class term = a[0][c] * cofactor_det(minor);
    det += (c % 2 == 0) ? term : mpq_class(-term);
  }
  return det;
}

void choose(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
            std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  choose(n, k, 0, cur, out);
  return out;
}

bool has_nonzero_minor(const ExactMatrix& m, std::size_t k) {
  if (k == 0) return true;
  for (const auto& rows : subsets(m.rows(), k)) {
    for (const auto& cols : subsets(m.cols(), k)) {
      Grid g;
      for (std::size_t r : rows) {
        std::vector<mpq_class> row;
        for (std::size_t c : cols) row.push_back(m(r, c).rational());
        g.push_back(std::move(row));
      }
      if (cofactor_det(g) != 0) return true;
    }
  }
  return false;
}

// Largest k with a nonzero k x k minor.
std::size_t minor_rank(const ExactMatrix& m) {
  std::size_t k = std::min(m.rows(), m.cols());
  while (k > 0 && !has_nonzero_minor(m, k)) --k;
  return k;
}

}  // namespace

TEST_CASE("rationals are kept in lowest terms with positive denominator") {
  const Scalar s = Scalar::from_ratio(Field::rational(), 6, -4);
  CHECK(s.rational() == mpq_class(-3, 2));
  CHECK(s.rational().get_den() == 2);
  CHECK(s.to_string() == "-3/2");
  CHECK(parse_scalar("10/4", Field::rational()).to_string() == "5/2");
  CHECK(parse_scalar("-7", Field::rational()) == Scalar(-7));
  CHECK_THROWS_AS(parse_scalar("1/0", Field::rational()), DataError);
  CHECK_THROWS_AS(parse_scalar("1.5", Field::rational()), DataError);
}

TEST_CASE("prime-field elements are reduced into [0, p)") {
  const Field f7 = Field::prime(7);
  CHECK(Scalar::from_integer(f7, -1).residue() == 6);
  CHECK(Scalar::from_integer(f7, 23).residue() == 2);
  CHECK(parse_scalar("1/3", f7).residue() == 5);
  CHECK((Scalar::residue(f7, 3) * Scalar::residue(f7, 5)).residue() == 1);
  CHECK(Scalar::residue(f7, 3).inverse().residue() == 5);
  CHECK_THROWS_AS(Scalar::from_ratio(f7, 1, 14), DataError);
  CHECK_THROWS_AS(Scalar::zero(f7).inverse(), DomainError);
}

TEST_CASE("field moduli must be odd primes below 2^32") {
  CHECK_THROWS_AS(Field::prime(2), DomainError);
  CHECK_THROWS_AS(Field::prime(9), DomainError);
  CHECK_THROWS_AS(Field::prime(4294967311ULL), DomainError);
  CHECK(Field::prime(4294967291ULL).modulus() == 4294967291ULL);
  CHECK(Field::prime(101).to_string() == "F_101");
}

TEST_CASE("mixing fields is a data error") {
  const Scalar q = 1;
  const Scalar r = Scalar::one(Field::prime(5));
  CHECK_THROWS_AS(q + r, DataError);
  CHECK_FALSE(q == r);
  CHECK_THROWS_AS(ExactMatrix::from_rows({{q, r}}), DataError);
  ExactMatrix m(1, 1, Field::rational());
  CHECK_THROWS_AS(m.set(0, 0, r), DataError);
}

TEST_CASE("rank_and_rref on fixed examples") {
  const auto id = rank_and_rref(ExactMatrix::identity(3, Field::rational()));
  CHECK(id.rank == 3);
  CHECK(id.rref == ExactMatrix::identity(3, Field::rational()));

  const auto zero = rank_and_rref(ExactMatrix(4, 7, Field::rational()));
  CHECK(zero.rank == 0);
  CHECK(zero.pivot_columns.empty());

  const ExactMatrix m = ExactMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  const auto e = rank_and_rref(m);
  CHECK(e.rank == 2);
  CHECK(e.rref == ExactMatrix::from_rows({{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}));
  CHECK(e.pivot_columns == std::vector<std::size_t>{0, 1});
}

TEST_CASE("duplicated rows drop the rank, confirmed by cofactor minors") {
  std::mt19937_64 rng(11);
  ExactMatrix m = random_matrix(rng, 8, 8);
  for (std::size_t c = 0; c < 8; ++c) {
    m.set(6, c, m(0, c));
    m.set(7, c, m(1, c));
  }
  const std::size_t rank = rank_and_rref(m).rank;
  CHECK(rank <= 7);
  Grid g(8);
  for (std::size_t r = 0; r < 8; ++r) {
    for (std::size_t c = 0; c < 8; ++c) g[r].push_back(m(r, c).rational());
  }
  CHECK(cofactor_det(g) == 0);
  CHECK(has_nonzero_minor(m, 4));
  CHECK(has_nonzero_minor(m, 6));
  CHECK_FALSE(has_nonzero_minor(m, 7));
  CHECK(rank == 6);
}

TEST_CASE("rank agrees with the largest nonvanishing minor") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 1 + rng() % 5;
    const std::size_t cols = 1 + rng() % 5;
    const std::size_t r = rng() % 5;
    const ExactMatrix m = r == 0 ? ExactMatrix(rows, cols, Field::rational()) : low_rank(rng, rows, cols, r);
    CHECK(rank_and_rref(m).rank == minor_rank(m));
  }
}

TEST_CASE("rref is idempotent and reduced") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 1 + rng() % 7;
    const std::size_t cols = 1 + rng() % 7;
    const ExactMatrix m = low_rank(rng, rows, cols, 1 + rng() % 4);
    const auto once = rank_and_rref(m);
    const auto twice = rank_and_rref(once.rref);
    CHECK(twice.rank == once.rank);
    CHECK(twice.rref == once.rref);
    for (std::size_t i = 0; i < once.rank; ++i) {
      const std::size_t pc = once.pivot_columns[i];
      for (std::size_t r = 0; r < rows; ++r) CHECK(once.rref(r, pc) == Scalar(r == i ? 1 : 0));
    }
  }
}

TEST_CASE("rref over a prime field") {
  const Field f5 = Field::prime(5);
  const auto s = [&](long v) { return Scalar::from_integer(f5, v); };
  const ExactMatrix m = ExactMatrix::from_rows({{s(1), s(2)}, {s(3), s(1)}});
  // det = 1 - 6 = -5 = 0 mod 5
  CHECK(rank_and_rref(m).rank == 1);
}

TEST_CASE("nullspace_basis") {
  CHECK(nullspace_basis(ExactMatrix::identity(4, Field::rational())).empty());
  CHECK(nullspace_basis(ExactMatrix(2, 5, Field::rational())).size() == 5);

  SUBCASE("1x3 all-ones over F_7 against enumeration of F_7^3") {
    const Field f7 = Field::prime(7);
    const Scalar one = Scalar::one(f7);
    const ExactMatrix m = ExactMatrix::from_rows({{one, one, one}});
    const auto basis = nullspace_basis(m);
    REQUIRE(basis.size() == 2);
    for (const auto& v : basis) CHECK((v[0] + v[1] + v[2]).is_zero());
    // The kernel has 7^2 elements, so its dimension is 2; the basis spans it.
    std::size_t kernel_size = 0;
    std::size_t spanned = 0;
    for (std::uint64_t a = 0; a < 7; ++a) {
      for (std::uint64_t b = 0; b < 7; ++b) {
        for (std::uint64_t c = 0; c < 7; ++c) {
          if ((a + b + c) % 7 != 0) continue;
          ++kernel_size;
          bool found = false;
          for (std::uint64_t s = 0; s < 7 && !found; ++s) {
            for (std::uint64_t t = 0; t < 7 && !found; ++t) {
              const Scalar ss = Scalar::residue(f7, s);
              const Scalar tt = Scalar::residue(f7, t);
              found = ss * basis[0][0] + tt * basis[1][0] == Scalar::residue(f7, a) &&
                      ss * basis[0][1] + tt * basis[1][1] == Scalar::residue(f7, b) &&
                      ss * basis[0][2] + tt * basis[1][2] == Scalar::residue(f7, c);
            }
          }
          spanned += found ? 1 : 0;
        }
      }
    }
    CHECK(kernel_size == 49);
    CHECK(spanned == 49);
  }

  SUBCASE("random matrices annihilate their kernel vectors") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      const ExactMatrix m = low_rank(rng, 4, 7, 1 + rng() % 4);
      const auto basis = nullspace_basis(m);
      CHECK(basis.size() == 7 - rank_and_rref(m).rank);
      for (const auto& v : basis) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
          Scalar dot = 0;
          for (std::size_t c = 0; c < m.cols(); ++c) dot += m(r, c) * v[c];
          CHECK(dot.is_zero());
        }
      }
    }
  }
}

TEST_CASE("modular_rank") {
  CHECK(modular_rank(ExactMatrix::identity(5, Field::rational()), 1000003) == 5);
  const ExactMatrix col = ExactMatrix::from_rows({{1}, {7}});
  CHECK(modular_rank(col, 7) == 1);
  CHECK(rank_and_rref(col).rank == 1);
  // [[1, 1], [1, 8]] has rational rank 2 but collapses mod 7.
  CHECK(modular_rank(ExactMatrix::from_rows({{1, 1}, {1, 8}}), 7) == 1);

  const ExactMatrix with_den =
      ExactMatrix::from_rows({{Scalar::from_ratio(Field::rational(), 1, 14), 1}});
  CHECK_THROWS_AS(modular_rank(with_den, 7), ModulusError);
  CHECK_THROWS_AS(modular_rank(ExactMatrix::identity(2, Field::prime(5)), 7), DataError);
}

TEST_CASE("modular rank at random 30-bit primes matches the rational rank") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const ExactMatrix m = trial % 2 == 0 ? random_matrix(rng, 10, 10) : low_rank(rng, 10, 10, 3 + rng() % 6);
    const std::size_t rational = rank_and_rref(m).rank;
    for (int k = 0; k < 3; ++k) {
      const std::uint64_t p = random_prime(rng);
      CHECK(is_prime(p));
      CHECK(p >= (1ULL << 29));
      CHECK(p < (1ULL << 30));
      const std::size_t modular = modular_rank(m, p);
      CHECK(modular <= rational);
      CHECK(modular == rational);
    }
    CHECK(exact_rank(m) == rational);
  }
}

TEST_CASE("exact_rank covers rank-deficient and prime-field input") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const ExactMatrix m = low_rank(rng, 6, 9, 1 + rng() % 5);
    CHECK(exact_rank(m, rng()) == rank_and_rref(m).rank);
  }
  const ExactMatrix f = random_matrix(rng, 5, 5, Field::prime(13));
  CHECK(exact_rank(f) == rank_and_rref(f).rank);
}

TEST_CASE("is_prime") {
  const std::vector<std::uint64_t> primes{3, 5, 7, 101, 65537, 1000003, 4294967291ULL, 18446744073709551557ULL};
  for (auto p : primes) CHECK(is_prime(p));
  const std::vector<std::uint64_t> composites{0, 1, 4, 561, 1105, 3215031751ULL, 4294967297ULL};
  for (auto n : composites) CHECK_FALSE(is_prime(n));
  // Trial division oracle below 2000.
  for (std::uint64_t n = 0; n < 2000; ++n) {
    bool prime = n >= 2;
    for (std::uint64_t d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
    CHECK(is_prime(n) == prime);
  }
}
