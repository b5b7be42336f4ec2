#include <doctest.h>

#include <gmpxx.h>

#include "nodalcodes/bounds.hpp"
#include "nodalcodes/errors.hpp"
#include "nodalcodes/nodal.hpp"

using namespace nodalcodes;

namespace {

mpz_class big_binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

TEST_CASE("Beauville bound") {
  CHECK(beauville_bound(4, 16) == 6);
  CHECK(beauville_bound(6, 65) == 13);
  CHECK(beauville_bound(8, 168) == 18);
  CHECK(resolution_b2(8) == 302);
  for (std::int64_t b = 4; b <= 40; b += 2) {
    for (std::int64_t mu : {0, 10, 1000}) {
      CHECK(beauville_bound(b, mu) - beauville_bound(b, mu, true) == 2);
    }
  }
  CHECK_THROWS_AS(beauville_bound(5, 10), DomainError);
  CHECK_THROWS_AS(beauville_bound(2, 10), DomainError);
}

TEST_CASE("improved bound") {
  CHECK(improved_bound(8, 168) == 19);
  CHECK(improved_bound(6, 65) == 13);
  CHECK(improved_bound(4, 16) == 6);
  CHECK_THROWS_AS(improved_bound(7, 10), DomainError);
}

TEST_CASE("improved-bound identity in big integers for even b in [4, 40]") {
  for (long b = 4; b <= 40; b += 2) {
    const mpz_class lhs = big_binomial(3 * b / 2 - 1, 3) - 4 * big_binomial(b / 2, 3);
    const mpz_class product = mpz_class(b - 2) * (23 * b * b - 38 * b + 24);
    CHECK(product % 48 == 0);
    CHECK(lhs == product / 48);
    for (std::int64_t mu : {0, 16, 500}) {
      CHECK(improved_bound(b, mu) == mu - binomial(3 * b / 2 - 1, 3) + jacobian_slice_dim(b));
    }
  }
}

TEST_CASE("bounds at the Miyaoka maximum turn negative") {
  for (std::int64_t b = 24; b <= 200; b += 2) CHECK(improved_bound(b, miyaoka_max_nodes(b)) < 0);
  for (std::int64_t b = 18; b <= 200; b += 2) CHECK(beauville_bound(b, miyaoka_max_nodes(b), true) < 0);
  CHECK(improved_bound(22, miyaoka_max_nodes(22)) >= 0);
  CHECK(beauville_bound(16, miyaoka_max_nodes(16), true) >= 0);
}

TEST_CASE("Miyaoka maximum and Jacobian slice") {
  CHECK(miyaoka_max_nodes(4) == 16);
  CHECK(miyaoka_max_nodes(6) == 66);
  CHECK(miyaoka_max_nodes(8) == 174);
  for (std::int64_t b = 1; b <= 60; ++b) {
    // floor(4 b (b-1)^2 / 9) by exact rational comparison.
    const std::int64_t m = miyaoka_max_nodes(b);
    CHECK(9 * m <= 4 * b * (b - 1) * (b - 1));
    CHECK(9 * (m + 1) > 4 * b * (b - 1) * (b - 1));
  }
  CHECK(jacobian_slice_dim(4) == 0);
  CHECK(jacobian_slice_dim(6) == 4);
  CHECK(jacobian_slice_dim(8) == 16);
  CHECK_THROWS_AS(jacobian_slice_dim(9), DomainError);
}

TEST_CASE("torsion ranks") {
  CHECK(torsion_rank(1, 0) == TorsionRank{1, 2});
  CHECK(torsion_rank(13, 13) == TorsionRank{0, 0});
  for (std::int64_t d = 0; d < 30; ++d) CHECK(torsion_rank(d, d) == TorsionRank{0, 0});
  CHECK_THROWS_AS(torsion_rank(2, 3), InconsistencyError);
  CHECK_THROWS_AS(torsion_rank(-1, 0), DomainError);
}

TEST_CASE("bound report") {
  const BoundReport r = bound_report(8, 168);
  CHECK(r.beauville == 18);
  CHECK(r.improved == 19);
  CHECK(r.miyaoka_max == 174);
  CHECK(r.jacobian_slice_dim == 16);
  CHECK_FALSE(r.printed_closed_form);
  CHECK(bound_report(8, 168, true).beauville == 16);
}
