#include <doctest.h>

#include <random>

#include "nodalcodes/errors.hpp"
#include "nodalcodes/nodal.hpp"
#include "nodalcodes/symmetroid.hpp"
#include "oracles.hpp"
#include "random_inputs.hpp"

using namespace nodalcodes;
using nodalcodes::testing::brute_force_vanishing;
using nodalcodes::testing::random_configuration;
using nodalcodes::testing::random_point;

namespace {

const Field kQ = Field::rational();

Point pt(long a, long b, long c, long d) { return {a, b, c, d}; }

}  // namespace

TEST_CASE("projective normalization and equality") {
  CHECK(projectively_equal(pt(0, 2, 4, -6), pt(0, -1, -2, 3)));
  CHECK_FALSE(projectively_equal(pt(1, 0, 0, 0), pt(0, 1, 0, 0)));
  const Point n = normalize_point(pt(0, 3, 1, 6));
  CHECK(n[1] == Scalar(1));
  CHECK(n[2] == Scalar::from_ratio(kQ, 1, 3));
  CHECK_THROWS_AS(normalize_point(pt(0, 0, 0, 0)), DataError);
}

TEST_CASE("node configurations reject bad input") {
  CHECK_THROWS_AS(make_node_configuration(4, kQ, {pt(1, 0, 0, 0), pt(2, 0, 0, 0)}), DataError);
  CHECK_THROWS_AS(make_node_configuration(4, kQ, {pt(0, 0, 0, 0)}), DataError);
  CHECK_THROWS_AS(make_node_configuration(4, kQ, {pt(1, 0, 0, 0)}, parse_form("x^3")), DataError);
  const Field f5 = Field::prime(5);
  CHECK_THROWS_AS(make_node_configuration(4, f5, {pt(1, 0, 0, 0)}), DataError);
  const auto cfg = make_node_configuration(4, kQ, {pt(1, 0, 0, 0), pt(0, 1, 0, 0)});
  CHECK(cfg.mu() == 2);
}

TEST_CASE("verify_node") {
  CHECK(verify_node(parse_form("x^2 + y^2 + z^2"), pt(0, 0, 0, 1)));
  CHECK_FALSE(verify_node(parse_form("x"), pt(0, 1, 0, 0)));
  CHECK_FALSE(verify_node(parse_form("x^2 + y^2"), pt(0, 0, 0, 1)));
  CHECK_FALSE(verify_node(parse_form("x^2 + y^2 + z^2 + w^2"), pt(0, 0, 0, 1)));
  // Kummer-type quartic with a node at (0:0:0:1): w^2 (x^2 + y^2 + z^2) + x^4 + y^4 + z^4.
  CHECK(verify_node(parse_form("w^2*x^2 + w^2*y^2 + w^2*z^2 + x^4 + y^4 + z^4"), pt(0, 0, 0, 1)));
}

TEST_CASE("monomial basis") {
  CHECK(monomial_basis(0).size() == 1);
  CHECK(monomial_basis(2).size() == 10);
  CHECK(monomial_basis(5).size() == 56);
  for (int d = 0; d <= 6; ++d) {
    const auto basis = monomial_basis(d);
    CHECK(static_cast<std::int64_t>(basis.size()) == binomial(d + 3, 3));
    for (std::size_t i = 0; i + 1 < basis.size(); ++i) CHECK(grevlex_less(basis[i + 1], basis[i]));
    for (const auto& m : basis) CHECK(m.degree() == static_cast<unsigned>(d));
  }
}

TEST_CASE("vanishing dimension on fixed examples") {
  CHECK(vanishing_dimension(std::span<const Point>{}, 2, kQ) == 10);
  const std::vector<Point> one{pt(1, 2, 3, 4)};
  CHECK(vanishing_dimension(one, 2, kQ) == 9);
  CHECK(vanishing_dimension(one, -1, kQ) == 0);
  const std::vector<Point> dup{pt(1, 2, 3, 4), pt(2, 4, 6, 8)};
  CHECK_THROWS_AS(vanishing_dimension(dup, 2, kQ), DataError);
  // Four coordinate points impose independent conditions on quadrics.
  const std::vector<Point> coords{pt(1, 0, 0, 0), pt(0, 1, 0, 0), pt(0, 0, 1, 0), pt(0, 0, 0, 1)};
  CHECK(vanishing_dimension(coords, 2, kQ) == 6);
  // Five points on a line fail to impose independent conditions on quadrics (only 3 do).
  std::vector<Point> line;
  for (long t = 0; t < 5; ++t) line.push_back(pt(1, t, 0, 0));
  CHECK(vanishing_dimension(line, 2, kQ) == 7);
}

TEST_CASE("vanishing dimension agrees with a brute-force oracle and is monotone") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 3);
    const std::size_t count = 1 + rng() % 12;
    const std::vector<Point> points = random_configuration(rng, count, trial);
    CHECK(vanishing_dimension(points, d, kQ) == brute_force_vanishing(points, d));
    std::size_t previous = static_cast<std::size_t>(binomial(d + 3, 3));
    for (std::size_t k = 1; k <= points.size(); ++k) {
      const std::size_t current = vanishing_dimension(std::span(points).first(k), d, kQ);
      CHECK(current <= previous);
      CHECK(previous - current <= 1);
      previous = current;
    }
  }
}

TEST_CASE("defect arithmetic") {
  CHECK(defect(4, 10, 0).d == 0);
  CHECK(defect(4, 11, 0).d == 1);
  const DefectReport sextic = defect(6, 65, 4);
  CHECK(sextic.m_degree == 5);
  CHECK(sextic.estimate == 56 - 65);
  CHECK(sextic.d == 13);
  for (int b : {4, 6, 8}) {
    const auto full = binomial(3 * b / 2 - 1, 3);
    CHECK(defect(b, 0, full).d == 0);
  }
  // Signed, never clamped.
  CHECK(defect(4, 0, 0).d == -10);
  CHECK(defect(2, 0, 0).m_degree == -1);
  CHECK_THROWS_AS(defect(5, 10, 0), DomainError);
  CHECK_THROWS_AS(defect(0, 10, 0), DomainError);
  for (int b = 2; b <= 20; b += 2) {
    for (std::int64_t mu = 0; mu < 40; mu += 7) {
      const auto r = defect(b, mu, 3);
      CHECK(r.d == r.dim_m - r.estimate);
    }
  }
}

TEST_CASE("defect from nodes") {
  const auto empty = make_node_configuration(4, kQ, {});
  CHECK(defect_from_nodes(empty).d == 0);

  SUBCASE("eleven random points in general position give d = 1") {
    std::mt19937_64 rng(1234);
    std::vector<Point> points;
    while (points.size() < 11) points.push_back(random_point(rng));
    // Generic-rank oracle: the 11 x 10 evaluation matrix has full rank 10.
    CHECK(rank_and_rref(evaluation_matrix(points, 2, kQ)).rank == 10);
    const auto cfg = make_node_configuration(4, kQ, points);
    const DefectReport r = defect_from_nodes(cfg);
    CHECK(r.dim_m == 0);
    CHECK(r.d == 1);
  }

  SUBCASE("the ten nodes of a symmetroid over F_101 give d = 0") {
    const auto a = SymmetricLinearMatrix::six_point_web(101, 3);
    const ScanResult scan = scan_nodes_fp(a);
    REQUIRE(scan.points.size() == 10);
    const Field f = Field::prime(101);
    std::vector<Point> nodes;
    for (const auto& p : scan.points) {
      nodes.push_back({Scalar::residue(f, p[0]), Scalar::residue(f, p[1]), Scalar::residue(f, p[2]),
                       Scalar::residue(f, p[3])});
    }
    const auto cfg = make_node_configuration(4, f, nodes, a.determinant());
    CHECK(vanishing_dimension(cfg, 2) == 0);
    CHECK(defect_from_nodes(cfg).d == 0);
    for (const Point& p : cfg.nodes) CHECK(verify_node(*cfg.surface, p));
  }

  CHECK_THROWS_AS(defect_from_nodes(make_node_configuration(3, kQ, {})), DomainError);
}
