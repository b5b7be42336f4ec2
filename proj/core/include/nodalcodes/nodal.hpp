#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nodalcodes/matrix.hpp"
#include "nodalcodes/polyform.hpp"

namespace nodalcodes {

using Point = std::array<Scalar, 4>;

/// Scales p so that its first nonzero coordinate is 1. Throws DataError for the zero tuple.
Point normalize_point(const Point& p);
bool projectively_equal(const Point& a, const Point& b);

/// Nodes of a surface of even degree b, pairwise distinct as projective points.
struct NodeConfiguration {
  int degree = 0;
  Field field{};
  std::optional<HomogeneousForm> surface;
  std::vector<Point> nodes;

  std::size_t mu() const { return nodes.size(); }
};

/// Validates and builds a configuration: coordinates in `field`, no zero tuples, no projective
/// duplicates, surface (if any) over `field` of the given degree. Throws DataError.
NodeConfiguration make_node_configuration(int degree, Field field, std::vector<Point> nodes,
                                          std::optional<HomogeneousForm> surface = std::nullopt);

/// f(P) = 0, grad f(P) = 0 and the Hessian at P has rank exactly 3.
bool verify_node(const HomogeneousForm& f, const Point& p);

/// All C(d+3, 3) monomials of degree d, largest first in graded reverse-lex order.
std::vector<Monomial> monomial_basis(int d);

/// mu x C(d+3,3) matrix of the degree-d monomials evaluated at each point (rows in input order).
ExactMatrix evaluation_matrix(std::span<const Point> points, int d, Field field);

/// Dimension of the space of degree-d forms vanishing at every point; 0 for d < 0.
/// Over F_p the result is the F_p rank deficiency (probabilistic evidence only).
std::size_t vanishing_dimension(std::span<const Point> points, int d, Field field);
std::size_t vanishing_dimension(const NodeConfiguration& cfg, int d);

std::int64_t binomial(std::int64_t n, std::int64_t k);

/// d = dim_M - (C(3b/2 - 1, 3) - mu), signed and unclamped. A negative value means the
/// inputs cannot come from a genuine nodal branch surface.
struct DefectReport {
  int b = 0;
  std::int64_t mu = 0;
  int m_degree = 0;
  std::int64_t dim_m = 0;
  std::int64_t estimate = 0;
  std::int64_t d = 0;
};

/// Throws DomainError for odd b or b < 2.
DefectReport defect(int b, std::int64_t mu, std::int64_t dim_m);
DefectReport defect_from_nodes(const NodeConfiguration& cfg);

}  // namespace nodalcodes
