#include "nodalcodes/nodal.hpp"

#include <algorithm>
#include <string>

#include "nodalcodes/errors.hpp"

namespace nodalcodes {

Point normalize_point(const Point& p) {
  for (const Scalar& c : p) {
    if (c.is_zero()) continue;
    const Scalar inv = c.inverse();
    Point out = p;
    for (Scalar& x : out) x *= inv;
    return out;
  }
  throw DataError("the all-zero tuple is not a projective point");
}

bool projectively_equal(const Point& a, const Point& b) {
  return normalize_point(a) == normalize_point(b);
}

NodeConfiguration make_node_configuration(int degree, Field field, std::vector<Point> nodes,
                                          std::optional<HomogeneousForm> surface) {
  if (degree < 0) throw DataError("negative surface degree");
  std::vector<Point> normalized;
  normalized.reserve(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (const Scalar& c : nodes[i]) {
      if (c.field() != field) {
        throw DataError("node " + std::to_string(i) + " has coordinates outside " + field.to_string());
      }
    }
    Point n = normalize_point(nodes[i]);
    for (std::size_t j = 0; j < normalized.size(); ++j) {
      if (normalized[j] == n) {
        throw DataError("nodes " + std::to_string(j) + " and " + std::to_string(i) +
                        " are the same projective point");
      }
    }
    normalized.push_back(std::move(n));
  }
  if (surface) {
    if (surface->field() != field) throw DataError("surface is not defined over the node field");
    if (!surface->is_zero() && surface->degree() != degree) {
      throw DataError("surface has degree " + std::to_string(surface->degree()) + ", expected " +
                      std::to_string(degree));
    }
  }
  return NodeConfiguration{degree, field, std::move(surface), std::move(nodes)};
}

bool verify_node(const HomogeneousForm& f, const Point& p) {
  if (!evaluate_at(f, p).is_zero()) return false;
  for (const HomogeneousForm& g : gradient(f)) {
    if (!evaluate_at(g, p).is_zero()) return false;
  }
  return hessian_rank_at(f, p) == 3;
}

std::vector<Monomial> monomial_basis(int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  const auto n = static_cast<unsigned>(d);
  // Descending grevlex: the w exponent grows slowest, then z, then y.
  for (unsigned w = 0; w <= n; ++w) {
    for (unsigned z = 0; z + w <= n; ++z) {
      for (unsigned y = 0; y + z + w <= n; ++y) {
        out.push_back(Monomial{{n - y - z - w, y, z, w}});
      }
    }
  }
  return out;
}

ExactMatrix evaluation_matrix(std::span<const Point> points, int d, Field field) {
  const std::vector<Monomial> basis = monomial_basis(d);
  ExactMatrix m(points.size(), basis.size(), field);
  for (std::size_t r = 0; r < points.size(); ++r) {
    // Power tables keep each entry to four multiplications.
    std::array<std::vector<Scalar>, 4> powers;
    for (std::size_t v = 0; v < 4; ++v) {
      if (points[r][v].field() != field) throw DataError("point outside the matrix field");
      powers[v].push_back(Scalar::one(field));
      for (int e = 1; e <= d; ++e) powers[v].push_back(powers[v].back() * points[r][v]);
    }
    for (std::size_t c = 0; c < basis.size(); ++c) {
      const auto& e = basis[c].exponents;
      m.set(r, c, powers[0][e[0]] * powers[1][e[1]] * powers[2][e[2]] * powers[3][e[3]]);
    }
  }
  return m;
}

std::size_t vanishing_dimension(std::span<const Point> points, int d, Field field) {
  if (d < 0) return 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (projectively_equal(points[i], points[j])) {
        throw DataError("duplicate projective point at positions " + std::to_string(j) + " and " +
                        std::to_string(i));
      }
    }
  }
  const auto count = static_cast<std::size_t>(binomial(d + 3, 3));
  if (points.empty()) return count;
  return count - exact_rank(evaluation_matrix(points, d, field));
}

std::size_t vanishing_dimension(const NodeConfiguration& cfg, int d) {
  return vanishing_dimension(cfg.nodes, d, cfg.field);
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

DefectReport defect(int b, std::int64_t mu, std::int64_t dim_m) {
  if (b < 2 || b % 2 != 0) {
    throw DomainError("branch degree must be even and at least 2, got " + std::to_string(b));
  }
  if (b > 200000) throw DomainError("branch degree too large");
  DefectReport r;
  r.b = b;
  r.mu = mu;
  r.m_degree = 3 * b / 2 - 4;
  r.dim_m = dim_m;
  r.estimate = binomial(3 * b / 2 - 1, 3) - mu;
  r.d = dim_m - r.estimate;
  return r;
}

DefectReport defect_from_nodes(const NodeConfiguration& cfg) {
  if (cfg.degree < 2 || cfg.degree % 2 != 0) {
    throw DomainError("branch degree must be even and at least 2, got " + std::to_string(cfg.degree));
  }
  const int m_degree = 3 * cfg.degree / 2 - 4;
  const auto dim_m = static_cast<std::int64_t>(vanishing_dimension(cfg, m_degree));
  return defect(cfg.degree, static_cast<std::int64_t>(cfg.mu()), dim_m);
}

}  // namespace nodalcodes
