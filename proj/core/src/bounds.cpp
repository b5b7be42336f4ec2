#include "nodalcodes/bounds.hpp"

#include <string>

#include "nodalcodes/errors.hpp"
#include "nodalcodes/nodal.hpp"

namespace nodalcodes {

namespace {

// Keeps every cubic expression below 2^63.
constexpr std::int64_t kMaxDegree = 100000;

void require_even_degree(std::int64_t b) {
  if (b < 4 || b % 2 != 0) {
    throw DomainError("degree must be even and at least 4, got " + std::to_string(b));
  }
  if (b > kMaxDegree) throw DomainError("degree " + std::to_string(b) + " is too large");
}

}  // namespace

std::int64_t resolution_b2(std::int64_t b) { return b * b * b - 4 * b * b + 6 * b - 2; }

std::int64_t beauville_bound(std::int64_t b, std::int64_t mu, bool printed_closed_form) {
  require_even_degree(b);
  if (printed_closed_form) return mu - b * (b * b - 4 * b + 6) / 2;
  return mu - resolution_b2(b) / 2 + 1;
}

std::int64_t improved_bound(std::int64_t b, std::int64_t mu) {
  require_even_degree(b);
  return mu - (b - 2) * (23 * b * b - 38 * b + 24) / 48;
}

std::int64_t miyaoka_max_nodes(std::int64_t b) {
  if (b < 1) throw DomainError("degree must be positive");
  if (b > kMaxDegree) throw DomainError("degree " + std::to_string(b) + " is too large");
  return 4 * b * (b - 1) * (b - 1) / 9;
}

std::int64_t jacobian_slice_dim(std::int64_t b) {
  require_even_degree(b);
  return 4 * binomial(b / 2, 3);
}

TorsionRank torsion_rank(std::int64_t dim_code, std::int64_t defect) {
  if (dim_code < 0 || defect < 0) throw DomainError("dimensions must be non-negative");
  if (dim_code < defect) {
    throw InconsistencyError("defect " + std::to_string(defect) + " exceeds code dimension " +
                             std::to_string(dim_code));
  }
  const std::int64_t h3 = dim_code - defect;
  return {h3, 2 * h3};
}

BoundReport bound_report(std::int64_t b, std::int64_t mu, bool printed_closed_form) {
  BoundReport r;
  r.b = b;
  r.mu = mu;
  r.beauville = beauville_bound(b, mu, printed_closed_form);
  r.improved = improved_bound(b, mu);
  r.miyaoka_max = miyaoka_max_nodes(b);
  r.jacobian_slice_dim = jacobian_slice_dim(b);
  r.printed_closed_form = printed_closed_form;
  return r;
}

}  // namespace nodalcodes
