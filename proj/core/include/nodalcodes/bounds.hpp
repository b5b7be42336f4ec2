#pragma once

#include <cstdint>

namespace nodalcodes {

/// Second Betti number of the minimal resolution of a nodal surface of degree b:
/// b^3 - 4b^2 + 6b - 2.
std::int64_t resolution_b2(std::int64_t b);

/// Lower bound mu - b2/2 + 1 on the code dimension. With `printed_closed_form` the variant
/// mu - b(b^2 - 4b + 6)/2 is returned instead; it is smaller by exactly 2.
/// Throws DomainError unless b is even and >= 4.
std::int64_t beauville_bound(std::int64_t b, std::int64_t mu, bool printed_closed_form = false);

/// mu - (b-2)(23b^2 - 38b + 24)/48, exact for even b. Throws DomainError unless b even, >= 4.
std::int64_t improved_bound(std::int64_t b, std::int64_t mu);

/// floor(4 b (b-1)^2 / 9): the most nodes a degree-b surface can carry. Requires b >= 1.
std::int64_t miyaoka_max_nodes(std::int64_t b);

/// 4 * C(b/2, 3): dimension of the degree 3b/2 - 4 part of the Jacobian ideal.
std::int64_t jacobian_slice_dim(std::int64_t b);

struct TorsionRank {
  std::int64_t h3_rank = 0;
  std::int64_t total_rank = 0;
  friend bool operator==(const TorsionRank&, const TorsionRank&) = default;
};

/// h3_rank = dim_code - defect, total_rank = 2 * h3_rank (H^3 and H^4 each carry it).
/// Throws InconsistencyError when dim_code < defect, DomainError for negative input.
TorsionRank torsion_rank(std::int64_t dim_code, std::int64_t defect);

struct BoundReport {
  std::int64_t b = 0;
  std::int64_t mu = 0;
  std::int64_t beauville = 0;
  std::int64_t improved = 0;
  std::int64_t miyaoka_max = 0;
  std::int64_t jacobian_slice_dim = 0;
  bool printed_closed_form = false;
};

BoundReport bound_report(std::int64_t b, std::int64_t mu, bool printed_closed_form = false);

}  // namespace nodalcodes
