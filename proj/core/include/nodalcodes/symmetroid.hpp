#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "nodalcodes/polyform.hpp"

namespace nodalcodes {

/// Normalized projective point over F_p: first nonzero coordinate is 1.
using FpPoint = std::array<std::uint32_t, 4>;
using FpMatrix4 = std::array<std::array<std::uint32_t, 4>, 4>;

/// Symmetric 4x4 matrix whose upper-triangle entries are linear forms in x, y, z, w over F_p.
class SymmetricLinearMatrix {
 public:
  /// Entry order of the ten independent forms.
  static constexpr std::array<std::pair<int, int>, 10> kUpperTriangle = {
      {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}}};

  using Coefficients = std::array<std::array<std::uint32_t, 4>, 10>;

  /// Throws DomainError unless p is an odd prime below 2^16. Coefficients are reduced mod p.
  SymmetricLinearMatrix(std::uint32_t p, const Coefficients& coefficients);

  /// Ten linear (or zero) forms over F_p in upper-triangle order. Throws DataError otherwise.
  static SymmetricLinearMatrix from_forms(std::uint32_t p, std::span<const HomogeneousForm> forms);

  /// Independent uniform coefficients. Over a small field the ten nodes of such a symmetroid
  /// are mostly conjugate over an extension, so few of them are F_p-rational.
  static SymmetricLinearMatrix uniform_random(std::uint32_t p, std::uint64_t seed);

  /// The web of quadrics through six random points in general position (no four coplanar),
  /// in a random basis. Its ten rank-2 members are the plane pairs through complementary
  /// triples, so all ten nodes are F_p-rational.
  static SymmetricLinearMatrix six_point_web(std::uint32_t p, std::uint64_t seed);

  std::uint32_t prime() const { return p_; }
  const Coefficients& coefficients() const { return coeffs_; }
  HomogeneousForm entry_form(std::size_t k) const;
  /// The symmetroid quartic det(A) over F_p.
  HomogeneousForm determinant() const;

  FpMatrix4 evaluate(const FpPoint& point) const;

 private:
  std::uint32_t p_;
  Coefficients coeffs_{};
};

/// Rank of a 4x4 matrix over F_p is at most 2, tested through its sixteen 3x3 minors.
bool rank_at_most_two(const FpMatrix4& m, std::uint32_t p);

struct ScanOptions {
  /// More points than this, or a full F_p-rational line among them, flags a positive-dimensional locus.
  std::size_t degeneracy_threshold = 50;
  /// 0 picks worker_threads().
  unsigned threads = 0;
};

struct ScanResult {
  std::uint32_t prime = 0;
  /// Lexicographically sorted.
  std::vector<FpPoint> points;
  bool degenerate = false;
};

inline constexpr std::uint32_t kMaxScanPrime = 1024;

/// All points of P^3(F_p) where A has rank <= 2. Throws ResourceError for p > 1024.
ScanResult scan_nodes_fp(const SymmetricLinearMatrix& a, const ScanOptions& options = {});

/// Number of points of P^3(F_p) in the enumeration order used by the scan.
std::uint64_t projective_point_count(std::uint32_t p);
/// The index-th normalized point of P^3(F_p) in lexicographic order.
FpPoint projective_point(std::uint32_t p, std::uint64_t index);

struct QuadricCertificate {
  std::size_t rank = 0;
  /// rank == 10: no quadric over F_p contains all ten points. Finite-field evidence only.
  bool certified = false;
};

/// Rank of the 10x10 evaluation matrix of quadric monomials at the points.
/// Throws DomainError unless exactly ten pairwise distinct points are given.
QuadricCertificate no_quadric_certificate(std::span<const FpPoint> points, std::uint32_t p);

}  // namespace nodalcodes
