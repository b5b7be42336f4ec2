#include "nodalcodes/symmetroid.hpp"

#include <algorithm>
#include <random>
#include <thread>

#include "nodalcodes/errors.hpp"
#include "nodalcodes/matrix.hpp"
#include "nodalcodes/nodal.hpp"
#include "nodalcodes/parallel.hpp"

namespace nodalcodes {

namespace {

using i64 = std::int64_t;

i64 det3(const FpMatrix4& m, const std::array<int, 3>& r, const std::array<int, 3>& c, i64 p) {
  auto e = [&](int i, int j) { return static_cast<i64>(m[r[i]][c[j]]); };
  const i64 a = e(0, 0) * ((e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) % p);
  const i64 b = e(0, 1) * ((e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) % p);
  const i64 d = e(0, 2) * ((e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0)) % p);
  return ((a - b + d) % p + p) % p;
}

constexpr std::array<std::array<int, 3>, 4> kTriples = {{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};

std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

bool coplanar(const std::array<FpPoint, 4>& pts, std::uint32_t p) {
  const Field field = Field::prime(p);
  ExactMatrix m(4, 4, field);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) m.set(i, j, Scalar::residue(field, pts[i][j]));
  }
  return rank_and_rref(m).rank < 4;
}

}  // namespace

SymmetricLinearMatrix::SymmetricLinearMatrix(std::uint32_t p, const Coefficients& coefficients) : p_(p) {
  if (p == 2 || p >= (1U << 16) || !is_prime(p)) {
    throw DomainError("symmetric matrix prime must be an odd prime below 65536, got " + std::to_string(p));
  }
  for (std::size_t k = 0; k < 10; ++k) {
    for (std::size_t v = 0; v < 4; ++v) coeffs_[k][v] = coefficients[k][v] % p;
  }
}

SymmetricLinearMatrix SymmetricLinearMatrix::from_forms(std::uint32_t p, std::span<const HomogeneousForm> forms) {
  if (forms.size() != 10) {
    throw DataError("a symmetric 4x4 matrix needs 10 upper-triangle forms, got " + std::to_string(forms.size()));
  }
  const Field field = Field::prime(p);
  Coefficients c{};
  for (std::size_t k = 0; k < 10; ++k) {
    const HomogeneousForm& f = forms[k];
    if (f.field() != field) throw DataError("matrix entry is not defined over F_" + std::to_string(p));
    if (!f.is_zero() && f.degree() != 1) {
      throw DataError("matrix entry " + std::to_string(k) + " is not a linear form");
    }
    for (const auto& [m, coeff] : f.terms()) {
      for (std::size_t v = 0; v < 4; ++v) {
        if (m.exponents[v] == 1) c[k][v] = static_cast<std::uint32_t>(coeff.residue());
      }
    }
  }
  return SymmetricLinearMatrix(p, c);
}

SymmetricLinearMatrix SymmetricLinearMatrix::uniform_random(std::uint32_t p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  Coefficients c{};
  for (auto& entry : c) {
    for (auto& v : entry) v = dist(rng);
  }
  return SymmetricLinearMatrix(p, c);
}

SymmetricLinearMatrix SymmetricLinearMatrix::six_point_web(std::uint32_t p, std::uint64_t seed) {
  const Field field = Field::prime(p);
  std::mt19937_64 rng(seed);
  const std::uint64_t total = projective_point_count(p);
  std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
  std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);

  std::array<FpPoint, 6> points{};
  for (;;) {
    for (auto& pt : points) pt = projective_point(p, pick(rng));
    bool general = true;
    for (std::size_t a = 0; a < 6 && general; ++a) {
      for (std::size_t b = a + 1; b < 6 && general; ++b) {
        for (std::size_t c = b + 1; c < 6 && general; ++c) {
          for (std::size_t d = c + 1; d < 6 && general; ++d) {
            general = !coplanar({points[a], points[b], points[c], points[d]}, p);
          }
        }
      }
    }
    if (general) break;
  }

  // Quadric x^T S x through each point: sum_i S_ii P_i^2 + 2 sum_{i<j} S_ij P_i P_j = 0.
  ExactMatrix conditions(6, 10, field);
  for (std::size_t r = 0; r < 6; ++r) {
    for (std::size_t k = 0; k < 10; ++k) {
      const auto [i, j] = kUpperTriangle[k];
      std::uint32_t v = mod_mul(points[r][i], points[r][j], p);
      if (i != j) v = mod_mul(v, 2, p);
      conditions.set(r, k, Scalar::residue(field, v));
    }
  }
  const auto web = nullspace_basis(conditions);
  if (web.size() != 4) throw DataError("six points in general position should impose 6 conditions");

  // Random invertible change of basis of the web.
  ExactMatrix g(4, 4, field);
  do {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) g.set(i, j, Scalar::residue(field, coeff(rng)));
    }
  } while (rank_and_rref(g).rank < 4);

  Coefficients c{};
  for (std::size_t var = 0; var < 4; ++var) {
    for (std::size_t k = 0; k < 10; ++k) {
      Scalar s = Scalar::zero(field);
      for (std::size_t l = 0; l < 4; ++l) s += g(var, l) * web[l][k];
      c[k][var] = static_cast<std::uint32_t>(s.residue());
    }
  }
  return SymmetricLinearMatrix(p, c);
}

HomogeneousForm SymmetricLinearMatrix::entry_form(std::size_t k) const {
  const Field field = Field::prime(p_);
  HomogeneousForm f(1, field);
  for (std::size_t v = 0; v < 4; ++v) {
    Monomial m;
    m.exponents[v] = 1;
    f += HomogeneousForm::monomial(m, Scalar::residue(field, coeffs_[k][v]));
  }
  return f;
}

HomogeneousForm SymmetricLinearMatrix::determinant() const {
  std::array<std::array<HomogeneousForm, 4>, 4> entries;
  for (std::size_t k = 0; k < kUpperTriangle.size(); ++k) {
    const auto [i, j] = kUpperTriangle[k];
    entries[i][j] = entries[j][i] = entry_form(k);
  }
  const Field field = Field::prime(p_);
  HomogeneousForm det(4, field);
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    int inversions = 0;
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) inversions += perm[a] > perm[b] ? 1 : 0;
    }
    HomogeneousForm term = entries[0][perm[0]] * entries[1][perm[1]] * entries[2][perm[2]] * entries[3][perm[3]];
    if (inversions % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

FpMatrix4 SymmetricLinearMatrix::evaluate(const FpPoint& point) const {
  FpMatrix4 m{};
  for (std::size_t k = 0; k < 10; ++k) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < 4; ++i) v += static_cast<std::uint64_t>(coeffs_[k][i]) * point[i];
    const auto [r, c] = kUpperTriangle[k];
    m[r][c] = m[c][r] = static_cast<std::uint32_t>(v % p_);
  }
  return m;
}

bool rank_at_most_two(const FpMatrix4& m, std::uint32_t p) {
  for (const auto& rows : kTriples) {
    for (const auto& cols : kTriples) {
      if (det3(m, rows, cols, p) != 0) return false;
    }
  }
  return true;
}

std::uint64_t projective_point_count(std::uint32_t p) {
  const std::uint64_t q = p;
  return q * q * q + q * q + q + 1;
}

FpPoint projective_point(std::uint32_t p, std::uint64_t index) {
  const std::uint64_t q = p;
  if (index == 0) return {0, 0, 0, 1};
  index -= 1;
  if (index < q) return {0, 0, 1, static_cast<std::uint32_t>(index)};
  index -= q;
  if (index < q * q) {
    return {0, 1, static_cast<std::uint32_t>(index / q), static_cast<std::uint32_t>(index % q)};
  }
  index -= q * q;
  if (index >= q * q * q) throw DomainError("projective point index out of range");
  return {1, static_cast<std::uint32_t>(index / (q * q)), static_cast<std::uint32_t>((index / q) % q),
          static_cast<std::uint32_t>(index % q)};
}

namespace {

std::uint64_t inverse_mod(std::uint64_t a, std::uint32_t p) {
  std::uint64_t result = 1;
  for (std::uint64_t e = p - 2; e != 0; e >>= 1) {
    if ((e & 1U) != 0) result = result * a % p;
    a = a * a % p;
  }
  return result;
}

FpPoint normalize_fp(FpPoint v, std::uint32_t p) {
  std::size_t lead = 0;
  while (lead < 4 && v[lead] == 0) ++lead;
  const std::uint64_t inv = inverse_mod(v[lead], p);
  for (std::size_t i = lead; i < 4; ++i) v[i] = static_cast<std::uint32_t>(v[i] * inv % p);
  return v;
}

// A full F_p-rational line inside a small point set means the locus is positive-dimensional
// even when the count stays under the threshold (small p).
bool contains_full_line(const std::vector<FpPoint>& sorted, std::uint32_t p) {
  if (sorted.size() < static_cast<std::size_t>(p) + 1) return false;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      bool all = true;
      for (std::uint32_t t = 1; t < p && all; ++t) {
        FpPoint v;
        for (std::size_t k = 0; k < 4; ++k) {
          v[k] = static_cast<std::uint32_t>((sorted[i][k] + static_cast<std::uint64_t>(t) * sorted[j][k]) % p);
        }
        all = std::binary_search(sorted.begin(), sorted.end(), normalize_fp(v, p));
      }
      if (all) return true;
    }
  }
  return false;
}

}  // namespace

ScanResult scan_nodes_fp(const SymmetricLinearMatrix& a, const ScanOptions& options) {
  const std::uint32_t p = a.prime();
  if (p > kMaxScanPrime) {
    throw ResourceError("scan enumerates p^3 points; p = " + std::to_string(p) + " exceeds " +
                        std::to_string(kMaxScanPrime));
  }
  const std::uint64_t total = projective_point_count(p);
  const unsigned threads = std::max(1U, options.threads != 0 ? options.threads : worker_threads());
  const std::uint64_t chunk = (total + threads - 1) / threads;

  std::vector<std::vector<FpPoint>> found(threads);
  auto work = [&](unsigned t) {
    const std::uint64_t begin = std::min<std::uint64_t>(total, t * chunk);
    const std::uint64_t end = std::min<std::uint64_t>(total, begin + chunk);
    for (std::uint64_t i = begin; i < end; ++i) {
      const FpPoint pt = projective_point(p, i);
      if (rank_at_most_two(a.evaluate(pt), p)) found[t].push_back(pt);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }

  ScanResult out;
  out.prime = p;
  for (auto& part : found) out.points.insert(out.points.end(), part.begin(), part.end());
  // Chunks are contiguous in lexicographic order already.
  out.degenerate = out.points.size() > options.degeneracy_threshold || contains_full_line(out.points, p);
  return out;
}

QuadricCertificate no_quadric_certificate(std::span<const FpPoint> points, std::uint32_t p) {
  if (points.size() != 10) {
    throw DomainError("the quadric certificate needs exactly 10 points, got " + std::to_string(points.size()));
  }
  const Field field = Field::prime(p);
  std::vector<Point> lifted;
  for (const FpPoint& pt : points) {
    Point q;
    for (std::size_t i = 0; i < 4; ++i) q[i] = Scalar::residue(field, pt[i]);
    for (const Point& prev : lifted) {
      if (projectively_equal(prev, q)) throw DomainError("the 10 points are not pairwise distinct");
    }
    lifted.push_back(q);
  }
  QuadricCertificate out;
  out.rank = rank_and_rref(evaluation_matrix(lifted, 2, field)).rank;
  out.certified = out.rank == 10;
  return out;
}

}  // namespace nodalcodes
