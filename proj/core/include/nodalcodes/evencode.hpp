#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "nodalcodes/f2.hpp"

namespace nodalcodes {

/// Strict words have class divisible by 2 directly; weak ones only after adding a hyperplane.
enum class Parity : std::uint8_t { strict = 0, weak = 1 };

Parity operator^(Parity a, Parity b);
const char* to_string(Parity p);

/// A set of nodes together with its strict/weak tag. The zero word is strict with empty support.
class EvenSetWord {
 public:
  EvenSetWord() = default;
  explicit EvenSetWord(std::size_t mu) : support_(mu) {}
  EvenSetWord(Parity parity, BitVector support) : parity_(parity), support_(std::move(support)) {}

  static EvenSetWord from_indices(std::size_t mu, Parity parity, std::span<const std::size_t> nodes);

  std::size_t mu() const { return support_.size(); }
  Parity parity() const { return parity_; }
  const BitVector& support() const { return support_; }
  std::size_t weight() const { return support_.count(); }
  bool is_zero() const { return parity_ == Parity::strict && support_.none(); }

  /// Parity as coordinate 0 followed by the mu node coordinates.
  BitVector extended() const;
  static EvenSetWord from_extended(const BitVector& v);

  friend bool operator==(const EvenSetWord&, const EvenSetWord&) = default;

 private:
  Parity parity_ = Parity::strict;
  BitVector support_;
};

/// Symmetric difference of supports, XOR of parities. Throws DataError on length mismatch.
EvenSetWord word_sum(const EvenSetWord& u, const EvenSetWord& v);

/// Weights a nonzero even set can have on a nodal quartic: weak 6 or 10, strict 8 or 16.
/// Throws DomainError for the zero word.
bool quartic_admissible(const EvenSetWord& w);

/// n >= sum_{i<k} ceil(d / 2^i). Throws DomainError unless k >= 1 and 1 <= d <= n.
bool griesmer_ok(std::size_t n, std::size_t k, std::size_t d);

/// F2-span of parity-extended words. Stored generators are always independent.
class EvenSetCode {
 public:
  static constexpr std::size_t kMaxEnumerationDim = 20;

  EvenSetCode() = default;
  explicit EvenSetCode(std::size_t mu) : mu_(mu) {}

  /// Keeps the first maximal independent subset of `words`, preserving order.
  /// Throws DataError if a word's length differs from mu.
  static EvenSetCode from_generators(std::size_t mu, std::span<const EvenSetWord> words);

  std::size_t mu() const { return mu_; }
  std::size_t dim() const { return generators_.size(); }
  const std::vector<EvenSetWord>& generators() const { return generators_; }

  /// Dimension of the strict subcode (dim or dim - 1).
  std::size_t strict_dim() const;
  bool contains(const EvenSetWord& w) const;

  /// All 2^dim words, zero first. Throws ResourceError above kMaxEnumerationDim.
  std::vector<EvenSetWord> words() const;

  BitMatrix generator_matrix() const;

 private:
  std::size_t mu_ = 0;
  std::vector<EvenSetWord> generators_;
};

struct WeightCount {
  std::uint64_t weak = 0;
  std::uint64_t strict = 0;

  std::uint64_t total() const { return weak + strict; }
  friend bool operator==(const WeightCount&, const WeightCount&) = default;
};

/// Nonzero words counted per weight and parity. Throws ResourceError for dim > 20.
std::map<std::size_t, WeightCount> weight_enumerator(const EvenSetCode& c);

/// Basis chosen greedily by increasing weight; its weight multiset is basis-independent.
std::vector<EvenSetWord> min_weight_basis(const EvenSetCode& c);

/// "[n,k,{d1_m1,...}]": all nonzero weights ascending, m_i = basis words of weight d_i
/// in a minimum-weight basis, subscript omitted when zero.
std::string weight_profile(const EvenSetCode& c);

/// Applies node relabelling i -> perm[i]. perm must be a permutation of 0..mu-1.
EvenSetCode permute_nodes(const EvenSetCode& c, std::span<const std::size_t> perm);

/// Representative bytes invariant under node permutations (parity coordinate fixed).
/// Equal bytes iff the codes are permutation-equivalent. Throws ResourceError for mu > 24.
std::vector<std::uint8_t> canonical_form(const EvenSetCode& c);

/// The code whose generator rows are the canonical matrix.
EvenSetCode canonical_code(const EvenSetCode& c);

/// Throws DataError on length mismatch.
bool is_isomorphic(const EvenSetCode& a, const EvenSetCode& b);

namespace detail {

inline constexpr std::size_t kMaxCanonicalMu = 24;

/// Packed word: bit 0 parity (1 = weak), bit i + 1 node i. Requires mu <= 63.
using PackedWord = std::uint64_t;

PackedWord pack(const EvenSetWord& w);
EvenSetWord unpack(PackedWord w, std::size_t mu);

inline std::size_t packed_weight(PackedWord w) { return static_cast<std::size_t>(std::popcount(w >> 1)); }
inline bool packed_weak(PackedWord w) { return (w & 1U) != 0; }

/// Closes a basis into its full span (2^k words, zero first).
std::vector<PackedWord> packed_span(std::span<const PackedWord> basis);

/// Canonical generator rows: bit mu holds the parity, bits mu-1..0 the sorted node columns.
std::vector<std::uint32_t> canonical_rows(std::span<const PackedWord> basis, std::size_t mu);

std::vector<std::uint8_t> rows_to_bytes(std::span<const std::uint32_t> rows, std::size_t mu);

}  // namespace detail

}  // namespace nodalcodes
