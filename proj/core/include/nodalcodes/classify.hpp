#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "nodalcodes/evencode.hpp"

namespace nodalcodes {

struct ClassifiedCode {
  /// Generated by a minimum-weight basis realizing `profile`.
  EvenSetCode code;
  std::size_t dim = 0;
  std::size_t strict_dim = 0;
  std::string profile;
  std::vector<std::uint8_t> canonical;
};

struct ClassificationTable {
  std::size_t mu = 0;
  /// Codes admissible for a mu-nodal quartic, ordered by dimension then canonical bytes.
  std::vector<ClassifiedCode> entries;
  /// Weight-admissible codes rejected by the lower bounds dim C >= mu - 11 and
  /// dim C-bar >= mu - 10. Only filled when auditing.
  std::vector<ClassifiedCode> excluded;
};

struct ClassifyOptions {
  bool griesmer_pruning = true;
  bool audit = false;
};

/// All nonzero codes of length mu whose nonzero words are quartic-admissible and which satisfy
/// dim >= max(1, mu - 10) and strict_dim >= mu - 11, up to node permutation.
/// Throws DomainError unless 1 <= mu <= 16; mu <= 5 yields an empty table.
ClassificationTable classify_quartic_codes(std::size_t mu, const ClassifyOptions& options = {});

}  // namespace nodalcodes
