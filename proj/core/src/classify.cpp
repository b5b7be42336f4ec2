#include "nodalcodes/classify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nodalcodes/errors.hpp"

namespace nodalcodes {

namespace {

using detail::PackedWord;

bool admissible(PackedWord w) {
  const std::size_t weight = detail::packed_weight(w);
  return detail::packed_weak(w) ? (weight == 6 || weight == 10) : (weight == 8 || weight == 16);
}

// Candidate words in search order: weak 6, strict 8, weak 10, strict 16.
std::vector<PackedWord> admissible_words(std::size_t mu) {
  std::vector<PackedWord> out;
  for (auto [weight, weak] : {std::pair{6U, true}, {8U, false}, {10U, true}, {16U, false}}) {
    if (weight > mu) continue;
    // Walk all weight-subsets of mu nodes in colex order (Gosper's hack).
    std::uint64_t subset = (std::uint64_t{1} << weight) - 1;
    const std::uint64_t limit = std::uint64_t{1} << mu;
    while (subset < limit) {
      out.push_back((subset << 1U) | (weak ? 1U : 0U));
      const std::uint64_t low = subset & (~subset + 1);
      const std::uint64_t ripple = subset + low;
      subset = (((ripple ^ subset) >> 2U) / low) | ripple;
    }
  }
  return out;
}

struct SearchCode {
  std::vector<PackedWord> basis;
  std::vector<PackedWord> span;  // sorted
};

std::size_t strict_dimension(const std::vector<PackedWord>& span) {
  std::size_t strict = 0;
  for (PackedWord w : span) strict += detail::packed_weak(w) ? 0 : 1;
  return static_cast<std::size_t>(std::countr_zero(strict));
}

bool griesmer_consistent(const std::vector<PackedWord>& span, std::size_t mu) {
  std::size_t min_all = mu + 1;
  std::size_t min_strict = mu + 1;
  for (PackedWord w : span) {
    if (w == 0) continue;
    const std::size_t weight = detail::packed_weight(w);
    min_all = std::min(min_all, weight);
    if (!detail::packed_weak(w)) min_strict = std::min(min_strict, weight);
  }
  const auto dim = static_cast<std::size_t>(std::countr_zero(span.size()));
  if (!griesmer_ok(mu, dim, min_all)) return false;
  const std::size_t strict_dim = strict_dimension(span);
  return strict_dim == 0 || griesmer_ok(mu, strict_dim, min_strict);
}

ClassifiedCode describe(const SearchCode& sc, std::size_t mu,
                        std::vector<std::uint8_t> canonical) {
  std::vector<EvenSetWord> words;
  for (PackedWord w : sc.basis) words.push_back(detail::unpack(w, mu));
  const EvenSetCode code = EvenSetCode::from_generators(mu, words);
  ClassifiedCode out;
  out.code = EvenSetCode::from_generators(mu, min_weight_basis(code));
  out.dim = code.dim();
  out.strict_dim = code.strict_dim();
  out.profile = weight_profile(code);
  out.canonical = std::move(canonical);
  return out;
}

}  // namespace

ClassificationTable classify_quartic_codes(std::size_t mu, const ClassifyOptions& options) {
  if (mu < 1 || mu > 16) {
    throw DomainError("quartic code classification needs 1 <= mu <= 16, got " + std::to_string(mu));
  }
  ClassificationTable table;
  table.mu = mu;
  const std::vector<PackedWord> candidates = admissible_words(mu);

  // Level-wise isomorph rejection: every admissible code of dimension k+1 contains an admissible
  // hyperplane, hence arises by extending a representative of dimension k.
  std::map<std::vector<std::uint8_t>, SearchCode> level;
  for (PackedWord w : candidates) {
    SearchCode sc{{w}, {0, w}};
    std::sort(sc.span.begin(), sc.span.end());
    auto key = detail::rows_to_bytes(detail::canonical_rows(sc.basis, mu), mu);
    level.try_emplace(std::move(key), std::move(sc));
  }

  std::map<std::vector<std::uint8_t>, SearchCode> found;
  while (!level.empty()) {
    std::map<std::vector<std::uint8_t>, SearchCode> next;
    std::set<std::vector<PackedWord>> seen_spans;
    for (const auto& [key, sc] : level) {
      for (PackedWord w : candidates) {
        if (std::binary_search(sc.span.begin(), sc.span.end(), w)) continue;
        bool ok = true;
        for (PackedWord s : sc.span) {
          if (s != 0 && !admissible(s ^ w)) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        SearchCode ext;
        ext.basis = sc.basis;
        ext.basis.push_back(w);
        ext.span = sc.span;
        for (PackedWord s : sc.span) ext.span.push_back(s ^ w);
        std::sort(ext.span.begin(), ext.span.end());
        if (options.griesmer_pruning && !griesmer_consistent(ext.span, mu)) continue;
        if (!seen_spans.insert(ext.span).second) continue;
        auto ext_key = detail::rows_to_bytes(detail::canonical_rows(ext.basis, mu), mu);
        next.try_emplace(std::move(ext_key), std::move(ext));
      }
    }
    for (auto& [key, sc] : level) found.try_emplace(key, std::move(sc));
    level = std::move(next);
  }

  const std::size_t min_dim = mu > 10 ? mu - 10 : 1;
  const std::size_t min_strict = mu > 11 ? mu - 11 : 0;
  for (const auto& [key, sc] : found) {
    const auto dim = sc.basis.size();
    const bool geometric = dim >= min_dim && strict_dimension(sc.span) >= min_strict;
    if (geometric) {
      table.entries.push_back(describe(sc, mu, key));
    } else if (options.audit) {
      table.excluded.push_back(describe(sc, mu, key));
    }
  }
  auto order = [](const ClassifiedCode& a, const ClassifiedCode& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.canonical < b.canonical;
  };
  std::sort(table.entries.begin(), table.entries.end(), order);
  std::sort(table.excluded.begin(), table.excluded.end(), order);
  return table;
}

}  // namespace nodalcodes
