#include <algorithm>
#include <bit>
#include <limits>

#include "nodalcodes/errors.hpp"
#include "nodalcodes/evencode.hpp"

namespace nodalcodes {

namespace detail {

namespace {

// Lexicographic leader over all ordered bases of the code. For an ordered basis b_1..b_k every
// node contributes the column (b_1[j], ..., b_k[j]); sorting the columns ascending makes the
// generator matrix independent of the node labelling. Row i of the sorted matrix only depends
// on b_1..b_i, so the minimum can be built row by row, branching only on ties.
//
// Two leaves with equal rows differ by a code automorphism, which acts linearly on span
// indices. Tie branches in one orbit of the known automorphisms fixing the current prefix
// lead to identical subtrees, so only one of them is explored.
class CanonicalSearch {
 public:
  CanonicalSearch(std::span<const PackedWord> basis, std::size_t mu)
      : mu_(mu), k_(basis.size()), span_words_(packed_span(basis)) {}

  std::vector<std::uint32_t> run() {
    std::vector<std::uint32_t> prefix(mu_, 0);
    std::vector<bool> chosen_span(span_words_.size(), false);
    chosen_span[0] = true;
    descend(prefix, chosen_span);
    return best_;
  }

 private:
  // Images of the unit span indices 1, 2, 4, ...
  using Automorphism = std::vector<std::uint32_t>;

  static std::uint32_t apply(const Automorphism& g, std::uint32_t x) {
    std::uint32_t out = 0;
    for (std::size_t j = 0; x != 0; ++j, x >>= 1U) {
      if (x & 1U) out ^= g[j];
    }
    return out;
  }

  // The linear map sending from[i] to to[i].
  Automorphism relate(const std::vector<std::uint32_t>& from, const std::vector<std::uint32_t>& to) const {
    // Reduce each unit vector against `from`, tracking which basis entries were used.
    std::vector<std::uint32_t> rows = from;
    std::vector<std::uint32_t> combo(k_);
    for (std::size_t i = 0; i < k_; ++i) combo[i] = 1U << i;
    std::vector<int> pivot_of_row(k_, -1);
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t r = 0; r < i; ++r) {
        if ((rows[i] >> pivot_of_row[r]) & 1U) {
          rows[i] ^= rows[r];
          combo[i] ^= combo[r];
        }
      }
      pivot_of_row[i] = std::countr_zero(rows[i]);
      for (std::size_t r = 0; r < i; ++r) {
        if ((rows[r] >> pivot_of_row[i]) & 1U) {
          rows[r] ^= rows[i];
          combo[r] ^= combo[i];
        }
      }
    }
    Automorphism g(k_, 0);
    for (std::size_t r = 0; r < k_; ++r) {
      // rows[r] is the unit vector at pivot_of_row[r], written as the combination combo[r] of `from`.
      std::uint32_t image = 0;
      for (std::size_t i = 0; i < k_; ++i) {
        if ((combo[r] >> i) & 1U) image ^= to[i];
      }
      g[static_cast<std::size_t>(pivot_of_row[r])] = image;
    }
    return g;
  }

  std::uint32_t row_value(const std::vector<std::uint32_t>& prefix, PackedWord w,
                          std::vector<std::uint32_t>& next) const {
    next.resize(mu_);
    for (std::size_t j = 0; j < mu_; ++j) {
      next[j] = (prefix[j] << 1U) | static_cast<std::uint32_t>((w >> (j + 1)) & 1U);
    }
    sorted_ = next;
    std::sort(sorted_.begin(), sorted_.end());
    std::uint32_t row = static_cast<std::uint32_t>(w & 1U) << mu_;
    for (std::size_t pos = 0; pos < mu_; ++pos) {
      row |= (sorted_[pos] & 1U) << (mu_ - 1 - pos);
    }
    return row;
  }

  // Whether `t` shares an orbit with an explored tie under automorphisms fixing the path.
  bool equivalent_to_explored(std::uint32_t t, const std::vector<std::uint32_t>& explored) {
    std::vector<const Automorphism*> stabilizer;
    for (const Automorphism& g : automorphisms_) {
      const bool fixes = std::all_of(path_.begin(), path_.end(), [&](std::uint32_t x) { return apply(g, x) == x; });
      if (fixes) stabilizer.push_back(&g);
    }
    if (stabilizer.empty()) return false;
    std::vector<std::uint32_t> orbit{t};
    std::vector<bool> seen(span_words_.size(), false);
    seen[t] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const Automorphism* g : stabilizer) {
        const std::uint32_t y = apply(*g, orbit[head]);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    return std::any_of(explored.begin(), explored.end(), [&](std::uint32_t e) { return seen[e]; });
  }

  void descend(const std::vector<std::uint32_t>& prefix, const std::vector<bool>& chosen_span) {
    const std::size_t depth = rows_.size();
    if (depth == k_) {
      if (!have_best_ || rows_ < best_) {
        best_ = rows_;
        best_path_ = path_;
        have_best_ = true;
      } else if (rows_ == best_ && path_ != best_path_) {
        automorphisms_.push_back(relate(best_path_, path_));
      }
      return;
    }

    std::uint32_t min_row = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> ties;
    std::vector<std::vector<std::uint32_t>> tie_prefixes;
    std::vector<std::uint32_t> next;
    for (std::uint32_t idx = 1; idx < span_words_.size(); ++idx) {
      if (chosen_span[idx]) continue;
      const std::uint32_t row = row_value(prefix, span_words_[idx], next);
      if (row > min_row) continue;
      if (row < min_row) {
        min_row = row;
        ties.clear();
        tie_prefixes.clear();
      }
      ties.push_back(idx);
      tie_prefixes.push_back(next);
    }

    if (have_best_) {
      for (std::size_t i = 0; i < depth; ++i) {
        if (rows_[i] != best_[i]) {
          if (rows_[i] > best_[i]) return;
          break;
        }
      }
      if (std::equal(rows_.begin(), rows_.end(), best_.begin()) && min_row > best_[depth]) return;
    }

    rows_.push_back(min_row);
    std::vector<std::uint32_t> explored;
    for (std::size_t t = 0; t < ties.size(); ++t) {
      if (equivalent_to_explored(ties[t], explored)) continue;
      std::vector<bool> extended = chosen_span;
      for (std::size_t idx = 0; idx < chosen_span.size(); ++idx) {
        if (chosen_span[idx]) extended[idx ^ ties[t]] = true;
      }
      path_.push_back(ties[t]);
      descend(tie_prefixes[t], extended);
      path_.pop_back();
      explored.push_back(ties[t]);
    }
    rows_.pop_back();
  }

  std::size_t mu_;
  std::size_t k_;
  // span_words_[i] is the XOR of the basis words selected by the bits of i.
  std::vector<PackedWord> span_words_;
  std::vector<std::uint32_t> rows_;
  std::vector<std::uint32_t> path_;
  std::vector<std::uint32_t> best_;
  std::vector<std::uint32_t> best_path_;
  bool have_best_ = false;
  std::vector<Automorphism> automorphisms_;
  mutable std::vector<std::uint32_t> sorted_;
};

}  // namespace

std::vector<std::uint32_t> canonical_rows(std::span<const PackedWord> basis, std::size_t mu) {
  if (mu > kMaxCanonicalMu) {
    throw ResourceError("canonical form supports at most " + std::to_string(kMaxCanonicalMu) +
                        " nodes, got " + std::to_string(mu));
  }
  if (basis.size() > EvenSetCode::kMaxEnumerationDim) {
    throw ResourceError("canonical form supports dimension at most " +
                        std::to_string(EvenSetCode::kMaxEnumerationDim));
  }
  return CanonicalSearch(basis, mu).run();
}

std::vector<std::uint8_t> rows_to_bytes(std::span<const std::uint32_t> rows, std::size_t mu) {
  std::vector<std::uint8_t> out;
  out.reserve(2 + 4 * rows.size());
  out.push_back(static_cast<std::uint8_t>(mu));
  out.push_back(static_cast<std::uint8_t>(rows.size()));
  for (std::uint32_t r : rows) {
    for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(r >> shift));
  }
  return out;
}

}  // namespace detail

namespace {

std::vector<detail::PackedWord> packed_generators(const EvenSetCode& c) {
  if (c.mu() > detail::kMaxCanonicalMu) {
    throw ResourceError("canonical form supports at most " + std::to_string(detail::kMaxCanonicalMu) +
                        " nodes, got " + std::to_string(c.mu()));
  }
  std::vector<detail::PackedWord> basis;
  for (const EvenSetWord& g : c.generators()) basis.push_back(detail::pack(g));
  return basis;
}

}  // namespace

std::vector<std::uint8_t> canonical_form(const EvenSetCode& c) {
  const auto basis = packed_generators(c);
  return detail::rows_to_bytes(detail::canonical_rows(basis, c.mu()), c.mu());
}

EvenSetCode canonical_code(const EvenSetCode& c) {
  const auto basis = packed_generators(c);
  std::vector<EvenSetWord> words;
  for (std::uint32_t row : detail::canonical_rows(basis, c.mu())) {
    BitVector support(c.mu());
    for (std::size_t pos = 0; pos < c.mu(); ++pos) {
      if ((row >> (c.mu() - 1 - pos)) & 1U) support.set(pos);
    }
    words.emplace_back(((row >> c.mu()) & 1U) != 0 ? Parity::weak : Parity::strict, std::move(support));
  }
  return EvenSetCode::from_generators(c.mu(), words);
}

bool is_isomorphic(const EvenSetCode& a, const EvenSetCode& b) {
  if (a.mu() != b.mu()) {
    throw DataError("codes of length " + std::to_string(a.mu()) + " and " + std::to_string(b.mu()) +
                    " cannot be compared");
  }
  if (a.dim() != b.dim()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace nodalcodes
