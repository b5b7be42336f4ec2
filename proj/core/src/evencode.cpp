#include "nodalcodes/evencode.hpp"

#include <algorithm>

#include "nodalcodes/errors.hpp"

namespace nodalcodes {

Parity operator^(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

const char* to_string(Parity p) { return p == Parity::weak ? "weak" : "strict"; }

EvenSetWord EvenSetWord::from_indices(std::size_t mu, Parity parity, std::span<const std::size_t> nodes) {
  return EvenSetWord(parity, BitVector::from_indices(mu, nodes));
}

BitVector EvenSetWord::extended() const {
  BitVector v(mu() + 1);
  v.set(0, parity_ == Parity::weak);
  for (std::size_t i : support_.indices()) v.set(i + 1);
  return v;
}

EvenSetWord EvenSetWord::from_extended(const BitVector& v) {
  if (v.size() == 0) throw DataError("extended word needs a parity coordinate");
  BitVector support(v.size() - 1);
  for (std::size_t i : v.indices()) {
    if (i > 0) support.set(i - 1);
  }
  return EvenSetWord(v.test(0) ? Parity::weak : Parity::strict, std::move(support));
}

EvenSetWord word_sum(const EvenSetWord& u, const EvenSetWord& v) {
  if (u.mu() != v.mu()) {
    throw DataError("cannot add words of length " + std::to_string(u.mu()) + " and " +
                    std::to_string(v.mu()));
  }
  return EvenSetWord(u.parity() ^ v.parity(), u.support() ^ v.support());
}

bool quartic_admissible(const EvenSetWord& w) {
  if (w.is_zero()) throw DomainError("admissibility is defined for nonzero words only");
  const std::size_t weight = w.weight();
  if (w.parity() == Parity::weak) return weight == 6 || weight == 10;
  return weight == 8 || weight == 16;
}

bool griesmer_ok(std::size_t n, std::size_t k, std::size_t d) {
  if (k < 1 || d < 1 || d > n) {
    throw DomainError("griesmer_ok requires k >= 1 and 1 <= d <= n");
  }
  std::size_t sum = 0;
  for (std::size_t i = 0; i < k; ++i) {
    // ceil(d / 2^i); once the shift passes the width of d every further term is 1.
    sum += i >= 63 ? 1 : (d + (std::size_t{1} << i) - 1) >> i;
    if (sum > n) return false;
  }
  return true;
}

EvenSetCode EvenSetCode::from_generators(std::size_t mu, std::span<const EvenSetWord> words) {
  EvenSetCode code(mu);
  F2Basis basis(mu + 1);
  for (const EvenSetWord& w : words) {
    if (w.mu() != mu) {
      throw DataError("generator of length " + std::to_string(w.mu()) + " in a code of length " +
                      std::to_string(mu));
    }
    if (basis.insert(w.extended())) code.generators_.push_back(w);
  }
  return code;
}

std::size_t EvenSetCode::strict_dim() const {
  for (const EvenSetWord& g : generators_) {
    if (g.parity() == Parity::weak) return dim() - 1;
  }
  return dim();
}

BitMatrix EvenSetCode::generator_matrix() const {
  BitMatrix m(0, mu_ + 1);
  for (const EvenSetWord& g : generators_) m.append_row(g.extended());
  return m;
}

bool EvenSetCode::contains(const EvenSetWord& w) const {
  if (w.mu() != mu_) throw DataError("word length does not match code length");
  F2Basis basis(mu_ + 1);
  for (const EvenSetWord& g : generators_) basis.insert(g.extended());
  return basis.contains(w.extended());
}

std::vector<EvenSetWord> EvenSetCode::words() const {
  if (dim() > kMaxEnumerationDim) {
    throw ResourceError("code dimension " + std::to_string(dim()) + " exceeds enumeration cap " +
                        std::to_string(kMaxEnumerationDim));
  }
  std::vector<EvenSetWord> out;
  out.reserve(std::size_t{1} << dim());
  out.emplace_back(mu_);
  // Gray-code walk: each step adds one generator.
  EvenSetWord current(mu_);
  for (std::size_t i = 1; i < (std::size_t{1} << dim()); ++i) {
    current = word_sum(current, generators_[static_cast<std::size_t>(std::countr_zero(i))]);
    out.push_back(current);
  }
  return out;
}

std::map<std::size_t, WeightCount> weight_enumerator(const EvenSetCode& c) {
  std::map<std::size_t, WeightCount> out;
  for (const EvenSetWord& w : c.words()) {
    if (w.is_zero()) continue;
    WeightCount& slot = out[w.weight()];
    if (w.parity() == Parity::weak) {
      ++slot.weak;
    } else {
      ++slot.strict;
    }
  }
  return out;
}

std::vector<EvenSetWord> min_weight_basis(const EvenSetCode& c) {
  std::vector<EvenSetWord> all = c.words();
  std::stable_sort(all.begin(), all.end(), [](const EvenSetWord& a, const EvenSetWord& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return a.extended() < b.extended();
  });
  std::vector<EvenSetWord> chosen;
  F2Basis basis(c.mu() + 1);
  for (const EvenSetWord& w : all) {
    if (chosen.size() == c.dim()) break;
    if (!w.is_zero() && basis.insert(w.extended())) chosen.push_back(w);
  }
  return chosen;
}

std::string weight_profile(const EvenSetCode& c) {
  std::map<std::size_t, std::size_t> basis_counts;
  for (const EvenSetWord& w : min_weight_basis(c)) ++basis_counts[w.weight()];
  std::string out = "[" + std::to_string(c.mu()) + "," + std::to_string(c.dim()) + ",{";
  bool first = true;
  for (const auto& [weight, count] : weight_enumerator(c)) {
    if (!first) out += ",";
    out += std::to_string(weight);
    if (auto it = basis_counts.find(weight); it != basis_counts.end()) {
      out += "_" + std::to_string(it->second);
    }
    first = false;
  }
  return out + "}]";
}

EvenSetCode permute_nodes(const EvenSetCode& c, std::span<const std::size_t> perm) {
  if (perm.size() != c.mu()) throw DataError("permutation length does not match code length");
  std::vector<bool> seen(c.mu(), false);
  for (std::size_t p : perm) {
    if (p >= c.mu() || seen[p]) throw DataError("not a permutation of the node indices");
    seen[p] = true;
  }
  std::vector<EvenSetWord> words;
  for (const EvenSetWord& g : c.generators()) {
    BitVector support(c.mu());
    for (std::size_t i : g.support().indices()) support.set(perm[i]);
    words.emplace_back(g.parity(), std::move(support));
  }
  return EvenSetCode::from_generators(c.mu(), words);
}

namespace detail {

PackedWord pack(const EvenSetWord& w) {
  if (w.mu() > 63) throw ResourceError("packed words hold at most 63 nodes");
  PackedWord p = w.parity() == Parity::weak ? 1U : 0U;
  for (std::size_t i : w.support().indices()) p |= PackedWord{1} << (i + 1);
  return p;
}

EvenSetWord unpack(PackedWord w, std::size_t mu) {
  BitVector support(mu);
  for (std::size_t i = 0; i < mu; ++i) {
    if ((w >> (i + 1)) & 1U) support.set(i);
  }
  return EvenSetWord((w & 1U) != 0 ? Parity::weak : Parity::strict, std::move(support));
}

std::vector<PackedWord> packed_span(std::span<const PackedWord> basis) {
  std::vector<PackedWord> span{0};
  span.reserve(std::size_t{1} << basis.size());
  for (PackedWord b : basis) {
    const std::size_t n = span.size();
    for (std::size_t i = 0; i < n; ++i) span.push_back(span[i] ^ b);
  }
  return span;
}

}  // namespace detail

}  // namespace nodalcodes
