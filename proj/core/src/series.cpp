#include "nodalcodes/series.hpp"

#include <algorithm>

#include "nodalcodes/errors.hpp"

namespace nodalcodes {

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  IntPolynomial out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

IntPolynomial poly_pow(const IntPolynomial& base, unsigned n) {
  IntPolynomial out{1};
  for (unsigned i = 0; i < n; ++i) out = poly_mul(out, base);
  return out;
}

std::vector<mpz_class> expand_rational_series(const IntPolynomial& num, const IntPolynomial& den,
                                              std::size_t order) {
  if (den.empty() || den[0] == 0) throw PoleError("denominator vanishes at t = 0");
  // Overall sign normalization: den(0) > 0.
  const int sign = den[0] < 0 ? -1 : 1;
  const mpz_class lead = den[0] * sign;
  std::vector<mpz_class> c(order + 1, 0);
  for (std::size_t n = 0; n <= order; ++n) {
    mpz_class acc = n < num.size() ? mpz_class(num[n] * sign) : mpz_class(0);
    for (std::size_t i = 1; i <= std::min(n, den.size() - 1); ++i) acc -= den[i] * sign * c[n - i];
    if (!mpz_divisible_p(acc.get_mpz_t(), lead.get_mpz_t())) {
      throw DataError("series coefficient at t^" + std::to_string(n) + " is not an integer");
    }
    mpz_divexact(c[n].get_mpz_t(), acc.get_mpz_t(), lead.get_mpz_t());
  }
  return c;
}

IntPolynomial symmetroid_hilbert_numerator() { return {0, 0, 0, 10, -15, 6}; }

IntPolynomial symmetroid_hilbert_denominator() { return poly_pow({-1, 1}, 4); }

HilbertCheck symmetroid_hilbert_check(std::size_t order) {
  HilbertCheck out;
  out.coefficients = expand_rational_series(symmetroid_hilbert_numerator(),
                                            symmetroid_hilbert_denominator(), std::max<std::size_t>(order, 5));
  const std::vector<mpz_class> expected{0, 0, 0, 10, 25, 46};
  out.ok = std::equal(expected.begin(), expected.end(), out.coefficients.begin());
  return out;
}

}  // namespace nodalcodes
