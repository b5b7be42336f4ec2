#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace nodalcodes {

/// Integer polynomial in t, coefficient i belongs to t^i.
using IntPolynomial = std::vector<mpz_class>;

IntPolynomial poly_mul(const IntPolynomial& a, const IntPolynomial& b);
/// (c0 + c1 t)^n
IntPolynomial poly_pow(const IntPolynomial& base, unsigned n);

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// First order+1 Maclaurin coefficients of num/den via the recurrence den * series = num.
/// Throws PoleError if den(0) = 0 and DataError if a coefficient is not an integer.
std::vector<mpz_class> expand_rational_series(const IntPolynomial& num, const IntPolynomial& den,
                                              std::size_t order);

/// t^3 (6t^2 - 15t + 10) / (t - 1)^4, the Hilbert series of the symmetroid minors ideal
/// modulo ten general hyperplanes.
IntPolynomial symmetroid_hilbert_numerator();
IntPolynomial symmetroid_hilbert_denominator();

struct HilbertCheck {
  bool ok = false;
  std::vector<mpz_class> coefficients;
};

/// Expands the symmetroid series to `order` (at least 5) and checks coefficients
/// 0, 0, 0, 10, 25, 46 at t^0..t^5; in particular no quadric lies in the ideal.
HilbertCheck symmetroid_hilbert_check(std::size_t order = 5);

}  // namespace nodalcodes
