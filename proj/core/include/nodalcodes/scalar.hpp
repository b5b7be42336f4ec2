#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace nodalcodes {

/// Coefficient field: the rationals or a prime field F_p with p odd and below 2^32.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rational() { return Field{}; }
  /// Throws DomainError unless p is an odd prime below 2^32.
  static Field prime(std::uint64_t p);

  constexpr bool is_rational() const { return modulus_ == 0; }
  constexpr bool is_prime() const { return modulus_ != 0; }
  constexpr std::uint64_t modulus() const { return modulus_; }

  std::string to_string() const;

  friend constexpr bool operator==(Field, Field) = default;

 private:
  constexpr explicit Field(std::uint64_t modulus) : modulus_(modulus) {}

  std::uint64_t modulus_ = 0;
};

bool is_prime(std::uint64_t n);

/// Exact element of Q (lowest terms, positive denominator) or of F_p (residue in [0, p)).
///
/// Arithmetic between different fields throws DataError.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : q_(value) {}  // NOLINT: implicit rational integers read naturally in tests
  explicit Scalar(mpq_class value);

  static Scalar from_integer(Field field, const mpz_class& value);
  /// num/den in the given field; den = 0, or p | den in F_p, throws DataError.
  static Scalar from_ratio(Field field, const mpz_class& num, const mpz_class& den);
  static Scalar residue(Field field, std::uint64_t r);
  static Scalar zero(Field field) { return from_integer(field, 0); }
  static Scalar one(Field field) { return from_integer(field, 1); }

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Throws DataError when called on a prime-field element.
  const mpq_class& rational() const;
  /// Throws DataError when called on a rational element.
  std::uint64_t residue() const;

  /// Bits in numerator plus denominator; 1 for prime-field elements. Used to pick pivots.
  std::size_t bit_size() const;

  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  void require_same_field(const Scalar& o) const;

  Field field_{};
  mpq_class q_{0};
  std::uint64_t r_ = 0;
};

/// Parses "a" or "a/b" (decimal integers, optional sign) into the given field.
Scalar parse_scalar(const std::string& text, Field field);

}  // namespace nodalcodes
