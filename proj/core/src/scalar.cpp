#include "nodalcodes/scalar.hpp"

#include <cctype>

#include "nodalcodes/errors.hpp"

namespace nodalcodes {

namespace {

__extension__ using Wide = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<Wide>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    e >>= 1U;
  }
  return result;
}

std::uint64_t reduce(const mpz_class& v, std::uint64_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // Deterministic witness set for 64-bit integers.
  for (std::uint64_t a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    std::uint64_t x = pow_mod(a % n, d, n);
    if (a % n == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p == 2 || p >= (1ULL << 32) || !nodalcodes::is_prime(p)) {
    throw DomainError("field modulus must be an odd prime below 2^32, got " + std::to_string(p));
  }
  return Field{p};
}

std::string Field::to_string() const {
  return is_rational() ? std::string("Q") : "F_" + std::to_string(modulus_);
}

Scalar::Scalar(mpq_class value) : q_(std::move(value)) { q_.canonicalize(); }

Scalar Scalar::from_integer(Field field, const mpz_class& value) {
  Scalar s;
  s.field_ = field;
  if (field.is_rational()) {
    s.q_ = mpq_class(value);
  } else {
    s.q_ = 0;
    s.r_ = reduce(value, field.modulus());
  }
  return s;
}

Scalar Scalar::from_ratio(Field field, const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DataError("zero denominator");
  if (field.is_rational()) {
    mpq_class q(num, den);
    q.canonicalize();
    return Scalar(q);
  }
  const std::uint64_t d = reduce(den, field.modulus());
  if (d == 0) {
    throw DataError("denominator " + den.get_str() + " vanishes in " + field.to_string());
  }
  return from_integer(field, num) / residue(field, d);
}

Scalar Scalar::residue(Field field, std::uint64_t r) {
  if (field.is_rational()) return Scalar(static_cast<long>(r));
  Scalar s;
  s.field_ = field;
  s.r_ = r % field.modulus();
  return s;
}

bool Scalar::is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }

bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw DataError("scalar is not rational");
  return q_;
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rational()) throw DataError("scalar is not a prime-field element");
  return r_;
}

std::size_t Scalar::bit_size() const {
  if (!field_.is_rational()) return 1;
  if (q_ == 0) return 0;
  return mpz_sizeinbase(q_.get_num_mpz_t(), 2) + mpz_sizeinbase(q_.get_den_mpz_t(), 2);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  if (field_.is_rational()) return Scalar(mpq_class(1) / q_);
  return residue(field_, pow_mod(r_, field_.modulus() - 2, field_.modulus()));
}

void Scalar::require_same_field(const Scalar& o) const {
  if (field_ != o.field_) {
    throw DataError("mixed-field arithmetic: " + field_.to_string() + " and " + o.field_.to_string());
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_rational()) {
    q_ += o.q_;
  } else {
    r_ += o.r_;
    if (r_ >= field_.modulus()) r_ -= field_.modulus();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_rational()) {
    q_ -= o.q_;
  } else {
    r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + field_.modulus() - o.r_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_rational()) {
    q_ *= o.q_;
  } else {
    r_ = mul_mod(r_, o.r_, field_.modulus());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o);
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (field_.is_rational()) {
    s.q_ = -q_;
  } else if (r_ != 0) {
    s.r_ = field_.modulus() - r_;
  }
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

Scalar parse_scalar(const std::string& text, Field field) {
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& part, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < part.size() && (part[i] == '-' || part[i] == '+')) ++i;
    if (i == part.size()) throw DataError("malformed number '" + text + "'");
    for (std::size_t j = i; j < part.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(part[j]))) {
        throw DataError("malformed number '" + text + "'");
      }
    }
    return mpz_class(part[0] == '+' ? part.substr(1) : part, 10);
  };
  if (slash == std::string::npos) return Scalar::from_integer(field, parse_int(text, true));
  return Scalar::from_ratio(field, parse_int(text.substr(0, slash), true),
                            parse_int(text.substr(slash + 1), false));
}

}  // namespace nodalcodes
