#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nodalcodes/matrix.hpp"
#include "nodalcodes/scalar.hpp"

namespace nodalcodes {

inline constexpr std::array<char, 4> kVariables = {'x', 'y', 'z', 'w'};

/// Exponent vector in x, y, z, w.
struct Monomial {
  std::array<unsigned, 4> exponents{};

  unsigned degree() const { return exponents[0] + exponents[1] + exponents[2] + exponents[3]; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);

/// Graded reverse-lexicographic order with x > y > z > w.
bool grevlex_less(const Monomial& a, const Monomial& b);

struct GrevlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_less(b, a); }
};

/// Sparse homogeneous polynomial in x, y, z, w. No zero coefficients are stored and every
/// stored monomial has total degree degree().
class HomogeneousForm {
 public:
  using Terms = std::map<Monomial, Scalar, GrevlexDescending>;

  HomogeneousForm() = default;
  HomogeneousForm(int degree, Field field) : degree_(degree), field_(field) {}

  /// Sums repeated monomials and drops zeros. Throws HomogeneityError on mixed degrees and
  /// DataError on coefficients from another field.
  static HomogeneousForm from_terms(int degree, Field field,
                                    std::span<const std::pair<Monomial, Scalar>> terms);
  static HomogeneousForm monomial(const Monomial& m, Scalar coefficient);

  int degree() const { return degree_; }
  Field field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Monomial& m) const;

  HomogeneousForm& operator+=(const HomogeneousForm& o);
  HomogeneousForm& operator-=(const HomogeneousForm& o);
  friend HomogeneousForm operator+(HomogeneousForm a, const HomogeneousForm& b) { return a += b; }
  friend HomogeneousForm operator-(HomogeneousForm a, const HomogeneousForm& b) { return a -= b; }
  friend HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b);
  friend HomogeneousForm operator*(const Scalar& s, const HomogeneousForm& f);

  friend bool operator==(const HomogeneousForm&, const HomogeneousForm&) = default;

 private:
  void add_term(const Monomial& m, const Scalar& c);

  int degree_ = 0;
  Field field_{};
  Terms terms_;
};

/// Grammar:
///   expr   := term (('+'|'-') term)*      (a leading sign is allowed)
///   term   := coeff? ('*'? factor)*
///   factor := var ('^' uint)?              var in {x,y,z,w}
///   coeff  := int | int '/' uint
/// Whitespace is ignored. Coefficients are reduced into `field`.
HomogeneousForm parse_form(std::string_view text, Field field = Field::rational());

/// Canonical text in graded reverse-lex order, e.g. "x^2*y^2 - 2*x*y*z*w + w^4".
std::string to_string(const HomogeneousForm& f);

/// Throws DataError unless exactly four coordinates from f's field are given.
Scalar evaluate_at(const HomogeneousForm& f, std::span<const Scalar> point);

HomogeneousForm partial(const HomogeneousForm& f, std::size_t variable);
/// (df/dx, df/dy, df/dz, df/dw); a constant form yields four zero forms of degree 0.
std::array<HomogeneousForm, 4> gradient(const HomogeneousForm& f);

ExactMatrix hessian_at(const HomogeneousForm& f, std::span<const Scalar> point);
std::size_t hessian_rank_at(const HomogeneousForm& f, std::span<const Scalar> point);

}  // namespace nodalcodes
