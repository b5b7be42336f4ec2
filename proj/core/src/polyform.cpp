#include "nodalcodes/polyform.hpp"

#include <cctype>
#include <optional>

#include "nodalcodes/errors.hpp"

namespace nodalcodes {

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < 4; ++i) m.exponents[i] = a.exponents[i] + b.exponents[i];
  return m;
}

bool grevlex_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  // Larger in grevlex: the last nonzero entry of a - b is negative.
  for (std::size_t i = 4; i-- > 0;) {
    if (a.exponents[i] != b.exponents[i]) return a.exponents[i] > b.exponents[i];
  }
  return false;
}

void HomogeneousForm::add_term(const Monomial& m, const Scalar& c) {
  if (c.field() != field_) {
    throw DataError("coefficient from " + c.field().to_string() + " in a form over " +
                    field_.to_string());
  }
  if (static_cast<int>(m.degree()) != degree_) {
    throw HomogeneityError(degree_, static_cast<int>(m.degree()));
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HomogeneousForm HomogeneousForm::from_terms(int degree, Field field,
                                            std::span<const std::pair<Monomial, Scalar>> terms) {
  HomogeneousForm f(degree, field);
  for (const auto& [m, c] : terms) f.add_term(m, c);
  return f;
}

HomogeneousForm HomogeneousForm::monomial(const Monomial& m, Scalar coefficient) {
  HomogeneousForm f(static_cast<int>(m.degree()), coefficient.field());
  f.add_term(m, coefficient);
  return f;
}

Scalar HomogeneousForm::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

HomogeneousForm& HomogeneousForm::operator+=(const HomogeneousForm& o) {
  if (o.field_ != field_) throw DataError("adding forms over different fields");
  if (o.is_zero()) return *this;
  if (is_zero()) {
    degree_ = o.degree_;
  } else if (o.degree_ != degree_) {
    throw HomogeneityError(degree_, o.degree_);
  }
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

HomogeneousForm& HomogeneousForm::operator-=(const HomogeneousForm& o) {
  return *this += Scalar::from_integer(o.field_, -1) * o;
}

HomogeneousForm operator*(const HomogeneousForm& a, const HomogeneousForm& b) {
  if (a.field_ != b.field_) throw DataError("multiplying forms over different fields");
  HomogeneousForm out(a.degree_ + b.degree_, a.field_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

HomogeneousForm operator*(const Scalar& s, const HomogeneousForm& f) {
  HomogeneousForm out(f.degree_, f.field_);
  for (const auto& [m, c] : f.terms_) out.add_term(m, s * c);
  return out;
}

namespace {

class FormParser {
 public:
  FormParser(std::string_view text, Field field) : text_(text), field_(field) {}

  HomogeneousForm parse() {
    std::vector<std::pair<Monomial, Scalar>> terms;
    std::optional<int> degree;
    skip_space();
    bool first = true;
    while (pos_ < text_.size() || first) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [mono, coeff] = parse_term();
      if (negative) coeff = -coeff;
      const int d = static_cast<int>(mono.degree());
      if (degree && *degree != d) throw HomogeneityError(*degree, d);
      degree = d;
      terms.emplace_back(mono, coeff);
      first = false;
      skip_space();
    }
    return HomogeneousForm::from_terms(degree.value_or(0), field_, terms);
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  static bool is_variable(char c) { return c == 'x' || c == 'y' || c == 'z' || c == 'w'; }

  std::pair<Monomial, Scalar> parse_term() {
    Scalar coeff = Scalar::one(field_);
    bool have_coeff = false;
    bool have_factor = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::string num = digits();
      skip_space();
      if (peek() == '/') {
        ++pos_;
        skip_space();
        const std::string den = digits();
        if (den.empty()) fail("expected denominator");
        if (mpz_class(den) == 0) fail("zero denominator");
        coeff = Scalar::from_ratio(field_, mpz_class(num), mpz_class(den));
      } else {
        coeff = Scalar::from_integer(field_, mpz_class(num));
      }
      have_coeff = true;
      skip_space();
    }
    Monomial mono;
    for (;;) {
      const std::size_t before = pos_;
      if (peek() == '*') {
        ++pos_;
        skip_space();
        if (!is_variable(peek())) fail("expected variable after '*'");
      }
      if (!is_variable(peek())) {
        pos_ = before;
        break;
      }
      const char var = peek();
      ++pos_;
      skip_space();
      unsigned exponent = 1;
      if (peek() == '^') {
        ++pos_;
        skip_space();
        const std::string e = digits();
        if (e.empty()) fail("expected exponent");
        if (e.size() > 4) fail("exponent too large");
        exponent = static_cast<unsigned>(std::stoul(e));
        skip_space();
      }
      const std::size_t index = var == 'x' ? 0 : var == 'y' ? 1 : var == 'z' ? 2 : 3;
      mono.exponents[index] += exponent;
      have_factor = true;
    }
    if (!have_coeff && !have_factor) {
      if (pos_ < text_.size()) fail(std::string("unexpected character '") + peek() + "'");
      fail("expected term");
    }
    if (pos_ < text_.size() && peek() != '+' && peek() != '-') {
      fail(std::string("unexpected character '") + peek() + "'");
    }
    return {mono, coeff};
  }

  std::string_view text_;
  Field field_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Monomial& m) {
  std::string s;
  for (std::size_t i = 0; i < 4; ++i) {
    if (m.exponents[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += kVariables[i];
    if (m.exponents[i] > 1) s += '^' + std::to_string(m.exponents[i]);
  }
  return s;
}

}  // namespace

HomogeneousForm parse_form(std::string_view text, Field field) {
  return FormParser(text, field).parse();
}

std::string to_string(const HomogeneousForm& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    std::string coeff = c.to_string();
    bool negative = false;
    if (f.field().is_rational() && c.rational() < 0) {
      negative = true;
      coeff = Scalar(-c.rational()).to_string();
    }
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mono = monomial_text(m);
    if (mono.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
    first = false;
  }
  return out;
}

Scalar evaluate_at(const HomogeneousForm& f, std::span<const Scalar> point) {
  if (point.size() != 4) {
    throw DataError("expected 4 coordinates, got " + std::to_string(point.size()));
  }
  for (const Scalar& c : point) {
    if (c.field() != f.field()) throw DataError("point coordinates are not in the form's field");
  }
  Scalar total = Scalar::zero(f.field());
  for (const auto& [m, c] : f.terms()) {
    Scalar term = c;
    for (std::size_t i = 0; i < 4; ++i) {
      for (unsigned e = 0; e < m.exponents[i]; ++e) term *= point[i];
    }
    total += term;
  }
  return total;
}

HomogeneousForm partial(const HomogeneousForm& f, std::size_t variable) {
  HomogeneousForm out(f.degree() > 0 ? f.degree() - 1 : 0, f.field());
  for (const auto& [m, c] : f.terms()) {
    if (m.exponents[variable] == 0) continue;
    Monomial d = m;
    --d.exponents[variable];
    out += HomogeneousForm::monomial(
        d, Scalar::from_integer(f.field(), static_cast<long>(m.exponents[variable])) * c);
  }
  return out;
}

std::array<HomogeneousForm, 4> gradient(const HomogeneousForm& f) {
  return {partial(f, 0), partial(f, 1), partial(f, 2), partial(f, 3)};
}

ExactMatrix hessian_at(const HomogeneousForm& f, std::span<const Scalar> point) {
  ExactMatrix h(4, 4, f.field());
  const auto first = gradient(f);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i; j < 4; ++j) {
      const Scalar v = evaluate_at(partial(first[i], j), point);
      h.set(i, j, v);
      h.set(j, i, v);
    }
  }
  return h;
}

std::size_t hessian_rank_at(const HomogeneousForm& f, std::span<const Scalar> point) {
  return rank_and_rref(hessian_at(f, point)).rank;
}

}  // namespace nodalcodes
