#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dunkl/rational.hpp"

namespace dunkl {

/// Dense univariate polynomial over Rational in the monomial basis.
/// coeffs()[i] is the coefficient of x^i; trailing zeros are trimmed so
/// that equality is coefficient-wise structural equality. The zero
/// polynomial has an empty coefficient sequence and degree() == -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(Rational c);
  static Poly monomial(unsigned degree, Rational coeff = Rational(1));

  /// Parses the CLI text form: comma-separated rationals, low to high
  /// degree, e.g. "-2,0,4" = 4x^2 - 2. Throws std::invalid_argument.
  static Poly from_string(std::string_view s);
  /// Inverse of from_string; "0" for the zero polynomial.
  std::string str() const;

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  /// Coefficient of x^i (zero beyond the degree).
  Rational coeff(unsigned i) const;

  Rational evaluate(const Rational& x0) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

Poly scale(const Rational& c, const Poly& p);

/// p(-x): negates the coefficients of odd powers. An involution.
Poly reflect(const Poly& p);

/// Even/odd decomposition: even(-x) = even(x), odd(-x) = -odd(x),
/// even + odd = p.
struct ParityVector {
  Poly even;
  Poly odd;
};
ParityVector parity_split(const Poly& p);

/// Exact division by x. Requires a zero constant term; throws
/// std::domain_error otherwise (a nonzero constant term means the
/// quotient would not be a polynomial).
Poly divide_by_x(const Poly& p);

}  // namespace dunkl
