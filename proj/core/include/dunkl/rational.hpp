#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace dunkl {

/// Arbitrary-precision rational number, always in canonical form:
/// denominator > 0, gcd(|numerator|, denominator) = 1. All arithmetic
/// is exact; division by zero throws.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(int n) : v_(static_cast<signed long>(n)) {}
  Rational(long num, long den);
  explicit Rational(mpq_class v);

  /// Parses "p" or "p/q" with an optional leading '-' on the numerator.
  /// Throws std::invalid_argument on malformed input or q = 0.
  static Rational from_string(std::string_view s);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Exact conversion to long; throws std::domain_error if the value is
  /// not an integer fitting in long.
  long to_long() const;
  double to_double() const { return v_.get_d(); }

  /// "p/q" with "/q" omitted when q = 1; sign on the numerator.
  std::string str() const { return v_.get_str(); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return c <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

/// Deformation parameter mu. Construction rejects the poles of
/// 1/(mu + 1/2)_k, i.e. mu in {-1/2, -3/2, -5/2, ...}.
class MuParam {
 public:
  explicit MuParam(Rational value);

  const Rational& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }

  friend bool operator==(const MuParam& a, const MuParam& b) {
    return a.value_ == b.value_;
  }

 private:
  Rational value_;
};

}  // namespace dunkl
