#include "dunkl/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace dunkl {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational Rational::from_string(std::string_view s) {
  // strict shape: -?digits(/digits)?  -- no embedded whitespace
  size_t begin = 0, end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  const std::string_view t = s.substr(begin, end - begin);
  if (t.empty()) throw std::invalid_argument("Rational: empty string");

  size_t i = 0;
  if (t[i] == '-') ++i;
  size_t digits = 0;
  while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) { ++i; ++digits; }
  if (digits == 0) throw std::invalid_argument("Rational: malformed input '" + std::string(s) + "'");
  if (i < t.size()) {
    if (t[i] != '/') throw std::invalid_argument("Rational: malformed input '" + std::string(s) + "'");
    ++i;
    size_t den_digits = 0;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) { ++i; ++den_digits; }
    if (den_digits == 0 || i != t.size())
      throw std::invalid_argument("Rational: malformed input '" + std::string(s) + "'");
  }

  mpq_class v;
  if (mpq_set_str(v.get_mpq_t(), std::string(t).c_str(), 10) != 0)
    throw std::invalid_argument("Rational: malformed input '" + std::string(s) + "'");
  if (sgn(mpq_class(v.get_den())) == 0)
    throw std::invalid_argument("Rational: zero denominator in '" + std::string(s) + "'");
  v.canonicalize();
  return Rational(std::move(v));
}

long Rational::to_long() const {
  if (!is_integer()) throw std::domain_error("Rational: " + str() + " is not an integer");
  const mpz_class n = numerator();
  if (!n.fits_slong_p()) throw std::domain_error("Rational: " + str() + " does not fit in long");
  return n.get_si();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

MuParam::MuParam(Rational value) : value_(std::move(value)) {
  // mu = -(2k+1)/2 <=> canonical denominator 2 with negative numerator
  if (value_.sign() < 0 && value_.denominator() == 2)
    throw std::invalid_argument("MuParam: " + value_.str() +
                                " is a pole of 1/(mu+1/2)_k");
}

}  // namespace dunkl
