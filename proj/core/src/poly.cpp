#include "dunkl/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace dunkl {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::constant(Rational c) {
  std::vector<Rational> v;
  if (!c.is_zero()) v.push_back(std::move(c));
  return Poly(std::move(v));
}

Poly Poly::monomial(unsigned degree, Rational coeff) {
  std::vector<Rational> v(degree + 1);
  v[degree] = std::move(coeff);
  return Poly(std::move(v));
}

Poly Poly::from_string(std::string_view s) {
  std::vector<Rational> v;
  size_t pos = 0;
  while (true) {
    const size_t comma = s.find(',', pos);
    const std::string_view tok =
        comma == std::string_view::npos ? s.substr(pos) : s.substr(pos, comma - pos);
    v.push_back(Rational::from_string(tok));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Poly(std::move(v));
}

std::string Poly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ',';
    os << coeffs_[i].str();
  }
  return os.str();
}

Rational Poly::coeff(unsigned i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational Poly::evaluate(const Rational& x0) const {
  Rational acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x0 + coeffs_[i];
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(v));
}

Poly Poly::operator-() const {
  std::vector<Rational> v(coeffs_.size());
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
  return Poly(std::move(v));
}

Poly scale(const Rational& c, const Poly& p) {
  if (c.is_zero()) return Poly();
  std::vector<Rational> v(p.coeffs().begin(), p.coeffs().end());
  for (auto& x : v) x *= c;
  return Poly(std::move(v));
}

Poly reflect(const Poly& p) {
  std::vector<Rational> v(p.coeffs().begin(), p.coeffs().end());
  for (size_t i = 1; i < v.size(); i += 2) v[i] = -v[i];
  return Poly(std::move(v));
}

ParityVector parity_split(const Poly& p) {
  std::vector<Rational> even(p.coeffs().size()), odd(p.coeffs().size());
  for (size_t i = 0; i < p.coeffs().size(); ++i)
    (i % 2 == 0 ? even[i] : odd[i]) = p.coeffs()[i];
  return {Poly(std::move(even)), Poly(std::move(odd))};
}

Poly divide_by_x(const Poly& p) {
  if (p.is_zero()) return Poly();
  if (!p.coeffs().front().is_zero())
    throw std::domain_error("divide_by_x: nonzero constant term " + p.coeffs().front().str());
  std::vector<Rational> v(p.coeffs().begin() + 1, p.coeffs().end());
  return Poly(std::move(v));
}

}  // namespace dunkl
