#include "dunkl/intertwiner.hpp"

#include <stdexcept>

#include "dunkl/algebra.hpp"
#include "dunkl/hermite.hpp"
#include "dunkl/ops.hpp"

namespace dunkl {

namespace {

const Rational kHalf(1, 2);

/// (1/2)_{n+eps} / (mu+1/2)_{n+eps} for the component of degree 2n+eps.
Rational diagonal_multiplier(const MuParam& mu, unsigned degree) {
  const unsigned idx = degree / 2 + degree % 2;  // n + eps
  return pochhammer(kHalf, idx) / pochhammer(mu.value() + kHalf, idx);
}

/// The diagonal prefactor in the Hermite basis: multiplies the H_{2n+eps}
/// component by (1/2)_{n+eps}/(mu+1/2)_{n+eps}.
HermiteVector hermite_prefactor(const MuParam& mu, const HermiteVector& h) {
  std::vector<Rational> v(h.coeffs().begin(), h.coeffs().end());
  for (size_t m = 0; m < v.size(); ++m)
    if (!v[m].is_zero()) v[m] *= diagonal_multiplier(mu, static_cast<unsigned>(m));
  return HermiteVector(std::move(v));
}

}  // namespace

Poly v_mu_monomial(const MuParam& mu, const Poly& p) {
  std::vector<Rational> v(p.coeffs().begin(), p.coeffs().end());
  for (size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) v[i] *= diagonal_multiplier(mu, static_cast<unsigned>(i));
  return Poly(std::move(v));
}

Poly v_mu_hermite(const MuParam& mu, const Poly& p) {
  const HermiteVector h = to_hermite(p);
  std::vector<Rational> out(h.coeffs().size());
  for (size_t m = 0; m < h.coeffs().size(); ++m) {
    const Rational& c = h.coeffs()[m];
    if (c.is_zero()) continue;
    const unsigned n = static_cast<unsigned>(m) / 2;
    const unsigned eps = static_cast<unsigned>(m) % 2;
    const Rational pref = c * diagonal_multiplier(mu, static_cast<unsigned>(m));
    Rational pow4(1);
    for (unsigned l = 0; l <= n; ++l) {
      const Rational sign = (l % 2 == 0) ? Rational(1) : Rational(-1);
      out[2 * (n - l) + eps] +=
          pref * sign * pow4 * binomial(n, l) * pochhammer(mu.value(), l);
      pow4 *= Rational(4);
    }
  }
  return to_poly(HermiteVector(std::move(out)));
}

Poly v_mu_boson(const MuParam& mu, const Poly& p) {
  if (p.is_zero()) return Poly();
  const Poly q = to_poly(hermite_prefactor(mu, to_hermite(p)));

  const unsigned trunc = static_cast<unsigned>(p.degree()) / 2;
  Poly result;
  Poly b_power = q;  // b^l applied to q
  Rational coeff(1);  // (mu)_l / l! * (-1)^l
  for (unsigned l = 0; l <= trunc; ++l) {
    if (l > 0) {
      b_power = b_op(b_power);
      coeff *= -(mu.value() + Rational(static_cast<long>(l) - 1)) / Rational(static_cast<long>(l));
    }
    if (b_power.is_zero()) break;
    result += scale(coeff, b_power);
  }
  return result;
}

Poly v_mu_apply(const MuParam& mu, const Poly& p, Realization method) {
  switch (method) {
    case Realization::Monomial: return v_mu_monomial(mu, p);
    case Realization::Hermite: return v_mu_hermite(mu, p);
    case Realization::Boson: return v_mu_boson(mu, p);
    case Realization::Integral:
      throw std::invalid_argument(
          "v_mu_apply: Integral realization is owned by the quadrature module");
  }
  throw std::invalid_argument("v_mu_apply: unknown realization");
}

Poly intertwining_residual(const MuParam& mu, const Poly& p) {
  return dunkl_derivative(mu, v_mu_monomial(mu, p)) - v_mu_monomial(mu, derivative(p));
}

Poly corollary_residual(const MuParam& mu, unsigned n) {
  return v_mu_monomial(mu, hermite(n)) - generalized_hermite(mu, n);
}

std::vector<MuParam> certification_mu_samples(int degree_cap) {
  static const std::pair<long, long> base[] = {
      {1, 7},  {1, 3},  {1, 2},  {1, 1},   {3, 2},  {2, 1},  {19, 4},
      {7, 1},  {23, 2}, {31, 3}, {41, 5},  {101, 7}, {13, 1}, {17, 1},
  };
  const size_t want =
      std::max<size_t>(14, static_cast<size_t>(degree_cap > 0 ? degree_cap / 2 + 2 : 0));

  std::vector<MuParam> samples;
  samples.reserve(want);
  for (const auto& [p, q] : base) samples.emplace_back(Rational(p, q));
  // extend with integers not already present (base holds 1, 2, 7, 13, 17)
  for (long k = 3; samples.size() < want; ++k) {
    if (k == 7 || k == 13 || k == 17) continue;
    samples.emplace_back(Rational(k));
  }
  return samples;
}

}  // namespace dunkl
