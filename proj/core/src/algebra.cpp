#include "dunkl/algebra.hpp"

#include <stdexcept>

namespace dunkl {

Rational pochhammer(const Rational& a, unsigned n) {
  Rational prod(1);
  Rational term = a;
  for (unsigned i = 0; i < n; ++i) {
    prod *= term;
    term += Rational(1);
  }
  return prod;
}

Rational factorial(unsigned n) {
  Rational prod(1);
  for (unsigned i = 2; i <= n; ++i) prod *= Rational(static_cast<long>(i));
  return prod;
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  if (k > n - k) k = n - k;
  Rational num(1), den(1);
  for (unsigned i = 0; i < k; ++i) {
    num *= Rational(static_cast<long>(n - i));
    den *= Rational(static_cast<long>(i + 1));
  }
  return num / den;
}

Rational lemma1_sum(unsigned m, unsigned k) {
  Rational sum(0);
  const Rational neg_m(-static_cast<long>(m));
  for (unsigned n = 0; n <= m; ++n) {
    const Rational neg_n(-static_cast<long>(n));
    sum += pochhammer(neg_m, n) * pochhammer(neg_n, k) / factorial(n);
  }
  return sum;
}

Rational gauss_2f1_terminating(const Rational& a, const Rational& b, const Rational& c) {
  if (!a.is_integer() || a.sign() > 0)
    throw std::invalid_argument("gauss_2f1_terminating: a must be a nonpositive integer, got " + a.str());
  const long N = -a.to_long();

  Rational sum(1);
  Rational term(1);
  for (long s = 1; s <= N; ++s) {
    const Rational c_factor = c + Rational(s - 1);
    if (c_factor.is_zero())
      throw std::invalid_argument("gauss_2f1_terminating: (c)_s vanishes at s = " + std::to_string(s) +
                                  " for c = " + c.str());
    term *= (a + Rational(s - 1)) * (b + Rational(s - 1)) / (c_factor * Rational(s));
    sum += term;
  }
  return sum;
}

bool lemma2_check(unsigned n, unsigned k, int eps, const MuParam& mu) {
  if (k > n) throw std::invalid_argument("lemma2_check: requires k <= n");
  if (eps != 0 && eps != 1) throw std::invalid_argument("lemma2_check: eps must be 0 or 1");
  const Rational half(1, 2);
  const Rational mu_half = mu.value() + half;

  const Rational lhs = pochhammer(half, k + eps) / pochhammer(mu_half, k + eps);

  const Rational a(-static_cast<long>(n - k));
  const Rational c = half - Rational(static_cast<long>(n) + eps);
  const Rational sum = gauss_2f1_terminating(a, mu.value(), c);
  const Rational rhs = pochhammer(half, n + eps) / pochhammer(mu_half, n + eps) * sum;

  return lhs == rhs;
}

bool lemma3_check(unsigned n, unsigned l, int eps) {
  if (l > n) throw std::invalid_argument("lemma3_check: requires l <= n");
  if (eps != 0 && eps != 1) throw std::invalid_argument("lemma3_check: eps must be 0 or 1");
  const Rational half(1, 2);

  const Rational lhs =
      factorial(2 * (n - l) + eps) * pochhammer(half - Rational(static_cast<long>(n) + eps), l);

  const Rational sign = (l % 2 == 0) ? Rational(1) : Rational(-1);
  Rational pow4(1);  // 2^{2l}
  for (unsigned i = 0; i < l; ++i) pow4 *= Rational(4);
  const Rational rhs = sign * factorial(2 * n + eps) * factorial(n - l) / (pow4 * factorial(n));

  return lhs == rhs;
}

}  // namespace dunkl
