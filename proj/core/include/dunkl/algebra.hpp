#pragma once

#include "dunkl/rational.hpp"

namespace dunkl {

/// Rising factorial (a)_n = a(a+1)...(a+n-1), exact; (a)_0 = 1.
/// Computed as an iterated product, never through Gamma.
Rational pochhammer(const Rational& a, unsigned n);

/// n! as a Rational.
Rational factorial(unsigned n);

/// Binomial coefficient n over k (0 when k > n).
Rational binomial(unsigned n, unsigned k);

/// The sum  sum_{n=0}^{m} (-m)_n (-n)_k / n!  evaluated term by term.
/// Equals m! * delta_{m,k}; callers assert that identity.
Rational lemma1_sum(unsigned m, unsigned k);

/// Terminating Gauss hypergeometric series at unit argument:
/// sum_{s=0}^{N} (a)_s (b)_s / ((c)_s s!)  with a = -N.
/// Throws std::invalid_argument unless a is a nonpositive integer, and
/// std::invalid_argument if (c)_s vanishes before the series terminates
/// (c in {0, -1, ..., -(N-1)}).
Rational gauss_2f1_terminating(const Rational& a, const Rational& b, const Rational& c);

/// Checks, exactly, the rising-factorial ratio identity
///   (1/2)_{k+eps} / (mu+1/2)_{k+eps}
///     = (1/2)_{n+eps} / (mu+1/2)_{n+eps}
///       * sum_{s=0}^{n-k} (mu)_s (-n+k)_s / ((-n-eps+1/2)_s s!)
/// for k <= n, eps in {0,1}. Returns true iff both sides agree.
bool lemma2_check(unsigned n, unsigned k, int eps, const MuParam& mu);

/// Checks, exactly, the factorial identity
///   (2n-2l+eps)! (-n-eps+1/2)_l = (-1)^l (2n+eps)! (n-l)! / (2^{2l} n!)
/// for l <= n, eps in {0,1}. Returns true iff both sides agree.
bool lemma3_check(unsigned n, unsigned l, int eps);

}  // namespace dunkl
