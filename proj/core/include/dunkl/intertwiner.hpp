#pragma once

#include <vector>

#include "dunkl/poly.hpp"
#include "dunkl/rational.hpp"

namespace dunkl {

/// The four realizations of the intertwining operator V_mu. Monomial,
/// Hermite and Boson are exact and produce identical output on every
/// polynomial; Integral is the quadrature realization (see
/// dunkl/quadrature.hpp) and agrees to floating tolerance.
enum class Realization { Monomial, Hermite, Boson, Integral };

/// Diagonal monomial action: the coefficient of x^{2n+eps} is multiplied
/// by (1/2)_{n+eps} / (mu+1/2)_{n+eps}. Degree- and parity-preserving;
/// the identity at mu = 0.
Poly v_mu_monomial(const MuParam& mu, const Poly& p);

/// Hermite-basis action: expand p in {H_m}, map each H_{2n+eps} to
///   (1/2)_{n+eps}/(mu+1/2)_{n+eps}
///     * sum_{l=0}^{n} (-1)^l 2^{2l} C(n,l) (mu)_l H_{2(n-l)+eps},
/// and convert back.
Poly v_mu_hermite(const MuParam& mu, const Poly& p);

/// Bosonic realization: the diagonal prefactor
/// (1/2)_{n+eps}/(mu+1/2)_{n+eps} on each source component H_{2n+eps},
/// followed by the terminating series
///   sum_{l=0}^{floor(deg/2)} (mu)_l / l! (-1)^l b^l
/// (higher powers of b annihilate p, so the truncation is exact).
Poly v_mu_boson(const MuParam& mu, const Poly& p);

/// Dispatch to one of the three exact realizations. Throws
/// std::invalid_argument for Realization::Integral, which is owned by
/// the quadrature module.
Poly v_mu_apply(const MuParam& mu, const Poly& p, Realization method);

/// dunkl_derivative(mu, V_mu p) - V_mu(p'); identically the zero polynomial.
Poly intertwining_residual(const MuParam& mu, const Poly& p);

/// v_mu_monomial(mu, hermite(n)) - generalized_hermite(mu, n);
/// identically the zero polynomial.
Poly corollary_residual(const MuParam& mu, unsigned n);

/// Deterministic sample set for certifying V_mu identities polynomially
/// in mu: every matrix entry of V_mu restricted to degree <= d is a
/// rational function of mu of numerator/denominator degree <= d/2 + 1,
/// so exact agreement at d/2 + 2 distinct admissible values certifies
/// the identity for all mu. Returns max(14, d/2 + 2) distinct positive
/// pole-free rationals; the first 14 are a fixed base set.
std::vector<MuParam> certification_mu_samples(int degree_cap);

}  // namespace dunkl
