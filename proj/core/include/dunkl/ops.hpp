#pragma once

#include <optional>
#include <string_view>

#include "dunkl/poly.hpp"
#include "dunkl/rational.hpp"

namespace dunkl {

/// Formal derivative.
Poly derivative(const Poly& p);

/// Dunkl operator D_mu p = p' + mu (p - p(-x)) / x. Lowers degree by
/// one and swaps parity; reduces to the plain derivative at mu = 0.
Poly dunkl_derivative(const MuParam& mu, const Poly& p);

/// Odd-part projector P = (1 - R)/2; idempotent.
Poly projector(const Poly& p);

/// Number operator (1/2)(-p'' + 2x p'); H_n is an eigenvector with
/// eigenvalue n.
Poly number_op(const Poly& p);

/// Squared gauged lowering operator: (1/2) p''. (The lowering operator
/// itself carries a factor 1/sqrt(2); only its rational square is
/// exposed so the whole pipeline stays in Q.)
Poly a_squared(const Poly& p);

/// Degree-lowering operator (N + P + 1)^{-1} a^2, realized as a diagonal
/// inverse in the Hermite basis: the eigenvalue of N + P + 1 on H_{2k+eps}
/// is 2k + 2 eps + 1, never zero. Satisfies b(H_{2n+eps}) = 4n H_{2(n-1)+eps}.
Poly b_op(const Poly& p);

/// Gauge-transformed Dunkl oscillator acting on the polynomial factor of
/// the eigenfunctions: (1/2)(-(D_mu - x)^2 q + x^2 q). The generalized
/// Hermite polynomial of degree 2n + eps is an eigenvector with
/// eigenvalue 2n + eps + mu + 1/2.
Poly gauged_hamiltonian(const MuParam& mu, const Poly& q);

enum class OpKind {
  Derivative,
  MulX,
  Reflection,
  Projector,
  Dunkl,
  NumberOp,
  ASquared,
  BOp,
  GaugedHamiltonian,
};

/// Tagged operator for generic dispatch (the CLI `apply` surface).
/// Invariant: mu is present iff the operator depends on mu
/// (Dunkl, GaugedHamiltonian); the constructors enforce both directions.
class OperatorTag {
 public:
  explicit OperatorTag(OpKind kind);
  OperatorTag(OpKind kind, MuParam mu);

  static bool requires_mu(OpKind kind);
  static std::string_view name(OpKind kind);
  /// Parses a CLI operator name ("derivative", "mulx", "reflection",
  /// "projector", "dunkl", "number", "asquared", "bop", "hamiltonian").
  /// Throws std::invalid_argument on unknown names or a mu mismatch.
  static OperatorTag from_name(std::string_view name, std::optional<MuParam> mu);

  OpKind kind() const { return kind_; }
  const std::optional<MuParam>& mu() const { return mu_; }

 private:
  OpKind kind_;
  std::optional<MuParam> mu_;
};

Poly apply(const OperatorTag& tag, const Poly& p);

}  // namespace dunkl
