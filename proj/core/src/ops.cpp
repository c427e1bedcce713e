#include "dunkl/ops.hpp"

#include <stdexcept>
#include <vector>

#include "dunkl/hermite.hpp"

namespace dunkl {

Poly derivative(const Poly& p) {
  if (p.degree() < 1) return Poly();
  std::vector<Rational> v(p.coeffs().size() - 1);
  for (size_t i = 1; i < p.coeffs().size(); ++i)
    v[i - 1] = p.coeffs()[i] * Rational(static_cast<long>(i));
  return Poly(std::move(v));
}

Poly dunkl_derivative(const MuParam& mu, const Poly& p) {
  Poly result = derivative(p);
  if (!mu.is_zero()) {
    // p - p(-x) has zero constant term, so the division stays polynomial
    result += scale(mu.value(), divide_by_x(p - reflect(p)));
  }
  return result;
}

Poly projector(const Poly& p) { return scale(Rational(1, 2), p - reflect(p)); }

Poly number_op(const Poly& p) {
  const Poly dp = derivative(p);
  return scale(Rational(1, 2), Poly::monomial(1, Rational(2)) * dp - derivative(dp));
}

Poly a_squared(const Poly& p) { return scale(Rational(1, 2), derivative(derivative(p))); }

Poly b_op(const Poly& p) {
  HermiteVector h = to_hermite(a_squared(p));
  if (h.is_zero()) return Poly();
  std::vector<Rational> v(h.coeffs().begin(), h.coeffs().end());
  for (size_t m = 0; m < v.size(); ++m) {
    // eigenvalue of N + P + 1 on H_m: m+1 for even m, m+2 for odd m
    const long eig = static_cast<long>(m) + (m % 2 == 0 ? 1 : 2);
    v[m] /= Rational(eig);
  }
  return to_poly(HermiteVector(std::move(v)));
}

Poly gauged_hamiltonian(const MuParam& mu, const Poly& q) {
  const Poly x = Poly::monomial(1);
  const Poly r1 = dunkl_derivative(mu, q) - x * q;
  const Poly r2 = dunkl_derivative(mu, r1) - x * r1;
  return scale(Rational(1, 2), x * x * q - r2);
}

bool OperatorTag::requires_mu(OpKind kind) {
  return kind == OpKind::Dunkl || kind == OpKind::GaugedHamiltonian;
}

OperatorTag::OperatorTag(OpKind kind) : kind_(kind) {
  if (requires_mu(kind))
    throw std::invalid_argument(std::string("OperatorTag: ") + std::string(name(kind)) +
                                " requires mu");
}

OperatorTag::OperatorTag(OpKind kind, MuParam mu) : kind_(kind), mu_(std::move(mu)) {
  if (!requires_mu(kind))
    throw std::invalid_argument(std::string("OperatorTag: ") + std::string(name(kind)) +
                                " does not take mu");
}

std::string_view OperatorTag::name(OpKind kind) {
  switch (kind) {
    case OpKind::Derivative: return "derivative";
    case OpKind::MulX: return "mulx";
    case OpKind::Reflection: return "reflection";
    case OpKind::Projector: return "projector";
    case OpKind::Dunkl: return "dunkl";
    case OpKind::NumberOp: return "number";
    case OpKind::ASquared: return "asquared";
    case OpKind::BOp: return "bop";
    case OpKind::GaugedHamiltonian: return "hamiltonian";
  }
  throw std::invalid_argument("OperatorTag: unknown kind");
}

OperatorTag OperatorTag::from_name(std::string_view name, std::optional<MuParam> mu) {
  static constexpr OpKind kinds[] = {
      OpKind::Derivative, OpKind::MulX,     OpKind::Reflection,
      OpKind::Projector,  OpKind::Dunkl,    OpKind::NumberOp,
      OpKind::ASquared,   OpKind::BOp,      OpKind::GaugedHamiltonian,
  };
  for (const OpKind k : kinds) {
    if (OperatorTag::name(k) != name) continue;
    if (requires_mu(k)) {
      if (!mu) throw std::invalid_argument("operator '" + std::string(name) + "' requires --mu");
      return OperatorTag(k, *std::move(mu));
    }
    if (mu) throw std::invalid_argument("operator '" + std::string(name) + "' does not take --mu");
    return OperatorTag(k);
  }
  throw std::invalid_argument("unknown operator '" + std::string(name) + "'");
}

Poly apply(const OperatorTag& tag, const Poly& p) {
  switch (tag.kind()) {
    case OpKind::Derivative: return derivative(p);
    case OpKind::MulX: return Poly::monomial(1) * p;
    case OpKind::Reflection: return reflect(p);
    case OpKind::Projector: return projector(p);
    case OpKind::Dunkl: return dunkl_derivative(*tag.mu(), p);
    case OpKind::NumberOp: return number_op(p);
    case OpKind::ASquared: return a_squared(p);
    case OpKind::BOp: return b_op(p);
    case OpKind::GaugedHamiltonian: return gauged_hamiltonian(*tag.mu(), p);
  }
  throw std::invalid_argument("apply: unknown operator kind");
}

}  // namespace dunkl
