#pragma once

#include <span>
#include <vector>

#include "dunkl/poly.hpp"
#include "dunkl/rational.hpp"

namespace dunkl {

/// Coefficient vector in the Hermite basis {H_0, H_1, ...}; coeffs()[m]
/// is the coefficient of H_m. Trailing zeros trimmed, like Poly.
class HermiteVector {
 public:
  HermiteVector() = default;
  explicit HermiteVector(std::vector<Rational> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  /// Index of the highest Hermite component (-1 when zero).
  int top_index() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  Rational coeff(unsigned m) const;
  void set_coeff(unsigned m, Rational c);

  friend bool operator==(const HermiteVector& a, const HermiteVector& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

enum class BasisMatrixKind { C, D };

/// Lower-triangular change-of-basis matrix for one parity sector.
/// Kind C holds the monomial coefficients of the Hermite polynomials:
///   H_{2n+eps} = sum_k C_{nk} x^{2k+eps},
///   C_{nk} = (-1)^{n-k} 2^{2k+eps} (2n+eps)! / ((2k+eps)! (n-k)!).
/// Kind D holds the inverse expansion of monomials in Hermite polynomials:
///   x^{2k+eps} = sum_l D_{kl} H_{2l+eps},
///   D_{kl} = (2k+eps)! / (2^{2k+eps} (2l+eps)! (k-l)!).
/// C and D of matching eps and size are exact mutual inverses.
class BasisMatrix {
 public:
  BasisMatrix(BasisMatrixKind kind, int eps, unsigned size);

  BasisMatrixKind kind() const { return kind_; }
  int eps() const { return eps_; }
  unsigned size() const { return size_; }
  /// Entry at (row, col); zero above the diagonal.
  Rational entry(unsigned row, unsigned col) const;

 private:
  BasisMatrixKind kind_;
  int eps_;
  unsigned size_;
  std::vector<Rational> tri_;  // packed lower triangle, row-major
};

BasisMatrix c_matrix(unsigned size, int eps);
BasisMatrix d_matrix(unsigned size, int eps);

/// Hermite polynomial H_n, leading coefficient 2^n.
Poly hermite(unsigned n);

/// Laguerre polynomial L_n^alpha in a formal variable:
///   L_n^alpha(y) = ((alpha+1)_n / n!) sum_k (-n)_k / ((alpha+1)_k) y^k / k!.
/// Throws std::invalid_argument when alpha is in {-1, ..., -n} (a
/// (alpha+1)_k denominator would vanish).
Poly laguerre(unsigned n, const Rational& alpha);

/// Generalized Hermite polynomial, n = 2m + eps:
///   H^mu_{2m+eps}(x) = (-1)^m (2m+eps)!/(mu+1/2)_{m+eps} x^eps L_m^{mu-1/2+eps}(x^2).
/// Reduces to hermite(n) at mu = 0.
Poly generalized_hermite(const MuParam& mu, unsigned n);

/// Exact change of basis, mutually inverse with to_poly.
HermiteVector to_hermite(const Poly& p);
Poly to_poly(const HermiteVector& h);

}  // namespace dunkl
