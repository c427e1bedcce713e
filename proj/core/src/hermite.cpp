#include "dunkl/hermite.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "dunkl/algebra.hpp"

namespace dunkl {

namespace {

Rational pow2(unsigned e) {
  Rational r(1);
  for (unsigned i = 0; i < e; ++i) r *= Rational(2);
  return r;
}

// Memoized matrix lookup; entries are immutable and std::map nodes are
// stable, so returned references stay valid. Cached and uncached builds
// are identical by construction (same constructor).
const BasisMatrix& cached_matrix(BasisMatrixKind kind, int eps, unsigned size) {
  static std::mutex mutex;
  static std::map<unsigned long, BasisMatrix> cache;
  const unsigned long key = (static_cast<unsigned long>(size) << 2) |
                            (static_cast<unsigned long>(eps) << 1) |
                            (kind == BasisMatrixKind::D ? 1u : 0u);
  std::scoped_lock lock(mutex);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, BasisMatrix(kind, eps, size)).first;
  return it->second;
}

}  // namespace

HermiteVector::HermiteVector(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void HermiteVector::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational HermiteVector::coeff(unsigned m) const {
  return m < coeffs_.size() ? coeffs_[m] : Rational(0);
}

void HermiteVector::set_coeff(unsigned m, Rational c) {
  if (m >= coeffs_.size()) {
    if (c.is_zero()) return;
    coeffs_.resize(m + 1);
  }
  coeffs_[m] = std::move(c);
  trim();
}

BasisMatrix::BasisMatrix(BasisMatrixKind kind, int eps, unsigned size)
    : kind_(kind), eps_(eps), size_(size) {
  if (eps != 0 && eps != 1) throw std::invalid_argument("BasisMatrix: eps must be 0 or 1");
  if (size == 0) throw std::invalid_argument("BasisMatrix: size must be positive");
  const unsigned e = static_cast<unsigned>(eps);
  tri_.assign(size * (size + 1) / 2, Rational(0));
  // Fill each row from the diagonal down with the exact ratio between
  // neighbouring entries; equivalent to the closed factorial forms.
  //   C_{r,r} = 2^{2r+e},  C_{r,c-1}/C_{r,c} = -(2c+e)(2c+e-1)/(4(r-c+1))
  //   D_{r,r} = 2^{-(2r+e)},  D_{r,c-1}/D_{r,c} = (2c+e)(2c+e-1)/(r-c+1)
  for (unsigned r = 0; r < size; ++r) {
    Rational* row = tri_.data() + r * (r + 1) / 2;
    const Rational diag = pow2(2 * r + e);
    row[r] = (kind == BasisMatrixKind::C) ? diag : Rational(1) / diag;
    for (unsigned c = r; c > 0; --c) {
      const long two_c_e = 2 * static_cast<long>(c) + e;
      const Rational step = Rational(two_c_e * (two_c_e - 1)) / Rational(static_cast<long>(r - c + 1));
      row[c - 1] = (kind == BasisMatrixKind::C) ? row[c] * step / Rational(-4) : row[c] * step;
    }
  }
}

Rational BasisMatrix::entry(unsigned row, unsigned col) const {
  if (row >= size_ || col >= size_) throw std::out_of_range("BasisMatrix::entry");
  if (col > row) return Rational(0);
  return tri_[row * (row + 1) / 2 + col];
}

BasisMatrix c_matrix(unsigned size, int eps) {
  if (eps != 0 && eps != 1) throw std::invalid_argument("c_matrix: eps must be 0 or 1");
  if (size == 0) throw std::invalid_argument("c_matrix: size must be positive");
  return cached_matrix(BasisMatrixKind::C, eps, size);
}

BasisMatrix d_matrix(unsigned size, int eps) {
  if (eps != 0 && eps != 1) throw std::invalid_argument("d_matrix: eps must be 0 or 1");
  if (size == 0) throw std::invalid_argument("d_matrix: size must be positive");
  return cached_matrix(BasisMatrixKind::D, eps, size);
}

Poly hermite(unsigned n) {
  const unsigned m = n / 2;
  const unsigned eps = n % 2;
  const BasisMatrix& c = cached_matrix(BasisMatrixKind::C, static_cast<int>(eps), m + 1);
  std::vector<Rational> v(n + 1);
  for (unsigned k = 0; k <= m; ++k) v[2 * k + eps] = c.entry(m, k);
  return Poly(std::move(v));
}

Poly laguerre(unsigned n, const Rational& alpha) {
  if (alpha.is_integer() && alpha.sign() < 0 && -alpha.to_long() <= static_cast<long>(n))
    throw std::invalid_argument("laguerre: alpha = " + alpha.str() +
                                " makes (alpha+1)_k vanish for k <= n");
  const Rational a1 = alpha + Rational(1);
  const Rational pref = pochhammer(a1, n) / factorial(n);
  std::vector<Rational> v(n + 1);
  Rational term(1);  // (-n)_k / ((alpha+1)_k k!) running product
  v[0] = pref;
  for (unsigned k = 1; k <= n; ++k) {
    term *= Rational(-(static_cast<long>(n) - static_cast<long>(k) + 1)) /
            ((a1 + Rational(static_cast<long>(k) - 1)) * Rational(static_cast<long>(k)));
    v[k] = pref * term;
  }
  return Poly(std::move(v));
}

Poly generalized_hermite(const MuParam& mu, unsigned n) {
  const unsigned m = n / 2;
  const unsigned eps = n % 2;
  const Rational half(1, 2);
  const Poly lag = laguerre(m, mu.value() - half + Rational(static_cast<long>(eps)));

  const Rational sign = (m % 2 == 0) ? Rational(1) : Rational(-1);
  const Rational pref = sign * factorial(2 * m + eps) / pochhammer(mu.value() + half, m + eps);

  // x^eps L_m(x^2), spread onto degrees 2k + eps
  std::vector<Rational> v(n + 1);
  for (unsigned k = 0; k <= m; ++k) v[2 * k + eps] = pref * lag.coeff(k);
  return Poly(std::move(v));
}

HermiteVector to_hermite(const Poly& p) {
  if (p.is_zero()) return HermiteVector();
  std::vector<Rational> h(p.coeffs().size());
  const unsigned deg = static_cast<unsigned>(p.degree());
  for (const unsigned eps : {0u, 1u}) {
    if (deg + 1 <= eps) continue;
    const unsigned size = (deg - eps) / 2 + 1;
    const BasisMatrix& d = cached_matrix(BasisMatrixKind::D, static_cast<int>(eps), size);
    for (unsigned k = 0; k < size; ++k) {
      const Rational c = p.coeff(2 * k + eps);
      if (c.is_zero()) continue;
      for (unsigned l = 0; l <= k; ++l) h[2 * l + eps] += c * d.entry(k, l);
    }
  }
  return HermiteVector(std::move(h));
}

Poly to_poly(const HermiteVector& h) {
  if (h.is_zero()) return Poly();
  std::vector<Rational> v(h.coeffs().size());
  const unsigned top = static_cast<unsigned>(h.top_index());
  for (const unsigned eps : {0u, 1u}) {
    if (top + 1 <= eps) continue;
    const unsigned size = (top - eps) / 2 + 1;
    const BasisMatrix& c = cached_matrix(BasisMatrixKind::C, static_cast<int>(eps), size);
    for (unsigned n = 0; n < size; ++n) {
      const Rational hc = h.coeff(2 * n + eps);
      if (hc.is_zero()) continue;
      for (unsigned k = 0; k <= n; ++k) v[2 * k + eps] += hc * c.entry(n, k);
    }
  }
  return Poly(std::move(v));
}

}  // namespace dunkl
