#include "dunkl/quadrature.hpp"

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

#include "dunkl/hermite.hpp"
#include "dunkl/intertwiner.hpp"

namespace dunkl {

namespace {

std::vector<double> double_coeffs(const Poly& p) {
  std::vector<double> c;
  c.reserve(p.coeffs().size());
  for (const Rational& r : p.coeffs()) c.push_back(r.to_double());
  return c;
}

double horner(std::span<const double> c, double x) {
  double acc = 0;
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

}  // namespace

QuadRule build_rule(double mu, int n_nodes) {
  if (!(mu > 0))
    throw std::domain_error("build_rule: mu must be > 0 for an integrable weight");
  if (n_nodes < 1) throw std::invalid_argument("build_rule: n_nodes must be >= 1");

  const double alpha = mu - 1, beta = mu;
  const int n = n_nodes;

  // Three-term recurrence of the monic Jacobi polynomials for (alpha, beta).
  Eigen::VectorXd diag(n), sub(std::max(n - 1, 0));
  diag[0] = (beta - alpha) / (alpha + beta + 2);
  for (int k = 1; k < n; ++k) {
    const double ab = 2.0 * k + alpha + beta;
    diag[k] = (beta * beta - alpha * alpha) / (ab * (ab + 2));
    sub[k - 1] = std::sqrt(4.0 * k * (k + alpha) * (k + beta) * (k + alpha + beta) /
                           (ab * ab * (ab + 1) * (ab - 1)));
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("build_rule: tridiagonal eigensolver did not converge");

  QuadRule rule;
  rule.mu = mu;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  double total = 0;
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = es.eigenvalues()[i];
    const double v = es.eigenvectors()(0, i);
    rule.weights[i] = v * v;
    total += rule.weights[i];
  }
  // The squared first components already sum to 1; the explicit rescale
  // pins the unit-mass invariant against eigenvector rounding.
  for (double& w : rule.weights) w /= total;

  for (int i = 0; i < n; ++i) {
    if (!(rule.nodes[i] > -1.0 && rule.nodes[i] < 1.0))
      throw std::runtime_error("build_rule: node escaped (-1, 1)");
    if (i > 0 && !(rule.nodes[i] > rule.nodes[i - 1]))
      throw std::runtime_error("build_rule: nodes not strictly increasing");
    if (!(rule.weights[i] > 0)) throw std::runtime_error("build_rule: nonpositive weight");
  }
  return rule;
}

double v_mu_integral(const QuadRule& rule, const Poly& p, double x0) {
  const std::vector<double> c = double_coeffs(p);
  double acc = 0;
  for (size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * horner(c, x0 * rule.nodes[i]);
  return acc;
}

CompareReport compare_realizations(const MuParam& mu, int degree_cap,
                                   std::span<const double> grid) {
  if (degree_cap < 0) throw std::invalid_argument("compare_realizations: negative degree cap");
  const double mu_d = mu.value().to_double();
  if (!(mu_d > 0))
    throw std::domain_error("compare_realizations: mu must be > 0 for the integral realization");

  CompareReport report;
  report.mu = mu_d;
  report.degree_cap = degree_cap;
  report.nodes = degree_cap / 2 + 2;  // >= ceil((cap+1)/2): exact on the sweep
  report.grid.assign(grid.begin(), grid.end());

  const QuadRule rule = build_rule(mu_d, report.nodes);

  for (int d = 0; d <= degree_cap; ++d) {
    DegreeErrors row;
    row.degree = d;
    for (const bool hermite_basis : {false, true}) {
      const Poly p = hermite_basis ? hermite(static_cast<unsigned>(d))
                                   : Poly::monomial(static_cast<unsigned>(d));
      const std::vector<double> exact_coeffs = double_coeffs(v_mu_monomial(mu, p));
      double worst_here = 0;
      for (const double x0 : grid) {
        const double exact = horner(exact_coeffs, x0);
        const double quad = v_mu_integral(rule, p, x0);
        const double rel = std::abs(quad - exact) / (1.0 + std::abs(exact));
        worst_here = std::max(worst_here, rel);
        if (rel > report.worst.rel_error)
          report.worst = CompareCase{d, hermite_basis, x0, rel};
      }
      (hermite_basis ? row.hermite : row.monomial) = worst_here;
    }
    report.per_degree.push_back(row);
  }
  return report;
}

}  // namespace dunkl
