#pragma once

#include <span>
#include <vector>

#include "dunkl/poly.hpp"
#include "dunkl/rational.hpp"

namespace dunkl {

/// Gauss-Jacobi rule for the normalized measure
/// c_mu (1-t)^{mu-1} (1+t)^mu dt on (-1, 1), total mass 1. Nodes are
/// strictly increasing and strictly interior; weights are positive and
/// sum to 1 (the rescaling implements the c_mu normalization without
/// evaluating Gamma).
struct QuadRule {
  double mu = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Golub-Welsch construction from the symmetric tridiagonal matrix of
/// the Jacobi-polynomial recurrence with parameters (mu-1, mu).
/// Throws std::domain_error for mu <= 0 (the weight is not integrable),
/// std::invalid_argument for n_nodes < 1, and std::runtime_error if the
/// eigensolver fails to converge.
QuadRule build_rule(double mu, int n_nodes);

/// Quadrature evaluation of (V_mu p)(x0): sum_i w_i p(x0 t_i). Exact up
/// to rounding when the rule has at least ceil((deg p + 1)/2) nodes;
/// fewer nodes degrade accuracy but are not an error.
double v_mu_integral(const QuadRule& rule, const Poly& p, double x0);

struct CompareCase {
  int degree = 0;
  bool hermite_basis = false;
  double x0 = 0;
  double rel_error = 0;  // |integral - exact| / (1 + |exact|)
};

struct DegreeErrors {
  int degree = 0;
  double monomial = 0;
  double hermite = 0;
};

struct CompareReport {
  double mu = 0;
  int degree_cap = 0;
  int nodes = 0;
  std::vector<double> grid;
  CompareCase worst;
  std::vector<DegreeErrors> per_degree;
};

/// Sweeps every monomial and Hermite basis element of degree <= degree_cap
/// over the grid, comparing the quadrature realization against the exact
/// monomial realization. mu must be admissible and > 0.
CompareReport compare_realizations(const MuParam& mu, int degree_cap,
                                   std::span<const double> grid);

}  // namespace dunkl
