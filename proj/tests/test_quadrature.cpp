#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "dunkl/hermite.hpp"
#include "dunkl/intertwiner.hpp"
#include "dunkl/quadrature.hpp"

using namespace dunkl;

namespace {

double horner(const Poly& p, double x) {
  double acc = 0;
  for (size_t i = p.coeffs().size(); i-- > 0;) acc = acc * x + p.coeffs()[i].to_double();
  return acc;
}

}  // namespace

TEST_CASE("build_rule domain guards") {
  CHECK_THROWS_AS(build_rule(0.0, 4), std::domain_error);
  CHECK_THROWS_AS(build_rule(-1.0, 4), std::domain_error);
  CHECK_THROWS_AS(build_rule(std::nan(""), 4), std::domain_error);
  CHECK_THROWS_AS(build_rule(1.0, 0), std::invalid_argument);
}

TEST_CASE("rule structure across the mu range") {
  for (const double mu : {0.1, 0.25, 0.5, 1.0, 2.5, 7.0, 14.5}) {
    for (const int n : {1, 2, 8, 33}) {
      const QuadRule rule = build_rule(mu, n);
      CHECK(rule.nodes.size() == static_cast<size_t>(n));
      CHECK(rule.weights.size() == static_cast<size_t>(n));
      double total = 0;
      for (size_t i = 0; i < rule.nodes.size(); ++i) {
        CHECK(rule.nodes[i] > -1.0);
        CHECK(rule.nodes[i] < 1.0);
        if (i > 0) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
        CHECK(rule.weights[i] > 0.0);
        total += rule.weights[i];
      }
      CHECK(std::abs(total - 1.0) <= 1e-14);
    }
  }
}

TEST_CASE("one-point rule sits at the measure mean") {
  // the first moment of the normalized measure is 1/(2mu+1)
  for (const double mu : {0.5, 1.0, 3.0}) {
    const QuadRule rule = build_rule(mu, 1);
    CHECK(rule.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rule.nodes[0] == doctest::Approx(1.0 / (2 * mu + 1)).epsilon(1e-14));
  }
}

TEST_CASE("moments match the exact monomial multipliers") {
  // the k-th moment of the measure is the multiplier of x^k: apply the
  // rule to t^k and compare with the exact realization at x0 = 1
  for (const double mu_d : {0.25, 0.5, 1.0, 2.5}) {
    const MuParam mu(Rational::from_string(mu_d == 0.25   ? "1/4"
                                           : mu_d == 0.5  ? "1/2"
                                           : mu_d == 1.0  ? "1"
                                                          : "5/2"));
    const int n = 16;
    const QuadRule rule = build_rule(mu_d, n);
    for (int k = 0; k <= 2 * n - 1; ++k) {
      const Poly xk = Poly::monomial(static_cast<unsigned>(k));
      const double exact = v_mu_monomial(mu, xk).evaluate(Rational(1)).to_double();
      CHECK(v_mu_integral(rule, xk, 1.0) == doctest::Approx(exact).epsilon(1e-12));
    }
  }
}

TEST_CASE("first moment spot value for mu = 1/4") {
  const QuadRule rule = build_rule(0.25, 16);
  CHECK(std::abs(v_mu_integral(rule, Poly::monomial(1), 1.0) - 2.0 / 3.0) < 1e-12);
}

TEST_CASE("odd moments tie to the next even ones") {
  // both x^{2n+1} and x^{2n+2} carry the multiplier index n+1, so the
  // measure's moments pair up: m_{2n+1} = m_{2n+2}
  for (const double mu : {0.25, 1.0, 3.5}) {
    const QuadRule rule = build_rule(mu, 16);
    for (unsigned n = 0; n <= 6; ++n) {
      const double odd = v_mu_integral(rule, Poly::monomial(2 * n + 1), 1.0);
      const double even = v_mu_integral(rule, Poly::monomial(2 * n + 2), 1.0);
      CHECK(odd == doctest::Approx(even).epsilon(1e-13));
    }
  }
}

TEST_CASE("v_mu_integral frozen cases") {
  const QuadRule rule1 = build_rule(1.0, 12);
  CHECK(std::abs(v_mu_integral(rule1, Poly::constant(Rational(1)), 0.37) - 1.0) <= 1e-13);
  CHECK(std::abs(v_mu_integral(rule1, Poly::monomial(2), 1.0) - 1.0 / 3.0) <= 1e-12);

  const QuadRule rule25 = build_rule(2.5, 12);
  const MuParam mu(Rational(5, 2));
  const double exact = horner(v_mu_monomial(mu, hermite(4)), 0.7);
  const double quad = v_mu_integral(rule25, hermite(4), 0.7);
  CHECK(std::abs(quad - exact) <= 1e-11 * std::abs(exact));
}

TEST_CASE("compare_realizations tolerances") {
  const double grid[] = {0.0, 0.5, -0.5, 1.0, -1.0};

  const CompareReport r1 = compare_realizations(MuParam(Rational(1)), 10, grid);
  CHECK(r1.worst.rel_error <= 1e-11);
  CHECK(r1.per_degree.size() == 11);
  CHECK(r1.nodes >= 6);

  const CompareReport r2 = compare_realizations(MuParam(Rational(1, 4)), 20, grid);
  CHECK(r2.worst.rel_error <= 1e-10);

  const CompareReport r0 = compare_realizations(MuParam(Rational(19, 4)), 0, grid);
  CHECK(r0.worst.rel_error <= 1e-13);
}

TEST_CASE("compare_realizations domain guard") {
  const double grid[] = {0.0};
  CHECK_THROWS_AS(compare_realizations(MuParam(Rational(-1, 4)), 4, grid), std::domain_error);
  CHECK_THROWS_AS(compare_realizations(MuParam(Rational(1)), -1, grid), std::invalid_argument);
}

TEST_CASE("insufficient nodes degrade but do not throw") {
  const QuadRule tiny = build_rule(1.0, 1);
  CHECK_NOTHROW(v_mu_integral(tiny, hermite(6), 0.9));
}
