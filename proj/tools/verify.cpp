#include "verify.hpp"

#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "dunkl/algebra.hpp"
#include "dunkl/hermite.hpp"
#include "dunkl/intertwiner.hpp"
#include "dunkl/ops.hpp"
#include "dunkl/quadrature.hpp"

namespace dunkl::cli {

namespace {

void check(VerifyReport& r, bool ok, const std::string& case_id, const std::string& inputs,
           const std::string& expected, const std::string& actual) {
  ++r.cases_run;
  if (!ok) r.failures.push_back({case_id, inputs, expected, actual});
}

void check_poly(VerifyReport& r, const Poly& actual, const Poly& expected,
                const std::string& case_id, const std::string& inputs) {
  check(r, actual == expected, case_id, inputs, expected.str(), actual.str());
}

std::string fmt_mu(const MuParam& mu) { return "mu=" + mu.value().str(); }

void run_lemmas(VerifyReport& r, int max_degree, const std::vector<MuParam>& mus) {
  const unsigned cap = static_cast<unsigned>(max_degree);
  for (unsigned m = 0; m <= cap; ++m)
    for (unsigned k = 0; k <= cap; ++k) {
      const Rational expected = (m == k) ? factorial(m) : Rational(0);
      const Rational actual = lemma1_sum(m, k);
      check(r, actual == expected, "lemma1",
            "m=" + std::to_string(m) + ",k=" + std::to_string(k), expected.str(), actual.str());
    }

  for (const MuParam& mu : mus)
    for (unsigned n = 0; n <= cap; ++n)
      for (unsigned k = 0; k <= n; ++k)
        for (int eps : {0, 1})
          check(r, lemma2_check(n, k, eps, mu), "lemma2",
                "n=" + std::to_string(n) + ",k=" + std::to_string(k) +
                    ",eps=" + std::to_string(eps) + "," + fmt_mu(mu),
                "true", "false");

  for (unsigned n = 0; n <= cap; ++n)
    for (unsigned l = 0; l <= n; ++l)
      for (int eps : {0, 1})
        check(r, lemma3_check(n, l, eps), "lemma3",
              "n=" + std::to_string(n) + ",l=" + std::to_string(l) +
                  ",eps=" + std::to_string(eps),
              "true", "false");

  // Gauss summation over a fixed pole-free parameter sample
  const Rational bs[] = {Rational(1, 2), Rational(7, 3), Rational(-3, 4)};
  const Rational cs[] = {Rational(1, 5), Rational(-5, 2), Rational(9, 2)};
  for (unsigned N = 0; N <= std::min(cap, 20u); ++N)
    for (const Rational& b : bs)
      for (const Rational& c : cs) {
        const Rational expected = pochhammer(c - b, N) / pochhammer(c, N);
        const Rational actual = gauss_2f1_terminating(Rational(-static_cast<long>(N)), b, c);
        check(r, actual == expected, "gauss_2f1",
              "N=" + std::to_string(N) + ",b=" + b.str() + ",c=" + c.str(), expected.str(),
              actual.str());
      }
}

void run_basis(VerifyReport& r, int max_degree) {
  const unsigned size = static_cast<unsigned>(max_degree) / 2 + 1;
  for (int eps : {0, 1}) {
    const BasisMatrix c = c_matrix(size, eps), d = d_matrix(size, eps);
    for (unsigned n = 0; n < size; ++n)
      for (unsigned l = 0; l < size; ++l) {
        Rational sum(0);
        for (unsigned k = 0; k < size; ++k) sum += c.entry(n, k) * d.entry(k, l);
        const Rational expected = (n == l) ? Rational(1) : Rational(0);
        check(r, sum == expected, "basis/CD",
              "eps=" + std::to_string(eps) + ",n=" + std::to_string(n) +
                  ",l=" + std::to_string(l),
              expected.str(), sum.str());
      }
  }
  for (unsigned d = 0; d <= static_cast<unsigned>(max_degree); ++d) {
    const Poly mono = Poly::monomial(d);
    check_poly(r, to_poly(to_hermite(mono)), mono, "basis/roundtrip/monomial",
               "degree=" + std::to_string(d));
    const Poly h = hermite(d);
    check_poly(r, to_poly(to_hermite(h)), h, "basis/roundtrip/hermite",
               "n=" + std::to_string(d));
  }
}

void run_intertwine(VerifyReport& r, int max_degree, const std::vector<MuParam>& mus) {
  const unsigned cap = static_cast<unsigned>(max_degree);
  for (const MuParam& mu : mus) {
    for (unsigned d = 0; d <= cap; ++d) {
      for (const bool hermite_basis : {false, true}) {
        const Poly p = hermite_basis ? hermite(d) : Poly::monomial(d);
        const std::string inputs = fmt_mu(mu) + (hermite_basis ? ",H_" : ",x^") +
                                   std::to_string(d);
        const Poly v = v_mu_monomial(mu, p);
        check_poly(r, v_mu_hermite(mu, p), v, "intertwine/agree/hermite", inputs);
        check_poly(r, v_mu_boson(mu, p), v, "intertwine/agree/boson", inputs);
        check_poly(r, intertwining_residual(mu, p), Poly(), "intertwine/residual", inputs);
      }
      check_poly(r, corollary_residual(mu, d), Poly(), "intertwine/corollary",
                 fmt_mu(mu) + ",n=" + std::to_string(d));
    }
  }
  const MuParam zero{Rational(0)};
  for (unsigned d = 0; d <= cap; ++d)
    for (const bool hermite_basis : {false, true}) {
      const Poly p = hermite_basis ? hermite(d) : Poly::monomial(d);
      const std::string inputs = (hermite_basis ? "H_" : "x^") + std::to_string(d);
      check_poly(r, v_mu_monomial(zero, p), p, "intertwine/mu0/identity", inputs);
      check_poly(r, dunkl_derivative(zero, p), derivative(p), "intertwine/mu0/dunkl", inputs);
    }
}

void run_oscillator(VerifyReport& r, int max_degree, const std::vector<MuParam>& mus) {
  const unsigned cap = static_cast<unsigned>(max_degree);
  for (unsigned n = 0; n <= cap; ++n) {
    const Poly h = hermite(n);
    check_poly(r, number_op(h), scale(Rational(static_cast<long>(n)), h), "oscillator/number",
               "n=" + std::to_string(n));
    if (n >= 2) {
      const unsigned level = n / 2;  // H_n = H_{2*level+eps}
      check_poly(r, b_op(h), scale(Rational(4 * static_cast<long>(level)), hermite(n - 2)),
                 "oscillator/b_lowering", "n=" + std::to_string(n));
    } else {
      check_poly(r, b_op(h), Poly(), "oscillator/b_lowering", "n=" + std::to_string(n));
    }
    // b^{floor(n/2)+1} annihilates H_n
    Poly it = h;
    for (unsigned l = 0; l <= n / 2; ++l) it = b_op(it);
    check_poly(r, it, Poly(), "oscillator/b_nilpotent", "n=" + std::to_string(n));
    check_poly(r, number_op(b_op(h)) + projector(b_op(h)) + b_op(h), a_squared(h),
               "oscillator/inverse_of_b", "n=" + std::to_string(n));
  }
  for (const MuParam& mu : mus)
    for (unsigned n = 0; n <= cap; ++n) {
      const Poly g = generalized_hermite(mu, n);
      const Rational energy = Rational(static_cast<long>(n)) + mu.value() + Rational(1, 2);
      check_poly(r, gauged_hamiltonian(mu, g), scale(energy, g), "oscillator/spectrum",
                 fmt_mu(mu) + ",n=" + std::to_string(n));
    }
}

void run_quadrature(VerifyReport& r, int max_degree, const std::vector<MuParam>& mus) {
  // the tolerance model is pinned only for degree <= 20
  const int cap = std::min(max_degree, 20);
  const double grid[] = {0.0, 0.5, -0.5, 1.0, -1.0};
  for (const MuParam& mu : mus) {
    if (!(mu.value().sign() > 0))
      throw std::invalid_argument("quadrature suite requires mu > 0, got " + mu.value().str());
    const double tol = (mu.value() >= Rational(1, 2)) ? 1e-11 : 1e-10;
    const QuadRule rule = build_rule(mu.value().to_double(), cap / 2 + 2);
    for (int d = 0; d <= cap; ++d)
      for (const bool hermite_basis : {false, true}) {
        const Poly p = hermite_basis ? hermite(static_cast<unsigned>(d))
                                     : Poly::monomial(static_cast<unsigned>(d));
        const Poly exact_poly = v_mu_monomial(mu, p);
        for (const double x0 : grid) {
          double exact = 0;
          for (size_t i = exact_poly.coeffs().size(); i-- > 0;)
            exact = exact * x0 + exact_poly.coeffs()[i].to_double();
          const double quad = v_mu_integral(rule, p, x0);
          const double rel = std::abs(quad - exact) / (1.0 + std::abs(exact));
          std::ostringstream inputs;
          inputs << fmt_mu(mu) << (hermite_basis ? ",H_" : ",x^") << d << ",x0=" << x0;
          std::ostringstream actual;
          actual << rel;
          check(r, rel <= tol, "quadrature/integral_vs_exact", inputs.str(),
                "rel_error <= " + std::to_string(tol), actual.str());
        }
      }
  }
}

}  // namespace

VerifyReport run_verify(const std::string& suite, int max_degree,
                        std::vector<Rational> mu_samples) {
  if (max_degree < 0) throw std::invalid_argument("max-degree must be >= 0");

  std::vector<MuParam> mus;
  if (mu_samples.empty()) {
    mus = certification_mu_samples(max_degree);
  } else {
    for (Rational& m : mu_samples) mus.emplace_back(std::move(m));  // rejects poles
  }

  VerifyReport report;
  report.suite = suite;
  const auto start = std::chrono::steady_clock::now();

  if (suite == "lemmas") {
    run_lemmas(report, max_degree, mus);
  } else if (suite == "basis") {
    run_basis(report, max_degree);
  } else if (suite == "intertwine") {
    run_intertwine(report, max_degree, mus);
  } else if (suite == "oscillator") {
    run_oscillator(report, max_degree, mus);
  } else if (suite == "quadrature") {
    run_quadrature(report, max_degree, mus);
  } else if (suite == "all") {
    run_lemmas(report, max_degree, mus);
    run_basis(report, max_degree);
    run_intertwine(report, max_degree, mus);
    run_oscillator(report, max_degree, mus);
    run_quadrature(report, max_degree, mus);
  } else {
    throw std::invalid_argument("unknown suite '" + suite +
                                "' (expected lemmas|basis|intertwine|oscillator|quadrature|all)");
  }

  report.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace dunkl::cli
