#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <stdexcept>

#include "dunkl/algebra.hpp"
#include "dunkl/rational.hpp"

using namespace dunkl;

namespace {

std::mt19937 rng(20240617);

Rational random_rational() {
  std::uniform_int_distribution<long> num(-99, 99);
  std::uniform_int_distribution<long> den(1, 20);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("Rational canonical form and arithmetic") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(6, 4).numerator() == 3);
  CHECK(Rational(6, 4).denominator() == 2);
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(-4, 2).str() == "-2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
  CHECK((Rational(2, 3) * Rational(9, 4)) == Rational(3, 2));
  CHECK((Rational(1) / Rational(7, 3)) == Rational(3, 7));
  CHECK(Rational(1, 2) < Rational(2, 3));
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("Rational string round trip") {
  for (const char* s : {"0", "1", "-3", "5/7", "-22/7", "123456789123456789123456789/2"}) {
    CHECK(Rational::from_string(s).str() == s);
  }
  CHECK(Rational::from_string(" 3/4 ") == Rational(3, 4));
  CHECK(Rational::from_string("4/6").str() == "2/3");
  CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("/3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/-3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1 2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("3/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1.5"), std::invalid_argument);
}

TEST_CASE("MuParam rejects poles") {
  CHECK_THROWS_AS(MuParam(Rational(-1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(MuParam(Rational(-3, 2)), std::invalid_argument);
  CHECK_THROWS_AS(MuParam(Rational(-5, 2)), std::invalid_argument);
  CHECK_NOTHROW(MuParam(Rational(1, 2)));
  CHECK_NOTHROW(MuParam(Rational(0)));
  CHECK_NOTHROW(MuParam(Rational(-1)));   // mu+1/2 = -1/2: not a pole
  CHECK_NOTHROW(MuParam(Rational(-1, 4)));
  CHECK(MuParam(Rational(3, 2)).value() == Rational(3, 2));
}

TEST_CASE("pochhammer basic values") {
  CHECK(pochhammer(Rational(1, 2), 0) == Rational(1));
  CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
  CHECK(pochhammer(Rational(-3), 5) == Rational(0));
  CHECK(pochhammer(Rational(-5), 3) == Rational(-60));  // (-5)(-4)(-3)
}

TEST_CASE("pochhammer splitting identity") {
  // (a)_{m+n} = (a)_m (a+m)_n
  std::uniform_int_distribution<unsigned> idx(0, 25);
  for (int rep = 0; rep < 60; ++rep) {
    const Rational a = random_rational();
    const unsigned m = idx(rng), n = idx(rng);
    CHECK(pochhammer(a, m + n) ==
          pochhammer(a, m) * pochhammer(a + Rational(static_cast<long>(m)), n));
  }
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == Rational(1));
  CHECK(factorial(5) == Rational(120));
  CHECK(factorial(10) == Rational(3628800));
}

TEST_CASE("binomial") {
  CHECK(binomial(0, 0) == Rational(1));
  CHECK(binomial(5, 2) == Rational(10));
  CHECK(binomial(4, 5) == Rational(0));
  for (unsigned n = 0; n <= 12; ++n)
    for (unsigned k = 0; k <= n; ++k)
      CHECK(binomial(n, k) == factorial(n) / (factorial(k) * factorial(n - k)));
}

TEST_CASE("lemma1_sum frozen values") {
  CHECK(lemma1_sum(3, 3) == Rational(6));
  CHECK(lemma1_sum(4, 2) == Rational(0));
  CHECK(lemma1_sum(0, 0) == Rational(1));
}

TEST_CASE("lemma1_sum equals m! delta over a grid") {
  for (unsigned m = 0; m <= 25; ++m)
    for (unsigned k = 0; k <= 25; ++k)
      CHECK(lemma1_sum(m, k) == (m == k ? factorial(m) : Rational(0)));
}

TEST_CASE("terminating 2F1 frozen values") {
  CHECK(gauss_2f1_terminating(Rational(0), Rational(7, 3), Rational(1, 5)) == Rational(1));
  // two-term sum: 1 + (-1)(2)/(3) = 1/3
  CHECK(gauss_2f1_terminating(Rational(-1), Rational(2), Rational(3)) == Rational(1, 3));
  CHECK(gauss_2f1_terminating(Rational(-2), Rational(1), Rational(-5, 2)) == Rational(7, 3));
}

TEST_CASE("terminating 2F1 satisfies the Gauss summation formula") {
  // 2F1(-N, b; c; 1) = (c-b)_N / (c)_N
  std::uniform_int_distribution<long> Ns(0, 20);
  for (int rep = 0; rep < 80; ++rep) {
    const long N = Ns(rng);
    const Rational b = random_rational();
    Rational c = random_rational();
    // keep (c)_s nonzero for s < N and (c)_N nonzero so the RHS is defined
    bool pole = false;
    for (long j = 0; j < N; ++j)
      if ((c + Rational(j)).is_zero()) pole = true;
    if (pole) c += Rational(1, 1000003);
    CHECK(gauss_2f1_terminating(Rational(-N), b, c) ==
          pochhammer(c - b, static_cast<unsigned>(N)) / pochhammer(c, static_cast<unsigned>(N)));
  }
}

TEST_CASE("terminating 2F1 argument validation") {
  CHECK_THROWS_AS(gauss_2f1_terminating(Rational(1), Rational(1), Rational(1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(gauss_2f1_terminating(Rational(-1, 2), Rational(1), Rational(1)),
                  std::invalid_argument);
  // c = -1 poles at s = 2 before a = -3 terminates
  CHECK_THROWS_AS(gauss_2f1_terminating(Rational(-3), Rational(1), Rational(-1)),
                  std::invalid_argument);
  // c = -5/2 never hits an integer pole
  CHECK_NOTHROW(gauss_2f1_terminating(Rational(-3), Rational(1), Rational(-5, 2)));
}

TEST_CASE("lemma2_check frozen cases") {
  CHECK(lemma2_check(2, 0, 0, MuParam(Rational(1))));
  CHECK(lemma2_check(3, 1, 1, MuParam(Rational(5, 2))));
  // n = k collapses the sum to its s = 0 term
  CHECK(lemma2_check(4, 4, 0, MuParam(Rational(19, 4))));
  CHECK(lemma2_check(4, 4, 1, MuParam(Rational(1, 7))));
}

TEST_CASE("lemma2_check sweep") {
  const Rational mus[] = {Rational(1, 7), Rational(1, 3), Rational(1, 2), Rational(1),
                          Rational(3, 2), Rational(2),    Rational(19, 4)};
  for (const Rational& m : mus) {
    const MuParam mu(m);
    for (unsigned n = 0; n <= 12; ++n)
      for (unsigned k = 0; k <= n; ++k)
        for (int eps : {0, 1}) CHECK(lemma2_check(n, k, eps, mu));
  }
}

TEST_CASE("lemma3_check frozen cases") {
  CHECK(lemma3_check(5, 0, 0));
  CHECK(lemma3_check(5, 0, 1));
  CHECK(lemma3_check(2, 1, 0));  // LHS 2!(-3/2) = -3 = RHS
  CHECK(lemma3_check(3, 3, 1));
}

TEST_CASE("lemma3_check sweep") {
  for (unsigned n = 0; n <= 20; ++n)
    for (unsigned l = 0; l <= n; ++l)
      for (int eps : {0, 1}) CHECK(lemma3_check(n, l, eps));
}
