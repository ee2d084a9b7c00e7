// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "translin/rational.hpp"

using namespace translin;

TEST_CASE("construction and canonical form") {
  CHECK(Rational(4, 6) == Rational(2, 3));
  CHECK(Rational(-4, 6).str() == "-2/3");
  CHECK(Rational(4, -6).str() == "-2/3");  // denominator normalized positive
  CHECK(Rational("27/9") == Rational(3));
  CHECK(Rational::from_decimal_string("2.7") == Rational(27, 10));
  CHECK(Rational::from_decimal_string("-0.125") == Rational(-1, 8));
  CHECK(Rational("2.8") == Rational(14, 5));
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("canonical-form closure under arithmetic") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-500, 500);
  std::uniform_int_distribution<long> den(1, 500);
  for (int i = 0; i < 2000; ++i) {
    Rational a(num(rng), den(rng));
    Rational b(num(rng), den(rng));
    for (const Rational& r : {a + b, a - b, a * b}) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
      CHECK(g == 1);
      CHECK(r.denominator() > 0);
    }
    if (!b.is_zero()) {
      Rational q = a / b;
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), q.numerator().get_mpz_t(), q.denominator().get_mpz_t());
      CHECK(g == 1);
      CHECK(q.denominator() > 0);
    }
  }
}

TEST_CASE("floor ceil trunc") {
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(7, 2).ceil() == 4);
  CHECK(Rational(7, 2).trunc() == 3);
  CHECK(Rational(-7, 2).floor() == -4);
  CHECK(Rational(-7, 2).ceil() == -3);
  CHECK(Rational(-7, 2).trunc() == -3);
  CHECK(Rational(1485, 710).trunc() == 2);
}

TEST_CASE("pow and factorial") {
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(-2).pow(4) == Rational(16));
  CHECK(Rational(5).pow(0) == Rational(1));
  CHECK(factorial(0) == Rational(1));
  CHECK(factorial(6) == Rational(720));
}

namespace {
// Independent oracle: exhaustive scan over all denominators <= bound.
Rational best_by_scan(const Rational& q, long bound) {
  Rational best(0);
  Rational best_err = (q - best).abs();
  for (long d = 1; d <= bound; ++d) {
    // Nearest numerators for denominator d.
    Rational scaled = q * Rational(d);
    mpz_class fl = scaled.floor();
    mpz_class fl1 = fl + 1;
    for (const mpz_class& n : {fl, fl1}) {
      Rational cand(mpq_class(n, mpz_class(d)));
      Rational err = (q - cand).abs();
      if (err < best_err) {
        best = cand;
        best_err = err;
      }
    }
  }
  return best;
}
}  // namespace

TEST_CASE("cf_approx examples") {
  CHECK(cf_approx(Rational(7), 10) == Rational(7));
  CHECK(cf_approx(Rational(355, 113), 113) == Rational(355, 113));

  // Expected value computed with the exhaustive oracle, then frozen.
  Rational q("14142135/10000000");
  Rational scan = best_by_scan(q, 50);
  Rational got = cf_approx(q, 50);
  CHECK((got - q).abs() == (scan - q).abs());
  CHECK(got == Rational(41, 29));
}

TEST_CASE("cf_approx optimality against exhaustive scan") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<long> num(-100000, 100000);
  std::uniform_int_distribution<long> den(1, 100000);
  std::uniform_int_distribution<long> bound(1, 200);
  for (int i = 0; i < 300; ++i) {
    Rational q(num(rng), den(rng));
    long d = bound(rng);
    Rational got = cf_approx(q, d);
    CHECK(got.denominator() <= d);
    Rational scan = best_by_scan(q, d);
    CHECK((got - q).abs() == (scan - q).abs());
  }
}
