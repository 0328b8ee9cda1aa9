#include <doctest.h>

#include <matchlab/combinatorics.hpp>
#include <matchlab/positivity.hpp>

using namespace matchlab;

TEST_SUITE_BEGIN("positivity");

TEST_CASE("normalization series K") {
  // K_0 = K_1 = 0 exactly.
  for (long i : {0L, 1L}) {
    TruncatedSeries k = one_plus_k_series(i, 6);
    CHECK(k == TruncatedSeries::constant("nu", 6, scalar_ring(), Rational(1)));
  }
  // First order is i(i-1); frozen second-order value at i = 2 is 7/2.
  for (long i = 0; i <= 12; ++i)
    CHECK(one_plus_k_series(i, 4).coeff(1).as_rational() == Rational(i * (i - 1)));
  CHECK(one_plus_k_series(2, 4).coeff(2).as_rational() == Rational(7, 2));

  // The two construction routes agree coefficient by coefficient.
  for (long i = 0; i <= 15; ++i)
    CHECK(one_plus_k_direct(i, 10) == one_plus_k_decomposed(i, 10));
}

TEST_CASE("finite difference of monomials") {
  CHECK(delta_binomial_table(3, 2) == Rational(0));
  CHECK(delta_binomial_table(3, 3) == Rational(6));
  CHECK(delta_binomial_table(0, 0) == Rational(1));
  for (long k = 0; k <= 6; ++k) {
    for (long d = 0; d < k; ++d) CHECK(delta_binomial_table(k, d).is_zero());
    CHECK(delta_binomial_table(k, k) == Rational(factorial(k)));
  }
}

TEST_CASE("second identity values") {
  PositivityContext ctx2(Rational(2), 12, 6);
  CHECK(ctx2.second_identity_value(0, 2) == Rational(1, 2));
  for (long i : {0L, 1L, 2L})
    CHECK(ctx2.second_identity_value(i, 3) == Rational(1, 4));
  PositivityContext ctx3(Rational(3), 8, 6);
  CHECK(ctx3.second_identity_value(1, 4) == Rational(2, 27));

  // i-independence across a window.
  for (long i = 0; i <= 6; ++i)
    CHECK(ctx2.second_identity_value(i, 4) == Rational(2, 8));
}

TEST_CASE("log F coefficient as a polynomial in i") {
  Rational r(2);
  PositivityContext ctx(r, 12, 6);
  LnFCoefficient lf = ln_f_coefficient(ctx, 2, 0, 7);
  CHECK(lf.degree_ok);
  CHECK(lf.top_eps_free);
  CHECK(lf.top_coefficient == Rational(1, 6) * inverse(r * r));

  // The printed k = 3 polynomial:
  // -(1/12) s (3r^2 s - 3r^2 - 12 r s - 2 s^2 + 12 r + 9 s - 7) / r^2.
  Poly1 q("s", {Rational(-3) * r * r + Rational(12) * r - Rational(7),
                Rational(3) * r * r - Rational(12) * r + Rational(9), Rational(-2)});
  Poly1 expected =
      (Poly1("s", {Rational(0), Rational(1)}) * q).scaled(Rational(-1, 12) / (r * r));
  REQUIRE(static_cast<long>(lf.coeff_in_i.size()) == expected.degree() + 1);
  for (long d = 0; d <= expected.degree(); ++d)
    CHECK(lf.coeff_in_i[d].as_rational() == expected.coeff(d));
  CHECK(expected.eval(Rational(1)).is_zero());

  // Higher h: degree h+1, top (h-1)!/((h+1)! r^h), still eps-free on top.
  for (long h = 3; h <= 4; ++h) {
    LnFCoefficient l = ln_f_coefficient(ctx, h, 0, h + 5);
    CHECK(l.degree_ok);
    CHECK(l.top_eps_free);
    CHECK(l.top_coefficient ==
          Rational(factorial(h - 1)) / Rational(factorial(h + 1)) * inverse(r.pow(h)));
  }
  // At h >= 4 the lower coefficients do carry the correction atoms.
  LnFCoefficient l4 = ln_f_coefficient(ctx, 4, 0, 9);
  bool some_eps = false;
  for (const auto& c : l4.coeff_in_i) some_eps = some_eps || !c.is_constant();
  CHECK(some_eps);
}

TEST_CASE("parity-class log sums") {
  PositivityContext ctx(Rational(2), 10, 5);
  // k = 1: the plus class is {1}, the minus class is {0}.
  TruncatedSeries tp = ctx.t_series(true, 3, 1);
  TruncatedSeries tm = ctx.t_series(false, 3, 1);
  CHECK(tp == ctx.ln_f(4));
  CHECK(tm == ctx.ln_f(3));

  for (long k = 2; k <= 4; ++k) {
    TruncatedSeries p = ctx.t_series(true, 1, k);
    TruncatedSeries m = ctx.t_series(false, 1, k);
    for (long s = 0; s < k - 1; ++s) CHECK(p.coeff(s) == m.coeff(s));
    MultiPoly tip = p.coeff(k - 1) - m.coeff(k - 1);
    CHECK(tip.as_rational() == Rational(factorial(k - 2)) * Rational(1, 2).pow(k - 1));
  }
}

TEST_CASE("alpha0 expansions") {
  PositivityContext ctx(Rational(2), 12, 6);
  // k = 0: the minus class is empty; the series is F itself.
  for (long i : {0L, 4L, 7L}) {
    TruncatedSeries a0 = ctx.alpha0_series(i, 0);
    CHECK(a0.coeff(0).as_rational() == Rational(1));
  }
  // k = 1: alpha0 = F_{i+1} - F_i = i/(rn) + O(1/n^2).
  for (long i = 0; i <= 10; ++i) {
    TruncatedSeries a0 = ctx.alpha0_series(i, 1);
    CHECK(a0.coeff(0).is_zero());
    CHECK(a0.coeff(1).as_rational() == Rational(i, 2));
  }
  // k >= 2: orders below k-1 vanish; the k-1 coefficient is (k-2)!/r^(k-1),
  // free of correction atoms.
  for (long k = 2; k <= 4; ++k) {
    TruncatedSeries a0 = ctx.alpha0_series(2, k);
    for (long d = 0; d < k - 1; ++d) CHECK(a0.coeff(d).is_zero());
    CHECK(a0.coeff(k - 1).is_constant());
    CHECK(a0.coeff(k - 1).as_rational() ==
          Rational(factorial(k - 2)) * Rational(1, 2).pow(k - 1));
  }
}

TEST_CASE("quadratic cancellation") {
  CHECK(cancellation_check(Rational(2), 0, 3, 2).all_pass());
  CHECK(cancellation_check(Rational(3), 1, 4, 3).all_pass());
  CHECK(cancellation_check(Rational(2), 0, 2, 1).all_pass());  // vacuous ranges
  CHECK_THROWS_AS(cancellation_check(Rational(2), 0, 3, 3), std::invalid_argument);
}

TEST_CASE("report wrappers") {
  Report rep = second_identity_check(Rational(2), 3, 1);
  CHECK(rep.all_pass());
  CHECK(rep.checks.size() == 1);
  CHECK(rep.checks[0].got == "1/4");
}

TEST_SUITE_END();
