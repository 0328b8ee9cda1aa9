#include <doctest.h>

#include <matchlab/combinatorics.hpp>
#include <matchlab/poly1.hpp>
#include <matchlab/rng.hpp>

#include <functional>

using namespace matchlab;

TEST_SUITE_BEGIN("core");

TEST_CASE("rational canonical form") {
  CHECK(Rational(6, 4) == Rational(3, 2));
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(3, 2).str() == "3/2");
  CHECK(Rational(5, 1).str() == "5");
  CHECK(Rational(3, 2).den() == 2);
  CHECK_THROWS_AS(Rational(Int(1), Int(0)), std::invalid_argument);
  CHECK(Rational::from_string("-14/21") == Rational(-2, 3));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(-1, 2).pow(3) == Rational(-1, 8));
}

TEST_CASE("bernoulli convention and recurrence") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == Rational(-1, 2));
  // Derived from the recurrence sum_{k<=m} C(m+1,k) B_k = 0.
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(3) == Rational(0));
  CHECK(bernoulli(4) == Rational(-1, 30));
  for (long m = 1; m <= 30; ++m) {
    Rational acc;
    for (long k = 0; k <= m; ++k) acc += Rational(binomial(m + 1, k)) * bernoulli(k);
    CHECK(acc.is_zero());
  }
}

TEST_CASE("stirling numbers") {
  CHECK(stirling_first_unsigned(0, 0) == 1);
  CHECK(stirling_first_unsigned(5, 5) == 1);
  // Oracle: expand the rising factorial x(x+1)...(x+n-1) directly.
  for (long n = 0; n <= 12; ++n) {
    Poly1 rising = Poly1::constant("x", Rational(1));
    for (long t = 0; t < n; ++t)
      rising = rising * Poly1("x", {Rational(t), Rational(1)});
    for (long k = 0; k <= n; ++k)
      CHECK(Rational(stirling_first_unsigned(n, k)) == rising.coeff(k));
  }
  CHECK(stirling_first_unsigned(4, 2) == 11);
  CHECK(stirling_first_unsigned(3, 1) == 2);
  CHECK(stirling_first_unsigned(3, 7) == 0);

  // Row sums count all permutations.
  for (long n = 0; n <= 12; ++n) {
    Int total = 0;
    for (long k = 0; k <= n; ++k) total += stirling_first_unsigned(n, k);
    CHECK(total == factorial(n));
  }

  CHECK(stirling_second(3, 2) == 3);
  CHECK(stirling_second(4, 2) == 7);
  CHECK(stirling_second(6, 6) == 1);
  // Oracle: partitions counted by brute-force block assignment with
  // occupancy check.
  for (long n = 1; n <= 7; ++n) {
    std::vector<Int> count(n + 1, Int(0));
    std::vector<long> assign(n, 0);
    // iterate assignments of n elements to blocks 0..n-1 in restricted
    // growth form (block index <= 1 + max of previous)
    std::function<void(long, long)> rec = [&](long e, long used) {
      if (e == n) {
        ++count[used];
        return;
      }
      for (long b = 0; b <= used && b < n; ++b) {
        assign[e] = b;
        rec(e + 1, std::max(used, b + 1));
      }
    };
    rec(0, 0);
    for (long k = 1; k <= n; ++k) CHECK(count[k] == stirling_second(n, k));
  }
}

TEST_CASE("interpolation") {
  using P = std::pair<Rational, Rational>;
  Poly1 c1 = interpolate({P{0, 1}, P{1, 1}});
  CHECK(c1.degree() == 0);
  CHECK(c1.coeff(0) == Rational(1));

  Poly1 sq = interpolate({P{0, 0}, P{1, 1}, P{2, 4}});
  CHECK(sq == Poly1("x", {Rational(0), Rational(0), Rational(1)}));

  Poly1 tri = interpolate({P{1, 0}, P{2, 1}, P{3, 3}});
  CHECK(tri == pw_polynomial(1));

  CHECK_THROWS_AS(interpolate({P{1, 0}, P{1, 1}}), std::invalid_argument);

  // Left inverse of evaluation on distinct nodes (seeded draws).
  SplitMix64 rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Rational> coeffs;
    for (int d = 0; d < 5; ++d) coeffs.push_back(random_bounded_rational(rng));
    Poly1 p("x", coeffs);
    std::vector<P> pts;
    for (long x = -2; x <= 3; ++x) pts.emplace_back(Rational(x), p.eval(Rational(x)));
    CHECK(interpolate(pts) == p);
  }
}

TEST_CASE("pw polynomial") {
  Poly1 p0 = pw_polynomial(0);
  CHECK(p0.degree() == 0);
  CHECK(p0.coeff(0) == Rational(1));

  Poly1 p1 = pw_polynomial(1);  // x(x-1)/2
  CHECK(p1 == Poly1("x", {Rational(0), Rational(-1, 2), Rational(1, 2)}));

  CHECK(pw_polynomial(2).eval(Rational(4)) == Rational(11));

  for (long w = 0; w <= 5; ++w) {
    CHECK(pw_polynomial(w).degree() == (w == 0 ? 0 : 2 * w));
    for (long n = w; n <= 12; ++n)
      CHECK(pw_polynomial(w).eval(Rational(n)) ==
            Rational(stirling_first_unsigned(n, n - w)));
  }
}

TEST_CASE("poly divmod and gcd") {
  Poly1 a("x", {Rational(-1), Rational(0), Rational(1)});  // x^2 - 1
  Poly1 b("x", {Rational(1), Rational(1)});                // x + 1
  auto [q, rem] = divmod(a, b);
  CHECK(rem.is_zero());
  CHECK(q == Poly1("x", {Rational(-1), Rational(1)}));
  CHECK(poly_gcd(a, b) == b);

  Poly1 c("x", {Rational(2), Rational(2)});  // 2x + 2, gcd must be monic
  CHECK(poly_gcd(a, c) == b);
}

TEST_CASE("rational function reduction") {
  Poly1 num("j", {Rational(0), Rational(2), Rational(2)});  // 2j + 2j^2
  Poly1 den("j", {Rational(0), Rational(0), Rational(4)});  // 4j^2
  RationalFunction f(num, den);
  // (2j(1+j)) / (4j^2) = (1+j)/(2j) -> monic den: (1/2 + j/2)/j
  CHECK(f.den() == Poly1("j", {Rational(0), Rational(1)}));
  CHECK(f.num() == Poly1("j", {Rational(1, 2), Rational(1, 2)}));
  CHECK(f.eval(Rational(3)) == Rational(2, 3));

  RationalFunction sum = f - f;
  CHECK(sum.is_zero());
  CHECK(sum.den() == Poly1::constant("j", Rational(1)));

  RationalFunction g = RationalFunction::from_poly(num) / RationalFunction::from_poly(den);
  CHECK(g == f);
}

TEST_SUITE_END();
