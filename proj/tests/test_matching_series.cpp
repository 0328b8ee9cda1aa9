#include <doctest.h>

#include <matchlab/combinatorics.hpp>
#include <matchlab/matching_series.hpp>
#include <matchlab/rng.hpp>

using namespace matchlab;

TEST_SUITE_BEGIN("matching_series");

TEST_CASE("u sequence from the algebraic generator") {
  USequence u2 = u_sequence(Rational(2), 6);
  // r = 2 collapses to 1/sqrt(1-4x): central binomial coefficients.
  CHECK(u2.u[2].as_rational() == Rational(6));
  CHECK(u2.u[3].as_rational() == Rational(20));
  CHECK(u2.u[4].as_rational() == Rational(70));
  CHECK(u2.u[5].as_rational() == Rational(252));

  // u_2(r) = 2r^2 - r.
  for (long r = 2; r <= 5; ++r)
    CHECK(u_sequence(Rational(r), 3).u[2].as_rational() == Rational(2 * r * r - r));
  CHECK(u_sequence(Rational(3), 3).u[2].as_rational() == Rational(15));

  CHECK_THROWS_AS(u_sequence(Rational(1), 4), std::domain_error);
  CHECK_THROWS_AS(u_sequence(Rational(3, 2), 4), std::domain_error);
}

TEST_CASE("u satisfies the defining relation after squaring") {
  for (long r = 2; r <= 5; ++r)
    CHECK(u_satisfies_defining_relation(Rational(r), u_sequence(Rational(r), 10)));
  // Rational degree also works.
  CHECK(u_satisfies_defining_relation(Rational(5, 2), u_sequence(Rational(5, 2), 8)));
  // A corrupted sequence must fail.
  USequence bad = u_sequence(Rational(2), 6);
  bad.u[4] = MultiPoly::constant(bad.ring, Rational(71));
  CHECK_FALSE(u_satisfies_defining_relation(Rational(2), bad));
}

TEST_CASE("m_big matches hand expansion") {
  USequence u = u_sequence(Rational(2), 6);
  CHECK(m_big(u, 0).as_rational() == Rational(1));

  MultiPoly m1 = m_big(u, 1);
  CHECK(m1.extract({{"n", 1}}).as_rational() == Rational(2));  // n*r
  CHECK(m1.degree_in("n") == 1);

  // j = 2, r = 2: n^2 r^2/2 - n u_2/2 = 2n^2 - 3n.
  MultiPoly m2 = m_big(u, 2);
  CHECK(m2.extract({{"n", 2}}).as_rational() == Rational(2));
  CHECK(m2.extract({{"n", 1}}).as_rational() == Rational(-3));
  CHECK(m2.degree_in("n") == 2);

  USequence sym = u_arbitrary_symbolic(4);
  MultiPoly m3 = m_big(sym, 3);
  CHECK(m3.degree_in("n") == 3);
  CHECK(m3.depends_on("u2"));
  CHECK(m3.depends_on("u3"));

  CHECK_THROWS_AS(m_big(u_sequence(Rational(2), 3), 5), std::invalid_argument);
}

TEST_CASE("a coefficients, literal route") {
  std::vector<Rational> a22 = a_numeric(Rational(2), 2);
  REQUIRE(a22.size() == 2);
  CHECK(a22[0] == Rational(1));
  CHECK(a22[1] == Rational(-3, 2));

  // a_1(r, j) = j(j-1)(-1 + 1/(2r)).
  for (long r = 2; r <= 4; ++r)
    for (long j = 2; j <= 7; ++j) {
      std::vector<Rational> a = a_numeric(Rational(r), j);
      CHECK(a[0] == Rational(1));
      CHECK(a[1] == Rational(j * (j - 1)) * (Rational(-1) + Rational(1, 2 * r)));
    }
}

TEST_CASE("scaled window route agrees with the literal route") {
  for (long r : {2L, 3L}) {
    USequence u = u_sequence(Rational(r), 9);
    long j_max = 8;
    std::vector<TruncatedSeries> window = one_plus_h_window(u, j_max, j_max - 1);
    for (long j = 1; j <= j_max; ++j) {
      std::vector<Rational> a = a_numeric(u, j);
      CHECK(window[j].coeff(0).as_rational() == Rational(1));
      for (long h = 1; h < j; ++h)
        CHECK(window[j].coeff(h).as_rational() == a[h]);
      // Above the boundary the series coefficients vanish: a_h = 0, h >= j.
      for (long h = j; h <= j_max - 1; ++h)
        CHECK(window[j].coeff(h).is_zero());
    }
  }
}

TEST_CASE("a polynomial in j") {
  USequence u = u_sequence(Rational(2), 9);
  Poly1 h0 = a_poly_in_j(u, 0);
  CHECK(h0.degree() == 0);
  CHECK(h0.coeff(0) == Rational(1));

  for (long r = 2; r <= 3; ++r) {
    USequence ur = u_sequence(Rational(r), 9);
    Poly1 h1 = a_poly_in_j(ur, 1);
    Poly1 expected = (Poly1("j", {Rational(0), Rational(1)}) *
                      Poly1("j", {Rational(-1), Rational(1)}))
                         .scaled(Rational(-1) + Rational(1, 2 * r));
    CHECK(h1 == expected);
  }

  Poly1 h2 = a_poly_in_j(u, 2);
  CHECK(h2.degree() <= 4);
  CHECK(h2.eval(Rational(3)) == a_numeric(u, 3)[2]);
}

TEST_CASE("log-coefficient identities, numeric") {
  USequence u2 = u_sequence(Rational(2), 4);
  Report rep = verify_pernici_identities(u2, 3, 5, 12);
  CHECK(rep.all_pass());
  bool found = false;
  for (const auto& c : rep.checks)
    if (c.name == "log-leading-coefficient" && c.params.at("h") == "1") {
      CHECK(c.got == "-3/4");
      found = true;
    }
  CHECK(found);

  USequence u3 = u_sequence(Rational(3), 4);
  Report rep3 = verify_pernici_identities(u3, 3, 5, 12);
  CHECK(rep3.all_pass());
  for (const auto& c : rep3.checks)
    if (c.name == "log-leading-coefficient" && c.params.at("h") == "2")
      CHECK(c.got == "-17/54");

  CHECK_THROWS_AS(verify_pernici_identities(u2, 3, 5, 10), std::invalid_argument);
}

TEST_CASE("log identities hold at rational degree too") {
  USequence u = u_sequence(Rational(5, 2), 4);
  CHECK(verify_pernici_identities(u, 3, 5, 12).all_pass());
}

TEST_CASE("degree statement for arbitrary numeric and symbolic u") {
  SplitMix64 rng(31);
  std::vector<Rational> vals;
  for (long s = 2; s <= 4; ++s) vals.push_back(random_bounded_rational(rng));
  Report rep = verify_pernici_identities(u_arbitrary_values(vals), 3, 5, 12);
  // Only degree checks are emitted off the T_r path.
  for (const auto& c : rep.checks) CHECK(c.name == "log-degree-bound");
  CHECK(rep.all_pass());

  Report sym = verify_pernici_identities(u_arbitrary_symbolic(4), 3, 5, 12);
  CHECK(sym.all_pass());
}

TEST_SUITE_END();
