#include <doctest.h>

#include <matchlab/combinatorics.hpp>
#include <matchlab/cycle_correction.hpp>

using namespace matchlab;

TEST_SUITE_BEGIN("cycle_correction");

TEST_CASE("epsilon ring construction") {
  EpsilonRing er = EpsilonRing::make(4, 6);
  CHECK(er.ring->names() == std::vector<std::string>{"eps4", "eps5", "eps6"});
  CHECK_THROWS_AS(EpsilonRing::make(2, 6), std::invalid_argument);
  EpsilonRing er3 = EpsilonRing::make(3, 3);
  CHECK(er3.ring->size() == 1);
}

TEST_CASE("shift operator") {
  USequence u = u_sequence(Rational(2), 6);
  std::vector<MultiPoly> seq;
  for (long t = 0; t <= 4; ++t) seq.push_back(m_big(u, t));
  CHECK(xhat_apply(seq, 0, 4) == seq[4]);
  CHECK(xhat_apply(seq, 4, 4).as_rational() == Rational(1));  // M_0
  CHECK(xhat_apply(seq, 5, 4).is_zero());                     // M_{-1} = 0
}

TEST_CASE("corrected m by the literal operator exponential") {
  USequence u = u_sequence(Rational(2), 6);
  EpsilonRing er = EpsilonRing::make(4, 6);

  // No correction reaches below the shortest shift.
  CorrectedM m3 = m_small(u, 3, er);
  CHECK(m3.value == transplant(m_big(u, 3), m3.value.ring()));

  // j = 4: M_4 + (eps4/8) M_0.
  CorrectedM m4 = m_small(u, 4, er);
  MultiPoly diff = m4.value - transplant(m_big(u, 4), m4.value.ring());
  CHECK(diff == MultiPoly::atom(m4.value.ring(), "eps4").scaled(Rational(1, 8)));

  // All eps set to zero recovers M_j.
  for (long j = 0; j <= 6; ++j) {
    CorrectedM mj = m_small(u, j, er);
    MultiPoly zeroed = mj.value;
    for (long s = 4; s <= 6; ++s)
      zeroed = zeroed.substitute("eps" + std::to_string(s), Rational(0));
    CHECK(zeroed == transplant(m_big(u, j), zeroed.ring()));
  }
}

TEST_CASE("scaled route equals the literal route") {
  for (long r : {2L, 3L}) {
    USequence u = u_sequence(Rational(r), 8);
    EpsilonRing er = EpsilonRing::make(4, 7);
    for (long j = 1; j <= 7; ++j) {
      long order = j - 1;
      TruncatedSeries hhat = one_plus_h_hat(u, j, er, order);
      CorrectedM literal = m_small(u, j, er);
      Rational fac = Rational(factorial(j)) * inverse(Rational(r).pow(j));
      for (long h = 0; h <= order; ++h) {
        MultiPoly from_literal =
            literal.value.extract({{"n", static_cast<int>(j - h)}}).scaled(fac);
        CHECK(transplant(from_literal, hhat.ring()) == hhat.coeff(h));
      }
    }
  }
}

TEST_CASE("corrected coefficients") {
  USequence u = u_sequence(Rational(2), 6);
  EpsilonRing er = EpsilonRing::make(4, 5);
  std::vector<MultiPoly> ahat = h_hat_coeffs(u, 4, er, 4);
  CHECK(ahat[0].as_rational() == Rational(1));
  // ahat_1 is the uncorrected value: corrections enter at nu^4 here.
  CHECK(ahat[1].as_rational() == a_numeric(u, 4)[1]);
  // The eps4 monomial at nu^4: (eps4/8) j^(4)/r^4 with j = 4, r = 2.
  MultiPoly eps_part = ahat[4].extract({{"eps4", 1}});
  CHECK(eps_part.as_rational() == Rational(3, 16));

  // Non-bipartite variant: shifts start at 3.
  EpsilonRing er3 = EpsilonRing::make(3, 4);
  std::vector<MultiPoly> ahat3 = h_hat_coeffs(u, 3, er3, 3);
  CHECK(ahat3[3].depends_on("eps3"));
}

TEST_SUITE_END();
