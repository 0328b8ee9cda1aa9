#pragma once

#include <matchlab/poly1.hpp>
#include <matchlab/report.hpp>
#include <matchlab/series.hpp>

#include <vector>

namespace matchlab {

// The weights u_s feeding the idealized matching-count generator: either the
// exact coefficients of the algebraic series T_r, or arbitrary values
// (numeric or symbolic atoms u2, u3, ...).
struct USequence {
  Rational r{1};        // numeric; >= 2 when derived from T_r, else caller's choice
  bool symbolic = false;
  bool from_t_series = false;     // true only for u_sequence() output
  RingPtr ring = scalar_ring();   // atoms used by the values
  std::vector<MultiPoly> u;       // u[s] for 0 <= s <= s_max; u[0] = u[1] = 0

  long s_max() const { return static_cast<long>(u.size()) - 1; }
  bool covers(long s) const { return s <= s_max(); }
};

// u_s(r) = [x^s] T_r with T_r = 2(r-1) / (2(r-1) - r + r*sqrt(1-4x(r-1))).
// Requires r >= 2.
USequence u_sequence(const Rational& r, long s_max);

// Arbitrary mode: u_s as symbolic atoms u2..u<s_max>, r = 1.
USequence u_arbitrary_symbolic(long s_max);

// Arbitrary mode with explicit numeric values for u_2..; r defaults to 1.
USequence u_arbitrary_values(std::vector<Rational> u2_up,
                             const Rational& r = Rational(1));

// Exact residual of the defining relation: after isolating the square root in
// T_r's definition and squaring, the result must equal 1 - 4x(r-1) to
// truncation order. True iff u reproduces that identically.
bool u_satisfies_defining_relation(const Rational& r, const USequence& u);

// M_j = [x^j] exp(n r x - sum_{s>=2} (n u_s / s)(-x)^s): a polynomial in the
// atom "n" of degree j (plus u atoms in symbolic mode). M_0 = 1.
MultiPoly m_big(const USequence& u, long j);

// The coefficients a_0..a_{j-1} with M_j = (n^j r^j / j!)(1 + sum_h a_h/n^h),
// extracted from the literal M_j polynomial. Requires j >= 1 and numeric u.
std::vector<Rational> a_numeric(const USequence& u, long j);
std::vector<Rational> a_numeric(const Rational& r, long j);

// 1 + H_j for every j in [0, j_max] as truncated series in "nu" (= 1/n) over
// u.ring, to the given nu order. Scaled-variable route: independent of m_big.
std::vector<TruncatedSeries> one_plus_h_window(const USequence& u, long j_max,
                                               long nu_order);

// a_h(r, j) as a polynomial in j of degree <= 2h, from the multiset expansion
// of the exponential. Validated against a_numeric on j = h+1 .. 3h+2; a
// mismatch throws ConsistencyError. Numeric u only.
Poly1 a_poly_in_j(const USequence& u, long h);

// Checks, for h = 1..h_max over the window [j_lo, j_hi]:
//   (i)  g_h(j) = [nu^h] log(1 + H_j) is a polynomial in j of degree <= h+1
//        (overdetermined interpolation with exactly-zero residuals), and
//   (ii) in numeric mode, its leading coefficient is (1/((h+1)h))(1/r^h - 2).
// Requires j_lo <= h_max+2 and j_hi >= 3*h_max+3.
Report verify_pernici_identities(const USequence& u, long h_max, long j_lo,
                                 long j_hi);

}  // namespace matchlab
