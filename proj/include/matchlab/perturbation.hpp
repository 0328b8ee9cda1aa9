#pragma once

#include <matchlab/matching_series.hpp>
#include <matchlab/report.hpp>

#include <map>

namespace matchlab {

// Falling-factorial perturbation of the coefficient series: each term adds
// c * j(j-1)...(j-z+1) / (n r)^z times the shifted base series.
struct Perturbation {
  struct Term {
    long z;
    Rational c;
  };
  std::vector<Term> terms;

  long z_min() const;  // minimum z; LONG_MAX when empty
};

// F as a series in nu with polynomial-in-j coefficients (ring {"j"}):
// F = sum_s a'_s(j) nu^s + sum_t c_t j^(z_t) (nu/r)^(z_t) sum_s a'_s(j-z_t) nu^s.
// The a'_s come from a_poly_in_j over the given u.
TruncatedSeries build_perturbed_f(const USequence& u, const Perturbation& pert,
                                  long s_max);

// Compensating shifts: rational functions xx_s of j, s = 2..s_max, such that
// feeding u_s + xx_s back through the coefficient map reproduces F order by
// order. Solved triangularly: matching [nu^(s-1)] determines xx_s, whose
// multiplier is the falling factorial -(-1)^s j^(s)/(s r^s). The solution is
// back-substituted through every order as a self-check.
struct XXSolution {
  Rational r{1};
  Perturbation pert;
  std::map<long, RationalFunction> xx;  // per s
};
XXSolution solve_xx(const USequence& u, const Perturbation& pert, long s_max);

// Bounded u' values for the solver when no base sequence is prescribed:
// seeded rationals with numerators/denominators below 100.
USequence solver_default_u(long s_max, std::uint64_t seed);

// A shift with the perturbation magnitudes kept symbolic: numerator a
// polynomial in j and the atoms c<z>, denominator a monic polynomial in j
// alone. Numeric instantiations follow by substituting the c atoms.
struct SymbolicShift {
  MultiPoly num;
  Poly1 den{"j", {Rational(1)}};

  bool is_zero() const { return num.is_zero(); }
  long degree_in_j() const { return num.degree_in("j"); }
  std::string str() const;
};

// solve_xx with one atom per distinct z; zs lists the falling-factorial
// orders of the perturbation.
std::map<long, SymbolicShift> solve_xx_symbolic(const USequence& u,
                                                const std::vector<long>& zs,
                                                long s_max);

// For z_min >= 4 asserts deg(num) < deg(den) on every solved shift (the
// O(1/j) property); for z_min < 4 the degrees are recorded, not asserted.
Report verify_degree_property(const XXSolution& sol, long z_min);

// The log-coefficient identities applied to the perturbed F over a numeric-j
// window, same interpolation/overdetermination scheme as the unperturbed
// verification. All z must be >= 4.
Report verify_perturbed_log_identities(const Rational& r, const Perturbation& pert, long h_max,
                         long j_lo, long j_hi);

}  // namespace matchlab
