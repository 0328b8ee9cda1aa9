#pragma once

#include <matchlab/cycle_correction.hpp>
#include <matchlab/report.hpp>

#include <map>
#include <optional>

namespace matchlab {

// K_i from the combinatorial normalization: (1 + K_i) reduces to the exact
// product (1 - nu/2)^i / prod_{t=1}^{2i-1} (1 - t nu/2). K_0 = K_1 = 0.
// Computed both directly and through the Stirling-series decomposition
// G_{i,1..5} with c_t = -B_{t+1}/(t(t+1) 2^t); route disagreement throws.
TruncatedSeries one_plus_k_series(long i, long order);

// The two construction routes, exposed for testing.
TruncatedSeries one_plus_k_direct(long i, long order);
TruncatedSeries one_plus_k_decomposed(long i, long order);

// Finite difference of the monomial i^d: sum_l C(k,l)(-1)^(l+k) l^d.
// Zero for d < k, k! for d = k.
Rational delta_binomial_table(long k, long d);

// Shared state for the (i, k) grids at fixed r: caches the uncorrected
// window, corrected series and K factors.
class PositivityContext {
public:
  PositivityContext(const Rational& r, long i_max, long order, long s_min = 4);

  const Rational& r() const { return r_; }
  long order() const { return order_; }
  const RingPtr& ring() const { return ring_; }  // epsilon atoms
  const EpsilonRing& epsilon_ring() const { return er_; }

  // F_i = (1 + Hhat_i)(1 + K_i), constant term 1.
  const TruncatedSeries& f(long i);
  // U_i = F_i - 1.
  TruncatedSeries u_i(long i);
  // ln(F_i).
  const TruncatedSeries& ln_f(long i);

  // t_plus / t_minus: the parity-class sums of log F.
  TruncatedSeries t_series(bool plus, long i, long k);

  // alpha0 = prod_{L+} F^{C(k,l)} - prod_{L-} F^{C(k,l)}; for k = 0 the
  // minus class is empty and contributes nothing.
  TruncatedSeries alpha0_series(long i, long k);

  // Left side of the second identity at exact truncation (inner log summed
  // to m = k-1 as written).
  Rational second_identity_value(long i, long k);

private:
  Rational r_;
  long i_max_;
  long order_;
  EpsilonRing er_;
  RingPtr ring_;
  USequence u_;
  std::vector<TruncatedSeries> base_;  // 1 + H_j window over scalar ring
  std::map<long, TruncatedSeries> f_;
  std::map<long, TruncatedSeries> ln_f_;
};

// [nu^h] ln(F_i) as a polynomial in i: tabulated over [i_lo, i_hi],
// interpolated on h+2 nodes and re-checked on the rest. Coefficients may
// carry epsilon atoms for h >= s_min.
struct LnFCoefficient {
  std::vector<MultiPoly> coeff_in_i;  // dense, lowest degree first
  bool degree_ok = false;             // all extra nodes matched exactly
  bool top_eps_free = false;
  Rational top_coefficient;           // valid when top_eps_free
};
LnFCoefficient ln_f_coefficient(PositivityContext& ctx, long h, long i_lo, long i_hi);

// Report wrappers used by the CLI suites.
Report second_identity_check(const Rational& r, long k, long i);
Report cancellation_check(const Rational& r, long i, long k, long d);

}  // namespace matchlab
