#pragma once

#include <matchlab/matching_series.hpp>

namespace matchlab {

// Atoms eps<s_min>..eps<s_max> carrying the cycle corrections. s_min is 4
// for bipartite graphs, 3 otherwise.
struct EpsilonRing {
  long s_min = 4;
  long s_max = 4;
  RingPtr ring = scalar_ring();

  static EpsilonRing make(long s_min, long s_max);
  MultiPoly eps(long s) const;  // the atom eps<s>
};

// The shift operator on an M-sequence: seq[j - power], zero below index 0.
MultiPoly xhat_apply(const std::vector<MultiPoly>& m_seq, long power, long j);

// m_j with cycle corrections applied: exp(sum_{s>=s_min} eps_s/(2s) (-xhat)^s)
// acting on M_j, expanded exactly (the operator is nilpotent on each M_j).
// Lives in the ring {n, eps...}.
struct CorrectedM {
  long j = 0;
  MultiPoly value;
};
CorrectedM m_small(const USequence& u, long j, const EpsilonRing& er);

// 1 + Hhat_j as a nu-series over the epsilon ring, via shifted copies of the
// uncorrected series: independent of the literal m_small route.
TruncatedSeries one_plus_h_hat(const USequence& u, long j, const EpsilonRing& er,
                               long nu_order);

// The corrected coefficients ahat_0..ahat_{nu_order}: ahat_h = [nu^h] of the
// series above (epsilon atoms treated as exact symbols).
std::vector<MultiPoly> h_hat_coeffs(const USequence& u, long j,
                                    const EpsilonRing& er, long nu_order);

}  // namespace matchlab
