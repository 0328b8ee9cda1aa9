#include <matchlab/cycle_correction.hpp>

#include <matchlab/combinatorics.hpp>

#include <functional>
#include <stdexcept>

namespace matchlab {

namespace {

// Multisets of shift values s in [s_min, s_max] with total shift <= cap;
// fn(parts, total, eps_coeff) where eps_coeff = prod ((-1)^s eps_s/(2s))^m / m!.
void for_each_shift_multiset(
    const EpsilonRing& er, long cap,
    const std::function<void(long, const MultiPoly&)>& fn) {
  std::function<void(long, long, const MultiPoly&)> rec =
      [&](long s, long total, const MultiPoly& coeff) {
        if (s > er.s_max) {
          if (total > 0) fn(total, coeff);
          return;
        }
        rec(s + 1, total, coeff);
        MultiPoly acc = coeff;
        MultiPoly unit = er.eps(s).scaled(
            Rational((s % 2 == 0) ? 1 : -1, 2 * s));  // (-1)^s eps_s / (2s)
        for (long m = 1; s * m + total <= cap; ++m) {
          acc = acc * unit.scaled(Rational(1, m));  // accumulates 1/m!
          rec(s + 1, total + s * m, acc);
        }
      };
  MultiPoly one = MultiPoly::constant(er.ring, Rational(1));
  rec(er.s_min, 0, one);
}

}  // namespace

EpsilonRing EpsilonRing::make(long s_min, long s_max) {
  if (s_min != 3 && s_min != 4)
    throw std::invalid_argument("EpsilonRing: s_min must be 3 or 4");
  EpsilonRing er;
  er.s_min = s_min;
  er.s_max = std::max(s_min, s_max);
  std::vector<std::string> names;
  for (long s = s_min; s <= er.s_max; ++s) names.push_back("eps" + std::to_string(s));
  er.ring = make_ring(std::move(names));
  return er;
}

MultiPoly EpsilonRing::eps(long s) const {
  return MultiPoly::atom(ring, "eps" + std::to_string(s));
}

MultiPoly xhat_apply(const std::vector<MultiPoly>& m_seq, long power, long j) {
  if (power < 0) throw std::invalid_argument("xhat_apply: negative power");
  long idx = j - power;
  if (idx < 0) return MultiPoly(m_seq.empty() ? scalar_ring() : m_seq[0].ring());
  if (idx >= static_cast<long>(m_seq.size()))
    throw std::invalid_argument("xhat_apply: sequence does not cover index");
  return m_seq[idx];
}

CorrectedM m_small(const USequence& u, long j, const EpsilonRing& er) {
  if (j < 0) throw std::invalid_argument("m_small: j >= 0");
  // Ring {n} + u atoms + eps atoms.
  std::vector<std::string> names{"n"};
  for (const auto& a : u.ring->names()) names.push_back(a);
  for (const auto& a : er.ring->names()) names.push_back(a);
  RingPtr ring = make_ring(names);

  std::vector<MultiPoly> m_seq;
  m_seq.reserve(j + 1);
  for (long t = 0; t <= j; ++t) m_seq.push_back(transplant(m_big(u, t), ring));

  MultiPoly out = m_seq[j];
  for_each_shift_multiset(er, j, [&](long shift, const MultiPoly& coeff) {
    out = out + transplant(coeff, ring) * xhat_apply(m_seq, shift, j);
  });
  return {j, out};
}

TruncatedSeries one_plus_h_hat(const USequence& u, long j, const EpsilonRing& er,
                               long nu_order) {
  std::vector<TruncatedSeries> base = one_plus_h_window(u, j, nu_order);
  // Everything lives over u.ring + eps ring.
  std::vector<std::string> names;
  for (const auto& a : u.ring->names()) names.push_back(a);
  for (const auto& a : er.ring->names()) names.push_back(a);
  RingPtr ring = make_ring(names);

  auto lift = [&](const TruncatedSeries& s) {
    TruncatedSeries out("nu", s.order(), ring);
    for (long k = 0; k <= s.order(); ++k)
      out.set_coeff(k, transplant(s.coeff(k), ring));
    return out;
  };

  TruncatedSeries result = lift(base[j]);
  long cap = std::min(j, nu_order);
  for_each_shift_multiset(er, cap, [&](long shift, const MultiPoly& coeff) {
    // coeff * j^(shift) nu^shift / r^shift * (1 + H_{j-shift})
    Rational weight =
        Rational(falling_factorial(j, shift)) * inverse(u.r.pow(shift));
    TruncatedSeries term = lift(base[j - shift]).shifted_up(shift);
    result = result + term.scaled_poly(transplant(coeff, ring).scaled(weight));
  });
  return result;
}

std::vector<MultiPoly> h_hat_coeffs(const USequence& u, long j,
                                    const EpsilonRing& er, long nu_order) {
  TruncatedSeries s = one_plus_h_hat(u, j, er, nu_order);
  std::vector<MultiPoly> out;
  out.reserve(nu_order + 1);
  for (long h = 0; h <= nu_order; ++h) out.push_back(s.coeff(h));
  if (!(out[0] == MultiPoly::constant(s.ring(), Rational(1))))
    throw ConsistencyError("h_hat_coeffs: ahat_0 != 1");
  return out;
}

}  // namespace matchlab
