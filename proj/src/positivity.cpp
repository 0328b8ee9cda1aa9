#include <matchlab/positivity.hpp>

#include <matchlab/combinatorics.hpp>

#include <stdexcept>

namespace matchlab {

namespace {

// ln(1 - a*nu) as a truncated series over the scalar ring.
TruncatedSeries log_one_minus(const Rational& a, long order) {
  TruncatedSeries out("nu", order, scalar_ring());
  Rational pw(1);
  for (long m = 1; m <= order; ++m) {
    pw *= a;
    out.set_coeff(m, MultiPoly::constant(scalar_ring(), -pw * Rational(1, m)));
  }
  return out;
}

}  // namespace

TruncatedSeries one_plus_k_direct(long i, long order) {
  RingPtr ring = scalar_ring();
  TruncatedSeries num = TruncatedSeries::constant("nu", order, ring, Rational(1));
  TruncatedSeries half(
      "nu", order, ring);  // (1 - nu/2)
  half.set_coeff(0, MultiPoly::constant(ring, Rational(1)));
  if (order >= 1) half.set_coeff(1, MultiPoly::constant(ring, Rational(-1, 2)));
  for (long t = 0; t < i; ++t) num = num * half;

  TruncatedSeries den = TruncatedSeries::constant("nu", order, ring, Rational(1));
  for (long t = 1; t <= 2 * i - 1; ++t) {
    TruncatedSeries lin("nu", order, ring);
    lin.set_coeff(0, MultiPoly::constant(ring, Rational(1)));
    if (order >= 1) lin.set_coeff(1, MultiPoly::constant(ring, Rational(-t, 2)));
    den = den * lin;
  }
  return num * series_inv(den);
}

TruncatedSeries one_plus_k_decomposed(long i, long order) {
  RingPtr ring = scalar_ring();
  // G1 = i ln(1 - nu/2)
  TruncatedSeries g = log_one_minus(Rational(1, 2), order).scaled(Rational(i));
  // G2 + G3 = (2/nu) ln(1 - i nu) - 2i ln(1 - i nu) + 2i
  TruncatedSeries l2 = log_one_minus(Rational(i), order + 1);
  g = g + l2.shifted_down(1).scaled(Rational(2)) +
      TruncatedSeries::constant("nu", order, ring, Rational(2 * i));
  g = g - l2.truncated(order).scaled(Rational(2 * i));
  // G4 = (1/2) ln(1 - i nu)
  g = g + l2.truncated(order).scaled(Rational(1, 2));
  // G5 = sum_{t odd} c_t (nu^t - nu^t (1 - i nu)^{-t}),
  //      c_t = -B_{t+1} / (t (t+1) 2^t)  from the Stirling series of ln n!.
  for (long t = 1; t <= order; t += 2) {
    Rational c_t = -bernoulli(t + 1) * Rational(1, t * (t + 1)) *
                   Rational(Int(1), Int(1) << t);
    TruncatedSeries tail("nu", order, ring);
    // nu^t (1 - (1-i nu)^{-t}): (1-i nu)^{-t} = sum_m C(t-1+m, m) i^m nu^m
    for (long m = 1; t + m <= order; ++m) {
      Rational coeff = -Rational(binomial(t - 1 + m, m)) * Rational(i).pow(m);
      tail.set_coeff(t + m, MultiPoly::constant(ring, coeff * c_t));
    }
    g = g + tail;
  }
  if (!g.coeff(0).is_zero())
    throw ConsistencyError("one_plus_k_decomposed: nonzero constant term");
  return series_exp(g);
}

TruncatedSeries one_plus_k_series(long i, long order) {
  if (i < 0) throw std::invalid_argument("one_plus_k_series: i >= 0");
  if (order < 1) throw std::invalid_argument("one_plus_k_series: order >= 1");
  TruncatedSeries direct = one_plus_k_direct(i, order);
  TruncatedSeries decomposed = one_plus_k_decomposed(i, order);
  if (!(direct == decomposed))
    throw ConsistencyError("one_plus_k_series: construction routes disagree at i=" +
                           std::to_string(i));
  return direct;
}

Rational delta_binomial_table(long k, long d) {
  if (k < 0 || d < 0) throw std::invalid_argument("delta_binomial_table: negative");
  Rational acc;
  for (long l = 0; l <= k; ++l) {
    Int pw = (d == 0) ? Int(1) : Int(0);  // 0^0 = 1
    if (l > 0) {
      pw = 1;
      for (long t = 0; t < d; ++t) pw *= Int(l);
    }
    Rational term = Rational(binomial(k, l) * pw);
    acc += ((l + k) % 2 == 0) ? term : -term;
  }
  return acc;
}

PositivityContext::PositivityContext(const Rational& r, long i_max, long order,
                                     long s_min)
    : r_(r), i_max_(i_max), order_(order),
      er_(EpsilonRing::make(s_min, std::max(s_min, order))),
      ring_(er_.ring),
      u_(u_sequence(r, std::max<long>(2, order + 1))) {
  base_ = one_plus_h_window(u_, i_max_, order_);
}

const TruncatedSeries& PositivityContext::f(long i) {
  if (i < 0 || i > i_max_)
    throw std::invalid_argument("PositivityContext: i out of range");
  auto it = f_.find(i);
  if (it != f_.end()) return it->second;
  TruncatedSeries hhat = one_plus_h_hat(u_, i, er_, order_);
  // K is epsilon-free; lift it into the epsilon ring.
  TruncatedSeries k = one_plus_k_series(i, order_);
  TruncatedSeries k_lifted("nu", order_, ring_);
  for (long t = 0; t <= order_; ++t)
    k_lifted.set_coeff(t, transplant(k.coeff(t), ring_));
  return f_.emplace(i, hhat * k_lifted).first->second;
}

TruncatedSeries PositivityContext::u_i(long i) {
  TruncatedSeries out = f(i);
  out.set_coeff(0, MultiPoly(ring_));
  return out;
}

const TruncatedSeries& PositivityContext::ln_f(long i) {
  auto it = ln_f_.find(i);
  if (it != ln_f_.end()) return it->second;
  return ln_f_.emplace(i, series_log(f(i))).first->second;
}

TruncatedSeries PositivityContext::t_series(bool plus, long i, long k) {
  if (k < 0) throw std::invalid_argument("t_series: k >= 0");
  TruncatedSeries acc("nu", order_, ring_);
  for (long l = 0; l <= k; ++l) {
    bool in_plus = (l % 2 == k % 2);  // L+ matches the parity of k
    if (in_plus != plus) continue;
    acc = acc + ln_f(i + l).scaled(Rational(binomial(k, l)));
  }
  return acc;
}

TruncatedSeries PositivityContext::alpha0_series(long i, long k) {
  auto product_over = [&](bool plus) {
    TruncatedSeries acc = TruncatedSeries::constant("nu", order_, ring_, Rational(1));
    bool any = false;
    for (long l = 0; l <= k; ++l) {
      if ((l % 2 == k % 2) != plus) continue;
      any = true;
      Int c = binomial(k, l);
      TruncatedSeries base = f(i + l);
      for (Int t = 0; t < c; ++t) acc = acc * base;
    }
    if (!any) return TruncatedSeries("nu", order_, ring_);  // empty class
    return acc;
  };
  return product_over(true) - product_over(false);
}

Rational PositivityContext::second_identity_value(long i, long k) {
  if (k < 2) throw std::invalid_argument("second_identity_value: k >= 2");
  if (order_ < k - 1)
    throw std::invalid_argument("second_identity_value: order too small");
  MultiPoly total(ring_);
  for (long l = 0; l <= k; ++l) {
    TruncatedSeries u = u_i(i + l);
    // sum_{m=1}^{k-1} (-1)^(m+1) (1/m) U^m, truncated exactly as written
    TruncatedSeries acc("nu", order_, ring_);
    TruncatedSeries pw = TruncatedSeries::constant("nu", order_, ring_, Rational(1));
    for (long m = 1; m <= k - 1; ++m) {
      pw = pw * u;
      acc = acc + pw.scaled(Rational((m % 2 == 1) ? 1 : -1, m));
    }
    Rational sign_binom = Rational(binomial(k, l));
    if ((l + k) % 2 != 0) sign_binom = -sign_binom;
    total = total + acc.coeff(k - 1).scaled(sign_binom);
  }
  return total.as_rational();  // throws if epsilon atoms failed to cancel
}

LnFCoefficient ln_f_coefficient(PositivityContext& ctx, long h, long i_lo, long i_hi) {
  if (h < 1) throw std::invalid_argument("ln_f_coefficient: h >= 1");
  if (i_hi - i_lo + 1 < h + 4)
    throw std::invalid_argument("ln_f_coefficient: window too small for h+2 nodes "
                                "plus two extra");
  std::vector<std::pair<Rational, MultiPoly>> nodes;
  for (long i = i_lo; i < i_lo + h + 2; ++i)
    nodes.emplace_back(Rational(i), ctx.ln_f(i).coeff(h));
  LnFCoefficient out;
  out.coeff_in_i = interpolate_coeffs(nodes);

  out.degree_ok = true;
  for (long i = i_lo + h + 2; i <= i_hi; ++i) {
    MultiPoly value(ctx.ring());
    Rational ip(1);
    for (const auto& c : out.coeff_in_i) {
      value = value + c.scaled(ip);
      ip *= Rational(i);
    }
    if (!(value == ctx.ln_f(i).coeff(h))) {
      out.degree_ok = false;
      break;
    }
  }

  MultiPoly top = static_cast<long>(out.coeff_in_i.size()) > h + 1
                      ? out.coeff_in_i[h + 1]
                      : MultiPoly(ctx.ring());
  out.top_eps_free = top.is_constant();
  if (out.top_eps_free) out.top_coefficient = top.constant_term();
  return out;
}

Report second_identity_check(const Rational& r, long k, long i) {
  PositivityContext ctx(r, i + k, k + 2);
  Report rep;
  rep.suite = "second-identity";
  rep.params = {{"r", r.str()}, {"k", std::to_string(k)}, {"i", std::to_string(i)}};
  Rational expected = Rational(factorial(k - 2)) * inverse(r.pow(k - 1));
  Rational got = ctx.second_identity_value(i, k);
  rep.add("alternating-sum-value", rep.params, expected.str(), got.str(), got == expected);
  return rep;
}

Report cancellation_check(const Rational& r, long i, long k, long d) {
  if (k < 2 || d > k - 1)
    throw std::invalid_argument("cancellation_check: need k >= 2, d <= k-1");
  PositivityContext ctx(r, i + k, std::max<long>(1, d));
  Report rep;
  rep.suite = "cancellation";
  rep.params = {{"r", r.str()},
                {"i", std::to_string(i)},
                {"k", std::to_string(k)},
                {"d", std::to_string(d)}};
  TruncatedSeries tp = ctx.t_series(true, i, k);
  TruncatedSeries tm = ctx.t_series(false, i, k);

  // [nu^d](t+^2 - t-^2) via the convolution over split orders.
  MultiPoly conv(ctx.ring());
  for (long s = 1; s <= d - 1; ++s)
    conv = conv + tp.coeff(s) * tp.coeff(d - s) - tm.coeff(s) * tm.coeff(d - s);
  rep.add("t-quadratic-convolution", rep.params, "0", conv.str(), conv.is_zero());

  bool linear_ok = true;
  for (long s = 1; s <= d - 1 && linear_ok; ++s)
    linear_ok = (tp.coeff(s) == tm.coeff(s));
  rep.add("t-linear-coefficients-equal", rep.params, "equal",
          linear_ok ? "equal" : "differ", linear_ok);
  return rep;
}

}  // namespace matchlab
