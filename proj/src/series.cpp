#include <matchlab/series.hpp>

#include <sstream>
#include <stdexcept>

namespace matchlab {

namespace {

void require_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.var() != b.var())
    throw std::invalid_argument("series: variable mismatch ('" + a.var() + "' vs '" +
                                b.var() + "')");
  if (!same_ring(a.ring(), b.ring()))
    throw std::invalid_argument("series: coefficient ring mismatch");
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::string var, long order, RingPtr ring)
    : var_(std::move(var)), order_(order), ring_(std::move(ring)) {
  if (order_ < 0) throw std::invalid_argument("series: negative truncation order");
  c_.assign(order_ + 1, MultiPoly(ring_));
}

TruncatedSeries TruncatedSeries::constant(std::string var, long order, RingPtr ring,
                                          const Rational& c) {
  TruncatedSeries s(std::move(var), order, ring);
  s.c_[0] = MultiPoly::constant(ring, c);
  return s;
}

TruncatedSeries TruncatedSeries::variable(std::string var, long order, RingPtr ring) {
  TruncatedSeries s(std::move(var), order, ring);
  if (order >= 1) s.c_[1] = MultiPoly::constant(ring, Rational(1));
  return s;
}

const MultiPoly& TruncatedSeries::coeff(long k) const {
  static const MultiPoly zero;
  if (k < 0) return zero;
  if (k > order_)
    throw std::out_of_range("series: coefficient beyond truncation order");
  return c_[k];
}

void TruncatedSeries::set_coeff(long k, MultiPoly c) {
  if (k < 0 || k > order_) throw std::out_of_range("series: set_coeff out of range");
  if (!same_ring(c.ring(), ring_))
    throw std::invalid_argument("series: set_coeff ring mismatch");
  c_[k] = std::move(c);
}

bool TruncatedSeries::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

long TruncatedSeries::valuation() const {
  for (long k = 0; k <= order_; ++k)
    if (!c_[k].is_zero()) return k;
  return order_ + 1;
}

TruncatedSeries TruncatedSeries::truncated(long new_order) const {
  if (new_order > order_)
    throw std::invalid_argument("series: cannot raise truncation order");
  TruncatedSeries out(var_, new_order, ring_);
  for (long k = 0; k <= new_order; ++k) out.c_[k] = c_[k];
  return out;
}

TruncatedSeries TruncatedSeries::operator-() const {
  TruncatedSeries out(var_, order_, ring_);
  for (long k = 0; k <= order_; ++k) out.c_[k] = -c_[k];
  return out;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_compatible(a, b);
  long order = std::min(a.order_, b.order_);
  TruncatedSeries out(a.var_, order, a.ring_);
  for (long k = 0; k <= order; ++k) out.c_[k] = a.c_[k] + b.c_[k];
  return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a + (-b);
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_compatible(a, b);
  long order = std::min(a.order_, b.order_);
  TruncatedSeries out(a.var_, order, a.ring_);
  for (long i = 0; i <= order; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (long k = 0; i + k <= order; ++k) {
      if (b.c_[k].is_zero()) continue;
      out.c_[i + k] = out.c_[i + k] + a.c_[i] * b.c_[k];
    }
  }
  return out;
}

TruncatedSeries TruncatedSeries::scaled(const Rational& s) const {
  TruncatedSeries out(var_, order_, ring_);
  for (long k = 0; k <= order_; ++k) out.c_[k] = c_[k].scaled(s);
  return out;
}

TruncatedSeries TruncatedSeries::scaled_poly(const MultiPoly& s) const {
  TruncatedSeries out(var_, order_, ring_);
  for (long k = 0; k <= order_; ++k) out.c_[k] = c_[k] * s;
  return out;
}

TruncatedSeries TruncatedSeries::pow_int(long e) const {
  if (e < 0) throw std::invalid_argument("series: negative power");
  TruncatedSeries acc = constant(var_, order_, ring_, Rational(1));
  TruncatedSeries base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return acc;
}

TruncatedSeries TruncatedSeries::shifted_up(long k) const {
  if (k < 0) throw std::invalid_argument("series: negative shift");
  TruncatedSeries out(var_, order_, ring_);
  for (long i = 0; i + k <= order_; ++i) out.c_[i + k] = c_[i];
  return out;
}

TruncatedSeries TruncatedSeries::shifted_down(long k) const {
  if (k < 0) throw std::invalid_argument("series: negative shift");
  if (k > order_) throw std::invalid_argument("series: shift exceeds order");
  for (long i = 0; i < k; ++i)
    if (!c_[i].is_zero())
      throw std::domain_error("series: shifted_down would truncate nonzero term");
  TruncatedSeries out(var_, order_ - k, ring_);
  for (long i = 0; i <= out.order_; ++i) out.c_[i] = c_[i + k];
  return out;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.var_ != b.var_ || a.order_ != b.order_ || !same_ring(a.ring_, b.ring_))
    return false;
  return a.c_ == b.c_;
}

std::string TruncatedSeries::str() const {
  std::ostringstream out;
  bool first = true;
  for (long k = 0; k <= order_; ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << c_[k].str() << ")";
    if (k >= 1) {
      out << "*" << var_;
      if (k > 1) out << "^" << k;
    }
  }
  if (first) out << "0";
  out << " + O(" << var_ << "^" << order_ + 1 << ")";
  return out.str();
}

TruncatedSeries series_exp(const TruncatedSeries& a) {
  if (!a.coeff(0).is_zero())
    throw std::domain_error("series_exp: nonzero constant term");
  const long order = a.order();
  // f' = a' f  ==>  k f_k = sum_{m=1..k} m a_m f_{k-m}
  TruncatedSeries f(a.var(), order, a.ring());
  f.set_coeff(0, MultiPoly::constant(a.ring(), Rational(1)));
  for (long k = 1; k <= order; ++k) {
    MultiPoly acc(a.ring());
    for (long m = 1; m <= k; ++m) {
      if (a.coeff(m).is_zero()) continue;
      acc = acc + a.coeff(m).scaled(Rational(m)) * f.coeff(k - m);
    }
    f.set_coeff(k, acc.scaled(Rational(1, k)));
  }
  return f;
}

TruncatedSeries series_log(const TruncatedSeries& a) {
  if (!(a.coeff(0) == MultiPoly::constant(a.ring(), Rational(1))))
    throw std::domain_error("series_log: constant term must be exactly 1");
  const long order = a.order();
  // l' a = a'  ==>  k a_0 l_k = k a_k - sum_{m=1..k-1} m l_m a_{k-m},  a_0 = 1
  TruncatedSeries l(a.var(), order, a.ring());
  for (long k = 1; k <= order; ++k) {
    MultiPoly acc = a.coeff(k).scaled(Rational(k));
    for (long m = 1; m < k; ++m) {
      if (l.coeff(m).is_zero() || a.coeff(k - m).is_zero()) continue;
      acc = acc - l.coeff(m).scaled(Rational(m)) * a.coeff(k - m);
    }
    l.set_coeff(k, acc.scaled(Rational(1, k)));
  }
  return l;
}

TruncatedSeries series_sqrt_one_minus(const TruncatedSeries& u) {
  if (!u.coeff(0).is_zero())
    throw std::domain_error("series_sqrt_one_minus: nonzero constant term");
  const long order = u.order();
  const RingPtr& ring = u.ring();
  // Binomial series: (1-u)^(1/2) = sum_k C(1/2, k) (-u)^k; u^k needs k <= order.
  TruncatedSeries acc = TruncatedSeries::constant(u.var(), order, ring, Rational(1));
  TruncatedSeries upow = TruncatedSeries::constant(u.var(), order, ring, Rational(1));
  Rational binom(1);  // C(1/2, k), updated incrementally
  for (long k = 1; k <= order; ++k) {
    upow = upow * (-u);
    binom *= Rational(Int(3 - 2 * k), Int(2 * k));  // C(1/2,k) = C(1/2,k-1)*(1/2-k+1)/k
    acc = acc + upow.scaled(binom);
    if (upow.is_zero()) break;
  }
  // Exactness self-check: the square must reproduce 1 - u.
  TruncatedSeries one_minus_u =
      TruncatedSeries::constant(u.var(), order, ring, Rational(1)) - u;
  if (!(acc * acc == one_minus_u))
    throw ConsistencyError("series_sqrt_one_minus: square-back check failed");
  return acc;
}

TruncatedSeries series_inv(const TruncatedSeries& a) {
  Rational c0 = a.coeff(0).as_rational();
  if (c0.is_zero()) throw std::domain_error("series_inv: zero constant term");
  // 1/a = (1/c0) * 1/(1 - w) with w = 1 - a/c0 (valuation >= 1).
  const long order = a.order();
  TruncatedSeries w =
      TruncatedSeries::constant(a.var(), order, a.ring(), Rational(1)) -
      a.scaled(inverse(c0));
  TruncatedSeries acc = TruncatedSeries::constant(a.var(), order, a.ring(), Rational(1));
  TruncatedSeries wpow = TruncatedSeries::constant(a.var(), order, a.ring(), Rational(1));
  for (long k = 1; k <= order; ++k) {
    wpow = wpow * w;
    if (wpow.is_zero()) break;
    acc = acc + wpow;
  }
  return acc.scaled(inverse(c0));
}

MultiPoly series_extract(const TruncatedSeries& s, long var_exponent,
                         const std::vector<std::pair<std::string, int>>& atoms) {
  if (var_exponent < 0 || var_exponent > s.order())
    throw std::out_of_range("series_extract: exponent beyond truncation order");
  MultiPoly c = s.coeff(var_exponent);
  return atoms.empty() ? c : c.extract(atoms);
}

}  // namespace matchlab
