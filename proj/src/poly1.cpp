#include <matchlab/poly1.hpp>

#include <matchlab/combinatorics.hpp>

#include <map>
#include <sstream>
#include <stdexcept>

namespace matchlab {

Poly1 Poly1::constant(std::string var, const Rational& value) {
  return Poly1(std::move(var), {value});
}

Poly1 Poly1::monomial(std::string var, const Rational& coeff, long degree) {
  if (degree < 0) throw std::invalid_argument("Poly1::monomial: negative degree");
  std::vector<Rational> c(degree + 1);
  c[degree] = coeff;
  return Poly1(std::move(var), std::move(c));
}

Rational Poly1::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly1 Poly1::derivative() const {
  std::vector<Rational> d;
  for (long k = 1; k < static_cast<long>(c_.size()); ++k)
    d.push_back(c_[k] * Rational(k));
  return Poly1(var_, std::move(d));
}

Poly1 Poly1::operator-() const {
  std::vector<Rational> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return Poly1(var_, std::move(c));
}

Poly1 operator+(const Poly1& a, const Poly1& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < a.c_.size()) c[i] += a.c_[i];
    if (i < b.c_.size()) c[i] += b.c_[i];
  }
  return Poly1(a.var_.empty() ? b.var_ : a.var_, std::move(c));
}

Poly1 operator-(const Poly1& a, const Poly1& b) { return a + (-b); }

Poly1 operator*(const Poly1& a, const Poly1& b) {
  if (a.is_zero() || b.is_zero()) return Poly1(a.var_);
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t k = 0; k < b.c_.size(); ++k) c[i + k] += a.c_[i] * b.c_[k];
  return Poly1(a.var_, std::move(c));
}

Poly1 Poly1::scaled(const Rational& s) const {
  if (s.is_zero()) return Poly1(var_);
  std::vector<Rational> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
  return Poly1(var_, std::move(c));
}

Poly1 Poly1::shifted_arg(const Rational& shift) const {
  // p(x + shift) by Horner on the coefficient list.
  Poly1 acc(var_);
  Poly1 lin(var_, {shift, Rational(1)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * lin + Poly1::constant(var_, *it);
  return acc;
}

std::string Poly1::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long k = 0; k < static_cast<long>(c_.size()); ++k) {
    if (c_[k].is_zero()) continue;
    Rational a = c_[k];
    if (first) {
      if (a.sign() < 0) out << "-", a = -a;
    } else {
      out << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    first = false;
    bool unit = (a == Rational(1));
    if (k == 0 || !unit) out << a.str();
    if (k > 0) {
      if (!unit) out << "*";
      out << var_;
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

std::pair<Poly1, Poly1> divmod(const Poly1& a, const Poly1& b) {
  if (b.is_zero()) throw std::domain_error("Poly1 divmod: division by zero");
  std::vector<Rational> rem(a.coeffs());
  long db = b.degree();
  std::vector<Rational> q;
  if (a.degree() >= db) q.assign(a.degree() - db + 1, Rational());
  Rational lead = b.leading();
  for (long k = a.degree(); k >= db; --k) {
    Rational f = rem[k] / lead;
    if (!f.is_zero()) {
      q[k - db] = f;
      for (long t = 0; t <= db; ++t) rem[k - db + t] -= f * b.coeff(t);
    }
  }
  return {Poly1(a.var(), std::move(q)), Poly1(a.var(), std::move(rem))};
}

Poly1 poly_gcd(Poly1 a, Poly1 b) {
  while (!b.is_zero()) {
    Poly1 r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(inverse(a.leading()));  // monic
}

Poly1 interpolate(const std::vector<std::pair<Rational, Rational>>& points,
                  const std::string& var) {
  const size_t m = points.size();
  if (m == 0) return Poly1(var);
  for (size_t i = 0; i < m; ++i)
    for (size_t k = i + 1; k < m; ++k)
      if (points[i].first == points[k].first)
        throw std::invalid_argument("interpolate: duplicate abscissa " +
                                    points[i].first.str());
  // Newton divided differences.
  std::vector<Rational> dd(m);
  for (size_t i = 0; i < m; ++i) dd[i] = points[i].second;
  for (size_t level = 1; level < m; ++level)
    for (size_t i = m - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);
  Poly1 acc(var);
  for (size_t i = m; i-- > 0;) {
    Poly1 lin(var, {-points[i].first, Rational(1)});
    acc = acc * lin + Poly1::constant(var, dd[i]);
  }
  return acc;
}

Poly1 falling_factorial_poly(const std::string& var, long s) {
  Poly1 acc = Poly1::constant(var, Rational(1));
  for (long t = 0; t < s; ++t)
    acc = acc * Poly1(var, {Rational(-t), Rational(1)});
  return acc;
}

Poly1 pw_polynomial(long w) {
  if (w < 0) throw std::invalid_argument("pw_polynomial: w < 0");
  thread_local std::map<long, Poly1> cache;
  if (auto it = cache.find(w); it != cache.end()) return it->second;

  std::vector<std::pair<Rational, Rational>> pts;
  for (long nn = w; nn <= 3 * w; ++nn)
    pts.emplace_back(Rational(nn), Rational(stirling_first_unsigned(nn, nn - w)));
  Poly1 p = interpolate(pts, "x");
  if (p.degree() > 2 * w)
    throw ConsistencyError("pw_polynomial: interpolant exceeds degree 2w");
  for (long nn = 3 * w + 1; nn <= 3 * w + 2; ++nn) {
    if (p.eval(Rational(nn)) != Rational(stirling_first_unsigned(nn, nn - w)))
      throw ConsistencyError("pw_polynomial: overdetermination check failed at n=" +
                             std::to_string(nn));
  }
  cache.emplace(w, p);
  return p;
}

RationalFunction::RationalFunction(Poly1 num, Poly1 den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw std::invalid_argument("RationalFunction: zero denominator");
  reduce();
}

RationalFunction RationalFunction::from_poly(const Poly1& p) {
  return RationalFunction(p, Poly1::constant(p.var(), Rational(1)));
}

void RationalFunction::reduce() {
  Poly1 g = poly_gcd(num_, den_);
  if (!g.is_zero() && g.degree() > 0) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  Rational lead = den_.leading();
  if (lead != Rational(1)) {
    den_ = den_.scaled(inverse(lead));
    num_ = num_.scaled(inverse(lead));
  }
  if (num_.is_zero()) den_ = Poly1::constant(den_.var(), Rational(1));
}

Rational RationalFunction::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d.is_zero()) throw std::domain_error("RationalFunction: pole at " + x.str());
  return num_.eval(x) / d;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::str() const {
  if (is_polynomial()) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace matchlab
