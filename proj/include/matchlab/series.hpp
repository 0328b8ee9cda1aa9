#pragma once

#include <matchlab/multipoly.hpp>

#include <string>
#include <vector>

namespace matchlab {

// Formal power series in one distinguished variable, truncated at an
// explicit order N: terms of degree > N are dropped by every operation.
// Coefficients are MultiPoly over a shared atom ring.
class TruncatedSeries {
public:
  TruncatedSeries(std::string var, long order, RingPtr ring);

  static TruncatedSeries constant(std::string var, long order, RingPtr ring,
                                  const Rational& c);
  static TruncatedSeries variable(std::string var, long order, RingPtr ring);

  const std::string& var() const { return var_; }
  long order() const { return order_; }
  const RingPtr& ring() const { return ring_; }

  const MultiPoly& coeff(long k) const;
  void set_coeff(long k, MultiPoly c);
  bool is_zero() const;

  // Lowest k with nonzero coefficient; order()+1 if the series is zero.
  long valuation() const;

  TruncatedSeries truncated(long new_order) const;

  TruncatedSeries operator-() const;
  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  TruncatedSeries scaled(const Rational& s) const;
  TruncatedSeries scaled_poly(const MultiPoly& s) const;
  TruncatedSeries pow_int(long e) const;

  // Multiply by var^k (truncation order unchanged, top terms fall off).
  TruncatedSeries shifted_up(long k) const;
  // Divide by var^k; the k lowest coefficients must vanish. Order drops by k.
  TruncatedSeries shifted_down(long k) const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
    return !(a == b);
  }

  std::string str() const;

private:
  std::string var_;
  long order_;
  RingPtr ring_;
  std::vector<MultiPoly> c_;  // size order_+1
};

// exp(a) for a with zero constant term.
TruncatedSeries series_exp(const TruncatedSeries& a);

// log(a) for a with constant term exactly 1.
TruncatedSeries series_log(const TruncatedSeries& a);

// (1 - u)^(1/2) for u with zero constant term; the result is squared back
// against 1 - u as a self-check.
TruncatedSeries series_sqrt_one_minus(const TruncatedSeries& u);

// 1/a for a whose constant term is a nonzero rational (geometric expansion).
TruncatedSeries series_inv(const TruncatedSeries& a);

// Coefficient extraction across the series variable and ring atoms together:
// the coefficient of var^var_exponent * prod atom^e, remaining atoms left
// symbolic.
MultiPoly series_extract(const TruncatedSeries& s, long var_exponent,
                         const std::vector<std::pair<std::string, int>>& atoms = {});

}  // namespace matchlab
