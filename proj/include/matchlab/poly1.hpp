#pragma once

#include <matchlab/rational.hpp>

#include <string>
#include <utility>
#include <vector>

namespace matchlab {

// Dense univariate polynomial over Rational, lowest degree first.
// Trailing coefficient is nonzero unless the polynomial is zero
// (represented by an empty coefficient list).
class Poly1 {
public:
  Poly1() = default;
  explicit Poly1(std::string var) : var_(std::move(var)) {}
  Poly1(std::string var, std::vector<Rational> coeffs)
      : var_(std::move(var)), c_(std::move(coeffs)) {
    trim();
  }

  static Poly1 constant(std::string var, const Rational& value);
  static Poly1 monomial(std::string var, const Rational& coeff, long degree);

  const std::string& var() const { return var_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(long k) const {
    return (k < 0 || k >= static_cast<long>(c_.size())) ? Rational() : c_[k];
  }
  Rational leading() const { return is_zero() ? Rational() : c_.back(); }

  Rational eval(const Rational& x) const;  // Horner, exact
  Poly1 derivative() const;

  Poly1 operator-() const;
  friend Poly1 operator+(const Poly1& a, const Poly1& b);
  friend Poly1 operator-(const Poly1& a, const Poly1& b);
  friend Poly1 operator*(const Poly1& a, const Poly1& b);
  Poly1 scaled(const Rational& s) const;

  // Substitute var -> var + shift (exact Taylor shift).
  Poly1 shifted_arg(const Rational& shift) const;

  friend bool operator==(const Poly1& a, const Poly1& b) {
    return a.c_ == b.c_;  // canonical form; variable names compared by caller
  }
  friend bool operator!=(const Poly1& a, const Poly1& b) { return !(a == b); }

  // Canonical text, e.g. "1 - 3/2*j + j^2".
  std::string str() const;

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::string var_ = "x";
  std::vector<Rational> c_;
};

// Quotient and remainder of exact division over the rationals.
std::pair<Poly1, Poly1> divmod(const Poly1& a, const Poly1& b);

// Monic gcd; gcd(0, 0) = 0.
Poly1 poly_gcd(Poly1 a, Poly1 b);

// Unique polynomial of degree < points.size() through the given points.
// Newton divided differences, exact. Duplicate abscissae are an error.
Poly1 interpolate(const std::vector<std::pair<Rational, Rational>>& points,
                  const std::string& var = "x");

// Falling factorial x(x-1)...(x-s+1) as a polynomial.
Poly1 falling_factorial_poly(const std::string& var, long s);

// Polynomial extension of the unsigned Stirling number [x, x-w]: the unique
// polynomial of degree <= 2w through (n, stirling_first_unsigned(n, n-w)) for
// n = w..3w, re-verified at two further nodes. Memoized per thread.
Poly1 pw_polynomial(long w);

// Reduced ratio of univariate polynomials: gcd(num, den) = 1, den monic.
class RationalFunction {
public:
  RationalFunction() : num_("j"), den_("j", {Rational(1)}) {}
  RationalFunction(Poly1 num, Poly1 den);

  static RationalFunction from_poly(const Poly1& p);

  const Poly1& num() const { return num_; }
  const Poly1& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  Rational eval(const Rational& x) const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

  std::string str() const;  // "num / den" canonical text

private:
  void reduce();

  Poly1 num_;
  Poly1 den_;
};

}  // namespace matchlab
