#pragma once

#include <matchlab/rational.hpp>

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace matchlab {

// Immutable ordered set of atom names shared by all polynomials of a ring.
class AtomRing {
public:
  explicit AtomRing(std::vector<std::string> names);

  size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(size_t i) const { return names_[i]; }
  size_t index(const std::string& name) const;  // throws on unknown atom
  bool has(const std::string& name) const;

  friend bool operator==(const AtomRing& a, const AtomRing& b) {
    return a.names_ == b.names_;
  }

private:
  std::vector<std::string> names_;
};

using RingPtr = std::shared_ptr<const AtomRing>;

RingPtr make_ring(std::vector<std::string> names);
inline RingPtr scalar_ring() { return make_ring({}); }

bool same_ring(const RingPtr& a, const RingPtr& b);

// Exponent vector, one entry per ring atom.
using Monomial = std::vector<int>;

// Sparse multivariate polynomial with Rational coefficients. Canonical:
// no zero coefficient is ever stored, so equality is structural.
class MultiPoly {
public:
  MultiPoly() : ring_(scalar_ring()) {}
  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static MultiPoly constant(RingPtr ring, const Rational& c);
  static MultiPoly atom(const RingPtr& ring, const std::string& name, int power = 1);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  // The constant-term view; throws if atoms are present.
  Rational as_rational() const;
  Rational constant_term() const;

  // Coefficient of the monomial fixing the listed atoms at the given
  // exponents; remaining atoms stay symbolic (result lives in the same ring
  // with the fixed atoms eliminated).
  MultiPoly extract(const std::vector<std::pair<std::string, int>>& spec) const;

  // Substitute a rational value for one atom.
  MultiPoly substitute(const std::string& name, const Rational& value) const;

  long degree_in(const std::string& name) const;  // -1 for zero polynomial
  bool depends_on(const std::string& name) const;

  // Dense coefficient list in one atom (entries in the ring minus nothing;
  // the extracted atom keeps exponent zero in each coefficient).
  std::vector<MultiPoly> coefficients_in(const std::string& name) const;

  void add_term(const Monomial& m, const Rational& c);

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly scaled(const Rational& s) const;
  MultiPoly pow(long e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  // Drop every monomial whose exponent on `name` exceeds max_deg.
  MultiPoly truncated_in(const std::string& name, long max_deg) const;

  // Canonical text: monomials in ring order with explicit signs,
  // e.g. "1 - 3/2*j*nu^2".
  std::string str() const;

private:
  void check_same_ring(const MultiPoly& other) const;

  RingPtr ring_;
  std::map<Monomial, Rational> terms_;
};

// Re-express p in another ring, matching atoms by name. Atoms of p that are
// missing from `to` must not occur with nonzero exponent.
MultiPoly transplant(const MultiPoly& p, const RingPtr& to);

// Unique polynomial (dense coefficient list, lowest degree first) of degree
// < points.size() through points with polynomial-valued ordinates.
// Newton divided differences over the coefficient ring.
std::vector<MultiPoly> interpolate_coeffs(
    const std::vector<std::pair<Rational, MultiPoly>>& points);

}  // namespace matchlab
