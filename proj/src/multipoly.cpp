#include <matchlab/multipoly.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace matchlab {

AtomRing::AtomRing(std::vector<std::string> names) : names_(std::move(names)) {
  for (size_t i = 0; i < names_.size(); ++i)
    for (size_t k = i + 1; k < names_.size(); ++k)
      if (names_[i] == names_[k])
        throw std::invalid_argument("AtomRing: duplicate atom '" + names_[i] + "'");
}

size_t AtomRing::index(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw std::invalid_argument("AtomRing: unknown atom '" + name + "'");
}

bool AtomRing::has(const std::string& name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

RingPtr make_ring(std::vector<std::string> names) {
  return std::make_shared<const AtomRing>(std::move(names));
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

MultiPoly MultiPoly::constant(RingPtr ring, const Rational& c) {
  MultiPoly p(std::move(ring));
  if (!c.is_zero()) p.terms_.emplace(Monomial(p.ring_->size(), 0), c);
  return p;
}

MultiPoly MultiPoly::atom(const RingPtr& ring, const std::string& name, int power) {
  MultiPoly p(ring);
  Monomial m(ring->size(), 0);
  m[ring->index(name)] = power;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Monomial& m = terms_.begin()->first;
  return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

Rational MultiPoly::as_rational() const {
  if (!is_constant())
    throw std::domain_error("MultiPoly::as_rational: polynomial is not constant: " + str());
  return constant_term();
}

Rational MultiPoly::constant_term() const {
  Monomial zero(ring_->size(), 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? Rational() : it->second;
}

MultiPoly MultiPoly::extract(const std::vector<std::pair<std::string, int>>& spec) const {
  std::vector<std::pair<size_t, int>> idx;
  idx.reserve(spec.size());
  for (const auto& [name, e] : spec) idx.emplace_back(ring_->index(name), e);
  MultiPoly out(ring_);
  for (const auto& [m, c] : terms_) {
    bool match = true;
    for (const auto& [i, e] : idx)
      if (m[i] != e) {
        match = false;
        break;
      }
    if (!match) continue;
    Monomial reduced = m;
    for (const auto& [i, e] : idx) reduced[i] = 0;
    out.add_term(reduced, c);
  }
  return out;
}

MultiPoly MultiPoly::substitute(const std::string& name, const Rational& value) const {
  size_t i = ring_->index(name);
  MultiPoly out(ring_);
  for (const auto& [m, c] : terms_) {
    Rational scaled = c * value.pow(m[i]);
    Monomial reduced = m;
    reduced[i] = 0;
    out.add_term(reduced, scaled);
  }
  return out;
}

long MultiPoly::degree_in(const std::string& name) const {
  size_t i = ring_->index(name);
  long d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<long>(m[i]));
  return d;
}

bool MultiPoly::depends_on(const std::string& name) const {
  size_t i = ring_->index(name);
  for (const auto& [m, c] : terms_)
    if (m[i] != 0) return true;
  return false;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(const std::string& name) const {
  size_t i = ring_->index(name);
  long d = degree_in(name);
  std::vector<MultiPoly> out(static_cast<size_t>(std::max<long>(d, -1) + 1),
                             MultiPoly(ring_));
  for (const auto& [m, c] : terms_) {
    Monomial reduced = m;
    int e = reduced[i];
    reduced[i] = 0;
    out[e].add_term(reduced, c);
  }
  return out;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_same_ring(const MultiPoly& other) const {
  if (!same_ring(ring_, other.ring_))
    throw std::invalid_argument("MultiPoly: ring mismatch");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(ring_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_ring(b);
  MultiPoly out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_ring(b);
  MultiPoly out(a.ring_);
  const size_t w = a.ring_->size();
  Monomial m(w, 0);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (size_t i = 0; i < w; ++i) m[i] = ma[i] + mb[i];
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

MultiPoly MultiPoly::scaled(const Rational& s) const {
  MultiPoly out(ring_);
  if (s.is_zero()) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * s);
  return out;
}

MultiPoly MultiPoly::pow(long e) const {
  if (e < 0) throw std::invalid_argument("MultiPoly::pow: negative exponent");
  MultiPoly acc = constant(ring_, Rational(1));
  for (long k = 0; k < e; ++k) acc = acc * *this;
  return acc;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

MultiPoly MultiPoly::truncated_in(const std::string& name, long max_deg) const {
  size_t i = ring_->index(name);
  MultiPoly out(ring_);
  for (const auto& [m, c] : terms_)
    if (m[i] <= max_deg) out.terms_.emplace(m, c);
  return out;
}

MultiPoly transplant(const MultiPoly& p, const RingPtr& to) {
  const auto& from = *p.ring();
  std::vector<long> map(from.size(), -1);
  for (size_t i = 0; i < from.size(); ++i)
    if (to->has(from.name(i))) map[i] = static_cast<long>(to->index(from.name(i)));
  MultiPoly out(to);
  Monomial m(to->size(), 0);
  for (const auto& [src, c] : p.terms()) {
    std::fill(m.begin(), m.end(), 0);
    for (size_t i = 0; i < src.size(); ++i) {
      if (src[i] == 0) continue;
      if (map[i] < 0)
        throw std::invalid_argument("transplant: atom '" + from.name(i) +
                                    "' missing from target ring");
      m[map[i]] = src[i];
    }
    out.add_term(m, c);
  }
  return out;
}

std::vector<MultiPoly> interpolate_coeffs(
    const std::vector<std::pair<Rational, MultiPoly>>& points) {
  const size_t m = points.size();
  if (m == 0) return {};
  const RingPtr ring = points[0].second.ring();
  for (size_t i = 0; i < m; ++i)
    for (size_t k = i + 1; k < m; ++k)
      if (points[i].first == points[k].first)
        throw std::invalid_argument("interpolate_coeffs: duplicate abscissa");
  std::vector<MultiPoly> dd;
  dd.reserve(m);
  for (const auto& [x, y] : points) dd.push_back(y);
  for (size_t level = 1; level < m; ++level)
    for (size_t i = m - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1])
                  .scaled(inverse(points[i].first - points[i - level].first));
  // Horner over the Newton basis, accumulating dense coefficients.
  std::vector<MultiPoly> acc{MultiPoly(ring)};
  for (size_t i = m; i-- > 0;) {
    // acc = acc*(x - x_i) + dd[i]
    std::vector<MultiPoly> next(acc.size() + 1, MultiPoly(ring));
    for (size_t d = 0; d < acc.size(); ++d) {
      next[d + 1] = next[d + 1] + acc[d];
      next[d] = next[d] - acc[d].scaled(points[i].first);
    }
    next[0] = next[0] + dd[i];
    acc = std::move(next);
  }
  while (acc.size() > 1 && acc.back().is_zero()) acc.pop_back();
  return acc;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a.sign() < 0) out << "-", a = -a;
    } else {
      out << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    first = false;
    bool all_zero = std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
    bool unit = (a == Rational(1));
    if (all_zero || !unit) out << a.str();
    bool printed = all_zero || !unit;
    for (size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (printed) out << "*";
      out << ring_->name(i);
      if (m[i] != 1) out << "^" << m[i];
      printed = true;
    }
  }
  return out.str();
}

}  // namespace matchlab
