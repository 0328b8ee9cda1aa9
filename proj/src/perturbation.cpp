#include <matchlab/perturbation.hpp>

#include <matchlab/combinatorics.hpp>

#include <climits>
#include <map>
#include <functional>
#include <stdexcept>

namespace matchlab {

namespace {

MultiPoly poly1_to_multipoly(const Poly1& p, const RingPtr& ring,
                             const std::string& atom) {
  MultiPoly out(ring);
  size_t idx = ring->index(atom);
  Monomial m(ring->size(), 0);
  for (long d = 0; d <= p.degree(); ++d) {
    m[idx] = static_cast<int>(d);
    out.add_term(m, p.coeff(d));
  }
  return out;
}

Poly1 multipoly_to_poly1(const MultiPoly& p, const std::string& atom) {
  std::vector<MultiPoly> cs = p.coefficients_in(atom);
  std::vector<Rational> out(cs.size());
  for (size_t d = 0; d < cs.size(); ++d) out[d] = cs[d].as_rational();
  return Poly1(atom, std::move(out));
}

void for_each_weight_multiset(
    long h, const std::function<void(const std::vector<std::pair<long, long>>&)>& fn) {
  std::vector<std::pair<long, long>> parts;  // (s, multiplicity)
  std::function<void(long, long)> rec = [&](long remaining, long max_part) {
    if (remaining == 0) {
      fn(parts);
      return;
    }
    for (long p = std::min(remaining, max_part); p >= 1; --p) {
      long count = 0;
      for (long used = p; used <= remaining; used += p) {
        ++count;
        parts.emplace_back(p + 1, count);
        rec(remaining - used, p - 1);
        parts.pop_back();
      }
    }
  };
  rec(h, h);
}

// a_h from rational-function u values: the coefficient-map multiset formula
// with u_s allowed to depend on j.
RationalFunction a_h_from_uvalues(const std::map<long, RationalFunction>& uvals,
                                  const Rational& r, long h) {
  RationalFunction total;
  if (h == 0)
    return RationalFunction::from_poly(Poly1::constant("j", Rational(1)));
  for_each_weight_multiset(h, [&](const std::vector<std::pair<long, long>>& parts) {
    RationalFunction coeff =
        RationalFunction::from_poly(Poly1::constant("j", Rational(1)));
    long total_s = 0;
    for (const auto& [s, count] : parts) {
      auto it = uvals.find(s);
      if (it == uvals.end())
        throw std::invalid_argument("a_h_from_uvalues: missing u_" + std::to_string(s));
      Rational scale = Rational((s % 2 == 0) ? -1 : 1, s) * inverse(r.pow(s));
      RationalFunction unit =
          it->second * RationalFunction::from_poly(Poly1::constant("j", scale));
      for (long t = 0; t < count; ++t) coeff = coeff * unit;
      coeff = coeff * RationalFunction::from_poly(
                          Poly1::constant("j", inverse(Rational(factorial(count)))));
      total_s += s * count;
    }
    total = total + coeff * RationalFunction::from_poly(
                                falling_factorial_poly("j", total_s));
  });
  return total;
}

}  // namespace

long Perturbation::z_min() const {
  long out = LONG_MAX;
  for (const auto& t : terms) out = std::min(out, t.z);
  return out;
}

TruncatedSeries build_perturbed_f(const USequence& u, const Perturbation& pert,
                                  long s_max) {
  for (const auto& t : pert.terms)
    if (t.z < 2) throw std::invalid_argument("build_perturbed_f: z >= 2 required");

  RingPtr ring = make_ring({"j"});
  std::vector<Poly1> a(s_max + 1);
  for (long h = 0; h <= s_max; ++h) a[h] = a_poly_in_j(u, h);

  TruncatedSeries f("nu", s_max, ring);
  for (long h = 0; h <= s_max; ++h)
    f.set_coeff(h, poly1_to_multipoly(a[h], ring, "j"));
  for (const auto& t : pert.terms) {
    if (t.z > s_max) continue;
    Poly1 weight = falling_factorial_poly("j", t.z).scaled(t.c * inverse(u.r.pow(t.z)));
    for (long h = t.z; h <= s_max; ++h) {
      Poly1 shifted = a[h - t.z].shifted_arg(Rational(-t.z));  // a'_{h-z}(j-z)
      f.set_coeff(h, f.coeff(h) + poly1_to_multipoly(weight * shifted, ring, "j"));
    }
  }
  return f;
}

XXSolution solve_xx(const USequence& u, const Perturbation& pert, long s_max) {
  if (u.symbolic) throw std::invalid_argument("solve_xx: numeric u required");
  if (s_max < 2 || s_max > 12)
    throw std::invalid_argument("solve_xx: 2 <= s_max <= 12 (desk scale)");
  if (!u.covers(s_max + 1))
    throw std::invalid_argument("solve_xx: u must cover s <= s_max+1");
  for (const auto& t : pert.terms)
    if (t.z < 2) throw std::invalid_argument("solve_xx: z >= 2 required");

  const Rational r = u.r;
  TruncatedSeries f = build_perturbed_f(u, pert, s_max);

  XXSolution sol;
  sol.r = r;
  sol.pert = pert;
  std::map<long, RationalFunction> uvals;
  for (long s = 2; s <= s_max + 1; ++s)
    uvals[s] = RationalFunction::from_poly(
        Poly1::constant("j", u.u[s].as_rational()));

  for (long s = 2; s <= s_max; ++s) {
    long h = s - 1;
    RationalFunction target =
        RationalFunction::from_poly(multipoly_to_poly1(f.coeff(h), "j"));
    RationalFunction without = a_h_from_uvalues(uvals, r, h);  // xx_s = 0 so far
    Poly1 mult = falling_factorial_poly("j", s).scaled(
        Rational((s % 2 == 0) ? -1 : 1, s) * inverse(r.pow(s)));
    if (mult.is_zero())
      throw ConsistencyError("solve_xx: zero multiplier at s=" + std::to_string(s));
    RationalFunction xx =
        (target - without) / RationalFunction::from_poly(mult);
    sol.xx.emplace(s, xx);
    uvals[s] = uvals[s] + xx;
  }

  // Back-substitution: the regenerated orders must reproduce F exactly.
  for (long h = 0; h <= s_max - 1; ++h) {
    RationalFunction lhs = a_h_from_uvalues(uvals, r, h);
    RationalFunction rhs =
        RationalFunction::from_poly(multipoly_to_poly1(f.coeff(h), "j"));
    if (!(lhs == rhs))
      throw ConsistencyError("solve_xx: back-substitution failed at order " +
                             std::to_string(h));
  }
  return sol;
}

namespace {

// Rational function with a symbolic-coefficient numerator: num lives in the
// ring {j, c...}, den in Q[j]. Divisors must have c-free numerators.
struct SRat {
  MultiPoly num;
  Poly1 den;

  static SRat from_multipoly(MultiPoly p) {
    return SRat{std::move(p), Poly1("j", {Rational(1)})};
  }
};

MultiPoly times_jpoly(const MultiPoly& p, const Poly1& q) {
  return p * poly1_to_multipoly(q, p.ring(), "j");
}

// Group terms by their c-exponents; each slice is a polynomial in j.
std::map<Monomial, Poly1> j_slices(const MultiPoly& p) {
  const RingPtr& ring = p.ring();
  size_t j_idx = ring->index("j");
  std::map<Monomial, std::vector<Rational>> buckets;
  for (const auto& [m, coeff] : p.terms()) {
    Monomial key = m;
    int e = key[j_idx];
    key[j_idx] = 0;
    auto& v = buckets[key];
    if (static_cast<long>(v.size()) <= e) v.resize(e + 1);
    v[e] = coeff;
  }
  std::map<Monomial, Poly1> out;
  for (auto& [key, coeffs] : buckets) out.emplace(key, Poly1("j", std::move(coeffs)));
  return out;
}

MultiPoly from_j_slices(const RingPtr& ring, const std::map<Monomial, Poly1>& slices) {
  size_t j_idx = ring->index("j");
  MultiPoly out(ring);
  for (const auto& [key, poly] : slices) {
    Monomial m = key;
    for (long d = 0; d <= poly.degree(); ++d) {
      m[j_idx] = static_cast<int>(d);
      out.add_term(m, poly.coeff(d));
    }
  }
  return out;
}

SRat reduced(MultiPoly num, Poly1 den) {
  if (den.is_zero()) throw std::domain_error("SRat: zero denominator");
  if (num.is_zero()) return SRat{std::move(num), Poly1("j", {Rational(1)})};
  std::map<Monomial, Poly1> slices = j_slices(num);
  Poly1 content = den;
  for (const auto& [key, poly] : slices) {
    content = poly_gcd(content, poly);
    if (content.degree() == 0) break;
  }
  if (content.degree() > 0) {
    for (auto& [key, poly] : slices) poly = divmod(poly, content).first;
    den = divmod(den, content).first;
  }
  Rational lead = den.leading();
  if (lead != Rational(1)) {
    den = den.scaled(inverse(lead));
    for (auto& [key, poly] : slices) poly = poly.scaled(inverse(lead));
  }
  return SRat{from_j_slices(num.ring(), slices), std::move(den)};
}

SRat operator+(const SRat& a, const SRat& b) {
  return reduced(times_jpoly(a.num, b.den) + times_jpoly(b.num, a.den),
                 a.den * b.den);
}

SRat operator-(const SRat& a, const SRat& b) {
  return reduced(times_jpoly(a.num, b.den) - times_jpoly(b.num, a.den),
                 a.den * b.den);
}

SRat operator*(const SRat& a, const SRat& b) {
  return reduced(a.num * b.num, a.den * b.den);
}

// Division by a shift whose numerator carries no c atom.
SRat divided_by(const SRat& a, const SRat& b) {
  std::map<Monomial, Poly1> slices = j_slices(b.num);
  if (slices.size() != 1 || slices.begin()->first !=
                                Monomial(b.num.ring()->size(), 0))
    throw std::invalid_argument("SRat: divisor numerator must be free of c atoms");
  return reduced(times_jpoly(a.num, b.den), a.den * slices.begin()->second);
}

SRat a_h_symbolic(const std::map<long, SRat>& uvals, const Rational& r, long h,
                  const RingPtr& ring) {
  SRat total = SRat::from_multipoly(MultiPoly(ring));
  if (h == 0) return SRat::from_multipoly(MultiPoly::constant(ring, Rational(1)));
  for_each_weight_multiset(h, [&](const std::vector<std::pair<long, long>>& parts) {
    SRat coeff = SRat::from_multipoly(MultiPoly::constant(ring, Rational(1)));
    long total_s = 0;
    for (const auto& [s, count] : parts) {
      Rational scale = Rational((s % 2 == 0) ? -1 : 1, s) * inverse(r.pow(s));
      SRat unit = uvals.at(s);
      unit.num = unit.num.scaled(scale);
      for (long t = 0; t < count; ++t) coeff = coeff * unit;
      coeff.num = coeff.num.scaled(inverse(Rational(factorial(count))));
      total_s += s * count;
    }
    total = total + coeff * SRat::from_multipoly(poly1_to_multipoly(
                                falling_factorial_poly("j", total_s), ring, "j"));
  });
  return total;
}

}  // namespace

std::string SymbolicShift::str() const {
  if (den.degree() == 0 && den.coeff(0) == Rational(1)) return num.str();
  return "(" + num.str() + ") / (" + den.str() + ")";
}

std::map<long, SymbolicShift> solve_xx_symbolic(const USequence& u,
                                                const std::vector<long>& zs,
                                                long s_max) {
  if (u.symbolic) throw std::invalid_argument("solve_xx_symbolic: numeric u required");
  if (s_max < 2 || s_max > 12)
    throw std::invalid_argument("solve_xx_symbolic: 2 <= s_max <= 12");
  if (!u.covers(s_max + 1))
    throw std::invalid_argument("solve_xx_symbolic: u must cover s <= s_max+1");
  for (long z : zs)
    if (z < 2) throw std::invalid_argument("solve_xx_symbolic: z >= 2 required");

  std::vector<std::string> names{"j"};
  for (long z : zs) names.push_back("c" + std::to_string(z));
  RingPtr ring = make_ring(names);
  const Rational r = u.r;

  // F coefficients with symbolic magnitudes (denominator-free).
  std::vector<Poly1> a(s_max + 1);
  for (long h = 0; h <= s_max; ++h) a[h] = a_poly_in_j(u, h);
  std::vector<MultiPoly> f(s_max + 1, MultiPoly(ring));
  for (long h = 0; h <= s_max; ++h) f[h] = poly1_to_multipoly(a[h], ring, "j");
  for (long z : zs) {
    MultiPoly weight =
        poly1_to_multipoly(
            falling_factorial_poly("j", z).scaled(inverse(r.pow(z))), ring, "j") *
        MultiPoly::atom(ring, "c" + std::to_string(z));
    for (long h = z; h <= s_max; ++h)
      f[h] = f[h] + weight * poly1_to_multipoly(a[h - z].shifted_arg(Rational(-z)),
                                                ring, "j");
  }

  std::map<long, SRat> uvals;
  for (long s = 2; s <= s_max + 1; ++s)
    uvals.emplace(s, SRat::from_multipoly(
                         MultiPoly::constant(ring, u.u[s].as_rational())));

  std::map<long, SymbolicShift> out;
  for (long s = 2; s <= s_max; ++s) {
    long h = s - 1;
    SRat target = SRat::from_multipoly(f[h]);
    SRat without = a_h_symbolic(uvals, r, h, ring);
    SRat mult = SRat::from_multipoly(poly1_to_multipoly(
        falling_factorial_poly("j", s).scaled(
            Rational((s % 2 == 0) ? -1 : 1, s) * inverse(r.pow(s))),
        ring, "j"));
    SRat xx = divided_by(target - without, mult);
    out.emplace(s, SymbolicShift{xx.num, xx.den});
    uvals.at(s) = uvals.at(s) + xx;
  }

  // Back-substitution, order by order, with the c atoms still symbolic.
  for (long h = 0; h <= s_max - 1; ++h) {
    SRat lhs = a_h_symbolic(uvals, r, h, ring);
    SRat rhs = SRat::from_multipoly(f[h]);
    SRat diff = lhs - rhs;
    if (!diff.num.is_zero())
      throw ConsistencyError("solve_xx_symbolic: back-substitution failed at order " +
                             std::to_string(h));
  }
  return out;
}

USequence solver_default_u(long s_max, std::uint64_t seed) {
  // SplitMix64 stream; bounded rationals, reproducible across platforms.
  auto next = [state = seed]() mutable {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  std::vector<Rational> vals;
  for (long s = 2; s <= s_max + 1; ++s) {
    long num = static_cast<long>(next() % 199ull) - 99;  // [-99, 99]
    long den = static_cast<long>(next() % 99ull) + 1;    // [1, 99]
    vals.emplace_back(num, den);
  }
  return u_arbitrary_values(std::move(vals), Rational(1));
}

Report verify_degree_property(const XXSolution& sol, long z_min) {
  Report rep;
  rep.suite = "xx-degree";
  rep.params = {{"z_min", std::to_string(z_min)}, {"r", sol.r.str()}};
  for (const auto& [s, xx] : sol.xx) {
    long dn = xx.num().degree();
    long dd = xx.den().degree();
    std::string got = "deg num=" + std::to_string(dn) + ", deg den=" + std::to_string(dd);
    std::map<std::string, std::string> params{{"s", std::to_string(s)},
                                              {"xx", xx.str()}};
    if (z_min >= 4) {
      rep.add("xx-decay-in-j", params, "deg num < deg den", got, dn < dd);
    } else {
      rep.add("xx-degrees-recorded", params, "(recorded)", got, true);
    }
  }
  return rep;
}

Report verify_perturbed_log_identities(const Rational& r, const Perturbation& pert, long h_max,
                         long j_lo, long j_hi) {
  for (const auto& t : pert.terms)
    if (t.z < 4)
      throw std::invalid_argument("verify_perturbed_log_identities: all z must be >= 4");
  if (j_lo > h_max + 2 || j_hi < 3 * h_max + 3)
    throw std::invalid_argument(
        "verify_perturbed_log_identities: window must contain [h_max+2, 3*h_max+3]");

  USequence u = u_sequence(r, h_max + 1);
  TruncatedSeries f = build_perturbed_f(u, pert, h_max);

  Report rep;
  rep.suite = "awesome";
  std::string pert_str;
  for (const auto& t : pert.terms)
    pert_str += "(z=" + std::to_string(t.z) + ",c=" + t.c.str() + ")";
  if (pert_str.empty()) pert_str = "(none)";
  rep.params = {{"r", r.str()},
                {"h_max", std::to_string(h_max)},
                {"perturbation", pert_str},
                {"j_lo", std::to_string(j_lo)},
                {"j_hi", std::to_string(j_hi)}};

  // Evaluate F at numeric j across the window, take logs.
  std::vector<TruncatedSeries> logs;
  for (long j = j_lo; j <= j_hi; ++j) {
    TruncatedSeries fj("nu", h_max, scalar_ring());
    for (long h = 0; h <= h_max; ++h)
      fj.set_coeff(h, MultiPoly::constant(
                          scalar_ring(),
                          f.coeff(h).substitute("j", Rational(j)).as_rational()));
    logs.push_back(series_log(fj));
  }

  for (long h = 1; h <= h_max; ++h) {
    std::vector<std::pair<Rational, Rational>> nodes;
    for (long j = j_lo; j < j_lo + h + 2; ++j)
      nodes.emplace_back(Rational(j), logs[j - j_lo].coeff(h).as_rational());
    Poly1 poly = interpolate(nodes, "j");
    bool degree_ok = true;
    for (long j = j_lo + h + 2; j <= j_hi && degree_ok; ++j)
      degree_ok = (poly.eval(Rational(j)) == logs[j - j_lo].coeff(h).as_rational());
    rep.add("perturbed-log-degree-bound",
            {{"h", std::to_string(h)}, {"perturbation", pert_str}}, "exact fit",
            degree_ok ? "exact fit" : "residual nonzero", degree_ok);

    Rational expected = Rational(1, (h + 1) * h) * (inverse(r.pow(h)) - Rational(2));
    Rational lead = poly.coeff(h + 1);
    rep.add("perturbed-log-leading-coefficient",
            {{"h", std::to_string(h)}, {"r", r.str()}, {"perturbation", pert_str}},
            expected.str(), lead.str(), lead == expected);
  }
  return rep;
}

}  // namespace matchlab
