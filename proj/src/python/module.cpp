#include <matchlab/bipartite.hpp>
#include <matchlab/combinatorics.hpp>
#include <matchlab/cycle_correction.hpp>
#include <matchlab/matching_series.hpp>
#include <matchlab/perturbation.hpp>
#include <matchlab/positivity.hpp>
#include <matchlab/report.hpp>
#include <matchlab/stirling_identities.hpp>
#include <matchlab/suites.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace matchlab;

namespace {

// Exact values cross the boundary as fractions.Fraction.
py::object to_fraction(const Rational& r) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(py::int_(py::str(r.num().get_str())),
                  py::int_(py::str(r.den().get_str())));
}

Rational from_py(const py::handle& h) {
  if (py::isinstance<py::int_>(h))
    return Rational::from_string(py::str(h).cast<std::string>());
  if (py::isinstance<py::str>(h))
    return Rational::from_string(h.cast<std::string>());
  // fractions.Fraction or anything with numerator/denominator
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator")) {
    std::string num = py::str(h.attr("numerator")).cast<std::string>();
    std::string den = py::str(h.attr("denominator")).cast<std::string>();
    return Rational::from_string(num + "/" + den);
  }
  throw py::type_error("expected int, Fraction, or 'p/q' string");
}

py::list fractions(const std::vector<Rational>& values) {
  py::list out;
  for (const auto& v : values) out.append(to_fraction(v));
  return out;
}

py::dict report_to_dict(const Report& rep) {
  py::dict out;
  out["suite"] = rep.suite;
  out["params"] = rep.params;
  out["all_pass"] = rep.all_pass();
  py::list checks;
  for (const auto& c : rep.checks) {
    py::dict ck;
    ck["name"] = c.name;
    ck["params"] = c.params;
    ck["expected"] = c.expected;
    ck["got"] = c.got;
    ck["pass"] = c.pass;
    checks.append(ck);
  }
  out["checks"] = checks;
  return out;
}

BipartiteGraph graph_from_rows(const std::vector<std::string>& lines) {
  std::string joined;
  for (const auto& l : lines) joined += l + "\n";
  return BipartiteGraph::parse_text(joined);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact-arithmetic workbench for matching series, combinatorial "
            "identities and bipartite graph positivity";

  // ---- scalar combinatorics ----
  m.def("bernoulli", [](long n) { return to_fraction(bernoulli(n)); }, py::arg("m"));
  m.def("stirling_first_unsigned",
        [](long n, long k) { return py::cast(stirling_first_unsigned(n, k).get_str());
        }, py::arg("n"), py::arg("k"));
  m.def("stirling_second",
        [](long n, long k) { return py::cast(stirling_second(n, k).get_str()); },
        py::arg("n"), py::arg("k"));
  m.def("pw_polynomial",
        [](long w) {
          Poly1 p = pw_polynomial(w);
          py::list out;
          for (long d = 0; d <= p.degree(); ++d) out.append(to_fraction(p.coeff(d)));
          return out;
        },
        py::arg("w"), "Coefficients, lowest degree first.");

  // ---- matching series ----
  m.def("u_sequence",
        [](const py::handle& r, long s_max) {
          USequence u = u_sequence(from_py(r), s_max);
          std::vector<Rational> vals;
          for (long s = 2; s <= u.s_max(); ++s) vals.push_back(u.u[s].as_rational());
          return fractions(vals);
        },
        py::arg("r"), py::arg("s_max"), "u_2..u_smax as Fractions.");
  m.def("a_numeric",
        [](const py::handle& r, long j) { return fractions(a_numeric(from_py(r), j)); },
        py::arg("r"), py::arg("j"));
  m.def("a_poly_in_j",
        [](const py::handle& r, long h) {
          USequence u = u_sequence(from_py(r), std::max<long>(2, 3 * h + 3));
          Poly1 p = a_poly_in_j(u, h);
          py::list out;
          for (long d = 0; d <= p.degree(); ++d) out.append(to_fraction(p.coeff(d)));
          return out;
        },
        py::arg("r"), py::arg("h"));
  m.def("verify_pernici",
        [](const py::handle& r, long h_max) {
          USequence u = u_sequence(from_py(r), h_max + 1);
          return report_to_dict(
              verify_pernici_identities(u, h_max, h_max + 2, 3 * h_max + 3));
        },
        py::arg("r"), py::arg("h_max"));

  // ---- positivity engine ----
  m.def("second_identity",
        [](const py::handle& r, long k, long i) {
          PositivityContext ctx(from_py(r), i + k, k + 2);
          return to_fraction(ctx.second_identity_value(i, k));
        },
        py::arg("r"), py::arg("k"), py::arg("i"));
  m.def("alpha0_coefficients",
        [](const py::handle& r, long i, long k, long order) {
          PositivityContext ctx(from_py(r), i + k, order);
          TruncatedSeries a0 = ctx.alpha0_series(i, k);
          py::list out;
          for (long d = 0; d <= order; ++d) {
            const MultiPoly& c = a0.coeff(d);
            if (c.is_constant())
              out.append(to_fraction(c.constant_term()));
            else
              out.append(py::str(c.str()));
          }
          return out;
        },
        py::arg("r"), py::arg("i"), py::arg("k"), py::arg("order"),
        "nu-coefficients of alpha0; symbolic entries come back as strings.");
  m.def("delta_binomial",
        [](long k, long d) { return to_fraction(delta_binomial_table(k, d)); },
        py::arg("k"), py::arg("d"));

  // ---- combinatorial identities ----
  m.def("phi_sum",
        [](long g, long w, const py::list& c) {
          std::vector<Rational> vals;
          for (const auto& h : c) vals.push_back(from_py(h));
          return to_fraction(phi_sum(g, w, vals));
        },
        py::arg("g"), py::arg("w"), py::arg("c"));
  m.def("permutation_identity_lhs",
        [](const std::vector<long>& sizes, long w) {
          return to_fraction(permutation_identity_lhs(sizes, w));
        },
        py::arg("sizes"), py::arg("w"));
  m.def("alternating_stirling2",
        [](long m_) { return to_fraction(alternating_stirling2(m_)); }, py::arg("m"));

  // ---- perturbation ----
  m.def("solve_xx",
        [](const std::vector<std::pair<long, py::object>>& pert, long s_max,
           std::uint64_t seed) {
          Perturbation p;
          for (const auto& [z, c] : pert) p.terms.push_back({z, from_py(c)});
          XXSolution sol = solve_xx(solver_default_u(s_max, seed), p, s_max);
          py::dict out;
          for (const auto& [s, xx] : sol.xx)
            out[py::int_(s)] = py::str(xx.str());
          return out;
        },
        py::arg("perturbation"), py::arg("s_max"), py::arg("seed") = 12345,
        "xx_s as canonical 'num / den' strings keyed by s.");

  // ---- graph laboratory ----
  py::class_<BipartiteGraph>(m, "BipartiteGraph")
      .def_static("from_rows", &graph_from_rows, py::arg("rows"),
                  "rows: list of '0'/'1' strings")
      .def_static("parse_text", &BipartiteGraph::parse_text)
      .def_static("parse_json", &BipartiteGraph::parse_json)
      .def_property_readonly("n", &BipartiteGraph::n)
      .def_property_readonly("r", &BipartiteGraph::r)
      .def_property_readonly("v", &BipartiteGraph::v)
      .def("to_text", &BipartiteGraph::to_text);

  m.def("matching_vector", [](const BipartiteGraph& g) {
    py::list out;
    for (const auto& c : matching_vector(g)) out.append(py::int_(py::str(c.get_str())));
    return out;
  });
  m.def("complete_graph_matchings", [](long v, long i) {
    return py::int_(py::str(complete_graph_matchings(v, i).get_str()));
  });
  m.def("positivity_check", [](const BipartiteGraph& g) {
    PositivityVerdict v = positivity_check(g);
    py::object cell = v.satisfies ? static_cast<py::object>(py::none())
                                  : static_cast<py::object>(py::make_tuple(v.k, v.i));
    return py::make_tuple(v.satisfies, cell);
  });
  m.def("enumerate_count",
        [](long n, long r) {
          std::uint64_t violations = 0;
          std::uint64_t total = enumerate_regular_bipartite(
              n, r, [&](const BipartiteGraph& g) {
                if (!positivity_check(g).satisfies) ++violations;
                return true;
              });
          return py::make_tuple(total, violations);
        },
        py::arg("n"), py::arg("r"), "(graph count, positivity violations)");
  m.def("sample_graph",
        [](long n, long r, std::uint64_t seed) {
          return sample_regular_bipartite(n, r, seed);
        },
        py::arg("n"), py::arg("r"), py::arg("seed"));
  m.def("weak_positivity_stats",
        [](long n, long r, long i, long k, long samples, std::uint64_t seed) {
          WeakPositivityStats st = weak_positivity_stats(n, r, i, k, samples, seed);
          py::dict out;
          out["n"] = st.n;
          out["r"] = st.r;
          out["i"] = st.i;
          out["k"] = st.k;
          out["samples"] = st.samples;
          out["nonneg_count"] = st.nonneg_count;
          out["alpha_hat"] = to_fraction(st.alpha_hat);
          out["beta_hat"] = to_fraction(st.beta_hat);
          out["bound"] = st.bound ? to_fraction(*st.bound) : py::none().cast<py::object>();
          out["seed"] = st.seed;
          return out;
        },
        py::arg("n"), py::arg("r"), py::arg("i"), py::arg("k"), py::arg("samples"),
        py::arg("seed"));

  // ---- suites ----
  m.def("run_suite",
        [](const std::string& name, std::uint64_t seed, bool long_mode) {
          suites::Options o;
          o.seed = seed;
          o.long_mode = long_mode;
          py::list out;
          for (const auto& rep : suites::run(name, o)) out.append(report_to_dict(rep));
          return out;
        },
        py::arg("name"), py::arg("seed") = 12345, py::arg("long_mode") = false);
}
