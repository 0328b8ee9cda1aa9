"""Smoke tests for the python bindings."""

from fractions import Fraction as F

import matchlab as ml


def test_scalar_combinatorics():
    assert ml.bernoulli(0) == F(1)
    assert ml.bernoulli(1) == F(-1, 2)
    assert ml.bernoulli(2) == F(1, 6)
    assert ml.stirling_first_unsigned(4, 2) == "11"
    assert ml.stirling_second(4, 2) == "7"
    assert ml.pw_polynomial(1) == [F(0), F(-1, 2), F(1, 2)]
    assert ml.delta_binomial(3, 3) == F(6)
    assert ml.delta_binomial(3, 2) == F(0)


def test_u_sequence_and_coefficients():
    assert ml.u_sequence(2, 5) == [F(6), F(20), F(70), F(252)]
    assert ml.u_sequence(3, 2) == [F(15)]
    a = ml.a_numeric(2, 2)
    assert a == [F(1), F(-3, 2)]
    # a_1(r, j) = j(j-1)(-1 + 1/(2r)) read off the polynomial form
    coeffs = ml.a_poly_in_j(2, 1)
    assert coeffs == [F(0), F(3, 4), F(-3, 4)]


def test_verify_pernici():
    rep = ml.verify_pernici(2, 3)
    assert rep["all_pass"]
    leading = {
        c["params"]["h"]: c["got"]
        for c in rep["checks"]
        if c["name"] == "log-leading-coefficient"
    }
    assert leading["1"] == "-3/4"


def test_positivity_engine_values():
    assert ml.second_identity(2, 3, 1) == F(1, 4)
    assert ml.second_identity(3, 4, 0) == F(2, 27)
    a0 = ml.alpha0_coefficients(2, 5, 1, 2)
    assert a0[0] == F(0) and a0[1] == F(5, 2)
    a3 = ml.alpha0_coefficients(2, 0, 3, 3)
    assert a3[:3] == [F(0), F(0), F(1, 4)]


def test_combinatorial_identities():
    assert ml.phi_sum(3, 1, [2, 3, 4]) == F(0)
    assert ml.phi_sum(4, 2, ["1/2", 3, -2, 7]) == F(0)
    assert ml.permutation_identity_lhs([2, 1, 1], 1) == F(0)
    assert ml.alternating_stirling2(12) == F(0)
    assert ml.alternating_stirling2(1) == F(1)


def test_solver():
    xx = ml.solve_xx([(4, 1)], 6, seed=12345)
    assert xx[2] == "0" and xx[3] == "0" and xx[4] == "0"
    assert "j" in xx[5]


def test_graphs():
    g = ml.BipartiteGraph.from_rows(["11", "11"])
    assert g.n == 2 and g.r == 2 and g.v == 4
    assert ml.matching_vector(g) == [1, 4, 2]
    ok, cell = ml.positivity_check(g)
    assert ok and cell is None
    assert ml.complete_graph_matchings(6, 3) == 15
    assert ml.enumerate_count(3, 2) == (6, 0)


def test_sampling_is_deterministic():
    a = ml.sample_graph(8, 3, 42).to_text()
    b = ml.sample_graph(8, 3, 42).to_text()
    assert a == b
    st1 = ml.weak_positivity_stats(8, 3, 2, 1, 50, 7)
    st2 = ml.weak_positivity_stats(8, 3, 2, 1, 50, 7)
    assert st1["alpha_hat"] == st2["alpha_hat"]
    assert st1["nonneg_count"] == 50


def test_run_suite():
    reports = ml.run_suite("permutation", seed=1)
    assert len(reports) == 1
    assert reports[0]["all_pass"]
