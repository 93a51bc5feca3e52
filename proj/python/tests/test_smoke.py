import math

import pytest

import gnm


def petersen():
    edges = []
    for i in range(5):
        edges += [(i, (i + 1) % 5), (5 + i, 5 + (i + 2) % 5), (i, 5 + i)]
    return gnm.Graph(10, edges)


def test_graph_basics():
    g = gnm.Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert (g.n, g.m) == (4, 3)
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    assert g.adjacent(2, 1)
    assert gnm.complement(g).m == 3
    with pytest.raises(ValueError):
        gnm.Graph(3, [(0, 3)])


def test_alpha_examples():
    assert gnm.alpha_exact(gnm.Graph(5))["alpha"] == 5
    assert gnm.alpha_exact(petersen())["alpha"] == 4
    res = gnm.alpha_exact(gnm.sample_gnm(40, 150, seed=3))
    assert res["alpha"] == len(res["witness"])


def test_alpha_matches_bruteforce():
    for stream in range(30):
        g = gnm.sample_gnp(12, 0.4, seed=1, stream=stream)
        assert gnm.alpha_exact(g)["alpha"] == gnm.alpha_bruteforce(g)["alpha"]


def test_budget_exceeded_carries_best_set():
    g = gnm.sample_gnm(120, 500, seed=5, stream=1)
    with pytest.raises(gnm.BudgetExceeded) as info:
        gnm.alpha_exact(g, budget=3)
    assert gnm.is_independent(g, info.value.best_found)


def test_sampling_is_deterministic():
    assert gnm.sample_gnm(30, 60, seed=9, stream=2) == gnm.sample_gnm(30, 60, seed=9, stream=2)
    assert gnm.sample_gnm(30, 60, seed=9, stream=2) != gnm.sample_gnm(30, 60, seed=9, stream=3)


def test_extended_sets():
    p3 = gnm.Graph(3, [(0, 1), (1, 2)])
    assert gnm.is_extended_ind_set(p3, [0, 2])
    assert not gnm.is_extended_ind_set(p3, [0, 1], [(0, 1)])
    assert gnm.classify_pair(p3, [0, 1], [(1, 0)]) == {"U": True, "W": False, "X": False, "Y": False, "Z": False}
    p4 = gnm.Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert gnm.extend_from_mis(p4, [0, 2]) == {"K": [0, 1, 2, 3], "M": [(0, 1), (2, 3)], "order": 2}
    with pytest.raises(gnm.NotMaximum):
        gnm.extend_from_mis(p4, [1])
    assert gnm.max_extended_order(p3, "brute")["order"] == 2
    assert gnm.count_variables(p3, 2, 0) == {"U": 1, "W": 1, "X": 1, "Y": 1, "Z": 1}


def test_prediction():
    rep = gnm.predict(1000, 7944)
    assert rep["interval"] == [rep["k_0"] - 1, rep["k_0"]]
    assert rep["k_0"] <= rep["k_V"]
    assert gnm.k_vanilla(10, 0) == 10
    assert math.isclose(math.exp(gnm.log_expected_ind_sets(4, 1, 2)), 5.0, rel_tol=1e-12)
    assert math.isclose(gnm.phi(0.0), math.exp(-1.0))
    with pytest.raises(ValueError):
        gnm.predict(10, 46)


def test_enumeration():
    res = gnm.count_min2_matrices(2, 3, 4)
    assert res["C"] == "9" and math.isclose(res["f"], 0.6)
    assert res["mode"] == "exact-int"
    assert gnm.count_min2_matrices(500, 80, 1553)["mode"] == "log-float"
    assert math.isclose(gnm.phi_exact_mixture(6, 9, 2, 0), 6 / 2002, rel_tol=1e-12)
    assert abs(gnm.solve_lambda_c(2.5) - 1.230) < 0.005
    assert math.isclose(gnm.trunc_pmf(1.0, 2), 0.5 / (math.e - 2))


def test_verify_suite():
    assert "janson" in gnm.suite_names()
    rep = gnm.run_suite("janson")
    assert rep["passed"]
    with pytest.raises(ValueError):
        gnm.run_suite("nope")
