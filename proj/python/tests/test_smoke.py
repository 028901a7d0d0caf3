from fractions import Fraction

import pytest

import amoebius


def test_build_and_count():
    g = amoebius.Group("S:4")
    assert g.order == 24
    assert g.subgroup_count == 30
    assert g.subgroup_orders()[0] == 1 and g.subgroup_orders()[-1] == 24
    assert g.mu()[-1] == 1
    assert g.mu_sigma_sum() == 1
    assert repr(g) == "Group('S:4', order=24)"


def test_phi_three_ways():
    g = amoebius.Group("A:5")
    assert {g.phi(2, method=m) for m in ("hall", "classes", "brute")} == {2280}
    assert g.phi(1) == 0


def test_probabilities_are_fractions():
    p, p_star = amoebius.Group("C:8").probabilities(2)
    assert p == Fraction(3, 4)
    assert p_star == Fraction(7, 16)


def test_big_integers_survive():
    # values past 32 bits cross the binding as decimal strings
    assert amoebius.Group("A:5").phi(6) == amoebius.Group("A:5").phi(6, method="classes")
    assert amoebius.Group("A:5").phi(6) > 2**31


def test_table_rows():
    rows = amoebius.table_rows(amoebius.Group("S:4"))
    assert len(rows) == 11
    assert rows[0]["order"] == "24" and rows[-1]["lambda"] == "-1"
    assert "| subgroup |" in amoebius.Group("D:7").table()


def test_mu_lambda_and_beta():
    g = amoebius.Group("A:5")
    report = g.check_mu_lambda()
    assert report["passes"] and report["violations"] == []
    assert sorted(g.beta_vector(1)) == sorted([24, 24, 20, 39, 44, 59])
    assert g.beta_rank(6) == 3
    s = g.strana(2)
    assert s["zero"] and s["forms_agree"]


def test_verify():
    report = amoebius.Group("S:3").verify(t_max=2)
    assert report["group"] == "S:3"
    assert report["passed"]


def test_errors():
    with pytest.raises(amoebius.ParseError):
        amoebius.Group("X:4")
    with pytest.raises(amoebius.AmoebiusError):
        amoebius.Group("S:4").table(aut="nonsense")
    with pytest.raises(ValueError):
        amoebius.Group("S:3").phi(1, method="guess")
