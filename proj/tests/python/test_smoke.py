"""End-to-end smoke tests for the python bindings."""

import pytest

import mahon


def test_worked_example_statistics():
    pi = mahon.Element(2, "-3 1 -6 2 -5 -4")
    assert mahon.stat("lenb", pi) == 26
    assert mahon.stat("fmaj", pi) == 26
    assert mahon.stat("nmaj", pi) == 24
    assert mahon.stat("inv", pi, order="integer") == 8
    assert mahon.stat("maj", pi, order="integer") == 6

    g = mahon.Element(4, "2[1] 1[3] 5 4 3[2]")
    assert mahon.stat("rmaj", g) == 19
    assert mahon.stat("rinv", g) == 16
    assert mahon.stat("fmaf", g) == 34
    assert mahon.stat("maj", g, order="colorblock") == 8


def test_element_construction_and_decomposition():
    pi = mahon.Element(3, [2, 1, 3], [1, 0, 2])
    assert pi.n == 3
    assert pi.sigma == [2, 1, 3]
    assert str(pi) == "2[1] 1 3[2]"
    assert pi.abs_perm() == mahon.Element(1, "2 1 3")

    tau, rho = mahon.decompose(pi, "colorblock")
    assert [tau.sigma[i - 1] for i in rho.sigma] == pi.sigma
    assert [tau.z[i - 1] for i in rho.sigma] == pi.z

    x = mahon.Element(3, "2[1] 3 1[2]")
    y = mahon.Element(3, "3 1[1] 2[2]")
    assert mahon.compose(x, y) == mahon.Element(3, "1[2] 2[2] 3[2]")

    with pytest.raises(ValueError):
        mahon.Element(2, "1 1")


def test_distribution_matches_product():
    d = mahon.distribution("b", 2, "lenb")
    assert str(d) == "1 + 2q + 2q^2 + 2q^3 + q^4"
    assert d.eval_one().integer_value() == 8

    product = mahon.q_bracket(2, r=2) * mahon.q_bracket(4, r=2)
    assert d == product
    assert d.coeff(3).integer_value() == 2

    g = mahon.distribution("g", 2, "leng", r=3)
    assert g.eval_one().integer_value() == 18

    with pytest.raises(ValueError):
        mahon.distribution("g", 2, "leng")  # r required


def test_cyclotomic_ring():
    w = mahon.omega(3)
    assert w.pow(3) == mahon.Cyc(3, 1)
    assert (w + w.pow(2)) == mahon.Cyc(3, -1)
    assert not w.is_integer()


def test_verify_and_catalog():
    rep = mahon.verify("S.gessel-simion", n=3)
    assert rep["verdict"] == "equal"
    assert rep["as_expected"] is True
    assert rep["count"] == 6
    assert rep["diff"]["terms"] == []

    erratum = mahon.verify("D.len.invA.printed", n=2)
    assert erratum["verdict"] == "expected-mismatch-confirmed"
    assert erratum["as_expected"] is True
    assert "witness" in erratum

    chi = mahon.verify("G.len.chi", n=2, r=3, a=1, b=2)
    assert chi["verdict"] == "equal"

    with pytest.raises(KeyError):
        mahon.verify("no.such.entry", n=2)
    with pytest.raises(ValueError):
        mahon.verify("G5.fmaf-rinv", n=2, r=3)  # stated only for even r

    rows = mahon.identities("G5")
    assert len(rows) == 14
    assert all(row["source"] for row in rows)
    assert len(mahon.identities()) == 47


def test_verify_range_sweep():
    reports = mahon.verify_range(filter="S", max_n=4)
    assert len(reports) == 8
    assert all(rep["as_expected"] for rep in reports)


def test_selftest():
    checks = mahon.selftest()
    assert len(checks) == 8
    assert all(c["passed"] for c in checks)
