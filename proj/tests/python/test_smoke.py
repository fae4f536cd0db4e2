import math

import pytest

import cellforms as cf


def poly_sum(*polygons):
    return [{"coeff": "1", "polygon": list(p)} for p in polygons]


def test_enumeration():
    assert len(cf.polygons(5)) == 24
    assert cf.basis01(4) == [["0", "1", "t1", "inf"], ["t1", "0", "1", "inf"]]
    assert len(cf.ideal_generators(6)) == 15
    assert cf.canonicalize(["0", "1", "t1", "t2", "inf", "t3"]) == ["t3", "0", "1", "t1", "t2", "inf"]
    assert cf.shuffle(["t1"], ["t2"]) == [["t1", "t2"], ["t2", "t1"]]


def test_cell_form_and_rank():
    f = cf.cell_form(["0", "1", "t1", "t3", "inf", "t2"])
    assert f == [{"coeff": "1", "sign": 1, "factors": [["0", "t2"], ["t1", "1"], ["t3", "t1"]]}]
    forms = [poly_sum(p) for p in cf.polygons(5)]
    assert cf.rank(forms) == 6
    assert cf.verify_kernel(6)["ok"]


def test_reduce():
    r = cf.reduce(poly_sum(["0", "t1", "1", "inf"]))
    assert r["coefficients"] == ["-1", "-1"]


def test_convergence_and_basis():
    omega = poly_sum(["0", "1", "t1", "t2", "inf", "t3"], ["0", "1", "t2", "t1", "inf", "t3"])
    assert cf.converges_on_delta(omega)
    assert not cf.converges_on_delta(poly_sum(["0", "1", "t1", "t2", "inf", "t3"]))
    assert cf.convergent_basis(5)["dimension"] == 1
    db = cf.delta_basis(6)
    assert db["report"]["status"] == "MATCH"


def test_periods():
    r = cf.integrate(poly_sum(["t2", "0", "1", "t1", "inf"]), tol=1e-8)
    assert abs(r["value"] - math.pi**2 / 6) < 1e-8
    assert r["fit"]["terms"] == [{"coeff": "1", "mzv": "zeta(2)"}]
    assert cf.mzv_fit(0.6010284515797971, 3)["terms"][0]["coeff"] == "1/2"
    assert cf.zagier_dims(10) == [1, 0, 1, 1, 1, 2, 2, 3, 4, 5, 7]
    assert cf.mzv_values(5)[1]["name"] == "zeta(2)*zeta(3)"


def test_errors():
    with pytest.raises(cf.DomainError):
        cf.polygons(9)
    with pytest.raises(ValueError):
        cf.canonicalize(["0", "0", "t1", "inf"])
    with pytest.raises(cf.DomainError):
        cf.integrate(poly_sum(["0", "1", "t1", "t2", "inf"]))
    omega = poly_sum(["0", "1", "t1", "t2", "inf", "t3"], ["0", "1", "t2", "t1", "inf", "t3"])
    with pytest.raises(cf.NoConvergenceError):
        cf.integrate(omega, tol=1e-15, levels=2)


def test_cli_entry():
    code, out = cf.run(["zagier-dims", "--N", "4"])
    assert code == 0
    assert out.split() == ["[", "1,", "0,", "1,", "1,", "1", "]"]
    code, _ = cf.run(["verify", "--n", "5"])
    assert code == 0
