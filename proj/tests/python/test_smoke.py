import os
from fractions import Fraction

import pytest

import liexp

DATA = os.environ.get("LIEXP_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "data"))


def test_catalog():
    assert set(liexp.catalog_names()) == {"galilei", "galilei_ext", "poincare", "newton_hooke", "euclid4"}
    g = liexp.catalog("galilei")
    assert g.name == "galilei"
    assert len(g.generators) == 10
    assert g.bracket("J1", "J2") == "J3"
    assert g.bracket("H", "K1") == "-P1"
    assert g.jacobi_violations() == []


def test_elements():
    g = liexp.catalog("galilei")
    jp = g.named("JP")
    k1 = g.element("K1")
    assert jp.bracket(k1) == g.named("W1")
    assert str(g.element("J2*J1")) == "J1*J2 - J3"
    assert (k1 - k1).is_zero()
    assert g.named("C1").is_central()
    assert not g.element("H").is_central()
    assert (g.element("H") * g.element("H")).degree == 2


def test_identity_and_parameters():
    g = liexp.catalog("galilei")
    ok, residual = g.verify_identity("P1*<W1> + P2*<W2> + P3*<W3>", "0")
    assert ok and residual == "0"
    p = liexp.catalog("poincare")
    assert p.parameters == ["omega"]
    assert p.bracket("K1", "K2") == "omega*J3"
    assert p.specialize({"ω": "-1"}).bracket("K1", "K2") == "-J3"


def test_expand():
    r = liexp.expand("poincare")
    assert r["schema_version"] == 1
    assert r["outcome"]["closed"] is True
    assert r["summary"]["pairs"] == 45
    assert "timing_ms" not in r
    assert liexp.expand("poincare", witness={"a2": -1, "a1": Fraction(1, 4)})["outcome"]["closed"]
    bad = liexp.expand("poincare", witness={"a1": 1})
    assert bad["outcome"]["failure"] == "constraint-violation"
    assert liexp.expand("newton_hooke", formal=True)["outcome"]["closed"]
    neg = liexp.expand("negative-nh")
    assert neg["outcome"]["closed"] is False
    assert neg["outcome"]["as_expected"] is True
    assert "timing_ms" in liexp.expand("euclid4", timing=True)
    with pytest.raises(liexp.Error):
        liexp.expand("nowhere")


def test_contract():
    out = liexp.contract("poincare", "ω")
    assert [o["kind"] for o in out] == ["parameter", "iw"]
    assert all(o["equals_galilei"] for o in out)


def test_files():
    g = liexp.load_algebra(os.path.join(DATA, "galilei.alg"))
    assert g.structure_equals(liexp.catalog("galilei"))
    assert liexp.parse_algebra(g.emit()).emit() == g.emit()
    with pytest.raises(liexp.JacobiError):
        liexp.load_algebra(os.path.join(DATA, "galilei_bad_sign.alg"))
    bad = liexp.load_algebra(os.path.join(DATA, "galilei_bad_sign.alg"), allow_non_lie=True)
    assert len(bad.jacobi_violations()) == 4
    with pytest.raises(liexp.ParseError) as err:
        liexp.parse_algebra("{")
    assert isinstance(err.value, liexp.Error)
    with pytest.raises(liexp.Error):
        liexp.catalog("galilei").element("Q7")


def test_appendix():
    rows = liexp.appendix_identities()
    assert len(rows) == 82
    assert all(ok for _, ok, _ in rows)
