import json

import pytest

import sphclass


def test_descriptors():
    assert sphclass.normalize(" G2 x Sp(2) ") == "G2xSp(2)"
    assert sphclass.dim("SGL(4,3)") == 24
    assert sphclass.dim_flag("Sp(8)") == 16


def test_parse_error_is_annotated():
    with pytest.raises(sphclass.ParseError) as info:
        sphclass.normalize("SL(3)xQ(2)")
    assert "^" in str(info.value)
    assert isinstance(info.value, ValueError)


def test_check_eq2():
    r = sphclass.check_eq2("Sp(8)", "Sp(4)xSp(2)")
    assert r == {"passes": False, "dim_H": 13, "dim_G/B": 16}


def test_query():
    v = sphclass.query("G2xSp(2)", "Sp(8)", p=2)
    assert v["status"] == "Spherical"
    assert v["matches"][0]["id"] == "C23"
    assert sphclass.query("G2xSp(2)", "Sp(8)")["status"] == "NotListed"
    v = sphclass.query("SGL(4,3)", "SL(7)", p=5)
    assert v["matches"][0]["bindings"] == {"m": 4, "n": 3}
    with pytest.raises(sphclass.AmbiguousDescriptor):
        sphclass.query("B3", "SO(8)")


def test_big_integers():
    assert sphclass.weyl_order("E8") == 696729600
    assert sphclass.weyl_dim("E8", [0, 0, 0, 0, 0, 0, 0, 1]) == 248
    assert sphclass.weyl_orbit_size("A3", [0, 1, 0]) == 6
    assert sphclass.orbit_filter("B3") == [1, 3]


def test_audits_reproduce():
    for suite in ["eq4", "grid", "tensor", "spin7", "g2", "tables"]:
        records = sphclass.audit(suite)
        assert records
        assert all(r["verdict"] == "reproduced" for r in records), suite
    with pytest.raises(ValueError):
        sphclass.audit("nope")


def test_cli_json():
    code, out, err = sphclass.run_cli(["classify", "E6", "C4", "--format", "json"])
    assert code == 0 and err == ""
    header, record = [json.loads(line) for line in out.splitlines()]
    assert header == {"schema": "sphclass.report", "version": 1}
    assert record["values"]["status"] == "Spherical"
