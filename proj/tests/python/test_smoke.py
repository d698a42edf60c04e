import cmath
import math

import pytest

import sphcav


def test_universal_roots():
    assert sphcav.j_zero(0.0) == pytest.approx(math.pi, rel=1e-13)
    assert sphcav.riccati_deriv_zero(1.0) == pytest.approx(2.743707269992, rel=1e-10)
    assert sphcav.frequency_from_root(math.pi, 0.015) / 1e9 == pytest.approx(9.993, abs=1e-3)


def test_wedge_spectrum():
    modes = sphcav.modes(wedge_deg=270.0, count=6)
    assert [m["pol"] for m in modes] == ["TM"] * 4 + ["TE", "TM"]
    assert modes[0]["f_ghz"] == pytest.approx(7.5068, abs=1e-4)
    assert modes[2]["family"] == "tesseral"
    assert modes[2]["k"] == 1
    upto = sphcav.modes(wedge_deg=270.0, fmax_ghz=13.7)
    assert len(upto) == 6


def test_cone_and_sweeps():
    nu = sphcav.cone_nu(0.0, 33.69)
    assert nu == pytest.approx(0.373546553444, rel=1e-9)
    rows = sphcav.cone_sweep([0.38, 33.69])
    assert rows[1]["f_ghz"] == pytest.approx(6.417093967, rel=1e-8)
    w = sphcav.wedge_sweep([180.0, 270.0])
    assert w[1]["f_ghz"] < 0.9 * w[0]["f_ghz"]
    f = sphcav.fundamental_tm(cone_deg=33.69)
    assert f["branch"] == 1 and f["k"] is None


def test_angular():
    assert sphcav.azimuthal_indices(270.0, 2) == pytest.approx([2 / 3, 4 / 3])
    assert sphcav.classify(5 / 3, 2 / 3) == "tesseral"
    assert sphcav.south_singular_coefficient(2.0, 1.0) == 0.0
    value, deriv = sphcav.legendre_theta(1.0, 0.0, 0.7)
    assert value == pytest.approx(math.cos(0.7))
    assert deriv == pytest.approx(-math.sin(0.7))


def test_fields_and_energy():
    s = sphcav.field("TM", 0.0, 0.0, 1, 5.0, 40.0, 10.0)
    assert all(c == 0 for c in s["E"] + s["H"])
    s = sphcav.field("TM", 1.0, 1.0, 1, 7.0, 50.0, 20.0)
    assert s["H"][0] == 0
    assert s["S"][2] > 0
    z_te, z_tm = sphcav.wave_impedances("TM", 2.0, 1.0, 1, 6.0, 70.0)
    mu_over_eps = (4e-7 * math.pi * 1.00000000055) / 8.8541878128e-12
    assert (z_te * z_tm).real == pytest.approx(-mu_over_eps, rel=1e-6)
    assert abs((z_te * z_tm).imag) < 1e-9 * mu_over_eps
    e = sphcav.mode_energy("TE", 2 / 3, 2 / 3, 1, wedge_deg=270.0)
    assert e["electric"] == pytest.approx(e["magnetic"], rel=1e-7)
    assert sphcav.sectoral_angular_norm(1.0) == pytest.approx(4 / 3)
    assert sphcav.zonal_norm(3) == pytest.approx(2 / 7)


def test_validation():
    assert set(sphcav.fixture_names()) == {
        "table1_dispersion",
        "table2_wedge90",
        "table3_cone",
        "table4_combined",
    }
    assert sphcav.validate("table1_dispersion")["passed"]
    assert not sphcav.validate("table3_cone")["passed"]


def test_errors():
    with pytest.raises(ValueError):
        sphcav.j_zero(-1.0)
    with pytest.raises(KeyError):
        sphcav.validate("missing")
    with pytest.raises(sphcav.Error):
        sphcav.classify(0.5, 1.0)
    assert issubclass(sphcav.DomainError, sphcav.Error) or issubclass(sphcav.DomainError, ValueError)
    assert cmath.isfinite(sphcav.field("TE", 1.0, 1.0, 1, 7.0, 50.0, 20.0)["E"][1])
