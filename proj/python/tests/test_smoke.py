import math
from fractions import Fraction

import numpy as np
import pytest

import mshydro


def test_exact_algebra():
    assert mshydro.inner("psi02", "psi02") == Fraction(4, 3)
    assert mshydro.inner("psi12", "psi12") == Fraction(14, 3)
    assert mshydro.inner("psi11", "cx") == 0
    assert mshydro.recursion_residual_is_zero("stress")
    assert mshydro.recursion_residual_is_zero("heat")


def test_exact_coefficients():
    c = mshydro.exact_coefficients(-1)
    assert c["sound_diffusivity"] == Fraction(7, 6)
    assert c["entropy_diffusivity"] == Fraction(3, 2)
    assert Fraction(5, 3) * c["beta_u"] == c["beta_p"] == Fraction(19, 72)
    assert mshydro.transport_coefficients(-2.0)["sound_diffusivity"] == pytest.approx(7 / 12)


def test_dispersion():
    ev = mshydro.symbol_eigenvalues("burnett", 1.0, 0.1)
    target = mshydro.sigma_asymptotic(1.0, 0.1, "sound_plus")
    assert np.min(np.abs(ev - target)) < 1e-12
    table = mshydro.branches("moment", np.linspace(0.1, 2.0, 20), 0.1)
    assert set(table) == {"sound_plus", "sound_minus", "entropy", "shear_relaxation", "heat_relaxation"}
    assert np.all(table["sound_plus"].imag > 0)
    with pytest.raises(mshydro.BranchCollisionError):
        mshydro.branches("moment", np.linspace(0.1, 4.0, 40), 0.1)


def test_evolution_and_errors():
    u, p, s = mshydro.initial_state("u:1:1,p:2:0.3", 32)
    period = 2 * math.pi / mshydro.sound_speed()
    u1, p1, _ = mshydro.evolve(u, p, s, "euler", 0.1, period)
    assert np.max(np.abs(u1 - u)) < 1e-10
    e0 = mshydro.acoustic_energy(u, p)
    un, pn, _ = mshydro.evolve(u, p, s, "ns", 0.1, 1.0)
    assert mshydro.acoustic_energy(un, pn) < e0
    um, _, _ = mshydro.evolve(u, p, s, "moment", 0.1, 1.0)
    assert np.max(np.abs(um - un)) < 0.05
    with pytest.raises(ValueError):
        mshydro.evolve(u, p, s, "burnett", 0.1, -1.0)
    with pytest.raises(mshydro.ParseError):
        mshydro.initial_state("x:1:1")


def test_fluxes_and_secularity():
    x = 2 * np.pi * np.arange(64) / 64
    stress, heat = mshydro.h1_fluxes(np.sin(x), 1.25 * np.sin(x), 1.25 * np.sin(x))
    np.testing.assert_allclose(stress, -4 / 3 * np.cos(x), atol=1e-12)
    np.testing.assert_allclose(heat, 5 / (2 * -2 / 3) * np.cos(x), atol=1e-12)
    naive, multi = mshydro.secular_ratio_series("u:1:1", 0.05, [10, 50, 100])
    np.testing.assert_allclose(naive, 0.05 * 7 / 6 * np.array([10, 50, 100]))
    assert np.ptp(multi) < 1e-12
    with pytest.raises(mshydro.UnsupportedInputError):
        mshydro.secular_ratio_series("u:1:1,p:2:1", 0.05, [10])


def test_selftest_and_cli(tmp_path):
    ok, report = mshydro.selftest()
    assert ok, report
    out = tmp_path / "d.csv"
    assert mshydro.cli("dispersion", "--model", "ns", "--samples", "4", "--out", out) == 0
    assert out.read_text().count("\n") == 1 + 4 * 3
    assert mshydro.cli("dispersion", "--eps", "-1") == 1
