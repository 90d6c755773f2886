import math

import pytest

try:
    import cartfact as cf
except ImportError:
    import _cartfact as cf


def test_energies():
    assert cf.energy(1) == -0.5
    assert cf.energy(2) == -0.125
    assert cf.energy_exact(3) == "(-1/18)+(0)i sqrt(1) pi^(0/2)"


def test_table():
    rows = cf.multiplet_table(3)
    assert [r["degeneracy"] for r in rows] == [1, 4, 9]
    assert rows[1]["l_list"] == [0, 1]


def test_radial_ground_state():
    st = cf.radial(1, 0)
    assert st.eval(1.0) == pytest.approx(2 * math.exp(-1.0), rel=1e-14)
    assert cf.radial_routes_agree(3, 1)
    with pytest.raises(cf.DomainError):
        cf.radial(2, 2)


def test_momentum_profile():
    prof = cf.momentum(1, 0)
    expect = math.sqrt(2 / math.pi) * 4 / (1 + 1.0) ** 2
    assert prof.eval(1.0) == pytest.approx(expect, rel=1e-14)
    assert cf.momentum_routes_agree(4, 2)


def test_harmonic_basis_dimension():
    assert len(cf.harmonic_basis(2)) == 5


def test_symbolic_checks():
    assert cf.verify_eigen_zero(3, 1, 0)
    assert cf.ode_residual_zero(5, 2)


def test_fourier_consistency():
    assert cf.fourier_check(2, 1, [0.5, 1.0]) < 1e-8
