import math

import numpy as np
import pytest

import isotonic


def test_energy_closed_form():
    assert isotonic.energy(3, g=2.0) == pytest.approx(8.5, abs=1e-14)
    assert isotonic.energy(0, g=0.0) == 1.5
    assert isotonic.classify_regime(2.0) == "impenetrable-barrier"


def test_wavefunction_is_normalized():
    x = np.linspace(1e-6, 12.0, 20001)
    psi = isotonic.wavefunction(2, x, g=6.0)
    assert psi.shape == x.shape
    assert np.trapz(psi**2, x) == pytest.approx(1.0, abs=1e-6)


def test_tables_round_trip():
    for col in isotonic.spin_table():
        for n, golden in enumerate(col["energies"]):
            assert abs(isotonic.spin_energy(n, g=col["g"], cs=col["C"]) - golden) <= 5e-7
    for col in isotonic.pseudospin_table():
        for n, golden in enumerate(col["energies"]):
            assert abs(isotonic.pseudospin_energy(n, g=col["g"], cps=col["C"]) - golden) <= 5e-7


def test_duality_and_klein_gordon():
    for n in range(5):
        e_spin = isotonic.spin_energy(n, g=2.0, cs=2.0)
        e_ps = isotonic.pseudospin_energy(n, g=2.0, cps=-2.0)
        assert e_spin - e_ps == pytest.approx(2.0, abs=1e-9)
        assert isotonic.klein_gordon_energy(n, g=6.0) == pytest.approx(isotonic.spin_energy(n, g=6.0), abs=1e-10)


def test_spinors():
    x = np.array([0.5, 1.0, 2.0])
    E, F, G = isotonic.spin_spinor(0, x, g=2.0)
    assert E == pytest.approx(3.1503636, abs=5e-7)
    assert F.shape == G.shape == (3,)
    E, G = isotonic.pseudospin_spinor(1, x, g=2.0)
    assert E == pytest.approx(3.2918405, abs=5e-7)


def test_fd_oracle_with_python_potential():
    vals, errs = isotonic.fd_eigenvalues(lambda x: 0.5 * x * x + 1.0 / (x * x), 3, n_points=4000)
    for n, (v, e) in enumerate(zip(vals, errs)):
        assert abs(v - (2 * n + 2.5)) <= e


def test_special_functions_vectorize():
    z = np.linspace(0.0, 5.0, 7)
    assert np.allclose(isotonic.laguerre(1, 1.5, z), 2.5 - z)
    assert isotonic.log_gamma(0.5) == pytest.approx(math.log(math.sqrt(math.pi)))


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        isotonic.energy(0, g=-1.0)
    with pytest.raises(isotonic.UnphysicalRegime):
        isotonic.energy(0, g=-1.0)
    with pytest.raises(isotonic.DomainError):
        isotonic.wavefunction(0, np.array([-1.0]), g=2.0)
    with pytest.raises(isotonic.IsotonicError):
        isotonic.fd_eigenvalues(lambda x: 0.5 * x * x, 8, n_points=100)


def test_validate_suite():
    report = isotonic.validate("identities")
    assert report and all(c["pass"] for c in report)
