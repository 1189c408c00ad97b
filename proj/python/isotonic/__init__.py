"""Bound states of the isotonic oscillator (Schroedinger, Dirac, Klein-Gordon)."""

from ._core import (
    DegenerateEnergy,
    DivergenceError,
    DomainError,
    GridTooCoarse,
    IsotonicError,
    NoConvergence,
    NoRootInRange,
    ToleranceNotMet,
    UnphysicalRegime,
    classify_regime,
    dirac_selfconsistent,
    energy,
    fd_eigenvalues,
    harmonic_wavefunction,
    hermite,
    klein_gordon_energy,
    kummer_1f1,
    laguerre,
    log_gamma,
    pseudospin_energy,
    pseudospin_spinor,
    pseudospin_table,
    spin_energy,
    spin_spinor,
    spin_table,
    validate,
    wavefunction,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
