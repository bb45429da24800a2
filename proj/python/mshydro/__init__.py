"""Linearized-Boltzmann hydrodynamic model hierarchy.

Thin Python layer over the C++ core. Exact quantities come back as
fractions.Fraction; complex spectra and fields as numpy arrays.
"""

from fractions import Fraction

import numpy as np

from . import _core
from ._core import (
    BranchCollisionError,
    ConsistencyError,
    ParseError,
    UnsupportedInputError,
    multiscale_bound,
    ns_closure,
    recursion_residual_is_zero,
    selftest,
    sigma_asymptotic,
    sound_speed,
    symbol_matrix,
    transport_coefficients,
)

__all__ = [
    "BranchCollisionError",
    "ConsistencyError",
    "ParseError",
    "UnsupportedInputError",
    "acoustic_energy",
    "branches",
    "cli",
    "eigenfunction",
    "evolve",
    "exact_coefficients",
    "h1_fluxes",
    "initial_state",
    "inner",
    "multiscale_bound",
    "ns_closure",
    "recursion_residual_is_zero",
    "secular_ratio_series",
    "selftest",
    "sigma_asymptotic",
    "sound_speed",
    "symbol_eigenvalues",
    "symbol_matrix",
    "transport_coefficients",
]


def inner(a, b):
    """Exact Gaussian inner product of two eigenfunctions ('psi02', 'cx', ...)."""
    return Fraction(_core.inner(a, b))


def eigenfunction(name):
    return _core.eigenfunction(name)


def exact_coefficients(lambda02=Fraction(-1)):
    lam = Fraction(lambda02)
    raw = _core.exact_coefficients(lam.numerator, lam.denominator)
    return {key: Fraction(value) for key, value in raw.items()}


def symbol_eigenvalues(model, k, eps, lambda02=-1.0):
    return np.asarray(_core.symbol_eigenvalues(model, k, eps, lambda02)).ravel()


def branches(model, k_grid, eps, lambda02=-1.0):
    raw = _core.branches(model, list(map(float, k_grid)), eps, lambda02)
    return {name: np.asarray(values) for name, values in raw.items()}


def initial_state(ic, grid_size=256):
    return tuple(np.asarray(f) for f in _core.initial_state(ic, grid_size))


def evolve(u, p, s, model, eps, t, lambda02=-1.0):
    out = _core.evolve(np.asarray(u, float), np.asarray(p, float), np.asarray(s, float), model, eps, t, lambda02)
    return tuple(np.asarray(f) for f in out)


def acoustic_energy(u, p):
    return _core.acoustic_energy(np.asarray(u, float), np.asarray(p, float))


def h1_fluxes(u, p, s, lambda02=-1.0):
    stress, heat = _core.h1_fluxes(np.asarray(u, float), np.asarray(p, float), np.asarray(s, float), lambda02)
    return np.asarray(stress), np.asarray(heat)


def secular_ratio_series(ic, eps, times, lambda02=-1.0):
    naive, multiscale = _core.secular_ratio_series(ic, eps, list(map(float, times)), lambda02)
    return np.asarray(naive), np.asarray(multiscale)


def cli(*args):
    """Run the command-line tool in-process, e.g. cli('dispersion', '--model', 'ns')."""
    return _core.cli([str(a) for a in args])
