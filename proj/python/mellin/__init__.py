"""Mellin hypergeometric systems of y^m + x_1 y^{m_1} + ... + x_n y^{m_n} - 1 = 0.

Reports are returned as plain dicts with the same layout as the CLI JSON
output (see docs/schema.md).
"""

import json

from . import _core
from ._core import ProfileError, beukers_heckman_reducible, modular_count, roots_at_point

__all__ = [
    "ProfileError",
    "basis_series",
    "beukers_heckman_reducible",
    "dims",
    "modular_count",
    "operators",
    "principal_series",
    "root_jets",
    "roots_at_point",
    "verify",
]


def dims(m, exponents):
    """Holonomic rank, dim Y, dim R, dim S, coset representatives and relations."""
    return json.loads(_core.dims_json(m, list(exponents)))


def operators(m, exponents, check_horn=False):
    """Mellin, G_j and Horn operators with the lattice matrices."""
    return json.loads(_core.operators_json(m, list(exponents), check_horn))


def principal_series(m, exponents, order=12):
    """Exact principal series truncated at total degree `order`."""
    return json.loads(_core.principal_series_json(m, list(exponents), order))


def basis_series(m, exponents, initial, order=12):
    """Convenient basis element with initial monomial x^initial."""
    return json.loads(_core.basis_series_json(m, list(exponents), list(initial), order))


def root_jets(m, exponents, twist=None, order=12):
    """Taylor jets at the origin of the m roots of the twisted equation."""
    twist = None if twist is None else list(twist)
    return json.loads(_core.root_jets_json(m, list(exponents), twist, order))


def verify(m, exponents, order=12, seed=0, annihilation_tolerance=1e-8):
    """Run every applicable verification and return the report."""
    return json.loads(_core.verify_json(m, list(exponents), order, seed, annihilation_tolerance))
