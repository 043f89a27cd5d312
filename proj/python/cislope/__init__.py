"""Exact invariants, slope bounds and signature inequalities for
complete-intersection curve fibrations.

Thin wrapper over the compiled core: every report function returns the same
JSON envelope the CLI prints, parsed into a dict. All values are exact;
rationals appear as strings like "24/5".
"""

import json
from fractions import Fraction

from . import _core

DomainError = _core.DomainError


def slope(n, d):
    """Slope bound report for fibers of degree d in projective n-space."""
    return json.loads(_core.slope_json(n, d))


def fibration(n, d, b, deg_e, coeffs):
    """Invariant report (k2, chi, genus, slope equality) for one fibration."""
    return json.loads(_core.fibration_json(n, d, b, deg_e, list(coeffs)))


def singularity(emb_dim, pg, k2, exc_count, mu0, verbose=False):
    """Signature bound report for one normal surface singularity."""
    return json.loads(
        _core.singularity_json(emb_dim, pg, k2, exc_count, mu0, verbose)
    )


def eliminate(n, d, m):
    """Solved k2 relation for the degenerating family at multiple m."""
    return json.loads(_core.eliminate_json(n, d, m))


def verify(grid=""):
    """Self-check report; grid accepts "n=2..6;d=2..6;m=5,10,100" subsets."""
    return json.loads(_core.verify_json(grid))


def slope_bound(n, d):
    """Sharp lower slope bound as a Fraction."""
    return Fraction(_core.slope_bound_str(n, d))


def genus(n, d):
    """Fiber genus as an int."""
    return int(_core.genus_str(n, d))


__all__ = [
    "DomainError",
    "slope",
    "fibration",
    "singularity",
    "eliminate",
    "verify",
    "slope_bound",
    "genus",
]
