"""Chiral symmetries of angular momentum Hamiltonians."""

import json as _json

from ._core import (
    ChiralSpinError,
    characteristic_polynomial,
    classify,
    eigh,
    full_solve,
    pairing_check,
    rotation,
    run_cli,
    search_partners,
    spin_operators,
)
from ._core import build_model as _build_model

__all__ = [
    "ChiralSpinError",
    "build_model",
    "characteristic_polynomial",
    "classify",
    "eigh",
    "full_solve",
    "pairing_check",
    "rotation",
    "run_cli",
    "search_partners",
    "spin_operators",
]


def build_model(doc):
    """Build a model from a model document (dict or JSON text)."""
    if not isinstance(doc, str):
        doc = _json.dumps(doc)
    return _build_model(doc)
