"""Exact verifier for the symplectic Dirac branching rule."""

import json

from . import _core
from ._core import (
    apply,
    dim_harmonic,
    dim_weight,
    lowest_weight_dim,
    operator_labels,
    suite_names,
)


def run(m=6, a_max=4, t_max=4, suites=(), jobs=1):
    """Run the selected suites and return the report as a dict."""
    return json.loads(_core.run_json(m, a_max, t_max, list(suites), jobs))


__all__ = [
    "apply",
    "dim_harmonic",
    "dim_weight",
    "lowest_weight_dim",
    "operator_labels",
    "run",
    "suite_names",
]
