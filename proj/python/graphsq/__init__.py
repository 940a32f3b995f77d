"""Spectral radii of graph squares: families, enumeration and claim checks."""

import json

from ._core import *  # noqa: F401,F403
from ._core import run_claim as _run_claim


def verify(claim, n_min=None, n_max=None, seed=1, jobs=1, trials=500):
    """Run a claim check and return the parsed report."""
    return json.loads(_run_claim(claim, n_min, n_max, seed, jobs, trials))
