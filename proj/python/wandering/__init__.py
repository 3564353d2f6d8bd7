"""Certified counterexamples to the wandering property in D_alpha."""

import json as _json

from . import _core
from ._core import (
    a_factor,
    minimal_beta,
    objective_bound,
    objectives,
    reduce,
    reproduce,
    sigma_threshold,
)


def pipeline(**kwargs):
    """Run search, recovery and verification. The certificate comes back as a dict."""
    out = _core.pipeline(**kwargs)
    if out["certificate"] is not None:
        out["certificate"] = _json.loads(out["certificate"])
    return out


def recheck(certificate):
    """Re-verify a certificate (dict or JSON text); returns the verdict string."""
    if not isinstance(certificate, str):
        certificate = _json.dumps(certificate)
    return _core.recheck(certificate)


__all__ = [
    "a_factor",
    "minimal_beta",
    "objective_bound",
    "objectives",
    "pipeline",
    "recheck",
    "reduce",
    "reproduce",
    "sigma_threshold",
]
