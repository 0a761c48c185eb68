"""Symbolic-numeric verification of photon position operator identities.

The heavy lifting happens in the C++ core; this package exposes the report
runner, operator inspection, and pointwise evaluation.
"""

import json as _json

from ._core import (
    __version__,
    eval_operator,
    operator_names,
    sample_points,
    show,
    verify_json,
    wavefn_names,
)


def verify(**kwargs):
    """Run the verification suites; returns the report as a dict.

    Accepts the same keyword arguments as ``verify_json`` (seed, samples,
    tol, shell_min, shell_max, axis_margin, suite, rep, op).
    """
    return _json.loads(verify_json(**kwargs))


__all__ = [
    "__version__",
    "eval_operator",
    "operator_names",
    "sample_points",
    "show",
    "verify",
    "verify_json",
    "wavefn_names",
]
