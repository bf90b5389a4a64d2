"""Tolerance defaults shared across the package.

Every numerical equality test is relative: a quantity x is treated as equal
to y when |x - y| <= tol * scale for a scale natural to the data. The two
defaults below can be overridden per call, globally via the HYPERCURV_TOL
environment variable, or uniformly by the command line --tol flag.
"""

from __future__ import annotations

import os

ENV_VAR = "HYPERCURV_TOL"

# Relative tolerance for algebraic equality tests (tensor identities,
# closed-form cross-checks).
EQUALITY_TOL = 1e-10

# Default gap tolerance for eigenvalue clustering.
CLUSTER_TOL = 1e-8


def default_tol(fallback: float = EQUALITY_TOL) -> float:
    """Resolve the effective default tolerance.

    The HYPERCURV_TOL environment variable, when set to a positive float,
    overrides ``fallback``.
    """
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return fallback
    try:
        value = float(raw)
    except ValueError as exc:
        raise ValueError(f"{ENV_VAR} must be a float, got {raw!r}") from exc
    if value <= 0.0:
        raise ValueError(f"{ENV_VAR} must be positive, got {value}")
    return value


def default_cluster_tol() -> float:
    return default_tol(CLUSTER_TOL)
