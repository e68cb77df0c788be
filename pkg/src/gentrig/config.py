"""Shared evaluation configuration for series, quadrature and inversion code."""

import os
from dataclasses import dataclass

ENV_DEFAULT_TOL = "GENTRIG_DEFAULT_TOL"


@dataclass(frozen=True)
class EvalConfig:
    """Tolerances and iteration caps governing every numeric routine.

    rel_tol   -- relative tolerance for truncated series
    abs_tol   -- absolute residual target for root-finding inversions
    max_terms -- hard cap on series terms
    max_iters -- hard cap on inversion iterations
    """

    rel_tol: float = 1e-12
    abs_tol: float = 1e-14
    max_terms: int = 100_000
    max_iters: int = 200

    def __post_init__(self):
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise ValueError("tolerances must be positive")
        if not (self.max_terms > 0 and self.max_iters > 0):
            raise ValueError("iteration caps must be positive")


DEFAULT_CONFIG = EvalConfig()


def config_from_env() -> EvalConfig:
    """Default config, honouring the GENTRIG_DEFAULT_TOL override.

    When set, the variable replaces rel_tol; abs_tol is tightened to a
    hundredth of it (never loosened beyond the built-in default ratio).
    """
    raw = os.environ.get(ENV_DEFAULT_TOL)
    if raw is None:
        return DEFAULT_CONFIG
    tol = float(raw)
    if tol <= 0:
        raise ValueError(f"{ENV_DEFAULT_TOL} must be positive, got {raw!r}")
    return EvalConfig(rel_tol=tol, abs_tol=tol * 1e-2)
