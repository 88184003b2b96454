"""Numeric tolerances and enumeration caps in one place.

Every field can be overridden through an environment variable named
``ECCSPEC_<FIELD>`` (upper case), e.g. ``ECCSPEC_EQUALITY_TOL=1e-10``.  The
CLI also exposes the tolerances as flags.
"""

from __future__ import annotations

import dataclasses
import os
from dataclasses import dataclass, fields

ENV_PREFIX = "ECCSPEC_"


@dataclass
class Defaults:
    jacobi_tol: float = 1e-13
    jacobi_max_sweeps: int = 100
    cluster_tol: float = 1e-8
    interlace_tol: float = 1e-9
    # bound checks and "rho == d" style equalities
    equality_tol: float = 1e-9
    tight_tol: float = 1e-6
    energy_bucket_tol: float = 1e-7
    energy_formula_tol: float = 1e-8
    max_graph_order: int = 7
    max_tree_order: int = 14
    max_random_rejections: int = 1000

    def override(self, **changes) -> None:
        for key, value in changes.items():
            if value is None:
                continue
            if key not in {f.name for f in fields(self)}:
                raise KeyError(f"unknown setting {key!r}")
            if isinstance(value, (int, float)) and value <= 0:
                raise ValueError(f"setting {key} must be positive")
            setattr(self, key, value)

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


def _from_env() -> Defaults:
    cfg = Defaults()
    for f in fields(cfg):
        raw = os.environ.get(ENV_PREFIX + f.name.upper())
        if raw is not None:
            cast = int if f.type in ("int", int) else float
            cfg.override(**{f.name: cast(raw)})
    return cfg


DEFAULTS = _from_env()
