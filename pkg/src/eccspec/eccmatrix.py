"""Distance and eccentricity matrices plus the eccentric degree data."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .graph import Graph, Metric, metric


class InvariantViolation(RuntimeError):
    """An internal arithmetic invariant failed; always indicates a bug."""


@dataclass(frozen=True)
class IntMatrix:
    """Dense square matrix of Python integers, stored row-major."""

    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "IntMatrix":
        data = tuple(tuple(int(x) for x in row) for row in rows)
        if any(len(row) != len(data) for row in data):
            raise ValueError("matrix must be square")
        return cls(data)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, idx: tuple[int, int]) -> int:
        i, j = idx
        return self.rows[i][j]

    def is_symmetric(self) -> bool:
        n = self.n
        return all(self.rows[i][j] == self.rows[j][i] for i in range(n) for j in range(i))

    def to_numpy(self, dtype=float) -> np.ndarray:
        return np.array(self.rows, dtype=dtype).reshape(self.n, self.n)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def to_json(self) -> str:
        return json.dumps(self.to_lists())

    def principal(self, subset: Sequence[int]) -> "IntMatrix":
        return IntMatrix(tuple(tuple(self.rows[i][j] for j in subset) for i in subset))

    def frobenius_sq(self) -> int:
        return sum(x * x for row in self.rows for x in row)

    def dominated_by(self, other: "IntMatrix") -> bool:
        """True when every entry is ``<=`` the matching entry of ``other``."""
        return all(a <= b for ra, rb in zip(self.rows, other.rows) for a, b in zip(ra, rb))

    def pretty(self) -> str:
        width = max((len(str(x)) for row in self.rows for x in row), default=1)
        return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in self.rows)


@dataclass(frozen=True)
class EpsilonProfile:
    """Row sums of the eccentricity matrix and the indices built on them.

    ``wiener`` is the eccentric Wiener index (half the entry total) and
    ``classic_wiener`` the ordinary Wiener index.  ``k`` counts vertices of
    degree ``n - 1``.
    """

    degrees: tuple[int, ...]
    wiener: int
    classic_wiener: int
    is_regular: bool
    m: int
    k: int

    @property
    def n(self) -> int:
        return len(self.degrees)


def distance_matrix(met: Metric) -> IntMatrix:
    return IntMatrix(met.dist)


def eccentricity_matrix(met: Metric) -> IntMatrix:
    """Keep ``d(u, v)`` only where it equals ``min(e(u), e(v))``."""
    ecc = met.ecc
    rows = []
    for u, drow in enumerate(met.dist):
        eu = ecc[u]
        rows.append(tuple(
            d if d == min(eu, ecc[v]) and u != v else 0
            for v, d in enumerate(drow)
        ))
    return IntMatrix(tuple(rows))


def graph_matrices(g: Graph) -> tuple[Metric, IntMatrix, IntMatrix]:
    """Convenience: ``(metric, D(G), eps(G))`` for a connected graph."""
    met = metric(g)
    return met, distance_matrix(met), eccentricity_matrix(met)


def epsilon_profile(g: Graph, eps: IntMatrix, dist: IntMatrix | None = None) -> EpsilonProfile:
    degrees = tuple(sum(row) for row in eps.rows)
    total = sum(degrees)
    if total % 2:
        raise InvariantViolation(f"eccentricity matrix entry total {total} is odd")
    if dist is None:
        dist = distance_matrix(metric(g))
    dtotal = sum(sum(row) for row in dist.rows)
    k = sum(1 for d in g.degrees() if d == g.n - 1)
    return EpsilonProfile(
        degrees=degrees,
        wiener=total // 2,
        classic_wiener=dtotal // 2,
        is_regular=len(set(degrees)) == 1,
        m=g.m,
        k=k,
    )


def is_diametrical(met: Metric) -> bool:
    """Every vertex has eccentricity ``diam`` and exactly one eccentric vertex."""
    for u, row in enumerate(met.dist):
        if met.ecc[u] != met.diam:
            return False
        if row.count(met.diam) != 1:
            return False
    return True


def is_epsilon_regular(profile: EpsilonProfile) -> bool:
    return profile.is_regular
