"""Floating-point and exact spectral computations on symmetric matrices.

Eigenvalues come from a cyclic Jacobi solver.  Every verdict that hinges on
an exact zero (singularity, cospectrality, an integer eigenvalue) is decided
with big-integer arithmetic instead: Bareiss elimination for determinants
and the Faddeev-LeVerrier recurrence for characteristic polynomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

import numpy as np

from .config import DEFAULTS
from .eccmatrix import EpsilonProfile, IntMatrix, InvariantViolation

MatrixLike = Union[IntMatrix, np.ndarray, Sequence[Sequence[float]]]


class ContractError(ValueError):
    """Input violates an operation's precondition."""


class ConvergenceError(ArithmeticError):
    """The Jacobi iteration ran out of sweeps."""


# --------------------------------------------------------------------------
# spectrum


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted descending, with multiplicity clusters.

    ``groups`` holds ``(value, multiplicity)`` pairs where ``value`` is the
    mean of the clustered eigenvalues.
    """

    values: tuple[float, ...]
    groups: tuple[tuple[float, int], ...]

    @property
    def radius(self) -> float:
        return self.values[0]

    @property
    def energy(self) -> float:
        return math.fsum(abs(x) for x in self.values)

    def ascending(self) -> list[float]:
        return list(reversed(self.values))

    def to_dict(self, digits: int = 12) -> dict:
        fmt = lambda x: float(f"{x:.{digits}g}")  # noqa: E731
        return {
            "values": [fmt(x) for x in self.values],
            "groups": [[fmt(v), m] for v, m in self.groups],
            "radius": fmt(self.radius),
            "energy": fmt(self.energy),
        }

    def __str__(self) -> str:
        parts = []
        for v, mult in self.groups:
            txt = f"{v:.6f}"
            parts.append(txt if mult == 1 else f"{txt}^{mult}")
        return "{" + ", ".join(parts) + "}"


def _as_array(m: MatrixLike) -> np.ndarray:
    if isinstance(m, IntMatrix):
        return m.to_numpy()
    arr = np.array(m, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ContractError(f"expected a square matrix, got shape {arr.shape}")
    return arr


def cluster(values: Sequence[float], rel_tol: float | None = None) -> tuple[tuple[float, int], ...]:
    """Group descending ``values`` whose gap is within ``rel_tol * max(1, |x|)``."""
    if rel_tol is None:
        rel_tol = DEFAULTS.cluster_tol
    groups: list[list[float]] = []
    for x in values:
        if groups and abs(groups[-1][0] - x) <= rel_tol * max(1.0, abs(x)):
            groups[-1].append(x)
        else:
            groups.append([x])
    return tuple((math.fsum(g) / len(g), len(g)) for g in groups)


def jacobi_eigenvalues(a: np.ndarray, tol: float | None = None, max_sweeps: int | None = None) -> np.ndarray:
    """Eigenvalues of a symmetric matrix by cyclic-by-row Jacobi rotations.

    Works on a private copy.  Stops once the off-diagonal Frobenius norm is
    at most ``tol * (1 + ||a||_F)``.
    """
    if tol is None:
        tol = DEFAULTS.jacobi_tol
    if max_sweeps is None:
        max_sweeps = DEFAULTS.jacobi_max_sweeps
    a = np.array(a, dtype=float)
    n = a.shape[0]
    if n <= 1:
        return np.diag(a).copy()
    target = tol * (1.0 + np.linalg.norm(a))
    # entries below this cannot keep the off-norm above target
    skip = target / n
    for _ in range(max_sweeps):
        off = float(np.linalg.norm(a - np.diag(np.diag(a))))
        if off <= target:
            return np.diag(a).copy()
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                colp = a[:, p].copy()
                colq = a[:, q]
                a[:, p] = c * colp - s * colq
                a[:, q] = s * colp + c * colq
                rowp = a[p, :].copy()
                rowq = a[q, :]
                a[p, :] = c * rowp - s * rowq
                a[q, :] = s * rowp + c * rowq
                a[p, q] = a[q, p] = 0.0
    raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps (n={n})")


def eigenvalues_sym(m: MatrixLike) -> Spectrum:
    if isinstance(m, IntMatrix):
        if not m.is_symmetric():
            raise ContractError("eigenvalues_sym needs a symmetric matrix")
        arr = m.to_numpy()
    else:
        arr = _as_array(m)
        if not np.array_equal(arr, arr.T):
            raise ContractError("eigenvalues_sym needs a symmetric matrix")
    vals = sorted(jacobi_eigenvalues(arr).tolist(), reverse=True)
    return Spectrum(tuple(vals), cluster(vals))


def spectral_radius(s: Spectrum) -> float:
    return s.radius


def energy(s: Spectrum) -> float:
    return s.energy


# --------------------------------------------------------------------------
# exact arithmetic


@dataclass(frozen=True)
class CharPoly:
    """``det(xI - M)`` with integer coefficients ``c_0..c_n`` (ascending)."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        """Horner evaluation; exact for ``int`` and ``Fraction`` arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_float(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def has_root(self, x: int | Fraction) -> bool:
        return self(x) == 0

    def l1_norm(self) -> int:
        return sum(abs(c) for c in self.coeffs)

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __str__(self) -> str:
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coeffs[power]
            if c == 0:
                continue
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                var = "x" if power == 1 else f"x^{power}"
                body = var if mag == 1 else f"{mag}{var}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _int_rows(m: MatrixLike) -> list[list[int]]:
    if isinstance(m, IntMatrix):
        return [list(row) for row in m.rows]
    rows = [[x for x in row] for row in m]
    out = []
    for row in rows:
        conv = []
        for x in row:
            if int(x) != x:
                raise ContractError("exact routines need integer entries")
            conv.append(int(x))
        out.append(conv)
    if any(len(r) != len(out) for r in out):
        raise ContractError("matrix must be square")
    return out


def char_poly_exact(m: MatrixLike) -> CharPoly:
    """Characteristic polynomial by the Faddeev-LeVerrier recurrence.

    ``M_k = A M_{k-1} + c_{n-k+1} I`` and ``c_{n-k} = -tr(A M_k) / k``; each
    division is exact over the integers and is checked.
    """
    a = _int_rows(m)
    n = len(a)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        prev = coeffs[n - k + 1]
        # M_k = A @ M_{k-1} + prev * I
        nxt = [
            [sum(a[i][t] * mk[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
        for i in range(n):
            nxt[i][i] += prev
        mk = nxt
        trace = sum(a[i][t] * mk[t][i] for i in range(n) for t in range(n))
        q, r = divmod(-trace, k)
        if r:
            raise InvariantViolation(f"Faddeev-LeVerrier division by {k} left remainder {r}")
        coeffs[n - k] = q
    return CharPoly(tuple(coeffs))


def determinant_exact(m: MatrixLike) -> int:
    """Bareiss fraction-free elimination with row pivoting."""
    a = _int_rows(m)
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                q, r = divmod(row_i[j] * akk - aik * row_k[j], prev)
                if r:
                    raise InvariantViolation("Bareiss division was not exact")
                row_i[j] = q
            row_i[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def is_cospectral(a: MatrixLike, b: MatrixLike) -> bool:
    pa, pb = char_poly_exact(a), char_poly_exact(b)
    if pa.degree != pb.degree:
        raise ContractError(f"order mismatch: {pa.degree} vs {pb.degree}")
    return pa == pb


# --------------------------------------------------------------------------
# bounds and interlacing


def quotient_bound(profile: EpsilonProfile, i: int, n: int | None = None) -> float:
    """Largest eigenvalue of the two-block quotient for the split ``{i} | rest``.

    ``((W - e_i) + sqrt((W - e_i)^2 + (n-1) e_i^2)) / (n-1)`` with ``W`` the
    eccentric Wiener index and ``e_i`` the eccentric degree of ``i``.
    """
    if n is None:
        n = profile.n
    if n < 2:
        raise ContractError("quotient bound needs n >= 2")
    w = profile.wiener
    ei = profile.degrees[i]
    base = w - ei
    return (base + math.sqrt(base * base + (n - 1) * ei * ei)) / (n - 1)


def quotient_bound_max(profile: EpsilonProfile) -> tuple[float, int]:
    """``(max_i bound, argmax i)`` of :func:`quotient_bound`."""
    best = max(range(profile.n), key=lambda i: (quotient_bound(profile, i), -i))
    return quotient_bound(profile, best), best


def interlacing_check(m: MatrixLike, subset: Sequence[int], tol: float | None = None) -> bool:
    """Check Cauchy interlacing between ``m`` and its principal submatrix.

    With ascending eigenvalues ``lam`` of ``m`` (order n) and ``beta`` of the
    submatrix (order k): ``lam[i] <= beta[i] <= lam[i + n - k]``.  The
    tolerance is absolute, scaled by ``max(1, max |lam|)``.
    """
    if tol is None:
        tol = DEFAULTS.interlace_tol
    arr = _as_array(m)
    n = arr.shape[0]
    idx = list(subset)
    if len(set(idx)) != len(idx) or any(not 0 <= i < n for i in idx):
        raise ContractError("subset indices must be distinct and in range")
    if not idx:
        return True
    lam = sorted(jacobi_eigenvalues(arr).tolist())
    beta = sorted(jacobi_eigenvalues(arr[np.ix_(idx, idx)]).tolist())
    k = len(idx)
    slack = tol * max(1.0, max(abs(x) for x in lam))
    return all(
        lam[i] - slack <= beta[i] <= lam[i + n - k] + slack
        for i in range(k)
    )


def integer_eigenvalue_confirmed(poly: CharPoly, value: float, d: int, tol: float | None = None) -> bool:
    """``value`` is within ``tol`` of integer ``d`` and ``d`` is an exact root."""
    if tol is None:
        tol = DEFAULTS.equality_tol
    return abs(value - d) <= tol and poly.has_root(d)
