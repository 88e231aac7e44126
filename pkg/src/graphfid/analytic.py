"""Closed-form and enumeration formulas for graph-state fidelities under Pauli noise.

Two independent routes to the exact fidelity are provided. :func:`exact_fidelity`
averages stabilizer expectations using the vectorised letter census, while
:func:`fidelity_error_series` sums error-pattern probabilities over the group
walked in Gray-code order. They must agree for depolarizing noise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import numpy as np

from graphfid.errors import InvalidParameterError, TheoremDomainError
from graphfid.graph import Graph, isolated_vertices
from graphfid.noise import PauliChannel, depolarizing, interpolated
from graphfid.pauli import (
    PauliCounts,
    census_histogram,
    counts,
    group_iter,
)

__all__ = [
    "stabilizer_expectation",
    "exact_fidelity",
    "fidelity_error_series",
    "coefficient_C",
    "expectation_from_series",
    "fully_connected_fidelity",
    "weight_distribution",
    "cluster_third_order",
    "Theorem1",
    "theorem1_quantities",
    "theorem1_p0",
    "fully_connected_gap_bound",
    "f_est_interpolated",
    "union_bound_fidelity",
    "union_bound_complete",
    "union_bound_cluster",
    "FidelityBreakdown",
    "fidelity_breakdown",
]


def stabilizer_expectation(ch: PauliChannel, c: PauliCounts) -> float:
    """``Tr(rho S)`` for a stabilizer with letter census ``c``.

    Each X, Y or Z letter is attenuated by its own factor; identities are
    untouched, so for depolarizing noise this is ``(1 - 4p/3) ** (n - n_I)``.
    """
    fx, fy, fz = ch.decay_factors
    return fx**c.n_X * fy**c.n_Y * fz**c.n_Z


def exact_fidelity(g: Graph, ch: PauliChannel, cap: int | None = None) -> float:
    """``<G|rho|G>`` as the average of all ``2**n`` stabilizer expectations."""
    hist = census_histogram(g, cap)
    fx, fy, fz = ch.decay_factors
    nx, ny, nz = np.nonzero(hist)
    terms = [
        int(hist[a, b, c]) * (fx ** int(a) * fy ** int(b) * fz ** int(c))
        for a, b, c in zip(nx, ny, nz)
    ]
    return math.fsum(terms) / 2**g.n


@lru_cache(maxsize=256)
def _identity_histogram(g: Graph, cap: int | None) -> tuple[int, ...]:
    hist = [0] * (g.n + 1)
    for _, s in group_iter(g, cap):
        hist[counts(s).n_I] += 1
    return tuple(hist)


def fidelity_error_series(g: Graph, p: float, cap: int | None = None) -> float:
    """Fidelity under depolarizing noise as a sum over harmless error patterns.

    Every stabilizer, read as an error pattern, leaves ``|G>`` invariant; its
    probability is ``(1-p)**n_I * (p/3)**(n - n_I)``.
    """
    depolarizing(p)  # validates p
    hist = _identity_histogram(g, cap)
    n = g.n
    return math.fsum(
        cnt * (1 - p) ** n_I * (p / 3) ** (n - n_I) for n_I, cnt in enumerate(hist) if cnt
    )


def coefficient_C(m: int, n: int, n_I: int) -> int:
    """Signed count of ``m``-error patterns weighted by their effect on a stabilizer.

    Equals the coefficient of ``x**(n-m) y**m`` in ``(x + 3y)**n_I (x - y)**(n - n_I)``.
    """
    if not (0 <= m <= n and 0 <= n_I <= n):
        raise InvalidParameterError(f"need 0 <= m, n_I <= n; got m={m}, n={n}, n_I={n_I}")
    lo, hi = max(0, m + n_I - n), min(m, n_I)
    return sum(
        (-1) ** (m - j) * 3**j * math.comb(n_I, j) * math.comb(n - n_I, m - j)
        for j in range(lo, hi + 1)
    )


def expectation_from_series(n: int, n_I: int, p: float) -> float:
    """Depolarizing stabilizer expectation summed order by order in the error count."""
    return math.fsum(
        coefficient_C(m, n, n_I) * (1 - p) ** (n - m) * (p / 3) ** m for m in range(n + 1)
    )


def fully_connected_fidelity(n: int, p: float) -> float:
    if n < 2:
        raise InvalidParameterError(f"need n >= 2, got {n}")
    return 0.5 * ((1 - 2 * p / 3) ** n + (2 * p / 3) ** n + (1 - 4 * p / 3) ** n)


def weight_distribution(g: Graph, cap: int | None = None) -> np.ndarray:
    """Number of stabilizers with each count of non-identity letters."""
    hist = census_histogram(g, cap)
    n = g.n
    a, b, c = np.indices(hist.shape)
    return np.bincount((a + b + c).ravel(), weights=hist.ravel(), minlength=3 * n + 1)[: n + 1].astype(np.int64)


def cluster_third_order(g: Graph, p: float, cap: int | None = None) -> float:
    """Fidelity kept to third order in ``p``: no-error term plus weight-3 stabilizers.

    The weight-3 count is taken from enumeration (4 corner generators for
    ``q, r > 2``, 8 for a ``2 x 4`` cluster).
    """
    n = g.n
    w3 = int(weight_distribution(g, cap)[3]) if n >= 3 else 0
    return (1 - p) ** n + w3 * (1 - p) ** (n - 3) * (p / 3) ** 3


class Theorem1(NamedTuple):
    f_tilde: float
    f_est: float
    bound: float

    @property
    def gap(self) -> float:
        return self.f_tilde - self.f_est


def theorem1_quantities(k: int, p: float) -> Theorem1:
    """No-error fidelity, single-stabilizer estimate and gap bound for ``n = 4k``."""
    if k < 1:
        raise InvalidParameterError(f"k must be a positive integer, got {k}")
    if not 0 <= p <= 0.75:
        raise TheoremDomainError(f"p={p} outside [0, 3/4] where the gap bound holds")
    return Theorem1((1 - p) ** (4 * k), (1 - 4 * p / 3) ** (3 * k), 2 / (3 * k))


def theorem1_p0(k: int) -> float:
    """Maximiser of ``k p^2 (2/3 - p/2) (1-p)^(4(k-1))`` used to bound the gap."""
    if k < 1:
        raise InvalidParameterError(f"k must be a positive integer, got {k}")
    return (16 * k + 1 - math.sqrt(256 * k * k - 352 * k + 97)) / (6 * (4 * k - 1))


def fully_connected_gap_bound(k: int) -> float:
    """Upper bound on ``F - F_est`` for the complete graph on ``8k`` vertices."""
    if k < 1:
        raise InvalidParameterError(f"k must be a positive integer, got {k}")
    n = 8 * k
    return (
        0.5 * (1 - 1 / n) * (1 - 2 / n) ** (n - 2)
        + 0.5 * (2 / 3) ** n
        + 1 / (3 * k)
    )


def f_est_interpolated(n: int, p: float, delta: float) -> float:
    """Expectation of a dual-condition stabilizer (weight n/2, n/4 identities)."""
    if n % 4:
        raise TheoremDomainError(f"n={n} is not a multiple of 4")
    interpolated(p, delta)  # validates delta
    return (1 - 4 * p / 3 - 2 * delta) ** (n // 2) * (1 - 4 * p / 3 + 4 * delta) ** (n // 4)


def union_bound_fidelity(g: Graph, p: float) -> float:
    """Union-bound lower bound on the fidelity from the n generator expectations."""
    depolarizing(p)
    u = 1 - 4 * p / 3
    return 1 - math.fsum((1 - u ** (1 + g.degree(i))) / 2 for i in range(g.n))


def union_bound_complete(n: int, p: float) -> float:
    return 1 - n / 2 + n / 2 * (1 - 4 * p / 3) ** n


def union_bound_cluster(q: int, r: int, p: float) -> float:
    if q < 2 or r < 2:
        raise InvalidParameterError("closed form needs q, r >= 2")
    u = 1 - 4 * p / 3
    n = q * r
    return 1 - n / 2 + 0.5 * (2 * (q + r - 4) * u**4 + 4 * u**3 + (q - 2) * (r - 2) * u**5)


@dataclass(frozen=True)
class FidelityBreakdown:
    exact: float
    first_order_truncation: float
    single_setting: float
    method: str


def fidelity_breakdown(
    g: Graph, ch: PauliChannel, ell=None, method: str | None = None, cap: int | None = None
) -> FidelityBreakdown:
    """Exact fidelity next to the no-error term and a single-stabilizer estimate.

    ``ell`` selects the measured stabilizer; by default the first member of the
    identity-count set is used. ``method`` is one of ``group-enumeration``,
    ``fully-connected-closed-form`` or ``error-series``; by default the closed
    form is used for complete graphs under depolarizing noise.
    """
    from graphfid import selector

    if isolated_vertices(g):
        raise InvalidParameterError("graph has isolated vertices")
    depol = ch.is_depolarizing()
    if method is None:
        method = "fully-connected-closed-form" if depol and g.is_complete() else "group-enumeration"
    if method == "fully-connected-closed-form":
        if not (depol and g.is_complete()):
            raise InvalidParameterError("closed form needs a complete graph and depolarizing noise")
        exact = fully_connected_fidelity(g.n, ch.total)
    elif method == "error-series":
        if not depol:
            raise InvalidParameterError("error series needs depolarizing noise")
        exact = fidelity_error_series(g, ch.total, cap)
    elif method == "group-enumeration":
        exact = exact_fidelity(g, ch, cap)
    else:
        raise InvalidParameterError(f"unknown method {method!r}")
    if ell is None:
        chosen = selector.auto_select(g, cap=cap)
        c = chosen.counts
    else:
        from graphfid.pauli import stabilizer

        c = counts(stabilizer(g, ell))
    return FidelityBreakdown(exact, ch.p0**g.n, stabilizer_expectation(ch, c), method)
