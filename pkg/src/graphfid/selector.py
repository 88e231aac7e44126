"""Choosing the single stabilizer to measure.

A stabilizer qualifies when exactly ``n/4`` of its letters are identities.
Under depolarizing noise every such stabilizer has the same expectation, so
the selector only needs to find one; "dual-condition" members additionally
have weight ``n/2`` in the generator index, which keeps them usable under
phase-flip noise as well.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from graphfid.errors import CapacityError, NoPatternError, TheoremDomainError
from graphfid.graph import Graph, GridSpec, complete_graph, grid_cluster
from graphfid.pauli import (
    PauliCounts,
    PauliString,
    StabilizerIndex,
    census_chunks,
    counts,
    stabilizer,
)

__all__ = [
    "SelectionResult",
    "find_set_A",
    "fully_connected_pattern",
    "cluster_tiling_pattern",
    "dual_condition_filter",
    "auto_select",
]

_RESIZE_HINT = (
    "the qubit count can be reduced to a multiple of 4 by measuring surplus "
    "qubits in the Z basis, which removes them from the graph"
)


@dataclass(frozen=True)
class SelectionResult:
    index: StabilizerIndex
    string: PauliString
    counts: PauliCounts
    satisfies_dual: bool
    source: str = "search"

    def describe(self) -> str:
        return (
            f"{self.index} {self.string} wt={self.index.weight} "
            f"n_I={self.counts.n_I} dual={'yes' if self.satisfies_dual else 'no'}"
        )


def _result(g: Graph, idx: StabilizerIndex, source: str) -> SelectionResult:
    s = stabilizer(g, idx)
    c = counts(s)
    if 4 * c.n_I != g.n:
        raise AssertionError(f"selected stabilizer {s} has n_I={c.n_I}, not n/4")
    return SelectionResult(idx, s, c, 2 * idx.weight == g.n, source)


def _require_multiple_of_four(n: int) -> None:
    if n % 4:
        raise TheoremDomainError(f"n={n} is not a multiple of 4; {_RESIZE_HINT}")


def find_set_A(g: Graph, limit: int | None = None, cap: int | None = None) -> list[SelectionResult]:
    """Stabilizers with exactly ``n/4`` identity letters, in ascending index order.

    An empty list is a legitimate answer: nothing guarantees the set is
    non-empty for a given graph.
    """
    _require_multiple_of_four(g.n)
    target = g.n - g.n // 4  # non-identity letters
    found: list[SelectionResult] = []
    for ell, nx, ny, nz in census_chunks(g, cap):
        hits = ell[(nx + ny + nz) == target]
        for bits in hits.tolist():
            if limit is not None and len(found) >= limit:
                return found
            found.append(_result(g, StabilizerIndex(g.n, bits), "search"))
    return found


def fully_connected_pattern(n: int) -> SelectionResult:
    """Product of the first ``3n/4`` generators of K_n; exists when 8 divides n."""
    if n < 8 or n % 8:
        raise NoPatternError(
            f"complete graph on n={n} has no qualifying stabilizer unless n is a multiple of 8"
        )
    idx = StabilizerIndex.from_generators(n, range(3 * n // 4))
    return _result(complete_graph(n), idx, "pattern")


_BLOCK = ((0, 0), (0, 2), (1, 1), (1, 3))


def _tiling_cells(q: int, r: int) -> list[tuple[int, int]]:
    # Adjacent 2x4 blocks are mirrored left-right; straight translation fails on 2x8.
    cells = []
    for br in range(r):
        for bc in range(q):
            mirror = (br + bc) % 2 == 1
            for row, col in _BLOCK:
                cells.append((2 * br + row, 4 * bc + (3 - col if mirror else col)))
    return cells


def cluster_tiling_pattern(q: int, r: int, cap: int | None = None) -> SelectionResult:
    """Dual-condition stabilizer for the ``2r x 4q`` cluster (boustrophedon numbering).

    The 2x4 choice ``g_0 g_2 g_4 g_6`` is replicated block by block and the
    product re-verified. If verification fails, an exhaustive search for a
    dual-condition stabilizer is run instead; ``source`` reports which path
    produced the result.
    """
    if q < 1 or r < 1:
        raise NoPatternError(f"tiling needs q, r >= 1, got q={q}, r={r}")
    spec = GridSpec(2 * r, 4 * q)
    g = grid_cluster(spec)
    idx = StabilizerIndex.from_generators(g.n, (spec.index(row, col) for row, col in _tiling_cells(q, r)))
    s = stabilizer(g, idx)
    c = counts(s)
    if 4 * c.n_I == g.n and 2 * idx.weight == g.n:
        return SelectionResult(idx, s, c, True, "pattern")
    for res in _dual_search(g, cap):
        return res
    raise NoPatternError(f"no dual-condition stabilizer on the {spec.rows}x{spec.cols} cluster")


def _dual_search(g: Graph, cap: int | None):
    target = g.n - g.n // 4
    half = g.n // 2
    for ell, nx, ny, nz in census_chunks(g, cap):
        mask = ((nx + ny + nz) == target) & (np.bitwise_count(ell) == half)
        for bits in ell[mask].tolist():
            yield _result(g, StabilizerIndex(g.n, bits), "search")


def dual_condition_filter(results: list[SelectionResult]) -> list[SelectionResult]:
    return [r for r in results if 2 * r.index.weight == r.index.n]


def auto_select(g: Graph, dual: bool = False, cap: int | None = None) -> SelectionResult:
    """Deterministic choice: the smallest qualifying index (as a bit string).

    Complete graphs beyond the enumeration cap use the smallest
    weight-``3n/4`` index directly.
    """
    _require_multiple_of_four(g.n)
    try:
        if dual:
            for res in _dual_search(g, cap):
                return res
            raise NoPatternError("no dual-condition stabilizer exists for this graph")
        found = find_set_A(g, limit=1, cap=cap)
    except CapacityError:
        if g.is_complete() and not dual and g.n % 8 == 0:
            return _result(g, StabilizerIndex(g.n, (1 << (3 * g.n // 4)) - 1), "pattern")
        raise
    if not found:
        raise NoPatternError("no stabilizer with n/4 identity letters exists for this graph")
    return found[0]
