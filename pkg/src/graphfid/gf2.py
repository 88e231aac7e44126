"""Linear algebra over GF(2) with rows packed into Python ints."""

from __future__ import annotations

from collections.abc import Sequence


def rank(rows: Sequence[int]) -> int:
    """Rank of the row space spanned by ``rows``."""
    basis: dict[int, int] = {}
    for row in rows:
        row = _reduce(row, basis)
        if row:
            basis[row.bit_length() - 1] = row
    return len(basis)


def _reduce(row: int, basis: dict[int, int]) -> int:
    while row:
        top = row.bit_length() - 1
        pivot = basis.get(top)
        if pivot is None:
            return row
        row ^= pivot
    return 0


def solve(rows: Sequence[int], target: int) -> int | None:
    """Find coefficients ``c`` with ``XOR_{i: c_i=1} rows[i] == target``.

    Returns the coefficient vector as an int (bit ``i`` set iff ``rows[i]`` is
    used), or ``None`` when ``target`` is outside the row space. Gaussian
    elimination keyed on leading bits; each pivot remembers which input rows
    it was built from.
    """
    basis: dict[int, tuple[int, int]] = {}
    for i, row in enumerate(rows):
        combo = 1 << i
        while row:
            top = row.bit_length() - 1
            if top not in basis:
                basis[top] = (row, combo)
                break
            prow, pcombo = basis[top]
            row ^= prow
            combo ^= pcombo
    combo = 0
    while target:
        top = target.bit_length() - 1
        if top not in basis:
            return None
        prow, pcombo = basis[top]
        target ^= prow
        combo ^= pcombo
    return combo
