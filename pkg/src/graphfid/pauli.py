"""Symplectic Pauli strings and the stabilizer group of a graph state.

Bit convention used throughout the package: an ``n``-qubit mask stores qubit
``i`` at bit position ``n - 1 - i``. Qubit 0 is therefore the most significant
bit, which makes ``format(mask, f"0{n}b")`` list qubits in order and keeps the
integer order of stabilizer indices equal to the lexicographic order of their
bit strings.

A :class:`PauliString` is ``i**phase`` times a tensor product of the letters
I, X, Y, Z. Graph-state stabilizers are Hermitian, so their phase is 0 (sign
+1) or 2 (sign -1).
"""

from __future__ import annotations

import enum
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from graphfid import gf2
from graphfid.errors import CapacityError, ConsistencyError, InvalidParameterError
from graphfid.graph import Graph

__all__ = [
    "ENUMERATION_CAP",
    "PauliString",
    "StabilizerIndex",
    "PauliCounts",
    "Membership",
    "generator",
    "generators",
    "stabilizer",
    "counts",
    "weight",
    "group_iter",
    "membership",
    "anticommutes_on_qubit",
    "census_chunks",
    "census_histogram",
]

ENUMERATION_CAP = 24

_LETTERS = {(0, 0): "I", (1, 0): "X", (1, 1): "Y", (0, 1): "Z"}
_BITS = {v: k for k, v in _LETTERS.items()}
_MINUS_SIGNS = ("-", "−")


def _popcount(v: int) -> int:
    return bin(v).count("1")


@dataclass(frozen=True)
class PauliString:
    n: int
    x: int
    z: int
    phase: int = 0

    def __post_init__(self):
        full = (1 << self.n) - 1
        if self.x & ~full or self.z & ~full:
            raise InvalidParameterError("bit vectors wider than n")
        object.__setattr__(self, "phase", self.phase % 4)

    @classmethod
    def identity(cls, n: int) -> PauliString:
        return cls(n, 0, 0, 0)

    @classmethod
    def from_letters(cls, letters: str, sign: int = 1) -> PauliString:
        """Build from a letter string such as ``"XZI"`` or ``"-XZI"``."""
        letters = letters.strip()
        if letters and letters[0] in ("+",) + _MINUS_SIGNS:
            if letters[0] != "+":
                sign = -sign
            letters = letters[1:]
        if not letters:
            raise InvalidParameterError("empty Pauli string")
        n = len(letters)
        x = z = 0
        for i, ch in enumerate(letters.upper()):
            try:
                xb, zb = _BITS[ch]
            except KeyError:
                raise InvalidParameterError(f"unknown Pauli letter {ch!r}") from None
            bit = 1 << (n - 1 - i)
            x |= bit * xb
            z |= bit * zb
        if sign not in (1, -1):
            raise InvalidParameterError("sign must be +1 or -1")
        return cls(n, x, z, 0 if sign == 1 else 2)

    def letter(self, qubit: int) -> str:
        if not 0 <= qubit < self.n:
            raise InvalidParameterError(f"qubit {qubit} out of range")
        shift = self.n - 1 - qubit
        return _LETTERS[((self.x >> shift) & 1, (self.z >> shift) & 1)]

    @property
    def letters(self) -> str:
        return "".join(self.letter(q) for q in range(self.n))

    @property
    def sign(self) -> int:
        if self.phase == 0:
            return 1
        if self.phase == 2:
            return -1
        raise ConsistencyError(f"Pauli string {self!r} has an imaginary phase")

    @property
    def support(self) -> int:
        return self.x | self.z

    @property
    def weight(self) -> int:
        """Number of non-identity letters."""
        return _popcount(self.x | self.z)

    def commutes(self, other: PauliString) -> bool:
        return _popcount((self.x & other.z) ^ (self.z & other.x)) % 2 == 0

    def __mul__(self, other: PauliString) -> PauliString:
        if self.n != other.n:
            raise InvalidParameterError("qubit count mismatch")
        return PauliString(
            self.n,
            self.x ^ other.x,
            self.z ^ other.z,
            self.phase + other.phase + _product_phase(self.x, self.z, other.x, other.z),
        )

    def __neg__(self) -> PauliString:
        return PauliString(self.n, self.x, self.z, self.phase + 2)

    def __str__(self) -> str:
        head = {0: "+", 1: "+i", 2: "-", 3: "-i"}[self.phase]
        return head + self.letters


def _product_phase(x1: int, z1: int, x2: int, z2: int) -> int:
    """Power of i picked up when multiplying letter-form strings qubit-wise.

    X.Y = iZ, Y.Z = iX, Z.X = iY and the reversed orders give -i.
    """
    X1, Y1, Z1 = x1 & ~z1, x1 & z1, z1 & ~x1
    X2, Y2, Z2 = x2 & ~z2, x2 & z2, z2 & ~x2
    plus = (X1 & Y2) | (Y1 & Z2) | (Z1 & X2)
    minus = (Y1 & X2) | (Z1 & Y2) | (X1 & Z2)
    return _popcount(plus) - _popcount(minus)


@dataclass(frozen=True)
class StabilizerIndex:
    """Selection ``l`` of generators; ``bits`` follows the package bit convention."""

    n: int
    bits: int

    def __post_init__(self):
        if self.n < 1 or not 0 <= self.bits < (1 << self.n):
            raise InvalidParameterError(f"index bits {self.bits} do not fit {self.n} qubits")

    @classmethod
    def from_string(cls, s: str) -> StabilizerIndex:
        s = s.strip()
        if not s or set(s) - {"0", "1"}:
            raise InvalidParameterError(f"expected a bit string, got {s!r}")
        return cls(len(s), int(s, 2))

    @classmethod
    def from_generators(cls, n: int, selected: Iterable[int]) -> StabilizerIndex:
        bits = 0
        for i in selected:
            if not 0 <= i < n:
                raise InvalidParameterError(f"generator {i} out of range")
            bits |= 1 << (n - 1 - i)
        return cls(n, bits)

    def selected(self) -> list[int]:
        return [i for i in range(self.n) if (self.bits >> (self.n - 1 - i)) & 1]

    @property
    def weight(self) -> int:
        return _popcount(self.bits)

    def __str__(self) -> str:
        return format(self.bits, f"0{self.n}b")


class PauliCounts(NamedTuple):
    n_I: int
    n_X: int
    n_Y: int
    n_Z: int

    @property
    def n(self) -> int:
        return sum(self)


class Membership(str, enum.Enum):
    PLUS = "plus"
    MINUS = "minus"
    NOT_A_MEMBER = "not-a-member"


def _z_mask(g: Graph, i: int) -> int:
    m = 0
    for j in g.neighbors[i]:
        m |= 1 << (g.n - 1 - j)
    return m


def generator(g: Graph, i: int) -> PauliString:
    """X on vertex ``i`` and Z on each of its neighbours."""
    if not 0 <= i < g.n:
        raise InvalidParameterError(f"vertex {i} out of range 0..{g.n - 1}")
    return PauliString(g.n, 1 << (g.n - 1 - i), _z_mask(g, i), 0)


def generators(g: Graph) -> list[PauliString]:
    return [generator(g, i) for i in range(g.n)]


def _as_index(g: Graph, ell) -> StabilizerIndex:
    if isinstance(ell, StabilizerIndex):
        idx = ell
    elif isinstance(ell, str):
        idx = StabilizerIndex.from_string(ell)
    else:
        idx = StabilizerIndex(g.n, int(ell))
    if idx.n != g.n:
        raise InvalidParameterError(f"index has {idx.n} bits, graph has {g.n} vertices")
    return idx


def stabilizer(g: Graph, ell: StabilizerIndex | str | int) -> PauliString:
    """Product of the generators selected by ``ell``, with its exact sign."""
    idx = _as_index(g, ell)
    out = PauliString.identity(g.n)
    for i in idx.selected():
        out = out * generator(g, i)
    if out.phase not in (0, 2):
        raise ConsistencyError(f"stabilizer {idx} ended with imaginary phase {out.phase}")
    return out


def counts(p: PauliString) -> PauliCounts:
    n_X = _popcount(p.x & ~p.z)
    n_Y = _popcount(p.x & p.z)
    n_Z = _popcount(p.z & ~p.x)
    return PauliCounts(p.n - n_X - n_Y - n_Z, n_X, n_Y, n_Z)


def weight(ell: StabilizerIndex | str) -> int:
    if isinstance(ell, str):
        ell = StabilizerIndex.from_string(ell)
    return ell.weight


def _check_cap(n: int, cap: int | None) -> None:
    cap = ENUMERATION_CAP if cap is None else cap
    if n > cap:
        raise CapacityError(
            f"enumerating 2^{n} stabilizers exceeds the cap of {cap} qubits; "
            "use a closed form or raise the cap explicitly"
        )


def group_iter(g: Graph, cap: int | None = None) -> Iterator[tuple[StabilizerIndex, PauliString]]:
    """Yield every ``(l, S_l)`` once, in Gray-code order of ``l``.

    Consecutive elements differ by a single generator, so each step costs one
    symplectic multiplication.
    """
    _check_cap(g.n, cap)
    n = g.n
    gens = generators(g)
    current = PauliString.identity(n)
    bits = 0
    yield StabilizerIndex(n, 0), current
    for t in range(1, 1 << n):
        b = (t & -t).bit_length() - 1
        bits ^= 1 << b
        current = current * gens[n - 1 - b]
        if current.phase not in (0, 2):
            raise ConsistencyError("imaginary phase during group enumeration")
        yield StabilizerIndex(n, bits), current


def membership(g: Graph, p: PauliString) -> Membership:
    """Decide whether ``+p``, ``-p`` or neither belongs to the stabilizer group."""
    if p.n != g.n:
        raise InvalidParameterError(f"string has {p.n} qubits, graph has {g.n}")
    if p.phase not in (0, 2):
        raise InvalidParameterError("membership is only defined for Hermitian strings")
    n = g.n
    # Row i packs generator i as (x | z) over 2n bits; column order is irrelevant to the solve.
    rows = [(gen.x << n) | gen.z for gen in generators(g)]
    combo = gf2.solve(rows, (p.x << n) | p.z)
    if combo is None:
        return Membership.NOT_A_MEMBER
    selected = [i for i in range(n) if (combo >> i) & 1]
    s = stabilizer(g, StabilizerIndex.from_generators(n, selected))
    if (s.x, s.z) != (p.x, p.z):
        raise ConsistencyError("GF(2) solution does not reproduce the target string")
    return Membership.PLUS if s.phase == p.phase else Membership.MINUS


def anticommutes_on_qubit(p: PauliString, qubit: int, err: str) -> bool:
    """Whether single-qubit error ``err`` anticommutes with ``p``'s letter on ``qubit``."""
    if err not in ("X", "Y", "Z"):
        raise InvalidParameterError(f"error letter must be X, Y or Z, got {err!r}")
    tau = p.letter(qubit)
    return tau != "I" and tau != err


# ---------------------------------------------------------------------------
# Vectorised census over the whole group.
#
# The X-part of every generator is a single bit on its own vertex, so the X
# mask of S_l is l itself and only the Z masks need combining. Tables for the
# low and high halves of l are built by doubling and XOR-ed per chunk.

_LOW_BITS = 16


def _z_table(zrows: list[int]) -> np.ndarray:
    table = np.zeros(1, dtype=np.uint32)
    for zr in zrows:
        table = np.concatenate([table, table ^ np.uint32(zr)])
    return table


def census_chunks(
    g: Graph, cap: int | None = None, low_bits: int = _LOW_BITS
) -> Iterator[tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]]:
    """Yield ``(l, n_X, n_Y, n_Z)`` arrays covering all ``l`` in ascending order."""
    _check_cap(g.n, cap)
    n = g.n
    if n > 32:
        raise CapacityError("census kernel packs qubits into 32-bit words")
    L = min(n, low_bits)
    # bit position b of l belongs to generator n-1-b
    zrows = [_z_mask(g, n - 1 - b) for b in range(n)]
    low = _z_table(zrows[:L])
    high = _z_table(zrows[L:])
    lo_idx = np.arange(1 << L, dtype=np.uint32)
    for hi in range(1 << (n - L)):
        ell = lo_idx | np.uint32(hi << L)
        z = low ^ high[hi]
        x = ell
        yield (
            ell,
            np.bitwise_count(x & ~z),
            np.bitwise_count(x & z),
            np.bitwise_count(z & ~x),
        )


def census_histogram(g: Graph, cap: int | None = None) -> np.ndarray:
    """Counts of stabilizers by letter census, indexed ``[n_X, n_Y, n_Z]``."""
    n = g.n
    m = n + 1
    hist = np.zeros(m**3, dtype=np.int64)
    for _, nx, ny, nz in census_chunks(g, cap):
        key = (nx.astype(np.int64) * m + ny) * m + nz
        hist += np.bincount(key, minlength=m**3)
    return hist.reshape(m, m, m)
