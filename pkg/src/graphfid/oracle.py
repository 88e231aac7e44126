"""Dense state-vector / density-matrix reference for small graphs.

Deliberately naive: everything is an explicit ``2**n`` vector or
``2**n x 2**n`` matrix, with qubit 0 as the most significant bit of the basis
index. Used to validate the closed forms, never on hot paths.
"""

from __future__ import annotations

import numpy as np

from graphfid.errors import CapacityError, ConsistencyError
from graphfid.graph import Graph
from graphfid.noise import PauliChannel
from graphfid.pauli import PauliString

__all__ = [
    "ORACLE_CAP",
    "ORACLE_HARD_MAX",
    "build_graph_state",
    "density_matrix",
    "apply_channel",
    "pauli_matrix",
    "fidelity_oracle",
    "expectation_oracle",
    "lemma1_check",
]

ORACLE_CAP = 10
ORACLE_HARD_MAX = 12

_PAULI = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def _check(n: int, cap: int | None) -> None:
    cap = ORACLE_CAP if cap is None else min(cap, ORACLE_HARD_MAX)
    if n > cap:
        raise CapacityError(f"dense oracle limited to {cap} qubits, got {n}")


def build_graph_state(g: Graph, cap: int | None = None) -> np.ndarray:
    """Amplitudes ``2**(-n/2) * (-1)**(edges inside the set bits)``."""
    _check(g.n, cap)
    n = g.n
    idx = np.arange(1 << n)
    bits = (idx[:, None] >> (n - 1 - np.arange(n))) & 1
    internal = np.zeros(1 << n, dtype=np.int64)
    for i, j in g.edges:
        internal += bits[:, i] & bits[:, j]
    return (1 - 2 * (internal & 1)).astype(complex) / 2 ** (n / 2)


def density_matrix(psi: np.ndarray) -> np.ndarray:
    return np.outer(psi, psi.conj())


def apply_channel(rho: np.ndarray, ch: PauliChannel, order=None) -> np.ndarray:
    """Apply the single-qubit Pauli mixture to every qubit, one pass per qubit.

    Conjugation by X flips the qubit's row and column index, by Z multiplies
    by the product of their signs, and Y is X after Z.
    """
    dim = rho.shape[0]
    n = dim.bit_length() - 1
    _check(n, ORACLE_HARD_MAX)
    p0, px, py, pz = ch.probabilities
    signs = np.array([1.0, -1.0])
    zz = signs.reshape(1, 2, 1, 1, 1, 1) * signs.reshape(1, 1, 1, 1, 2, 1)
    order = range(n) if order is None else order
    for q in order:
        left, right = 1 << q, 1 << (n - 1 - q)
        r = rho.reshape(left, 2, right, left, 2, right)
        zr = r * zz
        out = p0 * r + pz * zr
        out += (px * r + py * zr)[:, ::-1, :, :, ::-1, :]
        rho = out.reshape(dim, dim)
    return rho


def pauli_matrix(p: PauliString) -> np.ndarray:
    out = np.array([[1j**p.phase]], dtype=complex)
    for ch in p.letters:
        out = np.kron(out, _PAULI[ch])
    return out


def _noisy_state(g: Graph, ch: PauliChannel, cap: int | None):
    psi = build_graph_state(g, cap)
    return psi, apply_channel(density_matrix(psi), ch)


def fidelity_oracle(g: Graph, ch: PauliChannel, cap: int | None = None) -> float:
    psi, rho = _noisy_state(g, ch, cap)
    f = psi.conj() @ rho @ psi
    if abs(f.imag) > 1e-12:
        raise ConsistencyError(f"fidelity has imaginary part {f.imag}")
    return float(f.real)


def expectation_oracle(g: Graph, ch: PauliChannel, s: PauliString, cap: int | None = None) -> float:
    _, rho = _noisy_state(g, ch, cap)
    val = np.trace(rho @ pauli_matrix(s))
    if abs(val.imag) > 1e-12:
        raise ConsistencyError(f"expectation has imaginary part {val.imag}")
    return float(val.real)


def lemma1_check(g: Graph, p: PauliString, cap: int | None = None) -> int:
    """``|<G|p|G>|**2`` rounded to 0 or 1; anything else is an inconsistency."""
    psi = build_graph_state(g, cap)
    val = abs(psi.conj() @ pauli_matrix(p) @ psi) ** 2
    nearest = int(round(val))
    if nearest not in (0, 1) or abs(val - nearest) > 1e-10:
        raise ConsistencyError(f"squared expectation {val} is not 0 or 1")
    return nearest
