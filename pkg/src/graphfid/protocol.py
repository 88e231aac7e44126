"""Monte Carlo simulation of the single-stabilizer verification protocol.

Outcomes are simulated in the Pauli frame: each copy of the noisy graph state
is the ideal state hit by a random Pauli error, and measuring a stabilizer
``S`` returns ``(-1)**k`` where ``k`` counts the qubits whose error
anticommutes with ``S``'s letter there.

Randomness is counter-based (numpy's Philox). The uniform used for qubit
``j`` of sample ``i`` in trial ``t`` is the raw word at stream position
``i * 4B + j`` under key ``(seed, t)``, with ``B = ceil(n / 4)`` Philox blocks
reserved per sample. Any partition of the samples into chunks, on any number
of workers, therefore sees the same numbers.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from graphfid.errors import InvalidParameterError
from graphfid.graph import Graph, isolated_vertices
from graphfid.noise import PauliChannel
from graphfid.pauli import Membership, PauliString, StabilizerIndex, counts, membership, stabilizer
from graphfid.analytic import stabilizer_expectation

__all__ = [
    "ProtocolReport",
    "hoeffding_samples",
    "sample_outcome",
    "sample_outcomes",
    "run_protocol",
    "coverage_trials",
]

_CHUNK = 1 << 16
_U53 = 2.0**-53


@dataclass(frozen=True)
class ProtocolReport:
    N: int
    outcome_sum: int
    estimate: float
    seed: int
    epsilon: float | None = None
    delta: float | None = None

    def to_json(self, **extra) -> str:
        return json.dumps({**asdict(self), **extra}, sort_keys=False)


def hoeffding_samples(epsilon: float, delta: float) -> int:
    """Copies needed so the empirical mean is within ``epsilon`` w.p. ``1 - delta``.

    Uses ``ceil(2 / epsilon**2 * ln(2 / delta))`` with the natural logarithm.
    """
    if not 0 < epsilon <= 2:
        raise InvalidParameterError(f"epsilon must lie in (0, 2], got {epsilon}")
    if not 0 < delta < 1:
        raise InvalidParameterError(f"delta must lie in (0, 1), got {delta}")
    return max(1, math.ceil(2 / epsilon**2 * math.log(2 / delta)))


def _letter_codes(s: PauliString) -> np.ndarray:
    return np.array(["IXYZ".index(s.letter(q)) for q in range(s.n)], dtype=np.int8)


def sample_outcome(s: PauliString, ch: PauliChannel, rng: np.random.Generator) -> int:
    """One measurement of ``s`` on a freshly corrupted graph state."""
    errs = rng.choice(4, size=s.n, p=ch.probabilities)
    flips = 0
    for q, e in enumerate(errs):
        tau = "IXYZ".index(s.letter(q))
        flips += tau != 0 and e != 0 and e != tau
    return -1 if flips % 2 else 1


def sample_outcomes(
    s: PauliString,
    ch: PauliChannel,
    seed: int,
    start: int,
    count: int,
    trial: int = 0,
) -> np.ndarray:
    """Outcomes ``+-1`` (int8) for samples ``start .. start+count-1``."""
    n = s.n
    if count <= 0:
        return np.zeros(0, dtype=np.int8)
    blocks = -(-n // 4)
    width = 4 * blocks
    bg = np.random.Philox(key=[seed & (2**64 - 1), trial], counter=[start * blocks, 0, 0, 0])
    raw = bg.random_raw(count * width).reshape(count, width)[:, :n]
    codes = _letter_codes(s)
    support = np.flatnonzero(codes)
    if support.size == 0 or ch.is_identity():
        return np.ones(count, dtype=np.int8)
    u = (raw[:, support] >> np.uint64(11)).astype(np.float64) * _U53
    p0, px, py, _ = ch.probabilities
    cdf = np.array([p0, p0 + px, p0 + px + py])
    errs = np.searchsorted(cdf, u, side="right")  # 0=I, 1=X, 2=Y, 3=Z
    anti = (errs != 0) & (errs != codes[support])
    parity = np.bitwise_and(anti.sum(axis=1), 1)
    return (1 - 2 * parity).astype(np.int8)


def _outcome_sum(s, ch, seed, N, trial, workers):
    spans = [(a, min(_CHUNK, N - a)) for a in range(0, N, _CHUNK)]

    def work(span):
        a, c = span
        return int(sample_outcomes(s, ch, seed, a, c, trial).sum(dtype=np.int64))

    if workers <= 1 or len(spans) == 1:
        return sum(map(work, spans))
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(work, spans))


def _measured_string(g: Graph, ell) -> PauliString:
    if isolated_vertices(g):
        raise InvalidParameterError(
            f"graph has isolated vertices {isolated_vertices(g)}; verify them separately"
        )
    if isinstance(ell, PauliString):
        if ell.n != g.n or ell.phase not in (0, 2) or membership(g, ell) is not Membership.PLUS:
            raise InvalidParameterError(f"{ell} is not a stabilizer of the graph state")
        return ell
    return stabilizer(g, ell)


def run_protocol(
    g: Graph,
    ell: StabilizerIndex | str | PauliString,
    ch: PauliChannel,
    N: int,
    seed: int,
    *,
    epsilon: float | None = None,
    delta: float | None = None,
    trial: int = 0,
    workers: int = 1,
) -> ProtocolReport:
    """Measure one stabilizer on ``N`` noisy copies and average the outcomes.

    ``ell`` is a generator selection, or an explicit Pauli string which must
    be a member of the stabilizer group with sign +1.
    """
    if N < 1:
        raise InvalidParameterError("need at least one sample")
    s = _measured_string(g, ell)
    total = _outcome_sum(s, ch, seed, N, trial, workers)
    return ProtocolReport(N, total, total / N, seed, epsilon, delta)


def coverage_trials(
    g: Graph,
    ell,
    ch: PauliChannel,
    epsilon: float,
    delta: float,
    trials: int,
    seed: int,
    *,
    N: int | None = None,
    workers: int = 1,
) -> float:
    """Fraction of independent protocol runs landing within ``epsilon`` of the exact expectation."""
    if trials < 1:
        raise InvalidParameterError("need at least one trial")
    if N is None:
        N = hoeffding_samples(epsilon, delta)
    s = _measured_string(g, ell)
    target = stabilizer_expectation(ch, counts(s))

    def one(t):
        total = _outcome_sum(s, ch, seed, N, t, 1)
        return abs(total / N - target) <= epsilon

    if workers <= 1:
        hits = sum(map(one, range(trials)))
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            hits = sum(pool.map(one, range(trials)))
    return hits / trials
