"""Cross-module equivalence suite against the dense oracle."""

from __future__ import annotations

import random

from graphfid import analytic, oracle
from graphfid.graph import Graph, complete_graph, cycle_graph, grid_cluster, path_graph
from graphfid.noise import PauliChannel, depolarizing
from graphfid.pauli import Membership, PauliString, StabilizerIndex, counts, membership, stabilizer


def random_graph(n: int, rng: random.Random, density: float = 0.5) -> Graph:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    return Graph(n, frozenset(edges))


def random_channel(rng: random.Random) -> PauliChannel:
    w = [rng.random() for _ in range(4)]
    scale = rng.random() / sum(w)
    return PauliChannel(w[1] * scale, w[2] * scale, w[3] * scale)


def random_pauli(n: int, rng: random.Random) -> PauliString:
    return PauliString(n, rng.getrandbits(n), rng.getrandbits(n), rng.choice((0, 2)))


def standard_graphs(max_n: int) -> list[Graph]:
    out = [complete_graph(n) for n in range(2, max_n + 1)]
    out += [path_graph(n) for n in range(3, max_n + 1)]
    out += [cycle_graph(n) for n in range(3, max_n + 1)]
    out += [grid_cluster((r, c)) for r in range(2, max_n) for c in range(r, max_n) if r * c <= max_n]
    return out


def run_checks(max_n: int = 6, samples: int = 100, seed: int = 0) -> dict[str, float]:
    """Maximum absolute deviation for each equivalence check."""
    rng = random.Random(seed)
    graphs = standard_graphs(max_n) + [random_graph(rng.randint(2, max_n), rng) for _ in range(10)]
    p_grid = [i / 10 for i in range(8)]

    fid = series = 0.0
    for g in graphs:
        for p in p_grid:
            ref = oracle.fidelity_oracle(g, depolarizing(p))
            fid = max(fid, abs(ref - analytic.exact_fidelity(g, depolarizing(p))))
            series = max(series, abs(ref - analytic.fidelity_error_series(g, p)))

    expect = 0.0
    for _ in range(samples):
        g = random_graph(rng.randint(2, max_n), rng)
        ch = random_channel(rng)
        s = stabilizer(g, StabilizerIndex(g.n, rng.getrandbits(g.n)))
        expect = max(expect, abs(analytic.stabilizer_expectation(ch, counts(s))
                                 - oracle.expectation_oracle(g, ch, s)))

    lemma = 0.0
    for _ in range(samples):
        g = random_graph(rng.randint(2, max_n), rng)
        p = random_pauli(g.n, rng)
        member = membership(g, p) is not Membership.NOT_A_MEMBER
        lemma = max(lemma, abs(oracle.lemma1_check(g, p) - int(member)))

    return {
        "fidelity: oracle vs group enumeration": fid,
        "fidelity: oracle vs error series": series,
        "stabilizer expectation: closed form vs oracle": expect,
        "squared Pauli expectation vs membership": lemma,
    }
