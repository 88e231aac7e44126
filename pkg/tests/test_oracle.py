import random

import numpy as np
import pytest

from graphfid.analytic import exact_fidelity, fully_connected_fidelity, stabilizer_expectation
from graphfid.checks import random_channel, random_graph, random_pauli
from graphfid.errors import CapacityError
from graphfid.graph import Graph, complete_graph, grid_cluster, path_graph
from graphfid.noise import PauliChannel, depolarizing
from graphfid.oracle import (
    apply_channel,
    build_graph_state,
    density_matrix,
    expectation_oracle,
    fidelity_oracle,
    lemma1_check,
    pauli_matrix,
)
from graphfid.pauli import Membership, PauliString, counts, generators, membership, stabilizer


def test_k2_state():
    psi = build_graph_state(complete_graph(2))
    assert np.allclose(psi, np.array([1, 1, 1, -1]) / 2)


def test_path3_signs():
    psi = build_graph_state(path_graph(3))
    for b in range(8):
        b0, b1, b2 = b >> 2 & 1, b >> 1 & 1, b & 1
        assert psi[b] == pytest.approx((-1) ** (b0 * b1 + b1 * b2) / np.sqrt(8))


@pytest.mark.parametrize("g", [complete_graph(4), grid_cluster((2, 3)), path_graph(5)])
def test_generators_fix_state(g):
    psi = build_graph_state(g)
    assert np.linalg.norm(psi) == pytest.approx(1, abs=1e-12)
    for gen in generators(g):
        assert np.allclose(pauli_matrix(gen) @ psi, psi)


def test_cap():
    with pytest.raises(CapacityError):
        build_graph_state(complete_graph(11))
    with pytest.raises(CapacityError):
        build_graph_state(complete_graph(13), cap=20)


def test_apply_channel_examples():
    rho = density_matrix(build_graph_state(grid_cluster((2, 2))))
    assert np.allclose(apply_channel(rho, PauliChannel(0, 0, 0)), rho)
    zero = np.diag([1.0, 0.0]).astype(complex)
    out = apply_channel(zero, depolarizing(1))
    assert np.allclose(out, np.diag([1 / 3, 2 / 3]))


def test_channel_properties():
    rng = random.Random(3)
    g = random_graph(5, rng)
    rho = density_matrix(build_graph_state(g))
    ch = random_channel(rng)
    out = apply_channel(rho, ch)
    assert np.trace(out).real == pytest.approx(1, abs=1e-12)
    assert np.allclose(out, out.conj().T, atol=1e-12)
    assert np.linalg.eigvalsh(out).min() > -1e-12
    permuted = apply_channel(rho, ch, order=[3, 0, 4, 2, 1])
    assert np.abs(permuted - out).max() < 1e-12


def test_fidelity_oracle_examples():
    assert fidelity_oracle(grid_cluster((2, 3)), depolarizing(0)) == pytest.approx(1, abs=1e-12)
    assert fidelity_oracle(complete_graph(4), depolarizing(0.3)) == pytest.approx(fully_connected_fidelity(4, 0.3), abs=1e-10)
    g = grid_cluster((2, 4))
    assert fidelity_oracle(g, depolarizing(0.1)) == pytest.approx(exact_fidelity(g, depolarizing(0.1)), abs=1e-10)


def test_expectation_oracle_general_channels():
    rng = random.Random(11)
    for _ in range(40):
        g = random_graph(rng.randint(2, 6), rng)
        ch = random_channel(rng)
        s = stabilizer(g, rng.getrandbits(g.n))
        assert expectation_oracle(g, ch, s) == pytest.approx(stabilizer_expectation(ch, counts(s)), abs=1e-10)
    g = complete_graph(3)
    assert expectation_oracle(g, depolarizing(0.4), PauliString.identity(3)) == pytest.approx(1)
    assert expectation_oracle(g, depolarizing(0), stabilizer(g, "111")) == pytest.approx(1)


def test_lemma1_examples():
    k2 = complete_graph(2)
    assert lemma1_check(k2, PauliString.from_letters("YY")) == 1
    assert lemma1_check(k2, PauliString.from_letters("XX")) == 0


def test_lemma1_random_strings_agree_with_membership():
    rng = random.Random(17)
    for _ in range(300):
        g = random_graph(rng.randint(1, 7), rng)
        p = random_pauli(g.n, rng)
        assert lemma1_check(g, p) == int(membership(g, p) is not Membership.NOT_A_MEMBER)
