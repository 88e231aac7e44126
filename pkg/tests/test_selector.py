import itertools

import pytest

from graphfid.analytic import stabilizer_expectation
from graphfid.errors import CapacityError, NoPatternError, TheoremDomainError
from graphfid.graph import GridSpec, complete_graph, cycle_graph, grid_cluster
from graphfid.noise import depolarizing
from graphfid.pauli import StabilizerIndex, counts, stabilizer
from graphfid.selector import (
    auto_select,
    cluster_tiling_pattern,
    dual_condition_filter,
    find_set_A,
    fully_connected_pattern,
)

EQ_BITS = "10101010"  # generators 0, 2, 4, 6 on the 2x4 cluster


def _check_invariants(g, res):
    n = g.n
    assert counts(stabilizer(g, res.index)).n_I == n // 4
    assert res.satisfies_dual == (res.index.weight == n // 2)
    sel = set(res.index.selected())
    for q in range(n):
        if q not in sel and res.string.letter(q) == "I":
            assert len(g.neighbors[q] & sel) % 2 == 0


def test_two_by_four_contains_alternating_choice():
    g = grid_cluster((2, 4))
    results = find_set_A(g)
    by_index = {str(r.index): r for r in results}
    assert str(by_index[EQ_BITS].string) == "+XZXIXZXI"
    assert by_index[EQ_BITS].satisfies_dual
    for r in results:
        _check_invariants(g, r)


def test_results_in_ascending_order_and_limit():
    g = grid_cluster((2, 4))
    bits = [r.index.bits for r in find_set_A(g)]
    assert bits == sorted(bits)
    assert [r.index.bits for r in find_set_A(g, limit=3)] == bits[:3]


def test_complete_graph_sets():
    found = find_set_A(complete_graph(8))
    assert {r.index.bits for r in found} == {
        StabilizerIndex.from_generators(8, c).bits for c in itertools.combinations(range(8), 6)
    }
    assert find_set_A(complete_graph(4)) == []
    assert dual_condition_filter(found) == []
    assert dual_condition_filter([]) == []


def test_non_multiple_of_four():
    with pytest.raises(TheoremDomainError, match="Z basis"):
        find_set_A(cycle_graph(6))


def test_capacity():
    with pytest.raises(CapacityError):
        find_set_A(complete_graph(12), cap=8)


def test_fully_connected_pattern():
    r8 = fully_connected_pattern(8)
    assert r8.index.weight == 6 and r8.counts.n_I == 2
    r16 = fully_connected_pattern(16)
    assert r16.index.weight == 12 and r16.counts.n_I == 4
    for n in (4, 12, 20):
        with pytest.raises(NoPatternError):
            fully_connected_pattern(n)


@pytest.mark.parametrize("q, r", [(1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (1, 3), (3, 2), (2, 3), (3, 3), (4, 1)])
def test_tiling_pattern_verifies(q, r):
    res = cluster_tiling_pattern(q, r, cap=0)  # cap=0 forbids the search fallback
    n = 8 * q * r
    assert res.source == "pattern"
    assert res.index.weight == n // 2 and res.counts.n_I == n // 4
    _check_invariants(grid_cluster(GridSpec(2 * r, 4 * q)), res)


def test_tiling_base_case_is_alternating_choice():
    assert str(cluster_tiling_pattern(1, 1).index) == EQ_BITS


def test_set_members_share_depolarizing_expectation():
    g = grid_cluster((2, 4))
    for r in find_set_A(g):
        assert stabilizer_expectation(depolarizing(0.2), r.counts) == pytest.approx((1 - 0.8 / 3) ** 6)


def test_auto_select():
    assert str(auto_select(complete_graph(8)).index) == "00111111"
    big = auto_select(complete_graph(32), cap=10)
    assert big.index.weight == 24 and big.counts.n_I == 8
    dual = auto_select(grid_cluster((2, 4)), dual=True)
    assert dual.satisfies_dual
    with pytest.raises(NoPatternError):
        auto_select(complete_graph(4))
