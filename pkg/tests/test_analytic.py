import math

import pytest

from graphfid.analytic import (
    cluster_third_order,
    coefficient_C,
    exact_fidelity,
    expectation_from_series,
    f_est_interpolated,
    fidelity_breakdown,
    fidelity_error_series,
    fully_connected_fidelity,
    fully_connected_gap_bound,
    stabilizer_expectation,
    theorem1_p0,
    theorem1_quantities,
    union_bound_cluster,
    union_bound_complete,
    union_bound_fidelity,
    weight_distribution,
)
from graphfid.errors import CapacityError, InvalidParameterError, TheoremDomainError
from graphfid.graph import complete_graph, cycle_graph, grid_cluster, path_graph
from graphfid.noise import PauliChannel, depolarizing, interpolated, phase_flip
from graphfid.pauli import PauliCounts, PauliString, counts

# <G|rho|G> for the 2x4 cluster at p = 0.1, from an independent dense
# simulation with explicit 256x256 Kraus matrices.
CLUSTER_2X4_P01 = 0.4306582907727478


def test_stabilizer_expectation_examples():
    assert stabilizer_expectation(depolarizing(0.15), PauliCounts(2, 2, 2, 2)) == pytest.approx(0.262144, abs=1e-15)
    c = counts(PauliString.from_letters("XZXIXZXI"))
    assert stabilizer_expectation(phase_flip(0.1), c) == pytest.approx(0.4096, abs=1e-15)
    assert stabilizer_expectation(PauliChannel(0.1, 0.2, 0.3), PauliCounts(7, 0, 0, 0)) == 1.0


def test_exact_fidelity_examples():
    assert exact_fidelity(grid_cluster((3, 3)), depolarizing(0)) == 1.0
    assert exact_fidelity(complete_graph(8), depolarizing(0.15)) == pytest.approx(0.29911969, abs=1e-12)
    assert exact_fidelity(grid_cluster((2, 4)), depolarizing(0.1)) == pytest.approx(CLUSTER_2X4_P01, abs=1e-10)


def test_exact_fidelity_cap():
    with pytest.raises(CapacityError):
        exact_fidelity(complete_graph(10), depolarizing(0.1), cap=8)


@pytest.mark.parametrize("g", [complete_graph(2), complete_graph(4), path_graph(5), cycle_graph(6), grid_cluster((3, 3))])
@pytest.mark.parametrize("p", [0, 0.05, 0.3, 0.6, 0.75, 0.9])
def test_two_enumerations_agree(g, p):
    assert fidelity_error_series(g, p) == pytest.approx(exact_fidelity(g, depolarizing(p)), abs=1e-12)


def test_error_series_k2_noiseless():
    assert fidelity_error_series(complete_graph(2), 0) == 1.0


def test_error_series_k4():
    assert fidelity_error_series(complete_graph(4), 0.3) == pytest.approx(0.2704, abs=1e-12)


def test_coefficient_examples():
    for n in range(1, 12):
        for n_I in range(n + 1):
            assert coefficient_C(0, n, n_I) == 1
            assert coefficient_C(1, n, n_I) == 4 * n_I - n
            if n >= 2:
                assert coefficient_C(2, n, n_I) * 2 == 16 * n_I**2 - 8 * (n + 1) * n_I + n * (n - 1)
    assert coefficient_C(2, 8, 2) == -12


def test_coefficient_is_polynomial_coefficient():
    # coefficient of x^(n-m) y^m in (x + 3y)^n_I (x - y)^(n - n_I), by direct convolution
    for n in range(0, 9):
        for n_I in range(n + 1):
            a = [math.comb(n_I, j) * 3**j for j in range(n_I + 1)]
            b = [math.comb(n - n_I, j) * (-1) ** j for j in range(n - n_I + 1)]
            conv = [sum(a[j] * b[m - j] for j in range(len(a)) if 0 <= m - j < len(b)) for m in range(n + 1)]
            assert [coefficient_C(m, n, n_I) for m in range(n + 1)] == conv


def test_coefficient_exact_for_large_n():
    assert isinstance(coefficient_C(40, 80, 20), int)
    with pytest.raises(InvalidParameterError):
        coefficient_C(5, 4, 1)


def test_series_collapses():
    for n in (1, 5, 12):
        for n_I in range(n + 1):
            for p in (0, 0.2, 0.75):
                assert expectation_from_series(n, n_I, p) == pytest.approx((1 - 4 * p / 3) ** (n - n_I), abs=1e-12)


def test_fully_connected_fidelity_examples():
    assert fully_connected_fidelity(8, 0) == 1.0
    assert fully_connected_fidelity(8, 0.75) == pytest.approx(1 / 256, abs=1e-15)
    assert fully_connected_fidelity(8, 0.15) == pytest.approx(0.29911969, abs=1e-12)


def test_cluster_weight_three_counts():
    assert weight_distribution(grid_cluster((2, 4)))[3] == 8
    assert weight_distribution(grid_cluster((3, 4)))[3] == 4
    assert list(weight_distribution(grid_cluster((3, 4)))[:3]) == [1, 0, 0]
    assert cluster_third_order(grid_cluster((3, 4)), 0) == 1.0


def test_cluster_third_order_formula():
    p = 0.07
    assert cluster_third_order(grid_cluster((2, 4)), p) == pytest.approx((1 - p) ** 8 + 8 * (1 - p) ** 5 * (p / 3) ** 3)


def test_theorem1_examples():
    t = theorem1_quantities(2, 0.15)
    assert t.f_tilde == pytest.approx(0.85**8, abs=1e-15)
    assert t.f_est == pytest.approx(0.262144, abs=1e-15)
    assert t.gap == pytest.approx(0.0103465250390625, abs=1e-12)
    assert t.bound == pytest.approx(1 / 3)
    assert theorem1_quantities(5, 0) == (1.0, 1.0, 2 / 15)
    assert theorem1_quantities(1, 0.3).bound == pytest.approx(2 / 3)
    with pytest.raises(TheoremDomainError):
        theorem1_quantities(2, 0.8)


def test_theorem1_p0():
    assert theorem1_p0(1) == pytest.approx(8 / 9, abs=1e-15)
    assert theorem1_p0(2) == pytest.approx(0.29951005103185388, abs=1e-14)


def test_p0_maximises_gap_polynomial():
    for k in (1, 2, 5, 20):
        poly = lambda p: k * p**2 * (2 / 3 - p / 2) * (1 - p) ** (4 * (k - 1))
        p0 = theorem1_p0(k)
        grid = [i / 20000 for i in range(1, 20000)]
        best = max(grid, key=poly)
        assert abs(best - p0) < 1e-3


def test_fully_connected_gap_bound_values():
    # 0.5 * (7/8) * (3/4)**6 + 0.5 * (2/3)**8 + 1/3 evaluated at 40 digits
    assert fully_connected_gap_bound(1) == pytest.approx(0.43070815507458252, abs=1e-14)
    bounds = [fully_connected_gap_bound(k) for k in range(1, 101)]
    assert all(a > b for a, b in zip(bounds, bounds[1:]))
    assert fully_connected_gap_bound(10**6) == pytest.approx(1 / (2 * math.e**2), abs=1e-6)


def test_f_est_interpolated():
    assert f_est_interpolated(8, 0.15, 0) == pytest.approx(0.8**6, abs=1e-15)
    assert f_est_interpolated(8, 0.15, 0.05) == pytest.approx(0.2401, abs=1e-15)
    values = [f_est_interpolated(8, 0.15, d / 1000) for d in range(51)]
    assert all(a >= b for a, b in zip(values, values[1:]))
    with pytest.raises(InvalidParameterError):
        f_est_interpolated(8, 0.15, 0.06)
    with pytest.raises(TheoremDomainError):
        f_est_interpolated(6, 0.15, 0.0)


def test_f_est_interpolated_matches_general_expectation():
    c = counts(PauliString.from_letters("XZXIXZXI"))
    for d in (0, 0.01, 0.03, 0.05):
        assert stabilizer_expectation(interpolated(0.15, d), c) == pytest.approx(f_est_interpolated(8, 0.15, d), abs=1e-15)


def test_union_bound_examples():
    assert union_bound_fidelity(complete_graph(8), 0.05) == pytest.approx(-0.69668039423, abs=1e-10)
    assert union_bound_fidelity(grid_cluster((3, 3)), 0) == 1.0
    for p in (0.001, 0.01, 0.2):
        assert union_bound_fidelity(grid_cluster((3, 4)), p) == pytest.approx(union_bound_cluster(3, 4, p), abs=1e-12)
        assert union_bound_fidelity(complete_graph(6), p) == pytest.approx(union_bound_complete(6, p), abs=1e-12)


def test_breakdown():
    b = fidelity_breakdown(complete_graph(8), depolarizing(0.15))
    assert b.method == "fully-connected-closed-form"
    assert b.exact == pytest.approx(0.29911969)
    assert b.first_order_truncation == pytest.approx(0.85**8)
    assert b.single_setting == pytest.approx(0.262144)
    assert 0 <= b.first_order_truncation - b.single_setting
    b2 = fidelity_breakdown(grid_cluster((2, 4)), depolarizing(0.1), method="error-series")
    assert b2.exact == pytest.approx(CLUSTER_2X4_P01, abs=1e-12)
