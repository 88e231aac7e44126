import pytest
from hypothesis import given, strategies as st

from graphfid.errors import InvalidParameterError
from graphfid.noise import PauliChannel, depolarizing, interpolated, parse_channel, phase_flip


def approx_channel(ch, expected):
    assert (ch.px, ch.py, ch.pz) == pytest.approx(expected, abs=1e-15)


@pytest.mark.parametrize("p, third", [(0, 0), (0.15, 0.05), (0.75, 0.25)])
def test_depolarizing(p, third):
    approx_channel(depolarizing(p), (third,) * 3)


def test_phase_flip():
    approx_channel(phase_flip(0.1), (0, 0, 0.1))
    assert phase_flip(0).is_identity()
    approx_channel(phase_flip(1), (0, 0, 1))


def test_interpolated_examples():
    approx_channel(interpolated(0.15, 0), (0.05, 0.05, 0.05))
    approx_channel(interpolated(0.15, 0.05), (0, 0, 0.15))
    approx_channel(interpolated(0.3, 0.06), (0.04, 0.04, 0.22))


@pytest.mark.parametrize("bad", [-0.1, 1.5])
def test_out_of_range(bad):
    with pytest.raises(InvalidParameterError):
        depolarizing(bad)
    with pytest.raises(InvalidParameterError):
        phase_flip(bad)


def test_interpolated_delta_range():
    with pytest.raises(InvalidParameterError):
        interpolated(0.15, 0.06)
    with pytest.raises(InvalidParameterError):
        interpolated(0.15, -0.01)


def test_channel_validation():
    with pytest.raises(InvalidParameterError):
        PauliChannel(0.5, 0.4, 0.2)
    # round-off is tolerated and clamped
    ch = PauliChannel(-1e-13, 0.5, 0.5 + 1e-13)
    assert ch.px == 0.0 and ch.p0 == 0.0


@given(st.floats(0, 1), st.floats(0, 1))
def test_interpolated_total_is_p(p, frac):
    delta = frac * p / 3
    ch = interpolated(p, delta)
    assert ch.total == pytest.approx(p, abs=1e-12)


@given(st.floats(0, 1))
def test_family_endpoints(p):
    approx_channel(interpolated(p, 0), (depolarizing(p).px,) * 3)
    approx_channel(interpolated(p, p / 3), (0, 0, p))


@pytest.mark.parametrize(
    "spec, expected",
    [
        ("depolarizing:p=0.15", (0.05, 0.05, 0.05)),
        ("phaseflip:p=0.1", (0, 0, 0.1)),
        ("interp:p=0.15,delta=0.02", (0.03, 0.03, 0.09)),
        ("pauli:px=0.01,py=0.02,pz=0.03", (0.01, 0.02, 0.03)),
    ],
)
def test_parse_channel(spec, expected):
    approx_channel(parse_channel(spec), expected)


@pytest.mark.parametrize("spec", ["amplitude:p=0.1", "depolarizing:q=0.1", "depolarizing", "pauli:px=a"])
def test_parse_channel_errors(spec):
    with pytest.raises(InvalidParameterError):
        parse_channel(spec)
