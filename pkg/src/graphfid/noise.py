"""Independent, identically distributed single-qubit Pauli channels."""

from __future__ import annotations

from dataclasses import dataclass

from graphfid.errors import InvalidParameterError

__all__ = [
    "PauliChannel",
    "depolarizing",
    "phase_flip",
    "interpolated",
    "parse_channel",
    "channel_family",
    "build_channel",
]

TOL = 1e-12


def _check_probability(name: str, value: float) -> float:
    if not -TOL <= value <= 1 + TOL:
        raise InvalidParameterError(f"{name}={value} is not a probability")
    return min(max(float(value), 0.0), 1.0)


@dataclass(frozen=True)
class PauliChannel:
    """``rho -> p0 rho + px X rho X + py Y rho Y + pz Z rho Z`` on every qubit."""

    px: float
    py: float
    pz: float

    def __post_init__(self):
        for name in ("px", "py", "pz"):
            object.__setattr__(self, name, _check_probability(name, getattr(self, name)))
        total = self.px + self.py + self.pz
        if total > 1 + TOL:
            raise InvalidParameterError(f"error probabilities sum to {total} > 1")

    @property
    def p0(self) -> float:
        return max(0.0, 1.0 - self.px - self.py - self.pz)

    @property
    def total(self) -> float:
        return self.px + self.py + self.pz

    @property
    def probabilities(self) -> tuple[float, float, float, float]:
        """``(p_I, p_X, p_Y, p_Z)`` in sampling order."""
        return (self.p0, self.px, self.py, self.pz)

    @property
    def decay_factors(self) -> tuple[float, float, float]:
        """Per-letter attenuation of X, Y and Z expectations."""
        px, py, pz = self.px, self.py, self.pz
        return (1 - 2 * py - 2 * pz, 1 - 2 * pz - 2 * px, 1 - 2 * px - 2 * py)

    def is_depolarizing(self, tol: float = TOL) -> bool:
        return abs(self.px - self.py) <= tol and abs(self.py - self.pz) <= tol

    def is_identity(self) -> bool:
        return self.total == 0.0


def depolarizing(p: float) -> PauliChannel:
    p = _check_probability("p", p)
    return PauliChannel(p / 3, p / 3, p / 3)


def phase_flip(p: float) -> PauliChannel:
    p = _check_probability("p", p)
    return PauliChannel(0.0, 0.0, p)


def interpolated(p: float, delta: float) -> PauliChannel:
    """Family joining depolarizing (``delta=0``) and phase-flip (``delta=p/3``) noise."""
    p = _check_probability("p", p)
    if not -TOL <= delta <= p / 3 + TOL:
        raise InvalidParameterError(f"delta={delta} outside [0, p/3] for p={p}")
    delta = min(max(delta, 0.0), p / 3)
    return PauliChannel(p / 3 - delta, p / 3 - delta, p / 3 + 2 * delta)


_KINDS = {
    "depolarizing": ("p",),
    "phaseflip": ("p",),
    "interp": ("p", "delta"),
    "pauli": ("px", "py", "pz"),
}
_ALIASES = {"depol": "depolarizing", "phase_flip": "phaseflip", "phase-flip": "phaseflip",
            "interpolated": "interp"}


def channel_family(spec: str) -> tuple[str, dict[str, float]]:
    """Split ``"kind:key=value,..."`` into the kind and its (possibly partial) parameters."""
    kind, _, rest = spec.strip().partition(":")
    kind = _ALIASES.get(kind.lower(), kind.lower())
    if kind not in _KINDS:
        raise InvalidParameterError(f"unknown noise kind {kind!r}; expected one of {sorted(_KINDS)}")
    params: dict[str, float] = {}
    for item in filter(None, (s.strip() for s in rest.split(","))):
        key, eq, value = item.partition("=")
        if not eq or key not in _KINDS[kind]:
            raise InvalidParameterError(f"bad parameter {item!r} for noise kind {kind!r}")
        try:
            params[key] = float(value)
        except ValueError:
            raise InvalidParameterError(f"non-numeric value in {item!r}") from None
    return kind, params


def build_channel(kind: str, params: dict[str, float]) -> PauliChannel:
    missing = [k for k in _KINDS[kind] if k not in params]
    if missing:
        raise InvalidParameterError(f"noise kind {kind!r} needs {', '.join(missing)}")
    if kind == "depolarizing":
        return depolarizing(params["p"])
    if kind == "phaseflip":
        return phase_flip(params["p"])
    if kind == "interp":
        return interpolated(params["p"], params["delta"])
    return PauliChannel(params["px"], params["py"], params["pz"])


def parse_channel(spec: str) -> PauliChannel:
    """Parse e.g. ``"depolarizing:p=0.15"`` or ``"pauli:px=0.01,py=0,pz=0.02"``."""
    return build_channel(*channel_family(spec))
