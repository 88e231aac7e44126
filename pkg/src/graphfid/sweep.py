"""Parameter sweeps producing the curves of fidelity versus noise strength."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field

from graphfid import analytic
from graphfid.errors import CapacityError, InvalidParameterError, TheoremDomainError
from graphfid.graph import Graph, GridSpec, Numbering, complete_graph, grid_cluster
from graphfid.noise import build_channel
from graphfid.pauli import PauliCounts
from graphfid.selector import auto_select, cluster_tiling_pattern

__all__ = ["SweepSpec", "Target", "grid_points", "run_sweep", "format_csv", "family_target", "select_for"]

QUANTITIES = ("F", "F_tilde", "F_est", "F_ub", "F_third_order", "F_est_delta")


@dataclass(frozen=True)
class Target:
    """A graph plus whatever family structure is known about it."""

    graph: Graph
    name: str = "graph"
    grid: GridSpec | None = None

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def complete(self) -> bool:
        return self.graph.is_complete()


@dataclass(frozen=True)
class SweepSpec:
    variable: str
    start: float
    stop: float
    step: float
    quantities: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.variable not in ("p", "delta"):
            raise InvalidParameterError(f"sweep variable must be 'p' or 'delta', got {self.variable!r}")
        if self.step <= 0:
            raise InvalidParameterError("step must be positive")
        if self.start > self.stop:
            raise InvalidParameterError("start must not exceed stop")
        unknown = set(self.quantities) - set(QUANTITIES)
        if unknown:
            raise InvalidParameterError(f"unknown quantities {sorted(unknown)}")


def grid_points(spec: SweepSpec) -> list[float]:
    count = int(math.floor((spec.stop - spec.start) / spec.step + 1e-9)) + 1
    return [spec.start + i * spec.step for i in range(count)]


def _default_quantities(variable: str, kind: str) -> tuple[str, ...]:
    if variable == "delta":
        return ("F", "F_est")
    if kind == "depolarizing":
        return ("F", "F_tilde", "F_est", "F_ub")
    return ("F", "F_tilde", "F_est")


def select_for(target: Target, dual: bool, cap: int | None = None):
    """Measured stabilizer for a sweep or an estimate."""
    grid = target.grid
    if dual and grid is not None and grid.rows % 2 == 0 and grid.cols % 4 == 0 \
            and grid.numbering == "boustrophedon":
        return cluster_tiling_pattern(grid.cols // 4, grid.rows // 2, cap)
    try:
        return auto_select(target.graph, dual=dual, cap=cap)
    except CapacityError:
        if grid is not None and grid.rows % 2 == 0 and grid.cols % 4 == 0:
            return cluster_tiling_pattern(grid.cols // 4, grid.rows // 2, cap)
        raise


def _fidelity(target: Target, kind: str, ch, cap):
    if kind == "depolarizing" and target.complete:
        return analytic.fully_connected_fidelity(target.n, ch.total)
    return analytic.exact_fidelity(target.graph, ch, cap)


def run_sweep(
    spec: SweepSpec,
    target: Target,
    noise_kind: str,
    noise_params: dict[str, float],
    cap: int | None = None,
) -> tuple[list[str], list[list[float]], list[str]]:
    """Evaluate the requested quantities on every grid point.

    Returns ``(header, rows, warnings)``. Quantities that cannot be computed
    for the target are rejected up front; points outside the regime where the
    single-setting guarantee holds produce warnings, not silent values.
    """
    quantities = spec.quantities or _default_quantities(spec.variable, noise_kind)
    if spec.variable == "delta" and noise_kind != "interp":
        raise InvalidParameterError("delta sweeps need the 'interp' noise family")
    if spec.variable == "delta" and "p" not in noise_params:
        raise InvalidParameterError("delta sweeps need a fixed p, e.g. --noise interp:p=0.15")
    if noise_kind != "depolarizing" and {"F_ub", "F_third_order"} & set(quantities):
        raise InvalidParameterError("F_ub and F_third_order are defined for depolarizing noise only")
    if "F_est_delta" in quantities and noise_kind != "interp":
        raise InvalidParameterError("F_est_delta needs the 'interp' noise family")

    warnings: list[str] = []
    counts: PauliCounts | None = None
    if "F_est" in quantities:
        try:
            counts = select_for(target, dual=noise_kind != "depolarizing", cap=cap).counts
        except TheoremDomainError as exc:
            warnings.append(f"F_est unavailable: {exc}")

    rows = []
    for x in grid_points(spec):
        params = dict(noise_params)
        params[spec.variable] = x
        ch = build_channel(noise_kind, params)
        p = params["p"]
        if p > 0.75:
            warnings.append(f"p={x:.12g} exceeds 3/4; the gap bound no longer applies")
        row = [x]
        for q in quantities:
            if q == "F":
                row.append(_fidelity(target, noise_kind, ch, cap))
            elif q == "F_tilde":
                row.append(ch.p0**target.n)
            elif q == "F_est":
                row.append(math.nan if counts is None else analytic.stabilizer_expectation(ch, counts))
            elif q == "F_ub":
                row.append(analytic.union_bound_fidelity(target.graph, p))
            elif q == "F_third_order":
                row.append(analytic.cluster_third_order(target.graph, p, cap))
            elif q == "F_est_delta":
                row.append(analytic.f_est_interpolated(target.n, p, params["delta"]))
        rows.append(row)
    return [spec.variable, *quantities], rows, warnings


def format_csv(header: list[str], rows: list[list[float]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([f"{v:.12g}" for v in row])
    return buf.getvalue()


def family_target(spec: str, numbering: str = "boustrophedon") -> Target:
    """Parse ``complete:N`` or ``grid:ROWS,COLS``."""
    kind, _, args = spec.partition(":")
    try:
        values = [int(a) for a in args.split(",")] if args else []
    except ValueError:
        raise InvalidParameterError(f"bad family arguments in {spec!r}") from None
    if kind == "complete" and len(values) == 1:
        return Target(complete_graph(values[0]), spec)
    if kind == "grid" and len(values) == 2:
        grid = GridSpec(values[0], values[1], Numbering(numbering))
        return Target(grid_cluster(grid), spec, grid)
    raise InvalidParameterError(f"unknown family {spec!r}; use complete:N or grid:ROWS,COLS")

