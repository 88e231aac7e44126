"""Command-line front end: ``graphfid <subcommand> ...``.

Exit codes: 0 ok, 2 usage, 3 capacity, 4 outside the single-setting regime,
5 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from graphfid import analytic, checks, selector
from graphfid.errors import GraphFidError, InvalidParameterError
from graphfid.graph import isolated_vertices, read_graph
from graphfid.noise import channel_family, build_channel, parse_channel
from graphfid.pauli import ENUMERATION_CAP, StabilizerIndex, counts, stabilizer
from graphfid.protocol import coverage_trials, hoeffding_samples, run_protocol
from graphfid.sweep import SweepSpec, Target, family_target, format_csv, run_sweep, select_for


def _target(args) -> Target:
    if bool(args.graph) == bool(args.family):
        raise InvalidParameterError("give exactly one of --graph FILE or --family NAME:ARGS")
    if args.graph:
        return Target(read_graph(args.graph), args.graph)
    return family_target(args.family, args.numbering)


def _warn(category: str, message: str) -> None:
    print(json.dumps({"warning": category, "message": message}), file=sys.stderr)


def _domain_warnings(target: Target, p: float | None = None) -> None:
    if target.n % 4:
        _warn("theorem-domain", f"n={target.n} is not a multiple of 4")
    if p is not None and p > 0.75:
        _warn("theorem-domain", f"p={p} exceeds 3/4")
    iso = isolated_vertices(target.graph)
    if iso:
        _warn("isolated-vertices", f"vertices {iso} have no neighbours")


def cmd_fidelity(args) -> str:
    target = _target(args)
    ch = parse_channel(args.noise)
    _domain_warnings(target, ch.total)
    method = {"auto": None, "enumeration": "group-enumeration",
              "closed-form": "fully-connected-closed-form", "series": "error-series"}[args.method]
    if method is None:
        method = ("fully-connected-closed-form" if target.complete and ch.is_depolarizing()
                  else "group-enumeration")
    if method == "fully-connected-closed-form":
        if not (target.complete and ch.is_depolarizing()):
            raise InvalidParameterError("closed form needs a complete graph and depolarizing noise")
        f = analytic.fully_connected_fidelity(target.n, ch.total)
    elif method == "error-series":
        if not ch.is_depolarizing():
            raise InvalidParameterError("error series needs depolarizing noise")
        f = analytic.fidelity_error_series(target.graph, ch.total, args.cap)
    else:
        f = analytic.exact_fidelity(target.graph, ch, args.cap)
    if args.format == "json":
        return json.dumps({"graph": target.name, "n": target.n, "F": f, "method": method})
    return f"F = {f:.12g} ({method})"


def cmd_select(args) -> str:
    target = _target(args)
    if args.pattern:
        if target.complete:
            results = [selector.fully_connected_pattern(target.n)]
        else:
            results = [select_for(target, dual=True, cap=args.cap)]
    else:
        results = selector.find_set_A(target.graph, limit=args.limit, cap=args.cap)
        if args.dual:
            results = selector.dual_condition_filter(results)
    if args.format == "json":
        return "\n".join(json.dumps({
            "index": str(r.index), "string": str(r.string), "wt": r.index.weight,
            "n_I": r.counts.n_I, "dual": r.satisfies_dual, "source": r.source}) for r in results)
    if not results:
        return "# no stabilizer with n/4 identity letters"
    return "\n".join(r.describe() for r in results)


def cmd_estimate(args) -> str:
    target = _target(args)
    ch = parse_channel(args.noise)
    _domain_warnings(target, ch.total)
    if args.stabilizer:
        idx = StabilizerIndex.from_string(args.stabilizer)
        string = stabilizer(target.graph, idx)
    else:
        chosen = select_for(target, dual=args.dual, cap=args.cap)
        idx, string = chosen.index, chosen.string
    c = counts(string)
    if 4 * c.n_I != target.n:
        _warn("theorem-domain", f"stabilizer has n_I={c.n_I}, not n/4")
    if args.samples is not None:
        N = args.samples
    elif args.epsilon is not None and args.delta is not None:
        N = hoeffding_samples(args.epsilon, args.delta)
    else:
        raise InvalidParameterError("give --samples N or both --epsilon and --delta")
    report = run_protocol(target.graph, idx, ch, N, args.seed,
                          epsilon=args.epsilon, delta=args.delta, workers=args.workers)
    extra = {"stabilizer": str(idx), "string": str(string),
             "expected": analytic.stabilizer_expectation(ch, c)}
    if args.trials:
        if args.epsilon is None or args.delta is None:
            raise InvalidParameterError("--trials needs --epsilon and --delta")
        extra["trials"] = args.trials
        extra["coverage"] = coverage_trials(target.graph, idx, ch, args.epsilon, args.delta,
                                            args.trials, args.seed, N=N, workers=args.workers)
    return report.to_json(**extra)


def cmd_bound(args) -> str:
    k = args.k
    out: dict[str, float] = {"k": k, "n": 4 * k, "gap_bound": 2 / (3 * k),
                             "p0": analytic.theorem1_p0(k),
                             "fully_connected_gap_bound_n8k": analytic.fully_connected_gap_bound(k)}
    if args.p is not None:
        t = analytic.theorem1_quantities(k, args.p)
        out.update(p=args.p, F_tilde=t.f_tilde, F_est=t.f_est, gap=t.gap)
    if args.family or args.graph:
        if args.p is None:
            raise InvalidParameterError("the union bound needs --p")
        target = _target(args)
        out["F_ub"] = analytic.union_bound_fidelity(target.graph, args.p)
    if args.format == "json":
        return json.dumps(out)
    return "\n".join(f"{key} = {val:.12g}" if isinstance(val, float) else f"{key} = {val}"
                     for key, val in out.items())


def cmd_sweep(args) -> str:
    target = _target(args)
    kind, params = channel_family(args.noise)
    quantities = tuple(q for q in (args.quantities or "").split(",") if q)
    spec = SweepSpec(args.variable, args.start, args.stop, args.step, quantities)
    header, rows, warnings = run_sweep(spec, target, kind, params, args.cap)
    if target.n % 4:
        _warn("theorem-domain", f"n={target.n} is not a multiple of 4")
    for w in dict.fromkeys(warnings):
        _warn("theorem-domain", w)
    if args.format == "json":
        return "\n".join(json.dumps(dict(zip(header, r))) for r in rows)
    return format_csv(header, rows).rstrip("\n")


def cmd_oracle_check(args) -> str:
    results = checks.run_checks(args.max_n, args.samples, args.seed)
    width = max(map(len, results))
    lines = [f"{name:<{width}}  max|dev| = {dev:.3e}" for name, dev in results.items()]
    if max(results.values()) > 1e-10:
        print("\n".join(lines))
        from graphfid.errors import ConsistencyError

        raise ConsistencyError("oracle deviation above 1e-10")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphfid", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, noise_default="depolarizing:p=0.1"):
        p.add_argument("--graph", help="graph file (first line n, then 'i j' edges)")
        p.add_argument("--family", help="complete:N or grid:ROWS,COLS")
        p.add_argument("--numbering", default="boustrophedon", choices=["boustrophedon", "row-major"])
        p.add_argument("--noise", default=noise_default,
                       help="depolarizing:p=P | phaseflip:p=P | interp:p=P,delta=D | pauli:px=..,py=..,pz=..")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--output", help="write to PATH instead of stdout")
        p.add_argument("--format", choices=["text", "json", "csv"], default="text")
        p.add_argument("--cap", type=int, default=ENUMERATION_CAP, help="enumeration cap in qubits")

    p = sub.add_parser("fidelity", help="exact fidelity <G|rho|G>")
    common(p)
    p.add_argument("--method", choices=["auto", "enumeration", "closed-form", "series"], default="auto")
    p.set_defaults(func=cmd_fidelity)

    p = sub.add_parser("select", help="list stabilizers with n/4 identity letters")
    common(p)
    p.add_argument("--limit", type=int)
    p.add_argument("--dual", action="store_true", help="keep only weight-n/2 selections")
    p.add_argument("--pattern", action="store_true", help="use the constructive family pattern")
    p.set_defaults(func=cmd_select)

    p = sub.add_parser("estimate", help="simulate the single-setting protocol")
    common(p)
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--stabilizer", help="generator selection as a bit string, qubit 0 first")
    grp.add_argument("--auto-select", action="store_true", help="smallest qualifying index (default)")
    p.add_argument("--dual", action="store_true", help="auto-select a weight-n/2 stabilizer")
    p.add_argument("--epsilon", type=float, help="target accuracy of the estimate")
    p.add_argument("--delta", type=float, help="allowed failure probability")
    p.add_argument(
        "--samples", type=int,
        help="shot count; default ceil(2/epsilon^2 * ln(2/delta)) with the natural log",
    )
    p.add_argument("--trials", type=int, default=0, help="repeat the experiment and report coverage")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_estimate)

    p = sub.add_parser("bound", help="gap bounds for n = 4k qubits")
    common(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", type=float)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("sweep", help="CSV of fidelity curves over p or delta")
    common(p, noise_default="depolarizing")
    p.add_argument("--variable", choices=["p", "delta"], default="p")
    p.add_argument("--start", type=float, default=0.0)
    p.add_argument("--stop", type=float, default=0.5)
    p.add_argument("--step", type=float, default=0.05)
    p.add_argument("--quantities", help="comma list of F,F_tilde,F_est,F_ub,F_third_order,F_est_delta")
    p.set_defaults(func=cmd_sweep, format="csv")

    p = sub.add_parser("oracle-check", help="compare closed forms with the dense oracle")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output")
    p.set_defaults(func=cmd_oracle_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        text = args.func(args)
    except GraphFidError as exc:
        category = type(exc).__name__
        print(f"error [{category}]: {exc}", file=sys.stderr)
        return exc.exit_code
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
