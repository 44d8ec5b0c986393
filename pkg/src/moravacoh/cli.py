"""Command-line front end.

Every subcommand writes one JSON document (or a TSV table with
``--format tsv`` where the result is tabular) to standard output.  Exit
codes: 0 success, 1 verification failure, 2 usage or parameter error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Sequence

from moravacoh import __version__
from moravacoh.arithmetic import (
    InternalDegree,
    PrimeContext,
    greek_degree,
    lambda_set,
    make_context,
    moore_dual_shift,
)
from moravacoh.complex import enumerate_basis
from moravacoh.lemmas import DEFAULT_SCAN_LIMIT, VERIFIERS, degree_table, ph_element
from moravacoh.linalg import build_slice, class_dimensions, cohomology

TABULAR = {"basis", "table", "scan", "lambda"}
NEEDS_EXPONENTS = {"htpy", "ph-shift"}


class UsageError(Exception):
    pass


def _exponents(text: str | None) -> list[int] | None:
    if text is None:
        return None
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--exponents expects comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--p", type=int, required=True, help="odd prime")
    common.add_argument("--n", type=int, required=True, help="height, 1 <= n < p")
    common.add_argument("--format", choices=("json", "tsv"), default="json")
    common.add_argument("--jobs", type=int, default=os.cpu_count() or 1, help="worker processes for scans")

    degree = argparse.ArgumentParser(add_help=False)
    degree.add_argument("--s", type=int, required=True, help="cohomological degree")
    degree.add_argument("--t", type=int, required=True, help="internal degree, reduced (units of q) unless --raw")
    degree.add_argument("--raw", action="store_true", help="--t is a full internal degree")

    parser = argparse.ArgumentParser(prog="moravacoh", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"moravacoh {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("cohomology", parents=[common, degree], help="dim H^{s,t} with representatives")
    sub.add_parser("basis", parents=[common, degree], help="monomial basis of C^{s,t}")
    sub.add_parser("table", parents=[common], help="reduced degrees of the generators")

    scan = sub.add_parser("scan", parents=[common], help="chart of dim H^{s,t} over all classes")
    scan.add_argument("--s-min", type=int, default=0)
    scan.add_argument("--s-max", type=int, default=None)
    scan.add_argument("--t", type=int, default=None, help="restrict to one reduced class")
    scan.add_argument("--raw", action="store_true")
    scan.add_argument("--scan-limit", type=int, default=DEFAULT_SCAN_LIMIT)

    verify = sub.add_parser("verify", parents=[common], help="run one lemma check")
    verify.add_argument("lemma", choices=sorted(VERIFIERS))
    verify.add_argument("--exponents", default=None, help="comma-separated ideal exponents e_0,...")
    verify.add_argument("--scan-limit", type=int, default=DEFAULT_SCAN_LIMIT)

    greek = sub.add_parser("greek", parents=[common], help="bidegree of the n-th Greek letter element")
    greek.add_argument("--s", type=int, required=True)

    lam = sub.add_parser("lambda", parents=[common], help="cell degrees u, s(u), u-bar")
    lam.add_argument("--exponents", default=None)

    shift = sub.add_parser("shift", parents=[common], help="dual Moore spectrum shift and V_J")
    shift.add_argument("--exponents", default=None)
    return parser


def _degree(ctx: PrimeContext, t: int, raw: bool) -> InternalDegree:
    return InternalDegree.from_raw(ctx, t) if raw else InternalDegree.from_reduced(ctx, t)


def _check_s(ctx: PrimeContext, s: int) -> None:
    if not 0 <= s <= ctx.num_generators:
        raise UsageError(f"--s must lie in 0..{ctx.num_generators}")


def cmd_cohomology(ctx: PrimeContext, args) -> tuple[int, dict]:
    _check_s(ctx, args.s)
    deg = _degree(ctx, args.t, args.raw)
    payload = {"p": ctx.p, "n": ctx.n, "s": args.s, "t_reduced": deg.reduced, "t": deg.as_dict()}
    if deg.reduced is None:
        payload.update(dim=0, rank_in=0, dim_ker_out=0, representatives=[], note="degree not a multiple of q")
        return 0, payload
    res = cohomology(build_slice(ctx, args.s, deg.reduced))
    payload.update(
        dim=res.dim,
        rank_in=res.rank_in,
        dim_ker_out=res.dim_ker_out,
        representatives=[r.to_json() for r in res.representatives],
    )
    return 0, payload


def cmd_basis(ctx: PrimeContext, args) -> tuple[int, dict]:
    _check_s(ctx, args.s)
    deg = _degree(ctx, args.t, args.raw)
    monos = [] if deg.reduced is None else enumerate_basis(ctx, args.s, deg.reduced)
    return 0, {
        "p": ctx.p, "n": ctx.n, "s": args.s, "t_reduced": deg.reduced, "t": deg.as_dict(),
        "count": len(monos), "monomials": [m.labels() for m in monos],
    }


def cmd_table(ctx: PrimeContext, args) -> tuple[int, dict]:
    rows = []
    for g, _ in degree_table(ctx).rows:
        deg = InternalDegree.from_reduced(ctx, ctx.p**g.j * ctx.e[g.i])
        rows.append({"generator": g.label(), "i": g.i, "j": g.j, "degree": deg.as_dict()})
    return 0, {"p": ctx.p, "n": ctx.n, "q": ctx.q, "e_n": ctx.en, "period": ctx.period, "rows": rows}


def _scan_column(job: tuple[int, int, int, tuple[int, ...]]) -> list[int]:
    p, n, t, s_values = job
    dims = class_dimensions(make_context(p, n), t, s_values)
    return [dims[s] for s in s_values]


def cmd_scan(ctx: PrimeContext, args) -> tuple[int, dict]:
    s_max = ctx.num_generators if args.s_max is None else args.s_max
    if not 0 <= args.s_min <= s_max <= ctx.num_generators:
        raise UsageError(f"need 0 <= --s-min <= --s-max <= {ctx.num_generators}")
    if args.t is not None:
        deg = _degree(ctx, args.t, args.raw)
        if deg.reduced is None:
            raise UsageError("--t is not a multiple of q")
        classes = [deg.reduced]
    elif ctx.en > args.scan_limit:
        raise UsageError(f"e(n)={ctx.en} exceeds --scan-limit {args.scan_limit}; pass --t to scan one class")
    else:
        classes = list(range(ctx.en))
    s_values = tuple(range(args.s_min, s_max + 1))
    jobs = [(ctx.p, ctx.n, t, s_values) for t in classes]
    if args.jobs > 1 and len(jobs) >= 64:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            columns = list(pool.map(_scan_column, jobs, chunksize=max(1, len(jobs) // (4 * args.jobs))))
    else:
        columns = [_scan_column(j) for j in jobs]
    rows = [[col[k] for col in columns] for k in range(len(s_values))]
    return 0, {
        "p": ctx.p, "n": ctx.n, "s_min": args.s_min, "s_max": s_max,
        "classes": classes, "classes_signed": [InternalDegree.from_reduced(ctx, t).reduced_signed for t in classes],
        "rows": rows,
    }


def cmd_verify(ctx: PrimeContext, args) -> tuple[int, dict]:
    fn = VERIFIERS[args.lemma]
    kwargs = {}
    if args.lemma in NEEDS_EXPONENTS and args.exponents is not None:
        kwargs["exponents"] = _exponents(args.exponents)
    if args.lemma in ("e2ex", "hs-bound", "duality"):
        kwargs["scan_limit"] = args.scan_limit
    try:
        report = fn(ctx, **kwargs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return (0 if report.passed else 1), report.to_dict()


def cmd_greek(ctx: PrimeContext, args) -> tuple[int, dict]:
    try:
        g = greek_degree(ctx, args.s)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return 0, {
        "p": ctx.p, "n": ctx.n, "s": g.s, "t": g.t, "stem": g.stem, "cohomological": g.n,
        "t_mod_period": InternalDegree.from_raw(ctx, g.t).as_dict(),
    }


def cmd_lambda(ctx: PrimeContext, args) -> tuple[int, dict]:
    exps = _exponents(args.exponents)
    exps = [1] * ctx.n if exps is None else exps
    try:
        els = lambda_set(ctx, exps)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return 0, {
        "p": ctx.p, "n": ctx.n, "exponents": exps,
        "elements": [{"u": el.u, "s_of_u": el.s_of_u, "u_bar": el.u_bar, "eps": list(el.eps)} for el in els],
    }


def cmd_shift(ctx: PrimeContext, args) -> tuple[int, dict]:
    exps = _exponents(args.exponents)
    exps = [1] * ctx.n if exps is None else exps
    try:
        d_j = moore_dual_shift(ctx, exps)
        ph = ph_element(ctx, exps)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return 0, {
        "p": ctx.p, "n": ctx.n, "exponents": exps,
        "d_J": d_j, "d_I": moore_dual_shift(ctx, [1] * ctx.n),
        "V_J": ph.description, "V_J_exponents": list(ph.exponents), "V_J_degree": ph.degree,
    }


COMMANDS = {
    "cohomology": cmd_cohomology,
    "basis": cmd_basis,
    "table": cmd_table,
    "scan": cmd_scan,
    "verify": cmd_verify,
    "greek": cmd_greek,
    "lambda": cmd_lambda,
    "shift": cmd_shift,
}


def to_tsv(command: str, payload: dict) -> str:
    if command == "scan":
        lines = ["\t".join(["s"] + [str(t) for t in payload["classes"]])]
        for s, row in zip(range(payload["s_min"], payload["s_max"] + 1), payload["rows"]):
            lines.append("\t".join([str(s)] + [str(x) for x in row]))
    elif command == "basis":
        lines = ["\t".join(m) for m in payload["monomials"]]
    elif command == "table":
        lines = ["i\tj\treduced\traw"]
        lines += [f"{r['i']}\t{r['j']}\t{r['degree']['reduced']}\t{r['degree']['raw']}" for r in payload["rows"]]
    elif command == "lambda":
        lines = ["u\ts_of_u\tu_bar\t" + "\t".join(f"eps{i}" for i in range(len(payload["exponents"])))]
        for el in payload["elements"]:
            lines.append("\t".join(str(x) for x in [el["u"], el["s_of_u"], el["u_bar"], *el["eps"]]))
    else:
        raise UsageError(f"--format tsv is not available for {command}")
    return "\n".join(lines) + "\n"


def run(argv: Sequence[str]) -> tuple[int, str]:
    """Parse argv, dispatch, and return (exit code, standard output text)."""
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return (exc.code if isinstance(exc.code, int) else 2), ""
    try:
        try:
            ctx = make_context(args.p, args.n)
        except (ValueError, TypeError) as exc:
            raise UsageError(str(exc)) from None
        code, payload = COMMANDS[args.command](ctx, args)
        if args.format == "tsv":
            return code, to_tsv(args.command, payload)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"moravacoh: error: {exc}", file=sys.stderr)
        return 2, ""
    params = {k: v for k, v in sorted(vars(args).items()) if k not in ("jobs", "format")}
    envelope = {"tool_version": __version__, "params": params, "payload": payload, "status": code}
    return code, json.dumps(envelope, indent=2, sort_keys=True) + "\n"


def main(argv: Sequence[str] | None = None) -> int:
    code, out = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
