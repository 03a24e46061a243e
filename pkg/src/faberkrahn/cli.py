"""Command-line interface: ``faberkrahn <command> [options]``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .construct import ConstructionError, construct_for
from .fixtures import REFERENCE_LAMBDAS, REFERENCE_TOL, load_fixture, reference_witnesses
from .graph import DegreeSequence, GraphError, InvalidDegreeSequence
from .io import read_graph, rows_to_csv, to_dot
from .ordering import check_degree_monotone, check_slo, induced_ordering, is_ball_approximation
from .rewire import run_shift_suite, run_swap_suite
from .search import (
    DEFAULT_CAP,
    CapExceeded,
    enumerate_unicyclic,
    explore_degree_two_cases,
    verify_extremal_uniqueness,
)
from .spectral import DEFAULT_TOL, first_eigenpair, full_spectrum

log = logging.getLogger("faberkrahn")

SUITES = ("all", "extremal", "swap", "shift")
SUITE_ALIASES = {"lemma33": "swap", "lemma41": "shift"}


def _fmt(x: float, precision: int | None) -> str:
    return repr(float(x)) if precision is None else f"{x:.{precision}f}"


def _precision(args) -> int | None:
    return None if args.full_precision else args.precision


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_construct(args) -> int:
    pi = DegreeSequence.parse(args.pi)
    g = construct_for(pi, args.variant)
    if args.format == "dot":
        text = to_dot(g)
    elif args.format == "text":
        text = f"n={g.n}\n" + "".join(f"{u} {v}\n" for u, v in g.sorted_edges())
    else:
        text = json.dumps(g.to_json()) + "\n"
    _emit(text, args.output)
    if args.dot:
        Path(args.dot).write_text(to_dot(g))
    if args.eigen:
        lam = first_eigenpair(g, tol=args.tol).lam
        print(f"lambda = {_fmt(lam, _precision(args))}", file=sys.stderr if not args.output else sys.stdout)
    return 0


def cmd_eigen(args) -> int:
    g = read_graph(args.graph)
    ep = first_eigenpair(g, tol=args.tol)
    p = _precision(args)
    if args.format == "json":
        out = {"lambda": ep.lam}
        if args.eigenfunction:
            out["f"] = [float(x) for x in ep.f]
        if args.spectrum:
            out["spectrum"] = [float(x) for x in full_spectrum(g, tol=args.tol)]
        print(json.dumps(out))
        return 0
    print(_fmt(ep.lam, p))
    if args.eigenfunction:
        for v, x in enumerate(ep.f):
            print(f"{v} {_fmt(x, p)}")
    if args.spectrum:
        print(" ".join(_fmt(x, p) for x in full_spectrum(g, tol=args.tol)))
    return 0


def cmd_check(args) -> int:
    g = read_graph(args.graph)
    ep = first_eigenpair(g, tol=args.tol)
    ordering = induced_ordering(g, ep)
    slo = check_slo(g, ordering)
    out = {
        "lambda": ep.lam,
        "root": ordering.root,
        "order": list(ordering.order),
        "slo": slo.ok,
        "slo_condition": slo.condition,
        "slo_witness": list(slo.witness),
        "ball_approximation": is_ball_approximation(g, ordering.root),
        "degree_monotone": check_degree_monotone(g, ordering),
        "layer_sizes": list(ordering.layering.layer_sizes),
    }
    if args.format == "json":
        print(json.dumps(out))
    else:
        for k, v in out.items():
            print(f"{k}: {v}")
    return 0


def cmd_enumerate(args) -> int:
    pi = DegreeSequence.parse(args.pi)
    graphs = list(enumerate_unicyclic(pi, cap=args.cap))
    lams = [first_eigenpair(g, tol=args.tol).lam for g in graphs]
    if args.format == "json":
        print(json.dumps([{"lambda": lam, **g.to_json()} for g, lam in zip(graphs, lams)]))
    elif args.format == "csv":
        print("index,lambda,edges")
        for i, (g, lam) in enumerate(zip(graphs, lams)):
            print(f'{i},{lam:.10f},"{g.sorted_edges()}"')
    else:
        print(f"{len(graphs)} isomorphism classes for {pi}")
        for i in sorted(range(len(graphs)), key=lams.__getitem__):
            print(f"{_fmt(lams[i], _precision(args))}  {g_edges(graphs[i])}")
    return 0


def g_edges(g) -> str:
    return " ".join(f"{u}-{v}" for u, v in g.sorted_edges())


def _write_artifact(out_dir, name, text):
    if out_dir is None:
        return
    path = Path(out_dir)
    path.mkdir(parents=True, exist_ok=True)
    (path / name).write_text(text)


def _counterexample(out_dir, payload) -> Path:
    path = Path(out_dir or ".")
    path.mkdir(parents=True, exist_ok=True)
    target = path / "counterexample.json"
    target.write_text(json.dumps(payload, indent=2, default=str))
    return target


def cmd_verify(args) -> int:
    suite = SUITE_ALIASES.get(args.suite, args.suite)
    failures = []
    summary = {}
    if suite in ("all", "extremal"):
        if args.n_max is None:
            raise SystemExit("verify: --n-max is required for the extremal suite")
        rows = verify_extremal_uniqueness(
            args.n_max, cap=args.cap, workers=args.threads, raise_on_failure=False
        )
        bad = [r for r in rows if not r["ok"]]
        failures.extend({"suite": "extremal", **r} for r in bad)
        summary["extremal"] = {"sequences": len(rows), "failures": len(bad)}
        _write_artifact(args.out_dir, "extremal.json", json.dumps(rows, indent=1))
        _write_artifact(args.out_dir, "extremal.csv", rows_to_csv(rows))
        for r in rows:
            log.info("%s classes=%d lambda=%.6f ok=%s", r["pi"], r["n_classes"], r["best_lambda"], r["ok"])
    n_hi = max(args.n_max or 14, 6)
    for name, runner in (("swap", run_swap_suite), ("shift", run_shift_suite)):
        if suite in ("all", name):
            rep = runner(cases=args.cases, seed=args.seed, n_min=5, n_max=n_hi)
            summary[name] = rep.to_json() | {"violations": len(rep.violations)}
            failures.extend({"suite": name, **v} for v in rep.violations)
            _write_artifact(args.out_dir, f"{name}.json", json.dumps(rep.to_json(), indent=1, default=str))
    summary["ok"] = not failures
    if failures:
        where = _counterexample(args.out_dir, failures)
        summary["counterexamples"] = str(where)
    print(json.dumps(summary, indent=1, default=str) if args.format == "json" else _summary_text(summary))
    return 0 if not failures else 1


def _summary_text(summary: dict) -> str:
    lines = []
    for k, v in summary.items():
        if isinstance(v, dict):
            lines.append(k + ": " + ", ".join(f"{a}={b}" for a, b in v.items()))
        else:
            lines.append(f"{k}: {v}")
    return "\n".join(lines)


def cmd_degree_two_report(args) -> int:
    witnesses = {} if args.no_reference else reference_witnesses()
    extra = [] if args.no_reference else [DegreeSequence(pi) for pi in witnesses]
    cap = max([args.cap, args.n_max] + [len(pi) for pi in extra])
    rows = explore_degree_two_cases(
        args.n_max, cap=cap, workers=args.threads, witnesses=witnesses, extra_sequences=extra
    )
    _write_artifact(args.out_dir, "degree_two.json", json.dumps(rows, indent=1))
    _write_artifact(args.out_dir, "degree_two.csv", rows_to_csv(rows))
    if args.format == "json":
        print(json.dumps(rows))
    elif args.format == "csv":
        sys.stdout.write(rows_to_csv(rows))
    else:
        for r in rows:
            extra_txt = "".join(f"  {k}={v:.4f}" for k, v in r["witnesses"].items())
            cons = "-" if r["construction_lambda"] is None else f"{r['construction_lambda']:.4f}"
            print(
                f"{','.join(map(str, r['pi'])):<32} case={r['case']} classes={r['n_classes']:<5} "
                f"best={r['best_lambda']:.4f} {r['construction']}={cons} agree={r['agree']}{extra_txt}"
            )
        agree = sum(1 for r in rows if r["agree"])
        print(f"{agree}/{len(rows)} sequences agree with their construction")
    return 0


def cmd_golden(args) -> int:
    rows = []
    for name, ref in REFERENCE_LAMBDAS.items():
        lam = first_eigenpair(load_fixture(name)).lam
        rows.append({"graph": name, "reference": ref, "computed": lam, "match": abs(lam - ref) <= args.tol})
    if args.format == "json":
        print(json.dumps(rows))
    else:
        for r in rows:
            status = "PASS" if r["match"] else "FAIL"
            print(f"{status}  {r['graph']:<20} reference={r['reference']:.4f} computed={r['computed']:.10f}")
        print(f"{sum(r['match'] for r in rows)}/{len(rows)} match within {args.tol:g}")
    return 0 if all(r["match"] for r in rows) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="faberkrahn", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt_choices, default_fmt):
        p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="eigensolver tolerance")
        p.add_argument("--format", choices=fmt_choices, default=default_fmt)
        p.add_argument("--precision", type=int, default=4)
        p.add_argument("--full-precision", action="store_true")

    p = sub.add_parser("construct", help="build the candidate extremal graph for a degree sequence")
    p.add_argument("--pi", required=True, help="comma-separated degrees, e.g. 3,3,3,1,1,1")
    p.add_argument("--variant", choices=["auto", "ustar", "u1", "u2"], default="auto")
    p.add_argument("--eigen", action="store_true", help="also print the first Dirichlet eigenvalue")
    p.add_argument("--dot", help="also write Graphviz source to this path")
    p.add_argument("-o", "--output")
    common(p, ["json", "dot", "text"], "json")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("eigen", help="first Dirichlet eigenvalue of a graph JSON file")
    p.add_argument("--graph", required=True)
    p.add_argument("--eigenfunction", action="store_true")
    p.add_argument("--spectrum", action="store_true")
    common(p, ["text", "json"], "text")
    p.set_defaults(func=cmd_eigen)

    p = sub.add_parser("check", help="ordering, ball-approximation and degree checks for a graph")
    p.add_argument("--graph", required=True)
    common(p, ["text", "json"], "text")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("enumerate", help="all isomorphism classes realizing a degree sequence")
    p.add_argument("--pi", required=True)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    common(p, ["text", "json", "csv"], "text")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="brute-force extremal verification and rewiring property suites")
    p.add_argument("--n-max", type=int)
    p.add_argument("--suite", choices=list(SUITES) + list(SUITE_ALIASES), default="all")
    p.add_argument("--cases", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1, help="worker processes")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--out-dir")
    common(p, ["text", "json"], "text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("conjecture", help="report-only sweep over sequences containing a 2")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--threads", type=int, default=1, help="worker processes")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--out-dir")
    p.add_argument("--no-reference", action="store_true", help="skip the bundled reference sequences")
    common(p, ["text", "json", "csv"], "text")
    p.set_defaults(func=cmd_degree_two_report)

    p = sub.add_parser("golden", help="recompute the bundled reference eigenvalues")
    p.add_argument("--tol", type=float, default=REFERENCE_TOL, help="absolute comparison tolerance")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_golden)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    if getattr(args, "threads", 1) < 1:
        parser.error("--threads must be >= 1")
    if getattr(args, "tol", 1.0) <= 0:
        parser.error("--tol must be positive")
    try:
        return args.func(args)
    except (InvalidDegreeSequence, GraphError, ConstructionError, CapExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
