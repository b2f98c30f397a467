"""Command-line interface: ``hyperspec {rho,gen,reduce,enum,verify}``."""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import dataclass
from typing import Optional

from . import families as fam
from .core import DEFAULT_MAX_N, CapExceeded, Hypergraph, HypergraphError, is_isomorphic, parse, serialize
from .enumerate import rank_by_rho
from .spectral import ConvergenceError, EigenResult, NotConnected, spectral_radius
from .transforms import NotReducible, reduce
from .verify import SUITES

EXIT_PARSE = 2
EXIT_NO_CONVERGENCE = 3
EXIT_DISCONNECTED = 4
EXIT_NOT_REDUCIBLE = 5
EXIT_CAP = 6


@dataclass(frozen=True)
class RunConfig:
    tolerance: float = 1e-10
    max_iter: int = 1_000_000
    max_n: int = DEFAULT_MAX_N
    output: Optional[str] = None
    format: str = "json"

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError("tolerance must be positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")


def fmt_float(v: float) -> str:
    if not math.isfinite(v):
        return "null"
    return format(v, ".17g")


def to_json(obj) -> str:
    """Compact JSON with every float at 17 significant digits."""
    if isinstance(obj, bool) or obj is None:
        return {True: "true", False: "false", None: "null"}[obj]
    if isinstance(obj, float):
        return fmt_float(obj)
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{to_json(str(k))}: {to_json(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(to_json(v) for v in obj) + "]"
    if hasattr(obj, "tolist"):
        return to_json(obj.tolist())
    raise TypeError(f"cannot encode {type(obj).__name__}")


def result_dict(G: Hypergraph, r: EigenResult) -> dict:
    return {
        "rho": r.rho,
        "lower": r.lower,
        "upper": r.upper,
        "iterations": r.iterations,
        "residual": r.residual,
        "eigenvector": [float(v) for v in r.x],
        "k": G.k,
        "n": G.n,
        "m": G.m,
    }


def render(d: dict, form: str) -> str:
    if form == "json":
        return to_json(d)
    lines = []
    for key, v in d.items():
        if isinstance(v, float):
            v = fmt_float(v)
        elif isinstance(v, list):
            v = " ".join(fmt_float(x) if isinstance(x, float) else str(x) for x in v)
        lines.append(f"{key} = {v}")
    return "\n".join(lines)


def identify(G: Hypergraph, max_n: int) -> Optional[str]:
    """Name ``G`` by the first matching family string, if any."""
    candidates = [f"P:{G.k},{G.m}", f"D:{G.k},{G.m}", f"Dp:{G.k},{G.m}", f"C:{G.k},{G.m}"]
    if G.m == 2:
        candidates += [f"TE:{G.k},{a}" for a in range(1, G.k)]
    if G.k == 4:
        candidates += [f"H4:{t}" for t in range(1, 5)]
    for s in candidates:
        try:
            H = fam.family(s)
        except HypergraphError:
            continue
        if is_isomorphic(G, H, max_n=max(max_n, G.n)):
            return s
    return None


def load_source(source: Optional[str], family: Optional[str]) -> Hypergraph:
    if family:
        return fam.family(family)
    if source is None:
        raise HypergraphError("give a .hg file or --family")
    try:
        with open(source) as fh:
            return parse(fh.read())
    except OSError as exc:
        raise HypergraphError(f"cannot read {source}: {exc.strerror}") from None


class _Out:
    def __init__(self, path):
        self.path = path
        self.fh = open(path, "w") if path else sys.stdout

    def write(self, text: str):
        self.fh.write(text)

    def close(self):
        if self.path:
            self.fh.close()


def cmd_rho(args, cfg: RunConfig) -> int:
    G = load_source(args.source, args.family)
    out = _Out(cfg.output)
    try:
        r = spectral_radius(G, tol=cfg.tolerance, max_iter=cfg.max_iter)
        code = 0
    except ConvergenceError as exc:
        r, code = exc.result, EXIT_NO_CONVERGENCE
        print(f"error: {exc}", file=sys.stderr)
    out.write(render(result_dict(G, r), cfg.format) + "\n")
    out.close()
    return code


def cmd_gen(args, cfg: RunConfig) -> int:
    G = fam.family(args.family)
    out = _Out(cfg.output)
    out.write(serialize(G))
    out.close()
    return 0


def cmd_reduce(args, cfg: RunConfig) -> int:
    G = load_source(args.source, args.family)
    R = reduce(G)
    rg = spectral_radius(G, tol=cfg.tolerance, max_iter=cfg.max_iter)
    rr = spectral_radius(R, tol=cfg.tolerance, max_iter=cfg.max_iter)
    report = {
        "rho": rg.rho,
        "rho_reduced": rr.rho,
        "k": G.k,
        "identity_residual": abs(rg.rho**G.k - rr.rho**R.k),
    }
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(serialize(R))
        print(render(report, cfg.format))
    else:
        sys.stdout.write(serialize(R))
        print(render(report, cfg.format), file=sys.stderr)
    return 0


def cmd_enum(args, cfg: RunConfig) -> int:
    report = rank_by_rho(
        args.k, args.m, tol=cfg.tolerance, max_n=cfg.max_n, max_iter=cfg.max_iter, workers=args.workers
    )
    out = _Out(cfg.output)
    for c in report.classes:
        row = {
            "canonical": str(c.canonical),
            "edges": [list(e) for e in c.graph.edges],
            "rho": c.result.rho,
            "lower": c.result.lower,
            "upper": c.result.upper,
        }
        if cfg.format == "json":
            out.write(to_json(row) + "\n")
        else:
            out.write(f"{fmt_float(c.result.rho)}  {c.canonical}\n")
    summary = {
        "summary": True,
        "k": report.k,
        "m": report.m,
        "total_count": report.total_count,
        "min": str(report.minimum.canonical),
        "min_family": identify(report.minimum.graph, cfg.max_n),
        "second": str(report.second.canonical) if report.second else None,
        "second_family": identify(report.second.graph, cfg.max_n) if report.second else None,
        "certified": report.certified(),
    }
    out.write((to_json(summary) if cfg.format == "json" else render(summary, "text")) + "\n")
    out.close()
    return 0


def cmd_verify(args, cfg: RunConfig) -> int:
    checks = SUITES[args.suite](tol=cfg.tolerance)
    out = _Out(cfg.output)
    for c in checks:
        out.write(c.line() + "\n")
    failed = sum(not c.passed for c in checks)
    out.write(f"{args.suite}: {len(checks) - failed}/{len(checks)} passed\n")
    out.close()
    return 0 if failed == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=1e-10, help="certified bound gap (default 1e-10)")
    common.add_argument("--max-iter", type=int, default=1_000_000)
    common.add_argument("--max-n", type=int, default=None, help="vertex cap; env HYPERSPEC_MAX_N, default 16")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", default=None, help="output path (default stdout)")

    parser = argparse.ArgumentParser(prog="hyperspec", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rho", parents=[common], help="spectral radius with certified bounds")
    p.add_argument("source", nargs="?", help=".hg file")
    p.add_argument("--family", help="family string, e.g. P:3,2")
    p.set_defaults(func=cmd_rho)

    p = sub.add_parser("gen", parents=[common], help="write a family member as .hg")
    p.add_argument("family")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("reduce", parents=[common], help="delete one pendant vertex per edge")
    p.add_argument("source", nargs="?")
    p.add_argument("--family")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("enum", parents=[common], help="rank all connected k-uniform hypergraphs with m edges")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("verify", parents=[common], help="run a check suite")
    p.add_argument("suite", choices=sorted(SUITES))
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    max_n = args.max_n
    if max_n is None:
        max_n = int(os.environ.get("HYPERSPEC_MAX_N", DEFAULT_MAX_N))
    try:
        cfg = RunConfig(args.tol, args.max_iter, max_n, args.out, args.format)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        return args.func(args, cfg)
    except NotConnected as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except NotReducible as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_REDUCIBLE
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except HypergraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
