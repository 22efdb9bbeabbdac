#!/usr/bin/env python3
"""
Command-line surface of the geometry toolkit.

Usage:
    python -m src.cli pc mul "1+2ε" "(3|-1)"
    python -m src.cli dist --metric bhattacharyya a.json b.json
    python -m src.cli geodesic --q 1,-1 --s-max 3 --steps 100 p0.json
    python -m src.cli signature --dim 4 --index 1
    python -m src.cli causal --index 1 1,1,0
    python -m src.cli pc add -- -ε 1
    python -m src.cli verify --suite maurer_cartan --seed 7

Exit codes: 0 success (verify: every property passed), 1 domain error or
failing suite, 2 usage error.

Operands beginning with '-' go after a bare --.
"""

import argparse
import json
import os
import sys
from typing import Dict, List, Optional, Sequence

import numpy as np
import pandas as pd

# Add src to path
sys.path.append(os.path.join(os.path.dirname(__file__), ".."))
from src.config import Config
from src.errors import GeometryError, ParseError
from src.evaluation.suites import run_suites
from src.geometry.projective import hermitian_distance
from src.geometry.pseudo_metric import BilinearForm, causal_class, signature_of_gram
from src.geometry.quadric import Hyperquadric, cross_ratio_distance
from src.manifold.cone import Direction
from src.manifold.simplex import (
    ProbDist,
    bhattacharyya_affinity,
    embed_projective,
    fisher_rao_distance,
    geodesic_trace,
    hellinger_distance,
)
from src.algebra.paracomplex import Paracomplex

Command = argparse.Namespace

PC_OPS = ("add", "sub", "mul", "conj", "inv", "idempotent")
BINARY_PC_OPS = ("add", "sub", "mul")
METRICS = ("bhattacharyya", "fisher-rao", "hellinger", "hermitian", "cross-ratio")
CSV_FLOAT = "%.17g"
DASH_NOTE = "operands starting with '-' (such as -ε or -1+ε) go after --:\n  frobenius pc add -- -ε 1\n  frobenius causal -- -1,1,0,0"
RAW = argparse.RawDescriptionHelpFormatter


def _tol_override(text: str):
    name, sep, value = text.partition("=")
    if not sep or not name:
        raise argparse.ArgumentTypeError(f"expected NAME=VALUE, got {text!r}")
    try:
        return name, float(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"tolerance {value!r} is not a number") from exc


def _vector(text: str) -> List[float]:
    try:
        return [float(v) for v in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from exc


def _build_parser() -> argparse.ArgumentParser:
    # flags shared by every subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="Seed for randomized commands")
    common.add_argument(
        "--tol",
        type=_tol_override,
        action="append",
        default=[],
        metavar="NAME=VALUE",
        help="Tolerance override (repeatable)",
    )
    common.add_argument("--format", choices=("json", "csv"), default=None, help="Output format")
    common.add_argument("--radius", type=float, default=Config.DEFAULT_RADIUS, help="Curvature radius r")

    parser = argparse.ArgumentParser(
        prog="frobenius", description="Paracomplex Frobenius geometry toolkit", epilog=DASH_NOTE, formatter_class=RAW
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("pc", parents=[common], help="Paracomplex arithmetic", epilog=DASH_NOTE, formatter_class=RAW)
    pc.add_argument("op", choices=PC_OPS)
    pc.add_argument("operands", nargs="+", help='Numbers as "x+yε" or "(z₊|z₋)"')

    dist = sub.add_parser("dist", parents=[common], help="Distance between two distributions")
    dist.add_argument("--metric", choices=METRICS, required=True)
    dist.add_argument("a", help="Distribution JSON file")
    dist.add_argument("b", help="Distribution JSON file")

    geo = sub.add_parser("geodesic", parents=[common], help="Trace of an exponential-tilt geodesic")
    geo.add_argument("--q", type=_vector, required=True, help="Direction, comma-separated")
    geo.add_argument("--s-max", type=float, required=True)
    geo.add_argument("--s-min", type=float, default=0.0)
    geo.add_argument("--steps", type=int, default=Config.GEODESIC_SAMPLES)
    geo.add_argument("p0", help="Distribution JSON file")

    sig = sub.add_parser("signature", parents=[common], help="Signature of a bilinear form")
    sig.add_argument("--dim", type=int)
    sig.add_argument("--index", type=int, default=1)
    sig.add_argument("--gram", help="JSON file holding a symmetric Gram matrix")

    causal = sub.add_parser(
        "causal", parents=[common], help="Causal class under B^n_1", epilog=DASH_NOTE, formatter_class=RAW
    )
    causal.add_argument("--index", type=int, default=1)
    causal.add_argument("vector", type=_vector, help="Comma-separated coordinates")

    verify = sub.add_parser("verify", parents=[common], help="Run verification suites")
    verify.add_argument("--suite", required=True, choices=Config.SUITES + ("all",))
    verify.add_argument("--cases", type=int, default=None, help="Override the case count")
    verify.add_argument("--workers", type=int, default=Config.MAX_WORKERS)

    return parser


def parse_args(argv: Optional[Sequence[str]] = None) -> Command:
    """Parse argv into a Command; usage errors exit with status 2."""
    parser = _build_parser()
    cmd = parser.parse_args(argv)
    cmd.tol = dict(cmd.tol)

    if cmd.command == "pc":
        cmd.operands = [text for text in cmd.operands if text != "--"]
        arity = 2 if cmd.op in BINARY_PC_OPS else 1
        if len(cmd.operands) != arity:
            parser.error(f"pc {cmd.op} takes {arity} operand(s), got {len(cmd.operands)}")
    elif cmd.command == "geodesic" and cmd.steps < 1:
        parser.error("--steps must be positive")
    elif cmd.command == "signature" and (cmd.gram is None) == (cmd.dim is None):
        parser.error("signature takes exactly one of --dim or --gram")
    elif cmd.command == "verify" and cmd.seed is None:
        parser.error("verify requires --seed")
    return cmd


def _read_json(path: str) -> Dict:
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    except UnicodeDecodeError as exc:
        raise ParseError(f"{path} is not UTF-8 text: {exc.reason}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path} is not valid JSON: {exc}") from exc


def _emit(record: Dict, fmt: Optional[str]) -> None:
    if fmt == "csv":
        pd.DataFrame([record]).to_csv(sys.stdout, index=False, float_format=CSV_FLOAT)
    else:
        print(json.dumps(record))


def _run_pc(cmd: Command) -> int:
    values = [Paracomplex.parse(text) for text in cmd.operands]
    if cmd.op == "add":
        result = values[0] + values[1]
    elif cmd.op == "sub":
        result = values[0] - values[1]
    elif cmd.op == "mul":
        result = values[0] * values[1]
    elif cmd.op == "conj":
        result = values[0].conj()
    elif cmd.op == "inv":
        result = values[0].inverse()
    else:
        result = values[0]
    _emit(
        {
            "op": cmd.op,
            "result": str(result),
            "idempotent": result.idempotent_str(),
            "x": float(result.x),
            "y": float(result.y),
        },
        cmd.format,
    )
    return 0


def _distance(metric: str, p: ProbDist, q: ProbDist, radius: float) -> float:
    if metric == "bhattacharyya":
        return bhattacharyya_affinity(p, q)
    if metric == "fisher-rao":
        return fisher_rao_distance(p, q)
    if metric == "hellinger":
        return hellinger_distance(p, q)
    X, Y = embed_projective(p), embed_projective(q)
    if metric == "hermitian":
        return hermitian_distance(X, Y, radius)
    return cross_ratio_distance(X, Y, Hyperquadric.identity(X.n), radius)


def _run_dist(cmd: Command) -> int:
    p = ProbDist.from_json(_read_json(cmd.a))
    q = ProbDist.from_json(_read_json(cmd.b))
    _emit({"metric": cmd.metric, "value": _distance(cmd.metric, p, q, cmd.radius)}, cmd.format)
    return 0


def _run_geodesic(cmd: Command) -> int:
    p0 = ProbDist.from_json(_read_json(cmd.p0))
    s_values = np.linspace(cmd.s_min, cmd.s_max, cmd.steps)
    trace = geodesic_trace(p0, Direction(cmd.q), s_values)
    if cmd.format == "json":
        print(json.dumps(trace.to_dict(orient="records")))
    else:
        trace.to_csv(sys.stdout, index=False, float_format=CSV_FLOAT)
    return 0


def _run_signature(cmd: Command) -> int:
    if cmd.gram is not None:
        payload = _read_json(cmd.gram)
        gram = payload["gram"] if isinstance(payload, dict) and "gram" in payload else payload
        try:
            G = np.asarray(gram, dtype=float)
        except (TypeError, ValueError) as exc:
            raise ParseError(f"Gram matrix is not numeric: {exc}") from exc
        sig = signature_of_gram(G)
    else:
        sig = BilinearForm(cmd.dim, cmd.index).signature()
    _emit({"neg": sig[0], "zero": sig[1], "pos": sig[2]}, cmd.format)
    return 0


def _run_causal(cmd: Command) -> int:
    B = BilinearForm(len(cmd.vector), cmd.index)
    result = causal_class(B, cmd.vector, cmd.tol.get("causal"))
    if cmd.format is None:
        print(str(result))
    else:
        _emit({"vector": cmd.vector, "class": str(result)}, cmd.format)
    return 0


def _run_verify(cmd: Command) -> int:
    names = Config.SUITES if cmd.suite == "all" else (cmd.suite,)
    reports = run_suites(names, cmd.seed, cmd.tol, cmd.workers, cmd.cases)
    if cmd.format == "csv":
        rows = [
            {"suite": r.suite, "seed": r.seed, "cases": r.cases, **p.to_dict()}
            for r in reports
            for p in r.properties
        ]
        pd.DataFrame(rows).to_csv(sys.stdout, index=False, float_format=CSV_FLOAT)
    elif len(reports) == 1:
        print(reports[0].to_json())
    else:
        print(json.dumps([r.to_dict() for r in reports], indent=2))
    return 0 if all(r.passed for r in reports) else 1


HANDLERS = {
    "pc": _run_pc,
    "dist": _run_dist,
    "geodesic": _run_geodesic,
    "signature": _run_signature,
    "causal": _run_causal,
    "verify": _run_verify,
}


def execute(cmd: Command) -> int:
    """Run a parsed command; domain errors print their code to stderr and return 1."""
    try:
        return HANDLERS[cmd.command](cmd)
    except GeometryError as exc:
        print(f"{exc.code}: {exc}", file=sys.stderr)
        return 1


def main(argv: Optional[Sequence[str]] = None) -> int:
    return execute(parse_args(argv))


if __name__ == "__main__":
    sys.exit(main())
