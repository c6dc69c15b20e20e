"""Command-line front end.

Sub-commands:
    enumerate  SST_n(lambda), or SST_n^AI(rho) with --ai
    graph      gl (directed) or AI (undirected) crystal graph of SST_n(lambda)
    char       gl character, or ch_AI with --ai
    rs         RS transcript of a word
    rsai       RS^AI transcript of a word
    branch     [lambda : rho] table of the gl_n to so_n branching
    verify     run the verification suites

Exit codes: 0 success, 1 verification failure, 2 usage error.  Results go to
stdout, logs and error messages to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from aicrystal.ai_crystal import ai_graph, ch_ai
from aicrystal.config import get_settings
from aicrystal.errors import AICrystalError
from aicrystal.gl_crystal import ch_gl, gl_graph
from aicrystal.kmatrix import enumerate_sst_ai
from aicrystal.log import bind_run_context, clear_context, get_logger, setup_logging
from aicrystal.metrics import ELEMENTS_ENUMERATED, metrics_text
from aicrystal.models import Partition, QMark, Tableau, Word, so_rank, word_of
from aicrystal.rs_ai import branch, q_ai, q_ai_steps
from aicrystal.tableaux import enumerate_ssyt, rs
from aicrystal.verify import SUITES, run_verification

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


# ---------------------------------------------------------------------------
# Rendering helpers
# ---------------------------------------------------------------------------

def _dump(payload: Any) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False)


def _error_text(exc: Exception) -> str:
    """One line for stderr; pydantic errors keep only the first message."""
    if isinstance(exc, ValidationError):
        first = exc.errors()[0]
        return first["msg"].removeprefix("Value error, ")
    return str(exc).splitlines()[0] if str(exc) else type(exc).__name__


def _mark_text(mark: QMark | None) -> str:
    if mark is None:
        return "-"
    return "{" + ",".join(str(x) for x in mark) + "}"


def _elements(n: int, shape: Partition, ai: bool) -> tuple[Tableau, ...]:
    if ai:
        elements = enumerate_sst_ai(n, shape)
        ELEMENTS_ENUMERATED.labels(kind="ai").inc(len(elements))
    else:
        elements = enumerate_ssyt(n, shape)
        ELEMENTS_ENUMERATED.labels(kind="gl").inc(len(elements))
    return elements


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.ai:
        so_rank(args.n)
    elements = _elements(args.n, args.shape, args.ai)
    if args.count:
        print(len(elements))
    elif args.format == "text":
        for t in elements:
            print(t.label)
    else:
        print(_dump([t.model_dump() for t in elements]))
    return EXIT_OK


def cmd_graph(args: argparse.Namespace) -> int:
    elements = _elements(args.n, args.shape, ai=False)
    if args.ai:
        so_rank(args.n)
        graph = ai_graph(elements, args.n)
    else:
        graph = gl_graph(elements, args.n)
    logger.info("graph_built", nodes=len(graph.nodes), edges=len(graph.edges), ai=args.ai)
    print(_dump(graph.to_payload()) if args.format == "json" else graph.to_dot())
    return EXIT_OK


def cmd_char(args: argparse.Namespace) -> int:
    elements = _elements(args.n, args.shape, ai=False)
    if args.ai:
        poly = ch_ai(elements, so_rank(args.n), assert_integral=True)
    else:
        poly = ch_gl(elements, args.n)
    print(_dump(poly.to_payload()) if args.format == "json" else poly.to_text())
    return EXIT_OK


def cmd_rs(args: argparse.Namespace) -> int:
    w = Word.parse(args.word, args.n)
    steps = []
    for k in range(1, len(w) + 1):
        p, q = rs(word_of(w.n, w.letters[:k]))
        steps.append({"k": k, "letter": w.letters[k - 1], "p": p, "q": q})
    p, q = rs(w)
    if args.format == "json":
        print(
            _dump(
                {
                    "word": w.model_dump(mode="json"),
                    "steps": [
                        {
                            "k": s["k"],
                            "letter": s["letter"],
                            "p": s["p"].model_dump(),
                            "q": s["q"].model_dump(),
                        }
                        for s in steps
                    ],
                    "p": p.model_dump(),
                    "q": q.model_dump(),
                }
            )
        )
        return EXIT_OK
    for s in steps:
        print(f"{s['k']}\t{s['letter']}\tP={s['p'].label}\tQ={s['q'].label}")
    print(f"P = {p.label}")
    print(f"Q = {q.label}")
    return EXIT_OK


def cmd_rsai(args: argparse.Namespace) -> int:
    so_rank(args.n)
    w = Word.parse(args.word, args.n)
    transcript = q_ai_steps(w)
    symbol, ot = q_ai(w)
    p = transcript[-1].p_ai if transcript else Tableau.empty(w.n)
    if args.format == "json":
        print(
            _dump(
                {
                    "word": w.model_dump(mode="json"),
                    "steps": [
                        {
                            "k": step.k,
                            "letter": step.letter,
                            "p_ai": step.p_ai.model_dump(),
                            "q1": step.q1.model_dump(),
                            "mark": None if step.mark is None else list(step.mark),
                            "sign": step.sign.value,
                        }
                        for step in transcript
                    ],
                    "p_ai": p.model_dump(),
                    "q_ai": symbol.model_dump(mode="json"),
                    "oscillating_tableau": ot.model_dump(mode="json"),
                }
            )
        )
        return EXIT_OK
    for step in transcript:
        print(
            f"{step.k}\t{step.letter}\tP^AI={step.p_ai.label}\tQ1={step.q1.label}"
            f"\tmark={_mark_text(step.mark)}"
        )
    marks = ", ".join(_mark_text(mark) for mark in symbol.q2)
    print(f"P^AI = {p.label}")
    print(f"Q1 = {symbol.q1.label}")
    print(f"Q2 = {{{marks}}}")
    print(f"OT = {ot.label}")
    return EXIT_OK


def cmd_branch(args: argparse.Namespace) -> int:
    result = branch(args.n, args.shape)
    total = sum(
        count * len(enumerate_sst_ai(args.n, rho))
        for rho, count in result.multiplicities.items()
    )
    expected = len(enumerate_ssyt(args.n, args.shape))
    if args.format == "json":
        payload = result.to_payload()
        payload["dimension"] = {"gl": expected, "so_sum": total}
        print(_dump(payload))
    else:
        for entry in result.to_payload()["multiplicities"]:
            rho = Partition.model_construct(parts=tuple(entry["shape"]))
            weights = " ".join(
                "(" + ",".join(str(c) for c in nu) + ")" for nu in entry["highest_weights"]
            )
            print(f"{rho}: {entry['multiplicity']}\t{weights}")
        print(f"dimension: {total} = {expected}")
    if total != expected:
        logger.error("branching_dimension_mismatch", so_sum=total, gl=expected)
        return EXIT_FAILED
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_verification(
        args.suite,
        threads=args.threads,
        max_n=args.max_n,
        max_size=args.max_size,
        max_len=args.max_len,
    )
    if args.format == "json":
        print(_dump(report.summary()))
    else:
        print(report.to_text())
    if args.metrics_out:
        Path(args.metrics_out).write_bytes(metrics_text())
    return EXIT_OK if report.all_passed else EXIT_FAILED


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------

def _shape(text: str) -> Partition:
    return Partition.parse(text)


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise ValueError(f"expected a positive integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="aicrystal", description="AI-crystal tableau model for so_n."
    )
    parser.add_argument("--log-json", action="store_true", help="JSON log records on stderr")
    parser.add_argument("--log-level", default=None, help="log level (default from settings)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list SST_n(lambda) or SST_n^AI(rho)")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--shape", type=_shape, required=True, help='e.g. "2,1"; "0" is empty')
    p.add_argument("--ai", action="store_true", help="AI-tableaux only")
    p.add_argument("--count", action="store_true", help="print the cardinality only")
    p.add_argument("--format", choices=["json", "text"], default="json")
    p.set_defaults(handler=cmd_enumerate)

    p = sub.add_parser("graph", help="crystal graph of SST_n(lambda)")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--shape", type=_shape, required=True)
    p.add_argument("--ai", action="store_true", help="undirected B̃_i edges")
    p.add_argument("--format", choices=["dot", "json"], default="dot")
    p.set_defaults(handler=cmd_graph)

    p = sub.add_parser("char", help="character of SST_n(lambda)")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--shape", type=_shape, required=True)
    p.add_argument("--ai", action="store_true", help="ch_AI in y1, y3, ...")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(handler=cmd_char)

    p = sub.add_parser("rs", help="RS transcript")
    p.add_argument("--word", required=True, help='comma-separated letters, e.g. "4,2,3"')
    p.add_argument("--n", type=_positive, default=None, help="alphabet size (default: max letter)")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(handler=cmd_rs)

    p = sub.add_parser("rsai", help="RS^AI transcript")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(handler=cmd_rsai)

    p = sub.add_parser("branch", help="gl_n to so_n branching multiplicities")
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--shape", type=_shape, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(handler=cmd_branch)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument(
        "--suite", action="append", choices=[*SUITES, "all"], default=None,
        help="repeatable; default all",
    )
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--max-size", type=int, default=None)
    p.add_argument("--max-len", type=int, default=None)
    p.add_argument("--threads", type=_positive, default=None)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--metrics-out", default=None, help="write Prometheus text here")
    p.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE

    settings = get_settings()
    setup_logging(
        json_output=args.log_json or settings.log_json,
        level=args.log_level or settings.log_level,
    )
    bind_run_context(command=args.command)
    try:
        return args.handler(args)
    except (AICrystalError, ValueError) as exc:
        print(f"aicrystal {args.command}: {_error_text(exc)}", file=sys.stderr)
        logger.debug("usage_error", error=str(exc), error_type=type(exc).__name__)
        return EXIT_USAGE
    finally:
        clear_context()


if __name__ == "__main__":
    sys.exit(main())
