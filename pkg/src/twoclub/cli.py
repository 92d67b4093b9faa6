"""Command line: solve, check, gen, ilp and bench.

Exit codes for ``solve``: 0 optimal, 2 stopped by the time limit, 3 no
solution exists, 1 bad input or flags. ``check`` exits 0 for a valid club
and 3 otherwise.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .compat import MODELS, ModelSpec
from .generator import GenParams, generate
from .graph import Graph, GraphFormatError, emit, parse
from .ilp import emit_hereditary_lp
from .oracle import check_solution
from .solver import Limits, solve

EXIT_OK, EXIT_INPUT, EXIT_TIMEOUT, EXIT_NONE = 0, 1, 2, 3
CSV_COLUMNS = ("instance", "model", "t", "size", "time_s", "timed_out", "nodes")
FORMAT_CHOICES = ("metis", "dimacs", "edges", "auto")

logger = logging.getLogger("twoclub")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunRecord:
    instance: str
    model: str
    t: int
    size: int | None
    time_s: float
    timed_out: bool
    vertices: list[int] = field(default_factory=list)
    n: int = 0
    n_nonisolated: int = 0
    m: int = 0
    counters: dict = field(default_factory=dict)

    def csv_row(self) -> dict:
        return {
            "instance": self.instance,
            "model": self.model,
            "t": self.t,
            "size": "none" if self.size is None else self.size,
            "time_s": f"{self.time_s:.4f}",
            "timed_out": str(self.timed_out).lower(),
            "nodes": self.counters.get("branch_nodes", 0),
        }


def _format(name: str) -> str:
    return "edge_list" if name == "edges" else name


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def _nonneg_float(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be nonnegative: {value}")
    return value


def _load(path: str, fmt: str) -> Graph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse(text, _format(fmt))


def run_instance(graph: Graph, name: str, spec: ModelSpec, time_limit: float | None, started: float) -> RunRecord:
    report = solve(graph, spec, Limits(time_limit=time_limit))
    elapsed = time.perf_counter() - started
    vertices = [v + graph.offset for v in report.best.vertices] if report.best else []
    return RunRecord(
        instance=name,
        model=spec.model,
        t=spec.t,
        size=report.size,
        time_s=elapsed,
        timed_out=report.timed_out,
        vertices=vertices,
        n=graph.n,
        n_nonisolated=graph.n_nonisolated,
        m=graph.m,
        counters=report.counters(),
    )


def _spec(args) -> ModelSpec:
    try:
        return ModelSpec(args.model, args.t)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_solve(args) -> int:
    started = time.perf_counter()
    spec = _spec(args)
    graph = _load(args.input, args.format)
    record = run_instance(graph, args.input, spec, args.time_limit, started)
    if args.output == "json":
        print(json.dumps(asdict(record), sort_keys=True))
    else:
        print(f"instance: {record.instance}")
        print(f"model: {spec}")
        print(f"n: {record.n} (non-isolated {record.n_nonisolated}), m: {record.m}")
        print(f"size: {'none' if record.size is None else record.size}")
        print(f"time_s: {record.time_s:.4f}")
        print(f"timed_out: {str(record.timed_out).lower()}")
        print(f"branch_nodes: {record.counters['branch_nodes']}")
        if record.vertices:
            print("vertices: " + " ".join(map(str, record.vertices)))
    if args.solution_out:
        Path(args.solution_out).write_text("".join(f"{v}\n" for v in record.vertices), encoding="utf-8")
    if record.timed_out:
        return EXIT_TIMEOUT
    return EXIT_NONE if record.size is None else EXIT_OK


def read_solution(path: str, graph: Graph) -> list[int]:
    labels = []
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line[0] in "#%":
            continue
        try:
            label = int(line)
        except ValueError:
            raise UsageError(f"{path}:{lineno}: not a vertex label: {line!r}") from None
        v = label - graph.offset
        if not 0 <= v < graph.n:
            raise UsageError(f"{path}:{lineno}: vertex {label} not in graph")
        labels.append(v)
    return labels


def cmd_check(args) -> int:
    spec = _spec(args)
    graph = _load(args.input, args.format)
    vertices = read_solution(args.solution, graph)
    ok = check_solution(graph, vertices, spec)
    print(f"{'valid' if ok else 'invalid'} {spec} 2-club ({len(set(vertices))} vertices)")
    return EXIT_OK if ok else EXIT_NONE


def cmd_gen(args) -> int:
    try:
        params = GenParams(args.n, args.a, args.b, args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = emit(generate(params), _format(args.format))
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_ilp(args) -> int:
    graph = _load(args.input, args.format)
    text = emit_hereditary_lp(graph, args.t)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _suite_rows(path: Path):
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        yield lineno, parts


def _bench_graph(instance: str, base: Path) -> Graph:
    # "random:n:a:b:seed" generates an instance instead of reading a file
    if instance.startswith("random:"):
        _, n, a, b, seed = instance.split(":")
        return generate(GenParams(int(n), float(a), float(b), int(seed)))
    path = Path(instance)
    if not path.is_absolute():
        path = base / path
    return parse(path.read_text(encoding="utf-8"), "auto")


def cmd_bench(args) -> int:
    suite = Path(args.suite)
    try:
        rows = list(_suite_rows(suite))
    except OSError as exc:
        raise UsageError(f"cannot read {suite}: {exc.strerror}") from None
    out = open(args.out, "w", newline="", encoding="utf-8") if args.out else sys.stdout
    try:
        writer = csv.DictWriter(out, fieldnames=CSV_COLUMNS)
        writer.writeheader()
        for lineno, parts in rows:
            name = parts[0] if parts else "?"
            started = time.perf_counter()
            try:
                if len(parts) != 3:
                    raise ValueError("expected 'instance model t'")
                spec = ModelSpec(parts[1], int(parts[2]))
                graph = _bench_graph(name, suite.parent)
                record = run_instance(graph, name, spec, args.time_limit, started)
                if record.timed_out and args.time_limit is not None:
                    record.time_s = args.time_limit
                writer.writerow(record.csv_row())
            except (ValueError, OSError) as exc:
                logger.error("%s:%d: %s", suite, lineno, exc)
                model = parts[1] if len(parts) > 1 else ""
                t = parts[2] if len(parts) > 2 else ""
                writer.writerow(dict(zip(CSV_COLUMNS, (name, model, t, "error", "", "", ""))))
            out.flush()
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="twoclub", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def model_flags(p):
        p.add_argument("--model", choices=MODELS, required=True)
        p.add_argument("--t", type=int, required=True)

    p = sub.add_parser("solve", help="find a maximum well-connected 2-club")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=FORMAT_CHOICES, default="auto")
    model_flags(p)
    p.add_argument("--time-limit", type=_nonneg_float)
    p.add_argument("--output", choices=("json", "text"), default="text")
    p.add_argument("--solution-out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="verify a vertex set")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=FORMAT_CHOICES, default="auto")
    p.add_argument("--solution", required=True)
    model_flags(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("gen", help="generate a random graph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--a", type=float, required=True)
    p.add_argument("--b", type=float, required=True)
    p.add_argument("--seed", type=_nonneg_int, default=0)
    p.add_argument("--format", choices=("metis", "dimacs", "edges"), default="metis")
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("ilp", help="write the t-hereditary integer program (LP format)")
    p.add_argument("--input", required=True)
    p.add_argument("--format", choices=FORMAT_CHOICES, default="auto")
    p.add_argument("--t", type=_nonneg_int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_ilp)

    p = sub.add_parser("bench", help="run a suite of (instance, model, t) rows")
    p.add_argument("--suite", required=True)
    p.add_argument("--time-limit", type=_nonneg_float)
    p.add_argument("--out")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            format="%(levelname)s %(name)s: %(message)s")
        return args.func(args)
    except (UsageError, GraphFormatError) as exc:
        print(f"twoclub: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
