"""Integer program for maximum t-hereditary 2-clubs, in LP file format.

One binary ``x{v}`` per vertex (``v`` is the 0-based internal id). For each
nonadjacent pair ``{u, w}``:

    (t+1) x_u + (t+1) x_w - sum_{v in N(u) & N(w)} x_v <= t+1

so either at most one of ``u, w`` is taken or at least ``t+1`` of their
common neighbors are taken as well.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np

from .graph import Graph

MAX_EVAL_N = 16
_TERMS_PER_LINE = 12


@dataclass(frozen=True)
class Constraint:
    name: str
    coeffs: tuple[tuple[int, int], ...]  # (vertex, coefficient) in output order
    rhs: int


@dataclass(frozen=True)
class IlpModel:
    n: int
    t: int
    constraints: tuple[Constraint, ...]

    @property
    def variables(self) -> list[str]:
        return [f"x{v}" for v in range(self.n)]


def build_hereditary_model(g: Graph, t: int) -> IlpModel:
    if t < 0:
        raise ValueError("t must be nonnegative")
    nbrs = g.neighbor_sets()
    rows = []
    for u in range(g.n):
        for w in range(u + 1, g.n):
            if w in nbrs[u]:
                continue
            common = sorted(nbrs[u] & nbrs[w])
            coeffs = ((u, t + 1), (w, t + 1), *((v, -1) for v in common))
            rows.append(Constraint(f"c{len(rows)}", coeffs, t + 1))
    return IlpModel(g.n, t, tuple(rows))


def _format_terms(coeffs) -> list[str]:
    out = []
    for i, (v, c) in enumerate(coeffs):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = f"x{v}" if mag == 1 else f"{mag} x{v}"
        if i == 0:
            out.append(body if c > 0 else f"- {body}")
        else:
            out.append(f"{sign} {body}")
    return out


def _wrap(prefix: str, terms: list[str], suffix: str = "") -> list[str]:
    lines = []
    for i in range(0, max(len(terms), 1), _TERMS_PER_LINE):
        chunk = " ".join(terms[i:i + _TERMS_PER_LINE])
        lines.append(("  " + prefix if i == 0 else "    ") + chunk)
    if suffix:
        lines[-1] += suffix
    return lines


def emit_model(model: IlpModel) -> str:
    lines = [f"\\ maximum {model.t}-hereditary 2-club, {model.n} vertices", "Maximize"]
    lines += _wrap("obj: ", _format_terms([(v, 1) for v in range(model.n)]))
    lines.append("Subject To")
    for c in model.constraints:
        lines += _wrap(f"{c.name}: ", _format_terms(c.coeffs), f" <= {c.rhs}")
    lines.append("Binary")
    lines += [f"  x{v}" for v in range(model.n)]
    lines.append("End")
    return "\n".join(lines) + "\n"


def emit_hereditary_lp(g: Graph, t: int) -> str:
    """LP-format text of the model; byte-identical for identical input."""
    return emit_model(build_hereditary_model(g, t))


_TERM = re.compile(r"([+-])?\s*(\d+)?\s*x(\d+)")


def _parse_terms(text: str) -> list[tuple[int, int]]:
    out = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse LP expression near {text[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coef = int(m.group(2)) if m.group(2) else 1
        out.append((int(m.group(3)), sign * coef))
        pos = m.end()
        while pos < len(text) and text[pos] == " ":
            pos += 1
    return out


def parse_lp(text: str) -> tuple[list[tuple[int, int]], list[Constraint], list[int]]:
    """Read back the subset of LP format written by :func:`emit_model`.

    Returns objective terms, ``<=`` constraints and the binary variables.
    """
    section = None
    objective: list[str] = []
    rows: list[list[str]] = []
    binaries: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("\\"):
            continue
        low = line.lower()
        if low in ("maximize", "minimize", "subject to", "binary", "binaries", "end"):
            section = low
            continue
        if section == "maximize":
            objective.append(line.split(":", 1)[1] if ":" in line else line)
        elif section == "subject to":
            if re.match(r"^[A-Za-z_]\w*:", line):
                rows.append([line])
            else:
                rows[-1].append(line)
        elif section in ("binary", "binaries"):
            binaries += [int(tok[1:]) for tok in line.split()]
    constraints = []
    for parts in rows:
        whole = " ".join(parts)
        name, expr = whole.split(":", 1)
        lhs, rhs = expr.split("<=")
        constraints.append(Constraint(name.strip(), tuple(_parse_terms(lhs)), int(rhs)))
    return _parse_terms(" ".join(objective)), constraints, binaries


def evaluate_lp(text: str) -> int:
    """Exact optimum of a small emitted model by enumerating 0/1 assignments."""
    objective, constraints, binaries = parse_lp(text)
    n = max(binaries, default=-1) + 1
    if n > MAX_EVAL_N:
        raise ValueError(f"enumeration limited to {MAX_EVAL_N} variables, got {n}")
    # row i of `assign` is the assignment whose bits spell i
    masks = np.arange(1 << n, dtype=np.int64)
    assign = ((masks[:, None] >> np.arange(n)) & 1).astype(np.int64)
    feasible = np.ones(len(masks), dtype=bool)
    for con in constraints:
        row = np.zeros(n, dtype=np.int64)
        for v, c in con.coeffs:
            row[v] += c
        feasible &= assign @ row <= con.rhs
    obj = np.zeros(n, dtype=np.int64)
    for v, c in objective:
        obj[v] += c
    values = assign @ obj
    return int(values[feasible].max()) if feasible.any() else 0


def evaluate_small(g: Graph, t: int) -> int:
    if g.n > MAX_EVAL_N:
        raise ValueError(f"enumeration limited to n <= {MAX_EVAL_N}, got {g.n}")
    return evaluate_lp(emit_hereditary_lp(g, t))
