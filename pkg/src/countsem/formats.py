"""Parsers and emitters for argumentation interchange formats.

APX is the fact syntax used by solver competitions, restricted here to
``arg(<name>).`` and ``att(<name>,<name>).`` facts.  TGF is the trivial
graph format: node ids, a ``#`` separator line, then edges.  Emitters are
canonical and byte-deterministic, so emit -> parse -> emit is the identity
on the emitted text.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

from .framework import ArgumentationFramework, build_framework
from .counting import ValuationTrace
from .ranking import PropertyReport, Ranking
from .walks import ATTACKER, DisputeTree

APX_NAME = re.compile(r"[A-Za-z0-9_]+\Z")

_FACT = re.compile(
    r"(?P<pred>[A-Za-z0-9_]+)\s*\(\s*"
    r"(?P<first>[A-Za-z0-9_]+)\s*"
    r"(?:,\s*(?P<second>[A-Za-z0-9_]+)\s*)?"
    r"\)\s*\."
)


@dataclass(frozen=True)
class ParseDiagnostic:
    """A positioned parser message; columns are 1-based byte offsets."""

    line: int
    column: int
    message: str
    severity: str = "error"

    def render(self) -> str:
        return f"line {self.line}, column {self.column}: {self.message}"


class ParseError(ValueError):
    """Rejected input, carrying at least one positioned error diagnostic."""

    def __init__(self, diagnostics: Iterable[ParseDiagnostic]):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(d.render() for d in self.diagnostics))


def _position(text: str, offset: int) -> tuple[int, int]:
    line = text.count("\n", 0, offset) + 1
    start = text.rfind("\n", 0, offset) + 1
    column = len(text[start:offset].encode("utf-8")) + 1
    return line, column


def _fail(text: str, offset: int, message: str) -> ParseError:
    line, column = _position(text, offset)
    return ParseError([ParseDiagnostic(line, column, message)])


def parse_apx(text: str) -> ArgumentationFramework:
    """Parse APX facts into a framework.

    Whitespace between tokens is free-form, so several facts per line (or a
    fact split over lines) are fine.  Lines whose first non-blank character
    is ``%`` are comments.  Arguments are ordered by first ``arg`` fact;
    ``att`` facts may precede the declarations they mention, but every
    endpoint must be declared somewhere in the input.
    """
    # blank out comment lines, preserving offsets
    lines = text.split("\n")
    cleaned = "\n".join(
        " " * len(line) if line.lstrip().startswith("%") else line for line in lines
    )

    names: list[str] = []
    seen: set[str] = set()
    att_facts: list[tuple[str, str, int]] = []
    pos = 0
    end = len(cleaned)
    while True:
        while pos < end and cleaned[pos].isspace():
            pos += 1
        if pos >= end:
            break
        match = _FACT.match(cleaned, pos)
        if not match:
            raise _fail(cleaned, pos, "expected an arg(<name>). or att(<name>,<name>). fact")
        pred, first, second = match.group("pred", "first", "second")
        if pred == "arg":
            if second is not None:
                raise _fail(cleaned, pos, "arg takes exactly one name")
            if first not in seen:
                seen.add(first)
                names.append(first)
        elif pred == "att":
            if second is None:
                raise _fail(cleaned, pos, "att takes exactly two names")
            att_facts.append((first, second, pos))
        else:
            raise _fail(cleaned, pos, f"unknown fact {pred!r}, expected arg or att")
        pos = match.end()

    undeclared = [
        ParseDiagnostic(*_position(cleaned, offset), message=f"undeclared argument {name!r} in att")
        for a, b, offset in att_facts
        for name in (a, b)
        if name not in seen
    ]
    if undeclared:
        raise ParseError(undeclared)
    return build_framework(names, [(a, b) for a, b, _ in att_facts])


def parse_tgf(text: str) -> ArgumentationFramework:
    """Parse trivial graph format: one node id per line, ``#``, then edges."""
    names: list[str] = []
    seen: set[str] = set()
    edges: list[tuple[str, str]] = []
    in_edges = False
    diagnostics: list[ParseDiagnostic] = []
    for lineno, line in enumerate(text.split("\n"), start=1):
        tokens = line.split()
        if not tokens:
            continue
        if not in_edges and tokens == ["#"]:
            in_edges = True
            continue
        column = len(line[: line.index(tokens[0])].encode("utf-8")) + 1
        if not in_edges:
            if len(tokens) != 1:
                diagnostics.append(
                    ParseDiagnostic(lineno, column, "expected a single node id per line")
                )
            elif tokens[0] in seen:
                diagnostics.append(
                    ParseDiagnostic(lineno, column, f"duplicate node id {tokens[0]!r}")
                )
            else:
                seen.add(tokens[0])
                names.append(tokens[0])
        else:
            if len(tokens) != 2:
                diagnostics.append(
                    ParseDiagnostic(lineno, column, "expected an edge line: <from> <to>")
                )
                continue
            unknown = [t for t in tokens if t not in seen]
            for token in unknown:
                diagnostics.append(
                    ParseDiagnostic(lineno, column, f"edge references unknown id {token!r}")
                )
            if not unknown:
                edges.append((tokens[0], tokens[1]))
    if not in_edges:
        last = text.count("\n") + 1
        diagnostics.append(ParseDiagnostic(last, 1, "missing '#' separator line"))
    if diagnostics:
        raise ParseError(diagnostics)
    return build_framework(names, edges)


def emit_apx(af: ArgumentationFramework) -> str:
    """Canonical APX text: arg facts in index order, then sorted att facts."""
    for name in af.names:
        if not APX_NAME.match(name):
            raise ValueError(f"name {name!r} cannot be written as APX")
    out = [f"arg({name})." for name in af.names]
    out.extend(f"att({a},{t})." for a, t in af.attack_pairs())
    return "\n".join(out) + ("\n" if out else "")


def emit_tgf(af: ArgumentationFramework) -> str:
    """Canonical TGF text: node ids in index order, '#', sorted edges."""
    for name in af.names:
        if not name or any(c.isspace() for c in name):
            raise ValueError(f"name {name!r} cannot be written as TGF")
    out = list(af.names)
    out.append("#")
    out.extend(f"{a} {t}" for a, t in af.attack_pairs())
    return "\n".join(out) + "\n"


def _fmt(value: float) -> str:
    return f"{value:.17g}"


def emit_strengths_json(
    af: ArgumentationFramework,
    strengths: Iterable[float],
    trace: ValuationTrace | None = None,
) -> str:
    """Deterministic JSON for a strength vector, keys in index order.

    Floats carry 17 significant digits so the text round-trips exactly.
    Run parameters are included when the trace is given.
    """
    body = ", ".join(
        f'"{name}": {_fmt(v)}' for name, v in zip(af.names, strengths)
    )
    strengths_obj = "{" + body + "}"
    if trace is None:
        return '{"strengths": ' + strengths_obj + "}"
    return (
        '{"alpha": ' + _fmt(trace.alpha)
        + ', "epsilon": ' + _fmt(trace.epsilon)
        + f', "iterations": {trace.iterations}'
        + ', "strengths": ' + strengths_obj + "}"
    )


def trace_csv(af: ArgumentationFramework, trace: ValuationTrace) -> str:
    """Iteration history as CSV: k, step delta, then one column per argument.

    The first row is the starting vector and has an empty delta field.
    """
    header = ",".join(["k", "delta", *af.names])
    rows = [header]
    for k, iterate in enumerate(trace.iterates):
        delta = _fmt(trace.deltas[k - 1]) if k > 0 else ""
        cells = [str(k), delta] + [_fmt(v) for v in iterate]
        rows.append(",".join(cells))
    return "\n".join(rows) + "\n"


def emit_ranking_json(ranking: Ranking) -> str:
    """Equivalence classes strongest-first, each a sorted JSON array of names."""
    classes = ranking.equivalence_classes()
    body = ", ".join(
        "[" + ", ".join(f'"{n}"' for n in cls) + "]" for cls in classes
    )
    return "[" + body + "]"


def emit_report_json(report: PropertyReport) -> str:
    """Property check results as a JSON array of name/status/witnesses objects."""
    items = []
    for result in report.results:
        witnesses = ", ".join(
            "[" + ", ".join(f'"{part}"' for part in w) + "]" for w in result.witnesses
        )
        status = "pass" if result.passed else "fail"
        items.append(
            f'{{"name": "{result.name}", "status": "{status}", "witnesses": [{witnesses}]}}'
        )
    return "[" + ", ".join(items) + "]"


def emit_dot(obj: ArgumentationFramework | DisputeTree) -> str:
    """DOT digraph for a framework or a dispute tree.

    Framework mode: one node per argument, one edge per attack.  Tree mode:
    nodes are labelled ``name^(depth)``, defender nodes solid and attacker
    nodes dashed, each child pointing at the argument it attacks.
    """
    if isinstance(obj, ArgumentationFramework):
        lines = ["digraph framework {"]
        lines.extend(f'  "{name}";' for name in obj.names)
        lines.extend(f'  "{a}" -> "{t}";' for a, t in obj.attack_pairs())
        lines.append("}")
        return "\n".join(lines) + "\n"

    lines = ["digraph dispute_tree {"]
    ids: dict[int, str] = {}
    for seq, node in enumerate(obj.nodes()):
        ids[id(node)] = f"n{seq}"
        style = "dashed" if node.status == ATTACKER else "solid"
        lines.append(
            f'  n{seq} [label="{node.argument}^({node.depth})", style={style}];'
        )
    for node in obj.nodes():
        for child in node.children:
            lines.append(f"  {ids[id(child)]} -> {ids[id(node)]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
