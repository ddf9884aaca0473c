"""Text formats: ``.dhg`` directed hypergraphs, ``.hg`` hypergraphs, DIMACS
CNF, and ``key: value`` metadata sidecars.

A ``.dhg`` file holds one arc per line, ``t1 t2 ... -> h1 h2 ...``, with
``#`` comments and an optional leading ``vertices: v1 v2 ...`` line that
declares the full vertex set (needed for isolated vertices).
"""

from __future__ import annotations

from typing import Iterable

from .errors import HeaderMismatch, HypergraphError, NotThreeCnf, ParseError
from .hypergraph import DirectedHypergraph, build_hypergraph, check_vertex_name, sorted_vertices
from .oracles import UndirectedHypergraph
from .reductions import CnfFormula

ARROW = "->"
HEADER = "vertices:"


def _strip_comment(line: str) -> str:
    i = line.find("#")
    return line if i < 0 else line[:i]


def _tokens(text: str, lineno: int, offset: int) -> list[str]:
    out = []
    for tok in text.split():
        try:
            check_vertex_name(tok)
        except HypergraphError as exc:
            raise ParseError(str(exc), line=lineno, column=offset + text.find(tok) + 1) from None
        out.append(tok)
    return out


def parse_dhg(text: str) -> DirectedHypergraph:
    declared: set[str] | None = None
    specs = []
    lines = []
    seen_content = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        stripped = line.lstrip()
        if stripped.startswith(HEADER) and ARROW not in line:
            if seen_content:
                raise ParseError("vertex declaration must precede all arcs", line=lineno, column=1)
            offset = line.find(HEADER) + len(HEADER)
            declared = set(_tokens(line[offset:], lineno, offset))
            seen_content = True
            continue
        seen_content = True
        count = line.count(ARROW)
        if count != 1:
            col = line.find(ARROW) + 1 if count else len(line.rstrip()) + 1
            what = "missing '->'" if count == 0 else "more than one '->'"
            raise ParseError(f"{what} in arc line", line=lineno, column=col)
        split = line.find(ARROW)
        tails = _tokens(line[:split], lineno, 0)
        heads = _tokens(line[split + 2:], lineno, split + 2)
        specs.append((tails, heads))
        lines.append(lineno)

    if declared is None:
        vertices = set()
        for t, h in specs:
            vertices |= set(t) | set(h)
    else:
        vertices = declared
    try:
        return build_hypergraph(vertices, specs)
    except HypergraphError as exc:
        if exc.index is not None:
            exc.line = lines[exc.index]
        raise


def serialize_dhg(D: DirectedHypergraph) -> str:
    out = [f"{HEADER} {' '.join(sorted_vertices(D.vertices))}".rstrip()]
    for a in D.arcs:
        out.append(f"{' '.join(sorted_vertices(a.tails))} {ARROW} {' '.join(sorted_vertices(a.heads))}")
    return "\n".join(out) + "\n"


def parse_hg(text: str) -> UndirectedHypergraph:
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip_comment(raw)
        if not line.strip():
            continue
        edges.append(_tokens(line, lineno, 0))
    return UndirectedHypergraph.from_edges(edges)


def serialize_hg(H: UndirectedHypergraph) -> str:
    return "".join(" ".join(sorted_vertices(e)) + "\n" for e in H.edges)


def parse_cnf(text: str) -> CnfFormula:
    header = None
    clauses = []
    current: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("%"):
            break
        if line.startswith("p"):
            parts = line.split()
            if header is not None:
                raise ParseError("duplicate problem line", line=lineno, column=1)
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError("expected 'p cnf <vars> <clauses>'", line=lineno, column=1)
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ParseError("non-integer counts in problem line", line=lineno, column=1) from None
            if min(header) < 0:
                raise ParseError("negative counts in problem line", line=lineno, column=1)
            continue
        if header is None:
            raise ParseError("clause before the 'p cnf' problem line", line=lineno, column=1)
        for tok in line.split():
            try:
                lit = int(tok)
            except ValueError:
                raise ParseError(f"bad literal {tok!r}", line=lineno, column=raw.find(tok) + 1) from None
            if lit == 0:
                if len(current) != 3:
                    raise NotThreeCnf(
                        f"clause {len(clauses) + 1} has {len(current)} literals, expected 3",
                        line=lineno,
                    )
                clauses.append(tuple(current))
                current = []
            else:
                if abs(lit) > header[0]:
                    raise HeaderMismatch(
                        f"literal {lit} exceeds declared variable count {header[0]}",
                        line=lineno, column=raw.find(tok) + 1,
                    )
                current.append(lit)
    if header is None:
        raise ParseError("missing 'p cnf' problem line")
    if current:
        raise ParseError("last clause is not terminated by 0")
    if len(clauses) != header[1]:
        raise HeaderMismatch(f"header declares {header[1]} clauses, found {len(clauses)}")
    return CnfFormula(header[0], tuple(clauses))


def serialize_cnf(phi: CnfFormula) -> str:
    lines = [f"p cnf {phi.num_vars} {phi.num_clauses}"]
    lines += [" ".join(map(str, c)) + " 0" for c in phi.clauses]
    return "\n".join(lines) + "\n"


def format_meta(items: Iterable[tuple[str, object]]) -> str:
    return "".join(f"{k}: {v}\n" for k, v in items)


def parse_meta(text: str) -> list[tuple[str, str]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if not raw.strip() or raw.lstrip().startswith("#"):
            continue
        key, sep, value = raw.partition(":")
        if not sep:
            raise ParseError("expected 'key: value'", line=lineno, column=1)
        out.append((key.strip(), value.strip()))
    return out
