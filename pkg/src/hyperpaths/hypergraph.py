"""Directed hypergraphs with positional arc identity."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    DisjointnessViolation,
    EmptySide,
    InvalidVertexName,
    UnknownArcId,
    UnknownVertex,
)

_NUM = re.compile(r"(\d+)")


def vertex_key(v: str):
    """Natural sort key, so that ``x_2`` sorts before ``x_10``."""
    return tuple((0, int(p), "") if p.isdigit() else (1, 0, p) for p in _NUM.split(v) if p)


def sorted_vertices(vs: Iterable[str]) -> list[str]:
    return sorted(vs, key=vertex_key)


def check_vertex_name(v: str) -> None:
    if not isinstance(v, str) or not v:
        raise InvalidVertexName(f"vertex name must be a nonempty string, got {v!r}")
    if "->" in v or "#" in v or any(c.isspace() for c in v):
        raise InvalidVertexName(f"vertex name {v!r} contains whitespace, '->' or '#'")


class HypergraphClass(enum.Enum):
    GENERAL = "general"
    BF = "BF"
    B = "B"


@dataclass(frozen=True)
class Hyperarc:
    id: int
    tails: frozenset[str]
    heads: frozenset[str]

    @property
    def head(self) -> str:
        """The single head of a B-hyperarc."""
        (h,) = self.heads
        return h

    def __len__(self) -> int:
        return len(self.tails) + len(self.heads)


class DirectedHypergraph:
    """Immutable vertex set plus an id-indexed sequence of hyperarcs.

    Arc ids are always ``0..m-1``.  Subhypergraphs carry ``origin``, a tuple
    mapping each local arc id to the id it had in the hypergraph it was cut
    from.
    """

    __slots__ = ("vertices", "arcs", "origin", "tail_index", "head_index")

    def __init__(
        self,
        vertices: Iterable[str],
        arcs: Sequence[Hyperarc],
        origin: Sequence[int] | None = None,
    ):
        self.vertices: frozenset[str] = frozenset(vertices)
        self.arcs: tuple[Hyperarc, ...] = tuple(arcs)
        self.origin: tuple[int, ...] | None = None if origin is None else tuple(origin)
        # Built eagerly so the instance stays read-only after construction.
        tail_index: dict[str, list[int]] = {}
        head_index: dict[str, list[int]] = {}
        for a in self.arcs:
            for v in a.tails:
                tail_index.setdefault(v, []).append(a.id)
            for v in a.heads:
                head_index.setdefault(v, []).append(a.id)
        self.tail_index = {v: tuple(ids) for v, ids in tail_index.items()}
        self.head_index = {v: tuple(ids) for v, ids in head_index.items()}

    @property
    def m(self) -> int:
        return len(self.arcs)

    def size(self) -> int:
        """Total incidence count, the sum of |tails| + |heads| over arcs."""
        return sum(len(a) for a in self.arcs)

    def arc_specs(self) -> list[tuple[frozenset[str], frozenset[str]]]:
        return [(a.tails, a.heads) for a in self.arcs]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, DirectedHypergraph):
            return NotImplemented
        return self.vertices == other.vertices and self.arc_specs() == other.arc_specs()

    def __hash__(self) -> int:
        return hash((self.vertices, tuple(self.arc_specs())))

    def __repr__(self) -> str:
        arcs = ", ".join(
            f"{' '.join(sorted_vertices(a.tails))}->{' '.join(sorted_vertices(a.heads))}"
            for a in self.arcs
        )
        return f"DirectedHypergraph(|V|={len(self.vertices)}, arcs=[{arcs}])"


def build_hypergraph(
    vertices: Iterable[str],
    arc_specs: Iterable[tuple[Iterable[str], Iterable[str]]],
) -> DirectedHypergraph:
    """Validate ``arc_specs`` against ``vertices`` and number arcs in input order."""
    vs = frozenset(vertices)
    for v in vs:
        check_vertex_name(v)
    arcs = []
    for i, (tails, heads) in enumerate(arc_specs):
        tails, heads = frozenset(tails), frozenset(heads)
        if not tails or not heads:
            side = "tails" if not tails else "heads"
            raise EmptySide(f"arc spec {i} has empty {side}", index=i)
        unknown = (tails | heads) - vs
        if unknown:
            raise UnknownVertex(
                f"arc spec {i} uses undeclared vertices {sorted_vertices(unknown)}", index=i
            )
        common = tails & heads
        if common:
            raise DisjointnessViolation(
                f"arc spec {i} has {sorted_vertices(common)} in both tails and heads", index=i
            )
        arcs.append(Hyperarc(i, tails, heads))
    return DirectedHypergraph(vs, arcs)


def from_arcs(arc_specs: Iterable[tuple[Iterable[str], Iterable[str]]], extra_vertices=()) -> DirectedHypergraph:
    """Like :func:`build_hypergraph` but infers the vertex set from the arcs."""
    specs = [(frozenset(t), frozenset(h)) for t, h in arc_specs]
    vs = set(extra_vertices)
    for t, h in specs:
        vs |= t | h
    return build_hypergraph(vs, specs)


def classify(D: DirectedHypergraph) -> HypergraphClass:
    if all(len(a.heads) == 1 for a in D.arcs):
        return HypergraphClass.B
    if all(len(a.heads) == 1 or len(a.tails) == 1 for a in D.arcs):
        return HypergraphClass.BF
    return HypergraphClass.GENERAL


def is_b_hypergraph(D: DirectedHypergraph) -> bool:
    return classify(D) is HypergraphClass.B


def _reindex(D: DirectedHypergraph, vertices, keep: Sequence[int]) -> DirectedHypergraph:
    arcs = [Hyperarc(new, D.arcs[old].tails, D.arcs[old].heads) for new, old in enumerate(keep)]
    return DirectedHypergraph(vertices, arcs, origin=keep)


def edge_induced_sub(D: DirectedHypergraph, arc_ids: Iterable[int]) -> DirectedHypergraph:
    ids = sorted(set(arc_ids))
    for i in ids:
        if not 0 <= i < D.m:
            raise UnknownArcId(f"no arc with id {i}", index=i)
    vs: set[str] = set()
    for i in ids:
        vs |= D.arcs[i].tails | D.arcs[i].heads
    return _reindex(D, vs, ids)


def vertex_induced_sub(D: DirectedHypergraph, U: Iterable[str]) -> DirectedHypergraph:
    U = frozenset(U)
    unknown = U - D.vertices
    if unknown:
        raise UnknownVertex(f"vertices {sorted_vertices(unknown)} not in hypergraph")
    keep = [a.id for a in D.arcs if a.tails <= U and a.heads <= U]
    return _reindex(D, U, keep)


def without_arcs(D: DirectedHypergraph, arc_ids: Iterable[int]) -> DirectedHypergraph:
    """Drop ``arc_ids`` but keep the full vertex set (unlike edge-induced subs)."""
    drop = set(arc_ids)
    keep = [a.id for a in D.arcs if a.id not in drop]
    return _reindex(D, D.vertices, keep)
