"""Brute-force reference enumerators.

All four solution families are the inclusion-minimal sets satisfying a
monotone predicate over some ground set (arcs or vertices), so a set is
minimal exactly when it satisfies the predicate and every single-element
removal does not.  Two engines share that test:

``scan``
    every subset of the ground set in increasing popcount, guarded by
    ``cap``.
``search``
    depth-first include/exclude branching over the ground set, pruning a
    branch when even the largest completion fails the predicate or when an
    already-included element is redundant.  Exact, and usable beyond the
    scan cap on structured instances.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Hashable, Iterable, Sequence

from .connectivity import HyperpathInstance
from .errors import CapExceeded, EmptyEdge, UnknownVertex
from .hypergraph import DirectedHypergraph, check_vertex_name, sorted_vertices, vertex_key

DEFAULT_CAP = 20


@dataclass(frozen=True)
class UndirectedHypergraph:
    vertices: frozenset[str]
    edges: tuple[frozenset[str], ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "vertices", frozenset(self.vertices))
        object.__setattr__(self, "edges", tuple(frozenset(e) for e in self.edges))
        for v in self.vertices:
            check_vertex_name(v)
        for i, e in enumerate(self.edges):
            unknown = e - self.vertices
            if unknown:
                raise UnknownVertex(f"edge {i} uses undeclared vertices {sorted_vertices(unknown)}", index=i)

    @classmethod
    def from_edges(cls, edges: Iterable[Iterable[str]]) -> "UndirectedHypergraph":
        edges = [frozenset(e) for e in edges]
        return cls(frozenset().union(*edges), tuple(edges))

    def edges_containing(self, v: str) -> list[int]:
        return [i for i, e in enumerate(self.edges) if v in e]


def canonical(family: Iterable[Iterable[Hashable]]) -> list[frozenset]:
    """Sort a set family by size, then lexicographically (natural order for names)."""

    def key(s):
        items = sorted(s, key=_elem_key)
        return (len(items), [_elem_key(x) for x in items])

    return sorted({frozenset(s) for s in family}, key=key)


def _elem_key(x):
    return (0, x, ()) if isinstance(x, int) else (1, 0, vertex_key(x))


# --- bitmask forward chaining -------------------------------------------------


class _Chainer:
    """Forward chaining over vertex bitmasks for repeated small checks."""

    def __init__(self, D: DirectedHypergraph):
        self.names = sorted_vertices(D.vertices)
        self.bit = {v: 1 << i for i, v in enumerate(self.names)}
        self.tails = [self.mask(a.tails) for a in D.arcs]
        self.heads = [self.mask(a.heads) for a in D.arcs]

    def mask(self, vs: Iterable[str]) -> int:
        m = 0
        for v in vs:
            m |= self.bit[v]
        return m

    def reach(self, start: int, arcs: Sequence[int]) -> int:
        reached = start
        pending = list(arcs)
        tails, heads = self.tails, self.heads
        changed = True
        while changed and pending:
            changed = False
            rest = []
            for a in pending:
                if tails[a] & reached == tails[a]:
                    reached |= heads[a]
                    changed = True
                else:
                    rest.append(a)
            pending = rest
        return reached


# --- engines -------------------------------------------------------------------


def _bits(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def minimal_sets_scan(k: int, pred: Callable[[int], bool], cap: int | None = DEFAULT_CAP) -> list[int]:
    """Minimal masks over ``k`` elements satisfying monotone ``pred``."""
    if cap is not None and k > cap:
        raise CapExceeded(f"{k} elements exceed the scan cap of {cap}")
    table = bytearray(1 << k)
    found = []
    for size in range(k + 1):
        for combo in combinations(range(k), size):
            mask = 0
            for i in combo:
                mask |= 1 << i
            if not pred(mask):
                continue
            table[mask] = 1
            # Every smaller set has been evaluated already.
            if all(not table[mask & ~(1 << i)] for i in combo):
                found.append(mask)
    return found


def minimal_sets_search(k: int, pred: Callable[[int], bool], cap: int | None = None) -> list[int]:
    """Same contract as :func:`minimal_sets_scan`, by pruned branching."""
    if cap is not None and k > cap:
        raise CapExceeded(f"{k} elements exceed the search cap of {cap}")
    found = []
    full = (1 << k) - 1

    def redundant(chosen: int) -> bool:
        # A new member can make any earlier member removable, so check all.
        for i in _bits(chosen):
            if pred(chosen & ~(1 << i)):
                return True
        return False

    def walk(i: int, chosen: int, undecided: int) -> None:
        if not pred(chosen | undecided):
            return
        if pred(chosen):
            found.append(chosen)
            return
        if i == k:
            return
        bit = 1 << i
        rest = undecided & ~bit
        with_i = chosen | bit
        if not redundant(with_i):
            walk(i + 1, with_i, rest)
        walk(i + 1, chosen, rest)

    walk(0, 0, full)
    return found


_ENGINES = {"scan": minimal_sets_scan, "search": minimal_sets_search}


def _engine(method: str):
    try:
        return _ENGINES[method]
    except KeyError:
        raise ValueError(f"unknown oracle method {method!r}; expected 'scan' or 'search'") from None


# --- the four oracles ----------------------------------------------------------


def oracle_hyperpaths(inst: HyperpathInstance, cap: int | None = DEFAULT_CAP, method: str = "scan") -> list[frozenset[int]]:
    """All inclusion-minimal arc sets whose arcs B-connect T from S."""
    D, S, T = inst.D, inst.sources, inst.targets
    ch = _Chainer(D)
    start = ch.mask(S)
    goal = ch.mask(T)

    def connects(mask: int) -> bool:
        return ch.reach(start, _bits(mask)) & goal == goal

    masks = _engine(method)(D.m, connects, cap)
    return canonical(_bits(m) for m in masks)


def oracle_induced_hyperpaths(
    D: DirectedHypergraph, s: str, t: str, cap: int | None = DEFAULT_CAP, method: str = "scan"
) -> list[frozenset[str]]:
    """All minimal vertex sets U containing s and t with t B-connected from s in D[U]."""
    _require(D, s, t)
    ch = _Chainer(D)
    inner = [v for v in ch.names if v not in (s, t)]
    ends = ch.mask({s, t})
    start, goal = ch.bit[s], ch.bit[t]
    inner_bits = [ch.bit[v] for v in inner]
    spans = [tl | hd for tl, hd in zip(ch.tails, ch.heads)]

    def to_vertices(mask: int) -> int:
        out = ends
        for i in _bits(mask):
            out |= inner_bits[i]
        return out

    def connects(mask: int) -> bool:
        U = to_vertices(mask)
        arcs = [a for a, span in enumerate(spans) if span & U == span]
        return ch.reach(start, arcs) & goal == goal

    masks = _engine(method)(len(inner), connects, cap)
    return canonical({s, t} | {inner[i] for i in _bits(m)} for m in masks)


def oracle_minimal_separators(
    D: DirectedHypergraph, s: str, t: str, cap: int | None = DEFAULT_CAP, method: str = "scan"
) -> list[frozenset[str]]:
    """All minimal X in V minus {s, t} whose removal leaves t unreachable from s."""
    _require(D, s, t)
    ch = _Chainer(D)
    inner = [v for v in ch.names if v not in (s, t)]
    everything = ch.mask(D.vertices)
    start, goal = ch.bit[s], ch.bit[t]
    inner_bits = [ch.bit[v] for v in inner]
    spans = [tl | hd for tl, hd in zip(ch.tails, ch.heads)]

    def separates(mask: int) -> bool:
        U = everything
        for i in _bits(mask):
            U &= ~inner_bits[i]
        arcs = [a for a, span in enumerate(spans) if span & U == span]
        return not ch.reach(start, arcs) & goal

    masks = _engine(method)(len(inner), separates, cap)
    return canonical({inner[i] for i in _bits(m)} for m in masks)


def oracle_minimal_transversals(
    H: UndirectedHypergraph, cap: int | None = DEFAULT_CAP, method: str = "scan"
) -> list[frozenset[str]]:
    """All minimal vertex sets meeting every edge of ``H``."""
    for i, e in enumerate(H.edges):
        if not e:
            raise EmptyEdge(f"edge {i} is empty, so no transversal exists", index=i)
    names = sorted_vertices(H.vertices)
    pos = {v: i for i, v in enumerate(names)}
    edge_masks = [sum(1 << pos[v] for v in e) for e in H.edges]

    def hits(mask: int) -> bool:
        return all(e & mask for e in edge_masks)

    masks = _engine(method)(len(names), hits, cap)
    return canonical({names[i] for i in _bits(m)} for m in masks)


def _require(D: DirectedHypergraph, *vs: str) -> None:
    unknown = set(vs) - D.vertices
    if unknown:
        raise UnknownVertex(f"vertices {sorted_vertices(unknown)} not in hypergraph")
