"""B-connectivity by forward chaining, and hyperpath extraction/verification."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import NotConnected, NotLayerable, UnknownArcId, UnknownVertex
from .hypergraph import DirectedHypergraph, sorted_vertices


@dataclass
class CheckCounter:
    """Counts forward-chaining passes; the enumerator's unit of work."""

    count: int = 0


@dataclass(frozen=True)
class HyperpathInstance:
    D: DirectedHypergraph
    sources: frozenset[str]
    targets: frozenset[str]

    def __post_init__(self):
        object.__setattr__(self, "sources", frozenset(self.sources))
        object.__setattr__(self, "targets", frozenset(self.targets))
        if not self.sources:
            raise ValueError("source set must be nonempty")
        _check_known(self.D, self.sources | self.targets)


@dataclass(frozen=True)
class Hyperpath:
    arc_ids: frozenset[int]
    ordering: tuple[int, ...] = field(compare=False)


def _check_known(D: DirectedHypergraph, vs: Iterable[str]) -> None:
    unknown = set(vs) - D.vertices
    if unknown:
        raise UnknownVertex(f"vertices {sorted_vertices(unknown)} not in hypergraph")


def _closure(
    D: DirectedHypergraph,
    sources: Iterable[str],
    active: Sequence[bool] | None = None,
    goal: Iterable[str] | None = None,
) -> set[str]:
    """Least fixpoint of forward chaining from ``sources``.

    Each arc keeps a counter of tails not yet reached; a vertex is dequeued
    once and decrements the counters of the arcs it is a tail of, so a pass is
    linear in the total incidence count.  With ``goal`` set the pass stops as
    soon as every goal vertex is reached.
    """
    arcs = D.arcs
    missing = [len(a.tails) for a in arcs]
    reached = set(sources)
    pending = None
    if goal is not None:
        pending = set(goal) - reached
        if not pending:
            return reached
    queue = deque(reached)
    tail_index = D.tail_index
    while queue:
        v = queue.popleft()
        for aid in tail_index.get(v, ()):
            if active is not None and not active[aid]:
                continue
            missing[aid] -= 1
            if missing[aid] == 0:
                for h in arcs[aid].heads:
                    if h not in reached:
                        reached.add(h)
                        queue.append(h)
                        if pending is not None:
                            pending.discard(h)
                            if not pending:
                                return reached
    return reached


def b_connected_set(D: DirectedHypergraph, S: Iterable[str]) -> frozenset[str]:
    S = frozenset(S)
    _check_known(D, S)
    return frozenset(_closure(D, S))


def is_b_connected(D: DirectedHypergraph, S: Iterable[str], T: Iterable[str]) -> bool:
    S, T = frozenset(S), frozenset(T)
    _check_known(D, S | T)
    return T <= _closure(D, S, goal=T)


def layered_order(D: DirectedHypergraph, S: Iterable[str], arc_ids: Iterable[int]) -> list[int]:
    """Order ``arc_ids`` layer by layer: layer i holds the not-yet-placed arcs
    whose tails lie in S plus the heads of layers before i.

    Within a layer arcs are sorted by id.  Raises :class:`NotLayerable` with
    the arcs that never become enabled.
    """
    ids = set(arc_ids)
    for i in ids:
        if not 0 <= i < D.m:
            raise UnknownArcId(f"no arc with id {i}", index=i)
    reached = set(S)
    remaining = set(ids)
    order: list[int] = []
    while remaining:
        layer = sorted(i for i in remaining if D.arcs[i].tails <= reached)
        if not layer:
            raise NotLayerable(remaining)
        for i in layer:
            reached |= D.arcs[i].heads
        remaining.difference_update(layer)
        order.extend(layer)
    return order


def _candidate_arcs(D: DirectedHypergraph, S: frozenset[str], T: frozenset[str], reached: set[str]) -> list[int]:
    """Arcs enabled from S that can also contribute to reaching T.

    Dropping the others never changes whether T is reached from any arc
    subset, so the deletion scan gives the same answer on this smaller set.
    """
    usable = [a.id for a in D.arcs if a.tails <= reached]
    by_head: dict[str, list[int]] = {}
    for i in usable:
        for h in D.arcs[i].heads:
            by_head.setdefault(h, []).append(i)
    wanted = set(T - S)
    stack = list(wanted)
    relevant: set[int] = set()
    while stack:
        v = stack.pop()
        for i in by_head.get(v, ()):
            if i in relevant:
                continue
            relevant.add(i)
            for u in D.arcs[i].tails:
                if u not in wanted and u not in S:
                    wanted.add(u)
                    stack.append(u)
    return sorted(relevant)


def find_minimal_hyperpath(
    D: DirectedHypergraph,
    S: Iterable[str],
    T: Iterable[str],
    counter: CheckCounter | None = None,
) -> Hyperpath:
    """Return one inclusion-minimal arc set that B-connects T from S.

    Arcs are tried for deletion in descending id order and removed whenever T
    stays reachable without them, so the result is deterministic.  Raises
    :class:`NotConnected` when T is unreachable.
    """
    S, T = frozenset(S), frozenset(T) - frozenset(S)
    if counter is None:
        counter = CheckCounter()
    counter.count += 1
    reached = _closure(D, S)
    if not T <= reached:
        raise NotConnected(f"targets {sorted_vertices(T - reached)} are not B-connected")
    if not T:
        return Hyperpath(frozenset(), ())

    active = [False] * D.m
    candidates = _candidate_arcs(D, S, T, reached)
    for i in candidates:
        active[i] = True
    for i in reversed(candidates):
        active[i] = False
        counter.count += 1
        if not T <= _closure(D, S, active, goal=T):
            active[i] = True

    kept = frozenset(i for i in candidates if active[i])
    ordering = tuple(layered_order(D, S, kept))
    last = D.arcs[ordering[-1]]
    assert last.heads & T, "last arc of a minimal hyperpath must reach a target"
    return Hyperpath(kept, ordering)


@dataclass(frozen=True)
class HyperpathCheck:
    """Outcome of :func:`check_hyperpath`; ``failures`` names broken conditions."""

    ok: bool
    failures: tuple[str, ...]
    ordering: tuple[int, ...] | None

    def __bool__(self) -> bool:
        return self.ok


def check_hyperpath(inst: HyperpathInstance, arc_ids: Iterable[int]) -> HyperpathCheck:
    """Test the layered characterisation of S-T hyperpaths in B-hypergraphs.

    Conditions reported in ``failures``:

    * ``ordering``: no layered ordering exists;
    * ``targets``: some target outside S is not a head of the set;
    * ``unique-heads``: a head vertex in S, or one produced by two arcs;
    * ``dangling-heads``: a non-terminal vertex that no arc uses as a tail.
    """
    D, S, T = inst.D, inst.sources, inst.targets
    ids = frozenset(arc_ids)
    failures = []
    ordering = None
    try:
        ordering = tuple(layered_order(D, S, ids))
    except NotLayerable:
        failures.append("ordering")

    heads: dict[str, int] = {}
    tails: set[str] = set()
    for i in ids:
        for h in D.arcs[i].heads:
            heads[h] = heads.get(h, 0) + 1
        tails |= D.arcs[i].tails
    if not (T - S) <= heads.keys():
        failures.append("targets")
    if any(v in S or n != 1 for v, n in heads.items()):
        failures.append("unique-heads")
    touched = tails | heads.keys()
    if any(v not in tails for v in touched - T - S):
        failures.append("dangling-heads")
    return HyperpathCheck(not failures, tuple(failures), ordering)


def verify_hyperpath(inst: HyperpathInstance, arc_ids: Iterable[int]) -> bool:
    return check_hyperpath(inst, arc_ids).ok
