"""Polynomial-delay enumeration of S-T hyperpaths in B-hypergraphs.

Each recursion node finds one minimal hyperpath, takes its last arc ``a_k``
with head ``h_k`` and tails ``T_k``, and splits the solution space in two:
hyperpaths avoiding ``a_k`` (recurse with the arc deleted) and hyperpaths
using it (recurse on the contracted instance, where ``h_k`` disappears and
every tail containing ``h_k`` is rewritten to require ``T_k`` instead).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .connectivity import CheckCounter, HyperpathInstance, find_minimal_hyperpath
from .errors import HeadInSources, NotBHypergraph, NotConnected, UnknownArcId
from .hypergraph import DirectedHypergraph, Hyperarc, is_b_hypergraph

Solution = tuple[int, ...]
Sink = Callable[[Solution], object]


@dataclass(frozen=True)
class ContractionResult:
    D_child: DirectedHypergraph
    T_child: frozenset[str]
    provenance: tuple[int, ...]


@dataclass
class EnumerationStats:
    solutions_emitted: int = 0
    recursion_nodes: int = 0
    max_depth: int = 0
    connectivity_checks: int = 0
    max_checks_between_outputs: int = 0
    max_instance_size: int = 0

    def as_dict(self) -> dict[str, int]:
        return dict(vars(self))


def contract(
    D: DirectedHypergraph,
    S: Iterable[str],
    T: Iterable[str],
    a_k: int,
    provenance: Sequence[int] | None = None,
) -> ContractionResult:
    """Build the include-``a_k`` child instance.

    ``provenance`` maps arc ids of ``D`` to root ids (identity if omitted);
    the result's provenance maps child ids through it.
    """
    S, T = frozenset(S), frozenset(T)
    if not 0 <= a_k < D.m:
        raise UnknownArcId(f"no arc with id {a_k}", index=a_k)
    if provenance is None:
        provenance = range(D.m)
    arc = D.arcs[a_k]
    h_k = arc.head
    if h_k in S:
        raise HeadInSources(f"arc {a_k} has its head {h_k!r} in the source set", index=a_k)
    T_k = arc.tails

    arcs: list[Hyperarc] = []
    prov: list[int] = []
    for b in D.arcs:
        if h_k in b.heads:
            continue
        tails = b.tails
        if h_k in tails:
            tails = (tails - {h_k}) | T_k
            # Head now inside its own tail: unusable in any hyperpath.
            if tails & b.heads:
                continue
        arcs.append(Hyperarc(len(arcs), tails, b.heads))
        prov.append(provenance[b.id])
    T_child = (T | T_k) - (S | {h_k})
    return ContractionResult(DirectedHypergraph(D.vertices - {h_k}, arcs), T_child, tuple(prov))


def _normalize(inst: HyperpathInstance) -> tuple[DirectedHypergraph, tuple[int, ...]]:
    """Drop arcs whose head lies in S; no hyperpath can use them."""
    D, S = inst.D, inst.sources
    keep = [a.id for a in D.arcs if not (a.heads & S)]
    if len(keep) == D.m:
        return D, tuple(range(D.m))
    arcs = [Hyperarc(new, D.arcs[old].tails, D.arcs[old].heads) for new, old in enumerate(keep)]
    return DirectedHypergraph(D.vertices, arcs), tuple(keep)


class _Run:
    def __init__(self, S: frozenset[str], stats: EnumerationStats, trace=None):
        self.S = S
        self.stats = stats
        self.counter = CheckCounter()
        self.since_output = 0
        self.trace = trace

    def _charge(self, before: int) -> None:
        spent = self.counter.count - before
        self.stats.connectivity_checks += spent
        self.since_output += spent

    def node(
        self,
        D: DirectedHypergraph,
        T: frozenset[str],
        root_ids: tuple[int, ...],
        chosen: tuple[int, ...],
        depth: int,
    ) -> Iterator[tuple[Solution, int]]:
        stats = self.stats
        stats.recursion_nodes += 1
        stats.max_depth = max(stats.max_depth, depth)
        stats.max_instance_size = max(stats.max_instance_size, D.size())
        T = T - self.S
        if not T:
            yield tuple(sorted(chosen)), depth
            return
        before = self.counter.count
        try:
            path = find_minimal_hyperpath(D, self.S, T, self.counter)
        except NotConnected:
            self._charge(before)
            return
        self._charge(before)

        a_k = path.ordering[-1]
        root_a_k = root_ids[a_k]
        if self.trace is not None:
            self.trace("split", depth, root_a_k, chosen)

        keep = [i for i in range(D.m) if i != a_k]
        excluded = DirectedHypergraph(
            D.vertices,
            [Hyperarc(n, D.arcs[i].tails, D.arcs[i].heads) for n, i in enumerate(keep)],
        )
        yield from self.node(excluded, T, tuple(root_ids[i] for i in keep), chosen, depth + 1)
        del excluded

        if self.trace is not None:
            self.trace("include", depth, root_a_k, chosen)
        child = contract(D, self.S, T, a_k, root_ids)
        yield from self.node(child.D_child, child.T_child, child.provenance, chosen + (root_a_k,), depth + 1)


def iter_with_delay(
    inst: HyperpathInstance,
    stats: EnumerationStats | None = None,
    trace: Callable | None = None,
) -> Iterator[tuple[Solution, int, int]]:
    """Yield ``(solution, checks_since_previous, depth)`` for every S-T
    hyperpath of ``inst``.

    ``stats`` is updated in place; its delay counters are final once the
    generator is exhausted.  ``trace(event, depth, root_arc, chosen)`` is
    called at every split (``event == "split"``) and before each include
    branch (``event == "include"``).
    """
    if not is_b_hypergraph(inst.D):
        raise NotBHypergraph("hyperpath enumeration needs every arc to have a single head")
    if stats is None:
        stats = EnumerationStats()
    D, root_ids = _normalize(inst)
    run = _Run(inst.sources, stats, trace)
    for solution, depth in run.node(D, inst.targets, root_ids, (), 0):
        stats.solutions_emitted += 1
        spent = run.since_output
        stats.max_checks_between_outputs = max(stats.max_checks_between_outputs, spent)
        run.since_output = 0
        yield solution, spent, depth
    stats.max_checks_between_outputs = max(stats.max_checks_between_outputs, run.since_output)


def iter_hyperpaths(
    inst: HyperpathInstance,
    stats: EnumerationStats | None = None,
    trace: Callable | None = None,
) -> Iterator[Solution]:
    """Yield every S-T hyperpath of ``inst`` once, as ascending root arc ids.

    Emission order is fixed: the branch without the split arc is explored
    before the branch with it.  Closing the generator stops the search.
    """
    gen = iter_with_delay(inst, stats, trace)
    try:
        for solution, _spent, _depth in gen:
            yield solution
    finally:
        gen.close()


def enum_hyperpaths(inst: HyperpathInstance, sink: Sink) -> EnumerationStats:
    """Feed every S-T hyperpath to ``sink``; the run stops early if the sink
    returns ``False``."""
    stats = EnumerationStats()
    gen = iter_hyperpaths(inst, stats)
    try:
        for solution in gen:
            if sink(solution) is False:
                break
    finally:
        gen.close()
    return stats


def enum_two_terminal(D: DirectedHypergraph, s: str, t: str, sink: Sink) -> EnumerationStats:
    return enum_hyperpaths(HyperpathInstance(D, frozenset({s}), frozenset({t})), sink)


def all_hyperpaths(D: DirectedHypergraph, S: Iterable[str], T: Iterable[str]) -> list[Solution]:
    return list(iter_hyperpaths(HyperpathInstance(D, frozenset(S), frozenset(T))))
