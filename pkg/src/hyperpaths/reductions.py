"""Instance generators from 3-CNF formulas and undirected hypergraphs.

* :func:`reduce_sat_induced` builds a B-hypergraph whose induced s-t
  hyperpaths beyond the ``n`` variable gadgets correspond to satisfying
  assignments.
* :func:`reduce_sat_separator` does the same for minimal s-t separators
  beyond the ``2n + 1`` trivial ones.
* :func:`reduce_transversal` builds a BF-hypergraph whose s-t hyperpaths are
  in bijection with the minimal transversals of the input.

Vertex names: ``s``, ``t``, ``x_i`` and ``~x_i`` for the two literals of
variable ``i``, ``c_j`` per clause, ``y_i``/``c`` in the separator gadget,
``d_i`` for binary-tree nodes, and ``e_j`` per hyperedge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from .errors import (
    EmptyEdge,
    ForeignArc,
    MalformedCnf,
    MissingFinalArc,
    NotInducedPath,
    NotSeparator,
    SeedPath,
    SeedSeparator,
    UnknownVertex,
    UnsatisfiedAssignment,
)
from .connectivity import is_b_connected
from .hypergraph import DirectedHypergraph, build_hypergraph, sorted_vertices, vertex_induced_sub
from .oracles import UndirectedHypergraph

S_NAME, T_NAME = "s", "t"


@dataclass(frozen=True)
class CnfFormula:
    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(c) for c in self.clauses))
        if self.num_vars < 0:
            raise MalformedCnf("number of variables must be nonnegative")
        for j, clause in enumerate(self.clauses):
            if len(clause) != 3:
                raise MalformedCnf(f"clause {j + 1} has {len(clause)} literals, expected 3", index=j)
            for lit in clause:
                if not isinstance(lit, int) or lit == 0 or abs(lit) > self.num_vars:
                    raise MalformedCnf(f"clause {j + 1} has bad literal {lit!r}", index=j)

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    def evaluate(self, values: dict[int, int]) -> bool:
        def lit_true(lit: int) -> bool:
            v = values.get(abs(lit), 0)
            return bool(v) if lit > 0 else not v

        return all(any(lit_true(l) for l in c) for c in self.clauses)


Assignment = dict[int, int]


def satisfying_assignments(phi: CnfFormula, cap: int = 20) -> list[Assignment]:
    if phi.num_vars > cap:
        raise ValueError(f"{phi.num_vars} variables exceed the exhaustive-SAT cap of {cap}")
    out = []
    for bits in product((0, 1), repeat=phi.num_vars):
        values = {i + 1: b for i, b in enumerate(bits)}
        if phi.evaluate(values):
            out.append(values)
    return out


def is_satisfiable(phi: CnfFormula, cap: int = 20) -> bool:
    if phi.num_vars > cap:
        raise ValueError(f"{phi.num_vars} variables exceed the exhaustive-SAT cap of {cap}")
    return any(
        phi.evaluate({i + 1: b for i, b in enumerate(bits)})
        for bits in product((0, 1), repeat=phi.num_vars)
    )


def _is_power_of_two(k: int) -> bool:
    return k >= 1 and k & (k - 1) == 0


def pad_to_power_of_two(phi: CnfFormula, mode: str = "clauses") -> CnfFormula:
    """Add one fresh variable ``z`` and clauses ``(z or z or z)`` until the
    clause count (``mode="clauses"``) or ``n + m + 1``
    (``mode="clauses_plus_vars"``) is a power of two.  Unchanged when the
    target quantity already is one.
    """
    n, m = phi.num_vars, phi.num_clauses
    if mode == "clauses":
        if _is_power_of_two(m):
            return phi
        target = 1 << max(m - 1, 0).bit_length()
        extra = target - m
    elif mode == "clauses_plus_vars":
        if _is_power_of_two(n + m + 1):
            return phi
        target = 1 << (n + m + 1).bit_length()
        extra = target - (n + 1) - m - 1
    else:
        raise ValueError(f"unknown padding mode {mode!r}")
    z = n + 1
    return CnfFormula(n + 1, phi.clauses + ((z, z, z),) * extra)


def _pos(i: int) -> str:
    return f"x_{i}"


def _neg(i: int) -> str:
    return f"~x_{i}"


def _lit(lit: int) -> str:
    return _pos(lit) if lit > 0 else _neg(-lit)


def _check_formula(phi: CnfFormula) -> None:
    if phi.num_vars < 1 or phi.num_clauses < 1:
        raise MalformedCnf("reductions need at least one variable and one clause")


def _tree_arcs(leaves: Sequence[str], root: str, prefix: str = "d") -> tuple[list[tuple[set, set]], list[str]]:
    """Binary tree of 2-tail arcs collecting ``leaves`` into ``root``.

    Heap numbering: node 1 is ``root``, nodes ``L..2L-1`` are the leaves in
    order, and internal nodes ``2..L-1`` are fresh vertices ``d_i``; arc
    ``({w_2i, w_2i+1}, {w_i})`` for ``i = 1..L-1``.  ``L`` must be a power of
    two; a single leaf becomes the one arc ``({leaf}, {root})``.
    """
    L = len(leaves)
    if not _is_power_of_two(L):
        raise ValueError(f"tree needs a power-of-two number of leaves, got {L}")
    if L == 1:
        return [({leaves[0]}, {root})], []
    w = {1: root}
    for i in range(2, L):
        w[i] = f"{prefix}_{i}"
    for i in range(L, 2 * L):
        w[i] = leaves[i - L]
    arcs = [({w[2 * i], w[2 * i + 1]}, {w[i]}) for i in range(1, L)]
    return arcs, [w[i] for i in range(2, L)]


# --- induced s-t hyperpaths -------------------------------------------------------


@dataclass(frozen=True)
class SatInducedInstance:
    D: DirectedHypergraph
    s: str
    t: str
    seed_paths: tuple[frozenset[str], ...]
    var_map: dict[int, tuple[str, str]]
    clause_map: dict[int, str]
    formula: CnfFormula
    padding_var: int | None = None
    bounded_tail: bool = False
    tree_vertices: tuple[str, ...] = ()


def reduce_sat_induced(phi: CnfFormula, bounded_tail: bool = False) -> SatInducedInstance:
    _check_formula(phi)
    source = phi
    if bounded_tail:
        phi = pad_to_power_of_two(phi, "clauses")
    n, m = phi.num_vars, phi.num_clauses
    s, t = S_NAME, T_NAME
    var_map = {i: (_pos(i), _neg(i)) for i in range(1, n + 1)}
    clause_map = {j: f"c_{j}" for j in range(1, m + 1)}

    arcs: list[tuple[set, set]] = []
    for i in range(1, n + 1):
        x, nx = var_map[i]
        arcs += [({x, nx}, {t}), ({s}, {x}), ({s}, {nx})]
    for j, clause in enumerate(phi.clauses, start=1):
        arcs += [({_lit(l)}, {clause_map[j]}) for l in clause]
    clause_vertices = [clause_map[j] for j in range(1, m + 1)]
    tree: list[str] = []
    if bounded_tail:
        tree_arcs, tree = _tree_arcs(clause_vertices, t)
        arcs += tree_arcs
    else:
        arcs.append((set(clause_vertices), {t}))

    vertices = {s, t, *clause_vertices, *tree}
    for x, nx in var_map.values():
        vertices |= {x, nx}
    D = build_hypergraph(vertices, arcs)
    seeds = tuple(frozenset({s, x, nx, t}) for x, nx in var_map.values())
    return SatInducedInstance(
        D, s, t, seeds, var_map, clause_map, phi,
        padding_var=n if phi is not source else None,
        bounded_tail=bounded_tail,
        tree_vertices=tuple(tree),
    )


def _reach_within(D: DirectedHypergraph, s: str, t: str, U: frozenset[str]) -> bool:
    return is_b_connected(vertex_induced_sub(D, U), {s}, {t})


def is_induced_hyperpath(D: DirectedHypergraph, s: str, t: str, U: Iterable[str]) -> bool:
    U = frozenset(U)
    if not {s, t} <= U or not U <= D.vertices:
        return False
    if not _reach_within(D, s, t, U):
        return False
    return all(not _reach_within(D, s, t, U - {v}) for v in U - {s, t})


def _checked(phi: CnfFormula, values: Assignment) -> Assignment:
    if not phi.evaluate(values):
        raise UnsatisfiedAssignment(f"extracted assignment {values} does not satisfy the formula")
    return values


def assignment_from_induced_hyperpath(inst: SatInducedInstance, P: Iterable[str]) -> Assignment:
    """x_i is true exactly when its positive literal vertex is on the path."""
    P = frozenset(P)
    if P in inst.seed_paths:
        raise SeedPath(f"{sorted_vertices(P)} is a variable gadget path")
    if not is_induced_hyperpath(inst.D, inst.s, inst.t, P):
        raise NotInducedPath(f"{sorted_vertices(P)} is not an induced s-t hyperpath")
    values = {i: int(x in P) for i, (x, _nx) in inst.var_map.items()}
    return _checked(inst.formula, values)


# --- minimal s-t separators -------------------------------------------------------


@dataclass(frozen=True)
class SatSeparatorInstance:
    D: DirectedHypergraph
    s: str
    t: str
    seed_separators: tuple[frozenset[str], ...]
    var_map: dict[int, tuple[str, str]]
    y_vertices: dict[int, str]
    c: str
    formula: CnfFormula
    clause_vertices: dict[int, str] = field(default_factory=dict)
    tree_vertices: tuple[str, ...] = ()
    padding_var: int | None = None
    bounded_tail: bool = False


def reduce_sat_separator(phi: CnfFormula, bounded_tail: bool = False) -> SatSeparatorInstance:
    """Clause ``j`` contributes an arc from its three literal vertices to ``c``;
    removing a literal vertex therefore marks that literal true.

    With ``bounded_tail`` every clause arc is split through a fresh ``c_j``
    and the final arc is replaced by a binary tree over ``c``, the ``c_j`` and
    the ``y_i``; the seed family gains every new singleton separator.
    """
    _check_formula(phi)
    source = phi
    if bounded_tail:
        phi = pad_to_power_of_two(phi, "clauses_plus_vars")
    n, m = phi.num_vars, phi.num_clauses
    s, t, c = S_NAME, T_NAME, "c"
    var_map = {i: (_pos(i), _neg(i)) for i in range(1, n + 1)}
    ys = {i: f"y_{i}" for i in range(1, n + 1)}

    arcs: list[tuple[set, set]] = []
    for i in range(1, n + 1):
        x, nx = var_map[i]
        arcs += [({x}, {ys[i]}), ({nx}, {ys[i]}), ({s}, {x}), ({s}, {nx})]
    clause_vertices: dict[int, str] = {}
    tree: list[str] = []
    if not bounded_tail:
        for clause in phi.clauses:
            arcs.append(({_lit(l) for l in clause}, {c}))
        arcs.append(({c, *ys.values()}, {t}))
    else:
        for j, (l1, l2, l3) in enumerate(phi.clauses, start=1):
            cj = clause_vertices[j] = f"c_{j}"
            arcs += [({_lit(l1), _lit(l2)}, {cj}), ({cj, _lit(l3)}, {c})]
        leaves = [c, *clause_vertices.values(), *ys.values()]
        tree_arcs, tree = _tree_arcs(leaves, t)
        arcs += tree_arcs

    vertices = {s, t, c, *ys.values(), *clause_vertices.values(), *tree}
    for x, nx in var_map.values():
        vertices |= {x, nx}
    D = build_hypergraph(vertices, arcs)

    seeds = [frozenset({c})]
    seeds += [frozenset({ys[i]}) for i in range(1, n + 1)]
    seeds += [frozenset(var_map[i]) for i in range(1, n + 1)]
    if bounded_tail:
        seeds += [frozenset({v}) for v in clause_vertices.values()]
        seeds += [frozenset({v}) for v in tree]
    if len(seeds) > len(D.vertices):
        raise AssertionError("seed family larger than the vertex set")
    return SatSeparatorInstance(
        D, s, t, tuple(seeds), var_map, ys, c, phi,
        clause_vertices=clause_vertices,
        tree_vertices=tuple(tree),
        padding_var=n if phi is not source else None,
        bounded_tail=bounded_tail,
    )


def is_minimal_separator(D: DirectedHypergraph, s: str, t: str, X: Iterable[str]) -> bool:
    X = frozenset(X)
    if s in X or t in X or not X <= D.vertices:
        return False
    rest = D.vertices - X
    if _reach_within(D, s, t, rest):
        return False
    return all(_reach_within(D, s, t, rest | {x}) for x in X)


def assignment_from_separator(inst: SatSeparatorInstance, X: Iterable[str]) -> Assignment:
    """x_i is true exactly when vertex ``x_i`` is in the separator."""
    X = frozenset(X)
    if X in inst.seed_separators:
        raise SeedSeparator(f"{sorted_vertices(X)} is a seed separator")
    if not is_minimal_separator(inst.D, inst.s, inst.t, X):
        raise NotSeparator(f"{sorted_vertices(X)} is not a minimal s-t separator")
    values = {i: int(x in X) for i, (x, _nx) in inst.var_map.items()}
    return _checked(inst.formula, values)


# --- minimal transversals -------------------------------------------------------


@dataclass(frozen=True)
class TransversalMapping:
    D_H: DirectedHypergraph
    s: str
    t: str
    vertex_arcs: dict[str, int]
    final_arc: int
    edge_vertices: tuple[str, ...]

    def vertex_of_arc(self) -> dict[int, str]:
        return {a: v for v, a in self.vertex_arcs.items()}


def reduce_transversal(H: UndirectedHypergraph) -> TransversalMapping:
    """One vertex ``e_j`` per hyperedge; arc ``({s}, {e_j : v in E_j})`` per
    source vertex ``v``, then the final arc ``({e_1..e_k}, {t})``."""
    if not H.edges:
        raise EmptyEdge("hypergraph has no edges; the final arc would have an empty tail")
    for i, e in enumerate(H.edges):
        if not e:
            raise EmptyEdge(f"edge {i} is empty", index=i)
    s, t = S_NAME, T_NAME
    edge_vertices = tuple(f"e_{j}" for j in range(1, len(H.edges) + 1))
    arcs = []
    vertex_arcs = {}
    for v in sorted_vertices(H.vertices):
        incident = {edge_vertices[j] for j in H.edges_containing(v)}
        if not incident:
            # Isolated vertices belong to no minimal transversal.
            continue
        vertex_arcs[v] = len(arcs)
        arcs.append(({s}, incident))
    final_arc = len(arcs)
    arcs.append((set(edge_vertices), {t}))
    D_H = build_hypergraph({s, t, *edge_vertices}, arcs)
    return TransversalMapping(D_H, s, t, vertex_arcs, final_arc, edge_vertices)


def hyperpath_from_transversal(mapping: TransversalMapping, vertices: Iterable[str]) -> frozenset[int]:
    arcs = {mapping.final_arc}
    for v in vertices:
        if v not in mapping.vertex_arcs:
            raise UnknownVertex(f"{v!r} is not a (non-isolated) vertex of the hypergraph")
        arcs.add(mapping.vertex_arcs[v])
    return frozenset(arcs)


def transversal_from_hyperpath(mapping: TransversalMapping, arcs: Iterable[int]) -> frozenset[str]:
    arcs = frozenset(arcs)
    if mapping.final_arc not in arcs:
        raise MissingFinalArc("arc set lacks the final arc into t")
    back = mapping.vertex_of_arc()
    foreign = arcs - back.keys() - {mapping.final_arc}
    if foreign:
        raise ForeignArc(f"arcs {sorted(foreign)} do not belong to this mapping")
    return frozenset(back[a] for a in arcs if a != mapping.final_arc)
