"""Parametric B-hypergraph families used by ``bench`` and the test suite."""

from __future__ import annotations

import random

from .connectivity import HyperpathInstance
from .hypergraph import build_hypergraph


def diamond_chain(k: int) -> HyperpathInstance:
    """``k`` diamonds in series between ``v_0`` and ``v_k``: 4k arcs, 2**k hyperpaths."""
    vertices = {"v_0"}
    arcs = []
    for i in range(1, k + 1):
        prev, cur, a, b = f"v_{i - 1}", f"v_{i}", f"a_{i}", f"b_{i}"
        vertices |= {cur, a, b}
        arcs += [({prev}, {a}), ({prev}, {b}), ({a}, {cur}), ({b}, {cur})]
    return HyperpathInstance(build_hypergraph(vertices, arcs), frozenset({"v_0"}), frozenset({f"v_{k}"}))


def layered(k: int, width: int = 2) -> HyperpathInstance:
    """``k`` layers of ``width`` vertices between ``s`` and ``t``.

    Every vertex of a layer gets one single-tail arc from each vertex of the
    previous layer and one arc whose tail is that whole layer.
    """
    prev = ["s"]
    vertices = {"s", "t"}
    arcs = []
    for i in range(1, k + 2):
        layer = ["t"] if i == k + 1 else [f"u_{i}_{j}" for j in range(1, width + 1)]
        vertices |= set(layer)
        for v in layer:
            arcs += [({p}, {v}) for p in prev]
            if len(prev) > 1:
                arcs.append((set(prev), {v}))
        prev = layer
    return HyperpathInstance(build_hypergraph(vertices, arcs), frozenset({"s"}), frozenset({"t"}))


def random_b_hypergraph(
    rng: random.Random,
    n_vertices: int,
    n_arcs: int,
    max_tail: int = 3,
    n_sources: int = 1,
    n_targets: int = 1,
) -> HyperpathInstance:
    """Random B-hypergraph on ``v_1..v_n``; sources and targets drawn at random."""
    names = [f"v_{i}" for i in range(1, n_vertices + 1)]
    arcs = []
    for _ in range(n_arcs):
        head = rng.choice(names)
        others = [v for v in names if v != head]
        size = rng.randint(1, min(max_tail, len(others)))
        arcs.append((set(rng.sample(others, size)), {head}))
    sources = set(rng.sample(names, min(n_sources, n_vertices)))
    targets = set(rng.sample(names, min(n_targets, n_vertices)))
    return HyperpathInstance(build_hypergraph(names, arcs), frozenset(sources), frozenset(targets))


def random_family(size: int, seed: int | None = None) -> HyperpathInstance:
    """Bench-sized random instance: ``size`` vertices, ``3 * size`` arcs, tails up to 2."""
    rng = random.Random(seed)
    return random_b_hypergraph(rng, max(size, 2), 3 * max(size, 2), max_tail=2)


FAMILIES = {
    "diamond": lambda size, seed=None: diamond_chain(size),
    "layered": lambda size, seed=None: layered(size),
    "random": random_family,
}
