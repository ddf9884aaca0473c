import random

import pytest

from hyperpaths.connectivity import HyperpathInstance
from hyperpaths.families import random_b_hypergraph
from hyperpaths.hypergraph import build_hypergraph

AND_ARCS = [({"s"}, {"a"}), ({"s"}, {"b"}), ({"a", "b"}, {"t"})]


def and_gadget(extra=()):
    return build_hypergraph({"s", "a", "b", "t"}, AND_ARCS + list(extra))


def st(D, s="s", t="t"):
    return HyperpathInstance(D, frozenset({s}), frozenset({t}))


@pytest.fixture
def gadget():
    return and_gadget()


@pytest.fixture
def gadget4():
    # AND-gadget plus the shortcut a -> t as arc 3
    return and_gadget([({"a"}, {"t"})])


def random_instances(count, seed, max_vertices=7, max_arcs=8, max_terminals=2):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(2, max_vertices)
        out.append(random_b_hypergraph(
            rng, n, rng.randint(0, max_arcs),
            max_tail=3,
            n_sources=rng.randint(1, max_terminals),
            n_targets=rng.randint(1, max_terminals),
        ))
    return out


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
