import random

import pytest

from conftest import random_instances
from hyperpaths.errors import DisjointnessViolation, EmptySide, HeaderMismatch, NotThreeCnf, ParseError
from hyperpaths.formats import (
    format_meta,
    parse_cnf,
    parse_dhg,
    parse_hg,
    parse_meta,
    serialize_cnf,
    serialize_dhg,
    serialize_hg,
)
from hyperpaths.oracles import UndirectedHypergraph
from hyperpaths.reductions import CnfFormula, reduce_sat_induced, reduce_sat_separator, reduce_transversal


def test_parse_dhg_examples():
    D = parse_dhg("s -> a\na b -> t\ns -> b\n")
    assert D.m == 3 and D.vertices == {"s", "a", "b", "t"}
    assert D.arcs[1].tails == {"a", "b"}
    assert parse_dhg("vertices: s t u\ns -> t\n").vertices == {"s", "t", "u"}
    with pytest.raises(EmptySide) as err:
        parse_dhg("s ->\n")
    assert err.value.line == 1


def test_parse_dhg_comments_and_errors():
    D = parse_dhg("# header\n\ns -> a  # first\n")
    assert D.m == 1
    with pytest.raises(ParseError) as err:
        parse_dhg("s -> a\ns a t\n")
    assert (err.value.line, err.value.column) == (2, 6)
    with pytest.raises(ParseError):
        parse_dhg("s -> a -> b\n")
    with pytest.raises(ParseError):
        parse_dhg("s -> a\nvertices: s a\n")
    with pytest.raises(DisjointnessViolation) as err:
        parse_dhg("s -> a\n\na -> a\n")
    assert err.value.line == 3
    assert "line 3" in str(err.value)


def test_dhg_round_trip_random():
    for inst in random_instances(100, seed=7):
        assert parse_dhg(serialize_dhg(inst.D)) == inst.D


def test_dhg_round_trip_reductions():
    rng = random.Random(1)
    for _ in range(20):
        n, m = rng.randint(1, 4), rng.randint(1, 4)
        phi = CnfFormula(n, tuple(tuple(rng.choice([1, -1]) * rng.randint(1, n) for _ in range(3)) for _ in range(m)))
        for bounded in (False, True):
            for D in (reduce_sat_induced(phi, bounded).D, reduce_sat_separator(phi, bounded).D):
                assert parse_dhg(serialize_dhg(D)) == D
    D_H = reduce_transversal(UndirectedHypergraph.from_edges([{"1", "2"}, {"2", "3"}])).D_H
    assert parse_dhg(serialize_dhg(D_H)) == D_H


def test_cnf_examples():
    phi = parse_cnf("p cnf 1 1\n1 1 1 0\n")
    assert phi == CnfFormula(1, ((1, 1, 1),))
    with pytest.raises(NotThreeCnf):
        parse_cnf("p cnf 2 1\n1 -2 0\n")
    with pytest.raises(HeaderMismatch):
        parse_cnf("p cnf 1 2\n1 1 1 0\n")
    with pytest.raises(HeaderMismatch):
        parse_cnf("p cnf 1 1\n2 1 1 0\n")
    with pytest.raises(ParseError):
        parse_cnf("1 1 1 0\n")


def test_cnf_multiline_and_round_trip():
    phi = parse_cnf("c hello\np cnf 3 2\n1 -2\n 3 0 -1 -1 -3 0\n%\n0\n")
    assert phi.clauses == ((1, -2, 3), (-1, -1, -3))
    assert parse_cnf(serialize_cnf(phi)) == phi


def test_hg_examples():
    H = parse_hg("1 2\n2 3\n")
    assert len(H.edges) == 2 and H.vertices == {"1", "2", "3"}
    assert parse_hg("").edges == ()
    assert parse_hg("1 2\n\n3\n").edges == (frozenset({"1", "2"}), frozenset({"3"}))
    assert parse_hg(serialize_hg(H)) == H


def test_meta_round_trip():
    items = [("kind", "sat-separator"), ("seed_separator", "y_1"), ("seed_separator", "x_1 ~x_1")]
    text = format_meta(items)
    assert parse_meta(text) == items
    with pytest.raises(ParseError):
        parse_meta("no separator here\n")
