"""Acceptance suite: one PASS/FAIL line per criterion.

Run with ``pytest tests/test_acceptance.py`` (the lines appear in the
terminal summary) or directly with ``python3 tests/test_acceptance.py``.
"""

import io
import itertools
import random
import subprocess
import sys
import time
from contextlib import redirect_stderr

import pytest

from hyperpaths.cli import main
from hyperpaths.connectivity import HyperpathInstance
from hyperpaths.enumerator import EnumerationStats, iter_hyperpaths, iter_with_delay
from hyperpaths.errors import UnsatisfiedAssignment
from hyperpaths.families import diamond_chain, random_b_hypergraph
from hyperpaths.formats import serialize_hg
from hyperpaths.hypergraph import build_hypergraph
from hyperpaths.oracles import (
    UndirectedHypergraph,
    oracle_hyperpaths,
    oracle_induced_hyperpaths,
    oracle_minimal_separators,
    oracle_minimal_transversals,
)
from hyperpaths.reductions import (
    CnfFormula,
    assignment_from_induced_hyperpath,
    assignment_from_separator,
    hyperpath_from_transversal,
    is_satisfiable,
    reduce_sat_induced,
    reduce_sat_separator,
    reduce_transversal,
    transversal_from_hyperpath,
)

RESULTS: list[str] = []


def report(name: str, ok: bool, detail: str) -> None:
    line = f"{'PASS' if ok else 'FAIL'} {name}: {detail}"
    RESULTS.append(line)
    print(line)
    assert ok, line


# --- populations ------------------------------------------------------------------


def grid_instances():
    """Every multiset of at most 4 B-arcs over 4 vertices, for four terminal choices."""
    V = ["v_1", "v_2", "v_3", "v_4"]
    kinds = []
    for h in V:
        others = [v for v in V if v != h]
        for r in range(1, 4):
            kinds += [(frozenset(t), frozenset({h})) for t in itertools.combinations(others, r)]
    terminals = [({"v_1"}, {"v_4"}), ({"v_1", "v_2"}, {"v_4"}), ({"v_1"}, {"v_3", "v_4"}), ({"v_1", "v_2"}, {"v_2", "v_3"})]
    for k in range(5):
        for combo in itertools.combinations_with_replacement(range(len(kinds)), k):
            D = build_hypergraph(V, [kinds[i] for i in combo])
            for S, T in terminals:
                yield HyperpathInstance(D, frozenset(S), frozenset(T))


def random_instances(count=300, seed=2024):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(2, 7)
        yield random_b_hypergraph(
            rng, n, rng.randint(0, 8), max_tail=3,
            n_sources=rng.randint(1, 2), n_targets=rng.randint(1, 2),
        )


def _random_formula(rng):
    n, m = rng.randint(1, 4), rng.randint(1, 4)
    clauses = tuple(tuple(rng.choice([1, -1]) * rng.randint(1, n) for _ in range(3)) for _ in range(m))
    return CnfFormula(n, clauses)


HAND_PICKED = [
    CnfFormula(1, ((1, 1, 1),)),
    CnfFormula(1, ((1, 1, 1), (-1, -1, -1))),
    CnfFormula(2, ((1, 1, 2), (1, 1, -2), (-1, -1, 2), (-1, -1, -2))),
    CnfFormula(2, ((1, 2, 2), (-1, 2, 2), (-2, -2, 1), (-2, -2, -1))),
    CnfFormula(3, ((1, 2, 3), (-1, -2, -3), (1, -2, 3), (-1, 2, -3))),
    CnfFormula(4, ((1, 2, -4), (-1, 3, 4), (2, -3, 4), (-2, -3, -4))),
    CnfFormula(4, ((1, 1, 1), (2, 2, 2), (3, 3, 3), (4, 4, 4))),
    CnfFormula(2, ((1, 1, 1), (-1, 2, 2), (-2, -2, -2))),
    CnfFormula(2, ((2, 2, 2), (-2, -2, -2))),
    CnfFormula(3, ((3, 3, 3), (1, 2, -1), (-3, -3, -3))),
    CnfFormula(4, ((1, 1, 4), (1, 1, -4), (-1, -1, 2), (-2, -2, -1))),
    CnfFormula(3, ((1, 1, 1), (-1, 2, 2), (-2, 3, 3), (-3, -3, -3))),
    CnfFormula(4, ((4, 4, 4), (-4, -4, -4), (1, 2, 3), (-1, -2, -3))),
]


def formulas():
    rng = random.Random(7)
    return HAND_PICKED + [_random_formula(rng) for _ in range(300)]


def hypergraphs():
    """Exhaustive over edge multisets on 3 vertices (up to 3 edges), plus a
    sampled grid on 5 vertices with up to 5 edges."""
    names = ["1", "2", "3"]
    subsets = [frozenset(c) for r in (1, 2, 3) for c in itertools.combinations(names, r)]
    out = []
    for k in (1, 2, 3):
        for combo in itertools.combinations_with_replacement(subsets, k):
            out.append(UndirectedHypergraph.from_edges(combo))
    rng = random.Random(11)
    five = [str(i) for i in range(1, 6)]
    for nv in range(1, 6):
        for ne in range(1, 6):
            for _ in range(18):
                pool = five[:nv]
                edges = [rng.sample(pool, rng.randint(1, nv)) for _ in range(ne)]
                out.append(UndirectedHypergraph.from_edges(edges))
    return out


# --- criteria ---------------------------------------------------------------------


def test_c1_oracle_equivalence():
    start = time.perf_counter()
    checked = mismatches = dups = 0
    for inst in itertools.chain(grid_instances(), random_instances()):
        got = [frozenset(p) for p in iter_hyperpaths(inst)]
        if len(got) != len(set(got)):
            dups += 1
        if set(got) != set(oracle_hyperpaths(inst)):
            mismatches += 1
        checked += 1
    elapsed = time.perf_counter() - start
    ok = mismatches == 0 and dups == 0 and elapsed < 60
    report(
        "criterion 1 (enumerator = oracle)", ok,
        f"{checked} instances, {mismatches} mismatches, {dups} with duplicates, {elapsed:.1f}s (limit 60s)",
    )


def test_c2_delay_bound():
    worst = []
    ok = True
    for k in range(10, 19):
        inst = diamond_chain(k)
        m = inst.D.m
        stats = EnumerationStats()
        start = time.perf_counter()
        gen = iter_with_delay(inst, stats)
        peak = 0
        for index, (_sol, spent, _depth) in enumerate(gen):
            peak = max(peak, spent)
            if index + 1 >= 2000:
                break
        gen.close()
        elapsed = time.perf_counter() - start
        ratio = peak / (m * m)
        worst.append(f"k={k}: {peak}/{m * m}={ratio:.2f}m^2 depth {stats.max_depth}/{m} {elapsed:.1f}s")
        ok &= peak <= 4 * m * m and stats.max_depth <= m and elapsed < 30
    report("criterion 2 (delay <= 4 m^2, depth <= m)", ok, "; ".join(worst))


def test_c3_transversal_bijection():
    start = time.perf_counter()
    population = hypergraphs()
    bad = 0
    for H in population:
        tr = oracle_minimal_transversals(H)
        mapping = reduce_transversal(H)
        paths = set(oracle_hyperpaths(HyperpathInstance(mapping.D_H, frozenset({"s"}), frozenset({"t"}))))
        images = {hyperpath_from_transversal(mapping, T) for T in tr}
        round_trip = all(transversal_from_hyperpath(mapping, hyperpath_from_transversal(mapping, T)) == T for T in tr)
        if len(tr) != len(paths) or images != paths or not round_trip:
            bad += 1
    elapsed = time.perf_counter() - start
    ok = bad == 0 and len(population) >= 500 and elapsed < 120
    report("criterion 3 (transversal bijection)", ok, f"{len(population)} hypergraphs, {bad} failures, {elapsed:.1f}s (limit 120s)")


def _sat_equivalence(build, oracle, seeds_of, extract, bounded):
    start = time.perf_counter()
    population = formulas()
    wrong_iff = []
    bad_extract = 0
    sat_count = 0
    for phi in population:
        inst = build(phi, bounded_tail=bounded)
        found = set(oracle(inst.D, inst.s, inst.t, cap=None, method="search"))
        extras = found - set(seeds_of(inst))
        sat = is_satisfiable(phi)
        sat_count += sat
        if bool(extras) != sat:
            wrong_iff.append(phi)
        for sol in extras:
            try:
                values = extract(inst, sol)
            except UnsatisfiedAssignment:
                bad_extract += 1
                continue
            if not phi.evaluate(values):
                bad_extract += 1
    elapsed = time.perf_counter() - start
    detail = (
        f"{len(population)} formulas ({sat_count} satisfiable), {len(wrong_iff)} iff violations, "
        f"{bad_extract} extracted assignments failing, {elapsed:.1f}s (limit 180s)"
    )
    if wrong_iff:
        phi = wrong_iff[0]
        detail += f"; first violation: n={phi.num_vars} clauses={list(phi.clauses)}"
    return not wrong_iff and not bad_extract and elapsed < 180, detail


@pytest.mark.parametrize("bounded", [False, True], ids=["base", "bounded_tail"])
def test_c4_induced_iff(bounded):
    ok, detail = _sat_equivalence(
        reduce_sat_induced, oracle_induced_hyperpaths, lambda i: i.seed_paths,
        assignment_from_induced_hyperpath, bounded,
    )
    report(f"criterion 4 (induced-path iff, {'bounded_tail' if bounded else 'base'})", ok, detail)


@pytest.mark.parametrize("bounded", [False, True], ids=["base", "bounded_tail"])
def test_c5_separator_iff(bounded):
    ok, detail = _sat_equivalence(
        reduce_sat_separator, oracle_minimal_separators, lambda i: i.seed_separators,
        assignment_from_separator, bounded,
    )
    report(f"criterion 5 (separator iff, {'bounded_tail' if bounded else 'base'})", ok, detail)


def test_c6_size_formulas():
    problems = []
    count = 0
    for phi in formulas():
        n, m = phi.num_vars, phi.num_clauses
        ind = reduce_sat_induced(phi)
        sep = reduce_sat_separator(phi)
        count += 2
        if (len(ind.D.vertices), ind.D.m) != (2 * n + m + 2, 3 * n + 3 * m + 1):
            problems.append(f"induced {phi}")
        if (len(sep.D.vertices), sep.D.m, len(sep.seed_separators)) != (3 * n + 3, 4 * n + m + 1, 2 * n + 1):
            problems.append(f"separator {phi}")
        for inst in (reduce_sat_induced(phi, bounded_tail=True), reduce_sat_separator(phi, bounded_tail=True)):
            count += 1
            if max(len(a.tails) for a in inst.D.arcs) > 2:
                problems.append(f"bounded tails {phi}")
    for H in hypergraphs():
        mapping = reduce_transversal(H)
        count += 1
        if (len(mapping.D_H.vertices), mapping.D_H.m) != (len(H.edges) + 2, len(H.vertices) + 1):
            problems.append(f"transversal {H}")
    report("criterion 6 (size formulas)", not problems, f"{count} instances, {len(problems)} violations")


def _cli(argv):
    out = io.StringIO()
    with redirect_stderr(io.StringIO()):
        code = main(argv, out=out)
    return code, out.getvalue()


def test_c7_transversal_pipeline(tmp_path):
    f = tmp_path / "h.hg"
    f.write_text("1 2\n2 3\n")
    code, out = _cli(["transversals", str(f)])
    exact = code == 0 and out == "2\n1 3\n"
    rng = random.Random(5)
    mismatches = 0
    trials = 60
    for i in range(trials):
        nv = rng.randint(1, 6)
        pool = [f"u_{j}" for j in range(1, nv + 1)]
        H = UndirectedHypergraph.from_edges(rng.sample(pool, rng.randint(1, nv)) for _ in range(rng.randint(1, 5)))
        f = tmp_path / f"r{i}.hg"
        f.write_text(serialize_hg(H))
        code, out = _cli(["transversals", str(f)])
        expected = "".join(" ".join(sorted(T, key=lambda v: int(v[2:]))) + "\n" for T in oracle_minimal_transversals(H))
        mismatches += code != 0 or out != expected
    report(
        "criterion 7 (transversals pipeline)", exact and not mismatches,
        f"H={{{{1,2}},{{2,3}}}} output {'exact' if exact else 'WRONG'}; {trials} random H, {mismatches} mismatches",
    )


def test_c8_determinism(tmp_path):
    (tmp_path / "g.dhg").write_text("s -> a\na b -> t\ns -> b\na -> t\nb -> t\ns a -> b\n")
    (tmp_path / "h.hg").write_text("1 2\n2 3\n3 4 1\n")
    (tmp_path / "f.cnf").write_text("p cnf 3 3\n1 -2 3 0\n-1 2 2 0\n3 -3 1 0\n")
    g, h, c = (str(tmp_path / x) for x in ("g.dhg", "h.hg", "f.cnf"))
    st = ["--source", "s", "--target", "t"]
    invocations = [
        ["enumerate", *st, g],
        ["enumerate", *st, "--limit", "2", g],
        ["connect", "--source", "s", g],
        ["check", *st, "--arcs", "0,1,2", g],
        ["oracle", "hyperpaths", *st, g],
        ["oracle", "induced", *st, g],
        ["oracle", "separators", *st, g],
        ["oracle", "transversals", h],
        ["transversals", h],
        ["reduce", "sat-separator", "--bounded-tail", c, "-"],
        ["reduce", "sat-induced", c, "-"],
        ["reduce", "transversal", h, "-"],
        ["bench", "--family", "random", "--size", "6", "--seed", "3"],
        ["bench", "--family", "layered", "--size", "3"],
        ["bench", "--family", "diamond", "--size", "4"],
    ]
    differing = []
    for argv in invocations:
        outs = [
            subprocess.run([sys.executable, "-m", "hyperpaths", *argv], capture_output=True, check=False).stdout
            for _ in range(2)
        ]
        if outs[0] != outs[1] or not outs[0]:
            differing.append(argv[0])
    report("criterion 8 (byte-identical output)", not differing, f"{len(invocations)} invocations, differing: {differing or 'none'}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
