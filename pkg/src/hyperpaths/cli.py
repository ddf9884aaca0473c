"""Command-line interface.

Exit status: 0 on success (an instance without solutions is still a
success), 1 on domain errors such as an exceeded oracle cap or a
non-B-hypergraph passed to ``enumerate``, 2 on usage or input-format errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formats
from .connectivity import HyperpathInstance, b_connected_set, check_hyperpath
from .enumerator import EnumerationStats, iter_with_delay
from .errors import CapExceeded, HypergraphError, NotBHypergraph
from .families import FAMILIES
from .hypergraph import sorted_vertices
from .oracles import (
    DEFAULT_CAP,
    canonical,
    oracle_hyperpaths,
    oracle_induced_hyperpaths,
    oracle_minimal_separators,
    oracle_minimal_transversals,
)
from .reductions import (
    SatInducedInstance,
    SatSeparatorInstance,
    TransversalMapping,
    reduce_sat_induced,
    reduce_sat_separator,
    reduce_transversal,
    transversal_from_hyperpath,
)


class InputError(Exception):
    """Unreadable or malformed input; exit status 2."""


class DomainError(Exception):
    """Well-formed input the requested operation cannot handle; exit status 1."""


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _load(path: str, parser):
    try:
        return parser(_read(path))
    except HypergraphError as exc:
        raise InputError(f"{path}: {exc}") from None


def _names(arg: str | None) -> frozenset[str]:
    if not arg:
        return frozenset()
    return frozenset(v for v in arg.split(",") if v)


def _instance(D, sources: str, targets: str | None) -> HyperpathInstance:
    try:
        return HyperpathInstance(D, _names(sources), _names(targets))
    except (HypergraphError, ValueError) as exc:
        raise DomainError(str(exc)) from None


def _emit(out, family, fmt) -> None:
    for item in family:
        out.write(fmt(item) + "\n")


def _ids(ids) -> str:
    return " ".join(map(str, sorted(ids)))


def _verts(vs) -> str:
    return " ".join(sorted_vertices(vs))


# --- subcommands -----------------------------------------------------------------


def cmd_enumerate(args, out) -> int:
    D = _load(args.file, formats.parse_dhg)
    inst = _instance(D, args.source, args.target)
    stats = EnumerationStats()
    if args.limit is not None and args.limit <= 0:
        gen = iter(())
    else:
        try:
            gen = iter_with_delay(inst, stats)
            first = next(gen, None)
        except NotBHypergraph as exc:
            raise DomainError(str(exc)) from None
        gen = _chain_first(first, gen)
    emitted = 0
    for solution, _spent, _depth in gen:
        out.write(_ids(solution) + "\n")
        out.flush()
        emitted += 1
        if args.limit is not None and emitted >= args.limit:
            break
    if hasattr(gen, "close"):
        gen.close()
    if args.stats:
        for key, value in stats.as_dict().items():
            sys.stderr.write(f"{key}={value}\n")
    return 0


def _chain_first(first, gen):
    if first is None:
        return
    try:
        yield first
        yield from gen
    finally:
        gen.close()


def cmd_connect(args, out) -> int:
    D = _load(args.file, formats.parse_dhg)
    try:
        reached = b_connected_set(D, _names(args.source))
    except HypergraphError as exc:
        raise DomainError(str(exc)) from None
    out.write(_verts(reached) + "\n")
    return 0


def cmd_check(args, out) -> int:
    D = _load(args.file, formats.parse_dhg)
    inst = _instance(D, args.source, args.target)
    try:
        ids = [int(x) for x in args.arcs.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"--arcs expects comma-separated integers, got {args.arcs!r}") from None
    bad = [i for i in ids if not 0 <= i < D.m]
    if bad:
        raise DomainError(f"unknown arc ids {bad}")
    result = check_hyperpath(inst, ids)
    out.write(("hyperpath" if result.ok else "not a hyperpath") + "\n")
    for name in result.failures:
        out.write(f"failed: {name}\n")
    if result.ordering is not None:
        out.write(f"ordering: {' '.join(map(str, result.ordering))}\n")
    return 0


def cmd_oracle(args, out) -> int:
    try:
        if args.kind == "transversals":
            H = _load(args.file, formats.parse_hg)
            _emit(out, oracle_minimal_transversals(H, cap=args.cap, method=args.method), _verts)
            return 0
        D = _load(args.file, formats.parse_dhg)
        if args.kind == "hyperpaths":
            inst = _instance(D, args.source, args.target)
            _emit(out, oracle_hyperpaths(inst, cap=args.cap, method=args.method), _ids)
            return 0
        s, t = _single(args.source, "--source"), _single(args.target, "--target")
        fn = oracle_induced_hyperpaths if args.kind == "induced" else oracle_minimal_separators
        _emit(out, fn(D, s, t, cap=args.cap, method=args.method), _verts)
    except CapExceeded as exc:
        raise DomainError(str(exc)) from None
    except HypergraphError as exc:
        raise DomainError(str(exc)) from None
    return 0


def _single(arg: str | None, flag: str) -> str:
    names = _names(arg)
    if len(names) != 1:
        raise InputError(f"{flag} needs exactly one vertex for this oracle")
    return next(iter(names))


def instance_meta(inst) -> list[tuple[str, object]]:
    """Sidecar entries describing a reduction instance."""
    if isinstance(inst, TransversalMapping):
        items = [("kind", "transversal"), ("source", inst.s), ("target", inst.t)]
        items += [("edge_vertex", f"{j} {v}") for j, v in enumerate(inst.edge_vertices, start=1)]
        items += [("vertex_arc", f"{v} {a}") for v, a in inst.vertex_arcs.items()]
        items.append(("final_arc", inst.final_arc))
        return items
    kind = "sat-induced" if isinstance(inst, SatInducedInstance) else "sat-separator"
    phi = inst.formula
    items = [
        ("kind", kind),
        ("bounded_tail", str(inst.bounded_tail).lower()),
        ("source", inst.s),
        ("target", inst.t),
        ("variables", phi.num_vars),
        ("clauses", phi.num_clauses),
    ]
    if inst.padding_var is not None:
        items.append(("padding_var", inst.padding_var))
    items += [("var", f"{i} {x} {nx}") for i, (x, nx) in inst.var_map.items()]
    if isinstance(inst, SatInducedInstance):
        items += [("clause", f"{j} {c}") for j, c in inst.clause_map.items()]
        items += [("tree_vertex", v) for v in inst.tree_vertices]
        items += [("seed_path", _verts(p)) for p in inst.seed_paths]
    else:
        assert isinstance(inst, SatSeparatorInstance)
        items += [("y", f"{i} {y}") for i, y in inst.y_vertices.items()]
        items.append(("c", inst.c))
        items += [("clause", f"{j} {c}") for j, c in inst.clause_vertices.items()]
        items += [("tree_vertex", v) for v in inst.tree_vertices]
        items += [("seed_separator", _verts(x)) for x in inst.seed_separators]
    return items


def cmd_reduce(args, out) -> int:
    try:
        if args.kind == "transversal":
            inst = reduce_transversal(_load(args.input, formats.parse_hg))
            D = inst.D_H
        else:
            phi = _load(args.input, formats.parse_cnf)
            build = reduce_sat_induced if args.kind == "sat-induced" else reduce_sat_separator
            inst = build(phi, bounded_tail=args.bounded_tail)
            D = inst.D
    except HypergraphError as exc:
        raise DomainError(str(exc)) from None
    text = formats.serialize_dhg(D)
    meta = formats.format_meta(instance_meta(inst))
    if args.output == "-":
        out.write(text)
    else:
        Path(args.output).write_text(text, encoding="utf-8")
        Path(args.output + ".meta").write_text(meta, encoding="utf-8")
    return 0


def cmd_transversals(args, out) -> int:
    H = _load(args.file, formats.parse_hg)
    try:
        mapping = reduce_transversal(H)
        inst = HyperpathInstance(mapping.D_H, frozenset({mapping.s}), frozenset({mapping.t}))
        paths = oracle_hyperpaths(inst, cap=args.cap)
    except (CapExceeded, HypergraphError) as exc:
        raise DomainError(str(exc)) from None
    _emit(out, canonical(transversal_from_hyperpath(mapping, p) for p in paths), _verts)
    return 0


def cmd_bench(args, out) -> int:
    if args.size < 1:
        raise InputError("--size must be positive")
    inst = FAMILIES[args.family](args.size, args.seed)
    stats = EnumerationStats()
    out.write("solution_index,checks_since_last,depth\n")
    gen = iter_with_delay(inst, stats)
    try:
        for index, (_solution, spent, depth) in enumerate(gen):
            if args.limit is not None and index >= args.limit:
                break
            out.write(f"{index},{spent},{depth}\n")
    finally:
        gen.close()
    if args.stats:
        m = inst.D.m
        sys.stderr.write(f"m={m}\nsize={inst.D.size()}\n")
        for key, value in stats.as_dict().items():
            sys.stderr.write(f"{key}={value}\n")
    return 0


# --- argument parsing ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="hyperpaths", description="S-T hyperpath enumeration in directed hypergraphs.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", help="stream all S-T hyperpaths of a B-hypergraph")
    e.add_argument("--source", required=True, help="comma-separated source vertices")
    e.add_argument("--target", required=True, help="comma-separated target vertices")
    e.add_argument("--limit", type=int, help="stop after N solutions")
    e.add_argument("--stats", action="store_true", help="write run statistics to stderr")
    e.add_argument("file")
    e.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("connect", help="print the B-connected set of the sources")
    c.add_argument("--source", required=True)
    c.add_argument("file")
    c.set_defaults(func=cmd_connect)

    k = sub.add_parser("check", help="test whether an arc set is an S-T hyperpath")
    k.add_argument("--source", required=True)
    k.add_argument("--target", required=True)
    k.add_argument("--arcs", required=True, help="comma-separated arc ids")
    k.add_argument("file")
    k.set_defaults(func=cmd_check)

    o = sub.add_parser("oracle", help="brute-force reference enumeration")
    o.add_argument("kind", choices=["hyperpaths", "induced", "separators", "transversals"])
    o.add_argument("--source")
    o.add_argument("--target")
    o.add_argument("--cap", type=int, default=DEFAULT_CAP)
    o.add_argument("--method", choices=["scan", "search"], default="scan")
    o.add_argument("file")
    o.set_defaults(func=cmd_oracle)

    r = sub.add_parser("reduce", help="build a reduction instance (.dhg plus .meta sidecar)")
    r.add_argument("kind", choices=["sat-induced", "sat-separator", "transversal"])
    r.add_argument("--bounded-tail", action="store_true")
    r.add_argument("input")
    r.add_argument("output")
    r.set_defaults(func=cmd_reduce)

    t = sub.add_parser("transversals", help="minimal transversals via the s-t hyperpath bijection")
    t.add_argument("--cap", type=int, default=DEFAULT_CAP)
    t.add_argument("file")
    t.set_defaults(func=cmd_transversals)

    b = sub.add_parser("bench", help="delay instrumentation on a generated family, as CSV")
    b.add_argument("--family", required=True, choices=sorted(FAMILIES))
    b.add_argument("--size", required=True, type=int)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--limit", type=int)
    b.add_argument("--stats", action="store_true")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "oracle" and args.kind != "transversals" and not (args.source and args.target):
        parser.error("oracle hyperpaths/induced/separators need --source and --target")
    try:
        return args.func(args, out)
    except InputError as exc:
        sys.stderr.write(f"hyperpaths: {exc}\n")
        return 2
    except DomainError as exc:
        sys.stderr.write(f"hyperpaths: {exc}\n")
        return 1
    except BrokenPipeError:
        return 0


if __name__ == "__main__":
    sys.exit(main())
