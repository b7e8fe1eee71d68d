"""Command-line front end.

Every subcommand is a thin adapter over a library call; output is plain text
and deterministic for fixed inputs.  Exit codes: 0 success, 1 a failed
validation or verification, 2 usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import lattice as lat
from .cartan import CartanError, catalog_diagram, parse_diagram
from .catalog import HEAP_KINDS, catalog_heap, h3_heap
from .heap import HeapError, dump_motif, load_motif, validate, window
from .realize import (
    E6_GENERATOR_ORDER,
    E6_PERMS,
    LINE_LABELS,
    RealizationError,
    ZETA_KINDS,
    e6_generator_perms,
    e6_orbit_table,
    emit_dot,
    format_cycles,
    hasse_graph,
    incidence_matrix,
    parse_cycles,
    perm_table,
    string_encode,
)
from .search import SearchBudgetError, search_full_heaps
from .weyl import WeylError, act, faithfulness_witness, parse_word, reduced_words, verify_relations

__all__ = ["main", "run", "build_parser"]

# Diagram tags accepted by --catalog that name a heap kind indirectly.
_TAG_TO_KIND = {"B": "B-spin"}


class UsageError(Exception):
    pass


def _resolve_heap(args):
    if args.motif:
        return None, load_motif(Path(args.motif).read_text())
    if not args.catalog:
        raise UsageError("give --catalog <tag> <rank> or --motif <file>")
    tag, rank = args.catalog
    kind = _TAG_TO_KIND.get(tag, tag)
    if kind not in HEAP_KINDS:
        raise UsageError(f"unknown catalog tag {tag!r}; expected one of {sorted(HEAP_KINDS) + ['B']}")
    try:
        l = int(rank)
    except ValueError:
        raise UsageError(f"rank must be an integer, got {rank!r}")
    return kind, catalog_heap(kind, l)


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# subcommands


def cmd_validate(args) -> int:
    _, h = _resolve_heap(args)
    rep = validate(h, args.level)
    _emit(args, rep.render() + "\n")
    return 0 if rep.ok else 1


def cmd_search(args) -> int:
    if not args.diagram:
        raise UsageError("search needs --diagram <tag> <rank> or --diagram-file <file>")
    if args.diagram_file:
        d = parse_diagram(Path(args.diagram_file).read_text())
    else:
        tag, rank = args.diagram
        d = catalog_diagram(tag, int(rank))
    heaps = search_full_heaps(d, budget=args.budget)
    chunks = [f"# {len(heaps)} isomorphism classes\n"]
    for k, h in enumerate(heaps):
        chunks.append(dump_motif(h, provenance=(f"class {k} of search_full_heaps",)))
    _emit(args, "".join(chunks))
    return 0


def cmd_ideals(args) -> int:
    _, h = _resolve_heap(args)
    lo, hi = args.window
    lines = []
    for t in range(lo, hi + 1):
        for F in lat.enumerate_height(h, t):
            lines.append(f"{t}\t{lat.format_ideal(h, F)}")
    _emit(args, "\n".join(lines) + "\n")
    return 0


def cmd_act(args) -> int:
    _, h = _resolve_heap(args)
    if args.ideal is None or args.word is None:
        raise UsageError("act needs --ideal and --word")
    F = lat.parse_ideal(h, args.ideal)
    G = act(h, parse_word(args.word), F)
    _emit(args, lat.format_ideal(h, G) + "\n")
    return 0


def cmd_perm_z(args) -> int:
    kind, h = _resolve_heap(args)
    if kind not in ZETA_KINDS:
        raise UsageError(f"perm-z supports {', '.join(ZETA_KINDS)}")
    zlo, zhi = args.range
    rows = perm_table(h, kind, args.generator, zlo, zhi)
    _emit(args, "".join(f"{z}\t{img}\n" for z, img in rows))
    return 0


def cmd_strings(args) -> int:
    kind, h = _resolve_heap(args)
    lines = []
    for F in lat.enumerate_height(h, 0):
        lines.append(f"{string_encode(h, kind, F)}\t{lat.format_ideal(h, F)}")
    _emit(args, "\n".join(lines) + "\n")
    return 0


def _render_perm(i: int, perm: dict) -> str:
    # keep the customary ordering of transpositions when the permutation matches
    if perm == parse_cycles(E6_PERMS[i]):
        return E6_PERMS[i]
    return format_cycles(perm)


def cmd_e6(args) -> int:
    h = catalog_heap("E6")
    if args.what == "table":
        table = e6_orbit_table(h)
        text = "".join(f"{x}\t{lat.format_ideal(h, table[x])}\n" for x in LINE_LABELS)
    elif args.what == "perms":
        perms = e6_generator_perms(h)
        text = "".join(f"s{i}\t{_render_perm(i, perms[i])}\n" for i in E6_GENERATOR_ORDER)
    else:
        M = incidence_matrix(h)
        rows = ["\t" + "\t".join(LINE_LABELS)]
        rows += [x + "\t" + "\t".join(map(str, r)) for x, r in zip(LINE_LABELS, M)]
        text = "\n".join(rows) + "\n"
    _emit(args, text)
    return 0


def cmd_hasse(args) -> int:
    if args.h3:
        fh = h3_heap()
    else:
        _, h = _resolve_heap(args)
        lo, hi = args.window
        fh = window(h, lo, hi)
    _emit(args, emit_dot(hasse_graph(fh)))
    return 0


def cmd_verify(args) -> int:
    _, h = _resolve_heap(args)
    lo, hi = args.window
    ideals = lat.ideals_in_window(h, lo, hi)
    if args.what == "relations":
        rep = verify_relations(h, ideals)
        _emit(args, rep.render() + "\n")
        return 0 if rep.ok else 1
    if args.what == "faithfulness":
        words = reduced_words(h.diagram, args.max_len)
        missing = [w for w in words if faithfulness_witness(h, w, ideals) is None]
        head = "PASS" if not missing else "FAIL"
        lines = [f"{head} faithfulness ({len(words)} reduced words)"]
        lines += [f"  no witness for {','.join(map(str, w))}" for w in missing]
        _emit(args, "\n".join(lines) + "\n")
        return 0 if not missing else 1
    # equivariance over all pairs of window ideals and all single generators
    from .weyl import equivariance_check

    bad = [
        (i, F, G) for i in range(h.n) for F in ideals[:20] for G in ideals[:20]
        if not equivariance_check(h, [i], F, G)
    ]
    head = "PASS" if not bad else "FAIL"
    _emit(args, f"{head} equivariance ({h.n * min(len(ideals), 20) ** 2} checks)\n")
    return 0 if not bad else 1


# ---------------------------------------------------------------------------
# parser


def _heap_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--catalog", nargs=2, metavar=("TAG", "RANK"), help="catalogue heap")
    p.add_argument("--motif", help="heap motif file")


def _window_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--window", nargs=2, type=int, default=[-2, 2], metavar=("LO", "HI"),
                   help="height window in periods (default -2 2)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="heapcox", description="Full heaps and affine Weyl group actions")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check heap axioms")
    _heap_flags(p)
    p.add_argument("--level", choices=["labelled", "fibred", "full"], default="full")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("search", help="enumerate full heaps over a diagram")
    p.add_argument("--diagram", nargs=2, metavar=("TAG", "RANK"))
    p.add_argument("--diagram-file")
    p.add_argument("--budget", type=int, default=64)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("ideals", help="list proper ideals by height")
    _heap_flags(p)
    _window_flag(p)
    p.set_defaults(func=cmd_ideals)

    p = sub.add_parser("act", help="apply a word to an ideal")
    _heap_flags(p)
    p.add_argument("--ideal")
    p.add_argument("--word")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("perm-z", help="affine permutation table of a generator")
    _heap_flags(p)
    p.add_argument("--generator", type=int, required=True)
    p.add_argument("--range", nargs=2, type=int, default=[-10, 10], metavar=("ZLO", "ZHI"))
    p.set_defaults(func=cmd_perm_z)

    p = sub.add_parser("strings", help="sign strings of height-zero ideals")
    _heap_flags(p)
    p.set_defaults(func=cmd_strings)

    p = sub.add_parser("e6", help="the 27-line tables")
    p.add_argument("what", choices=["table", "perms", "incidence"])
    p.set_defaults(func=cmd_e6)

    p = sub.add_parser("hasse", help="edge-labelled lattice of ideals as DOT")
    _heap_flags(p)
    _window_flag(p)
    p.add_argument("--h3", action="store_true", help="use the H3 finite heap")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("verify", help="relation, equivariance and faithfulness campaigns")
    p.add_argument("what", choices=["relations", "equivariance", "faithfulness"])
    _heap_flags(p)
    _window_flag(p)
    p.add_argument("--max-len", type=int, default=3)
    p.set_defaults(func=cmd_verify)

    for name, sp in sub.choices.items():
        sp.add_argument("--out", help="write output to a file instead of stdout")
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 2
    if getattr(args, "diagram", None) is None and args.command == "search" and args.diagram_file:
        args.diagram = True
    try:
        return args.func(args)
    except UsageError as e:
        parser.print_usage(sys.stderr)
        print(f"heapcox: error: {e}", file=sys.stderr)
        return 2
    except (CartanError, HeapError, lat.LatticeError, WeylError, RealizationError,
            SearchBudgetError, OSError) as e:
        print(f"heapcox: error: {e}", file=sys.stderr)
        return 2


def main(argv: list[str] | None = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":  # pragma: no cover
    main()
