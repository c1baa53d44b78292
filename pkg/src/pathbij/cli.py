"""Command-line interface.

One verb per capability: enumerate, count, map, unmap, verify, perms, oeis,
render.  All output is line-oriented UTF-8; path strings use the U/F/D
grammar.  Exit codes: 0 success or verified, 1 verification mismatch or an
inverse-stage domain failure, 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import pathlib
import sys
from typing import Sequence

from .bijection import (
    InverseDomainError,
    phi,
    phi_inverse,
    trace_stages,
)
from .families import (
    Census,
    count_class_a,
    count_class_a_series,
    count_class_b,
    count_class_b_series,
    enumerate_class_a,
    enumerate_class_b,
    indec_census,
)
from .oeis import compare_sequence, parse_bfile
from .paths import (
    DOWN,
    Path,
    PathbijError,
    components,
    parse_path,
    peak_apexes,
    render_ascii,
)
from .permutations import count_avoiders, parse_patterns

DEFAULT_VERIFY_SIZE = 8


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathbij",
        description="Enumerate, count, map, and cross-check the two path families.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate", help="list all paths of one size, one per line")
    p_enum.add_argument("--class", dest="cls", choices=["A", "B"], required=True)
    p_enum.add_argument("--size", type=int, required=True)
    p_enum.add_argument(
        "--flat-line",
        type=int,
        default=None,
        help="height of the line carrying all flatsteps (class A only, default 2)",
    )
    p_enum.set_defaults(func=cmd_enumerate)

    p_count = sub.add_parser("count", help="exact count of paths of one size")
    p_count.add_argument("--class", dest="cls", choices=["A", "B"], required=True)
    p_count.add_argument("--size", type=int, required=True)
    p_count.set_defaults(func=cmd_count)

    p_map = sub.add_parser("map", help="apply the forward bijection to a path")
    p_map.add_argument("--path", required=True)
    p_map.add_argument("--trace", action="store_true", help="print the pipeline stages")
    p_map.set_defaults(func=cmd_map)

    p_unmap = sub.add_parser("unmap", help="apply the inverse bijection to a path")
    p_unmap.add_argument("--path", required=True)
    p_unmap.add_argument("--trace", action="store_true", help="print the pipeline stages")
    p_unmap.set_defaults(func=cmd_unmap)

    p_verify = sub.add_parser(
        "verify", help="exhaustively check the bijection and counters up to a size"
    )
    p_verify.add_argument("--max-size", type=int, default=DEFAULT_VERIFY_SIZE)
    p_verify.add_argument(
        "--census", action="store_true", help="also cross-check the indecomposable census"
    )
    p_verify.set_defaults(func=cmd_verify)

    p_perms = sub.add_parser("perms", help="count pattern-avoiding permutations exhaustively")
    p_perms.add_argument("--n", type=int, required=True, help="number of elements")
    p_perms.add_argument(
        "--patterns",
        default="3241,3421,4321",
        help="comma-separated digit patterns (default: 3241,3421,4321)",
    )
    p_perms.set_defaults(func=cmd_perms)

    p_oeis = sub.add_parser("oeis", help="compare computed counts against a b-file")
    p_oeis.add_argument("--bfile", required=True, help="path to a local OEIS b-file")
    p_oeis.add_argument("--class", dest="cls", choices=["A", "B"], required=True)
    p_oeis.add_argument("--max-size", type=int, default=30)
    p_oeis.add_argument(
        "--offset",
        type=int,
        default=0,
        help="b-file index aligned with size 0 (default 0)",
    )
    p_oeis.set_defaults(func=cmd_oeis)

    p_render = sub.add_parser("render", help="print an ASCII picture of a path")
    p_render.add_argument("--path", required=True)
    p_render.set_defaults(func=cmd_render)

    return parser


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.cls == "A":
        paths = enumerate_class_a(args.size, 2 if args.flat_line is None else args.flat_line)
    else:
        if args.flat_line is not None:
            print("error: --flat-line applies to class A only", file=sys.stderr)
            return 2
        paths = enumerate_class_b(args.size)
    for p in paths:
        print(p.steps)
    return 0


def cmd_count(args: argparse.Namespace) -> int:
    count = count_class_a(args.size) if args.cls == "A" else count_class_b(args.size)
    print(count)
    return 0


def _print_traces(p: Path, direction: str) -> None:
    parts = components(p).parts
    for i, comp in enumerate(parts):
        if len(parts) > 1:
            print(f"component {i + 1}: {comp.path.steps}")
        for line in trace_stages(comp.path, direction).lines():
            print(line)


def cmd_map(args: argparse.Namespace) -> int:
    p = parse_path(args.path)
    result = phi(p)
    if args.trace:
        _print_traces(p, "forward")
    print(result.steps)
    return 0


def cmd_unmap(args: argparse.Namespace) -> int:
    q = parse_path(args.path)
    result = phi_inverse(q)
    if args.trace:
        _print_traces(q, "inverse")
    print(result.steps)
    return 0


def check_size(n: int, census: bool = False) -> list[str]:
    """All bijection/count invariant violations at one size (empty = all good)."""
    problems: list[str] = []
    a_paths = enumerate_class_a(n)
    b_paths = enumerate_class_b(n)
    if count_class_a(n) != len(a_paths):
        problems.append(f"count A {count_class_a(n)} != enumeration {len(a_paths)}")
    if count_class_b(n) != len(b_paths):
        problems.append(f"count B {count_class_b(n)} != enumeration {len(b_paths)}")
    if any(q1 >= q2 for q1, q2 in zip(a_paths, a_paths[1:])):
        problems.append("class A enumeration is not strictly sorted")
    if any(q1 >= q2 for q1, q2 in zip(b_paths, b_paths[1:])):
        problems.append("class B enumeration is not strictly sorted")
    images = []
    for p in a_paths:
        q = phi(p)
        images.append(q)
        if q.size != n:
            problems.append(f"size changed: {p.steps} -> {q.steps}")
            continue
        p_parts = components(p).parts
        q_parts = components(q).parts
        if [c.path.size for c in p_parts] != [c.path.size for c in q_parts]:
            problems.append(f"component sizes changed: {p.steps} -> {q.steps}")
            continue
        for cp, cq in zip(p_parts, q_parts):
            below = cp.path.steps[0] == DOWN
            expected_peaks = 0 if below else 1
            if len(peak_apexes(cq.path)) != expected_peaks:
                problems.append(f"peak structure wrong: {p.steps} -> {q.steps}")
                break
        if phi_inverse(q) != p:
            problems.append(f"inverse roundtrip failed for {p.steps}")
    if sorted(images) != b_paths:
        problems.append("image of the forward map differs from the class B enumeration")
    for q in b_paths:
        if phi(phi_inverse(q)) != q:
            problems.append(f"forward roundtrip failed for {q.steps}")
    if census and n >= 1:
        c: Census = indec_census(n)
        if c.below_a != c.nopeak_b or c.above_a != c.onepeak_b:
            problems.append(f"census mismatch: {c}")
    return problems


def cmd_verify(args: argparse.Namespace) -> int:
    failed = False
    for n in range(args.max_size + 1):
        problems = check_size(n, census=args.census)
        a, b = count_class_a(n), count_class_b(n)
        status = "OK" if not problems else "FAILED"
        print(f"n={n}: |A|={a} |B|={b} bijection {status}")
        for message in problems:
            print(f"  {message}")
        failed = failed or bool(problems)
    return 1 if failed else 0


def cmd_perms(args: argparse.Namespace) -> int:
    try:
        patterns = parse_patterns(args.patterns)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(count_avoiders(args.n, patterns))
    return 0


def cmd_oeis(args: argparse.Namespace) -> int:
    bfile = pathlib.Path(args.bfile)
    try:
        text = bfile.read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read {args.bfile}: {exc}", file=sys.stderr)
        return 2
    table = parse_bfile(text, source_name=bfile.name)
    if args.cls == "A":
        series = count_class_a_series(args.max_size)
    else:
        series = count_class_b_series(args.max_size)
    report = compare_sequence(series, table, args.offset)
    shown = report.matches + (0 if report.ok else 1)
    for i in range(shown):
        expected = table.entries[args.offset + i]
        status = "ok" if series[i] == expected else "MISMATCH"
        print(f"n={i}: computed={series[i]} expected={expected} {status}")
    print(report.summary())
    return 0 if report.ok else 1


def cmd_render(args: argparse.Namespace) -> int:
    print(render_ascii(parse_path(args.path)))
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InverseDomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except PathbijError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
