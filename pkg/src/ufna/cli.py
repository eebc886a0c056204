"""Command-line front end.

Usage examples
--------------
  ufna dims P1 -n 5
  ufna graph P2 --dot -
  ufna hilbert P2 --expand 5
  ufna paths 'gens: x y; rels: xx;' -n 2
  ufna verify algebra.json -n 8 --m-max 8 --seed 1 --json report.json

The INPUT argument is a file path (JSON or compact form), ``-`` for stdin,
one of the built-in fixture names P0..P4, or an inline presentation.

Exit codes: 0 ok, 1 a theorem check failed, 2 bad input, 3 resource cap hit.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional

from .corpus import FIXTURE_TEXT
from .hilbert import expand, hilbert_algebra, hilbert_quiver
from .language import CapExceeded, normal_words
from .presentation import Presentation, PresentationError, load_presentation, normalize
from .quiver import (
    build_quiver,
    check_label_property,
    enumerate_paths,
    export_dot,
    growth_class,
    path_labels,
    path_word,
)
from .verify import VerifyConfig, run_verify

EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 1, 2, 3
CLI_DEFAULT_CAP = 10**6


def _default_cap() -> int:
    env = os.environ.get("UFNA_CAP")
    return int(env) if env else CLI_DEFAULT_CAP


def read_input(arg: str) -> Presentation:
    if arg == "-":
        text = sys.stdin.read()
    elif os.path.exists(arg):
        with open(arg, encoding="utf-8") as fh:
            text = fh.read()
    elif arg in FIXTURE_TEXT:
        text = FIXTURE_TEXT[arg]
    else:
        text = arg
    p = normalize(load_presentation(text))
    if p.collapsed:
        print("note: every generator was eliminated; the algebra is k", file=sys.stderr)
    return p


def _emit(text: str, dest: str) -> None:
    if dest == "-":
        sys.stdout.write(text)
    else:
        with open(dest, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_dims(args) -> int:
    p = read_input(args.input)
    dims = [len(normal_words(n, p, args.cap)) for n in range(args.max_degree + 1)]
    print(" ".join(map(str, dims)))
    return 0


def cmd_graph(args) -> int:
    p = read_input(args.input)
    q = build_quiver(p, args.cap)
    if args.dot:
        _emit(export_dot(q), args.dot)
        return 0
    ok, violations = check_label_property(q)
    print(f"d = {q.d}")
    print(f"vertices = {len(q.vertices)}")
    print(f"arrows = {len(q.arrows)}")
    print(f"growth = {growth_class(q)}")
    print(f"label lemma = {'ok' if ok else f'{len(violations)} violation(s)'}")
    return 0


def cmd_hilbert(args) -> int:
    p = read_input(args.input)
    q = build_quiver(p, args.cap)
    series = hilbert_quiver(q) if args.quiver else hilbert_algebra(p, q)
    coeffs = expand(series, args.expand)
    if args.json:
        doc = {
            "schema": 1,
            "series": "kQ" if args.quiver else "A",
            "numerator": [str(c) for c in series.numerator],
            "denominator": [str(c) for c in series.denominator],
            "expansion": [str(c) for c in coeffs],
        }
        _emit(json.dumps(doc, indent=2) + "\n", args.json)
        return 0
    print("numerator:", " ".join(map(str, series.numerator)) or "0")
    print("denominator:", " ".join(map(str, series.denominator)))
    print("expansion:", " ".join(map(str, coeffs)))
    return 0


def cmd_paths(args) -> int:
    p = read_input(args.input)
    q = build_quiver(p, args.cap)
    for path in enumerate_paths(q, args.max_degree, args.cap):
        if path.arrows:
            arrows = "·".join(q.spell(q.arrows[i].word) for i in path.arrows)
        else:
            arrows = "e_" + q.spell(q.vertices[path.start])
        print(f"{arrows}\t{q.spell(path_word(q, path))}\t{q.spell(path_labels(q, path))}")
    return 0


def cmd_verify(args) -> int:
    p = read_input(args.input)
    config = VerifyConfig(max_degree=args.max_degree, m_max=args.m_max,
                          seed=args.seed, cap=args.cap)
    report = run_verify(p, config)
    _emit(json.dumps(report, indent=2) + "\n", args.json or "-")
    if report["verdict"] != "pass":
        failed = [k for k, ok in report["checks"].items() if not ok]
        print("verification failed: " + ", ".join(failed), file=sys.stderr)
        return EXIT_FAIL
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ufna",
        description="Overlap quivers of monomial algebras and checks of f̄: A -> kQ.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, default_n):
        sp.add_argument("input", help="file, '-', fixture name (P0..P4) or inline text")
        sp.add_argument("-n", "--max-degree", type=int, default=default_n)
        sp.add_argument("--cap", type=int, default=_default_cap(),
                        help="largest basis/path set to materialize (env UFNA_CAP)")

    sp = sub.add_parser("verify", help="run every theorem check and emit a JSON report")
    common(sp, 8)
    sp.add_argument("--m-max", type=int, default=None,
                    help="search cap for Fdim certificates (default: max degree)")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--json", metavar="PATH|-", default=None)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("dims", help="print dim A_0 .. dim A_N")
    common(sp, 10)
    sp.set_defaults(func=cmd_dims)

    sp = sub.add_parser("graph", help="summarize the quiver or export it as DOT")
    common(sp, 0)
    sp.add_argument("--dot", metavar="PATH|-", default=None)
    sp.set_defaults(func=cmd_graph)

    sp = sub.add_parser("hilbert", help="rational Hilbert series and its expansion")
    common(sp, 0)
    sp.add_argument("--expand", type=int, default=10)
    sp.add_argument("--quiver", action="store_true", help="series of kQ instead of A")
    sp.add_argument("--json", metavar="PATH|-", default=None)
    sp.set_defaults(func=cmd_hilbert)

    sp = sub.add_parser("paths", help="list the paths of length N")
    common(sp, 1)
    sp.set_defaults(func=cmd_paths)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except PresentationError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapExceeded as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
