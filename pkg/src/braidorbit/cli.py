"""
Command-line front end.

Exit status: 0 on success (negative verdicts included), 1 on bad input,
2 when a constructed word fails its own verification.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from typing import Sequence

from . import __version__
from .braid_core import (
    BraidWord, Permutation, find_bigons, format_word, is_classical, is_irreducible, is_pure,
    parse_word, permutation_of,
)
from .errors import ContractViolation, MaxRepairExceeded
from .families import permutation_braid, torus, weaving_pq, weaving_star, weaving
from .oracle import SearchSpec, reachable_set
from .orbits import VIRTUAL, OrbitFlavor, orbit_invariants, orbit_verdict
from .updown import act, full_coloring, ou_matrix
from .witness import closure_admits, witness_classical, witness_virtual

# lets "--x -1,2" parse as a value rather than an unknown option
_NEGATIVE_VALUE = re.compile(r"^-\d+(,-?\d+)*$")


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        self._negative_number_matcher = _NEGATIVE_VALUE

    def error(self, message):
        raise InputError(f"{self.prog}: {message}")


def parse_vector(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise InputError(f"bad vector {text!r}; expected comma-separated integers like 1,-2,0") from None


def fmt_vector(v: Sequence[int]) -> str:
    return ",".join(str(a) for a in v)


def _word(args) -> BraidWord:
    return parse_word(args.word, args.degree)


def _emit(args, record: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(record, sort_keys=True))
    else:
        for line in lines:
            print(line)


def cmd_act(args) -> int:
    w = _word(args)
    x = parse_vector(args.input)
    y = act(x, w)
    pi = permutation_of(w)
    _emit(args, {"degree": w.degree, "input": list(x), "word": format_word(w),
                 "output": list(y), "permutation": list(pi.image)},
          [f"output: {fmt_vector(y)}", f"permutation: {pi}"])
    return 0


def cmd_color(args) -> int:
    w = _word(args)
    x = parse_vector(args.input)
    col = full_coloring(x, w)
    _emit(args, {"degree": w.degree, "word": format_word(w), "input": list(x),
                 "strands": [list(s) for s in col.strands], "output": list(col.bottom())},
          [f"strand {i}: {fmt_vector(s)}" for i, s in enumerate(col.strands, start=1)]
          + [f"output: {fmt_vector(col.bottom())}"])
    return 0


def cmd_ou(args) -> int:
    w = _word(args)
    m = ou_matrix(w)
    record = {"degree": w.degree, "word": format_word(w), **m.to_dict()}
    _emit(args, record,
          [" ".join(f"{a:3d}" for a in row) for row in m.rows]
          + [f"row_sums: {fmt_vector(m.row_sums())}", f"col_sums: {fmt_vector(m.col_sums())}"])
    return 0


def cmd_check(args) -> int:
    w = _word(args)
    pi = permutation_of(w)
    bigons = find_bigons(w)
    record = {"degree": w.degree, "word": format_word(w), "permutation": list(pi.image),
              "pure": is_pure(w), "irreducible": not bigons, "classical": is_classical(w),
              "bigons": [[b.first, b.second, b.index] for b in bigons]}
    _emit(args, record, [
        f"degree: {w.degree}",
        f"permutation: {pi}",
        f"pure: {str(record['pure']).lower()}",
        f"irreducible: {str(record['irreducible']).lower()}",
        f"classical: {str(record['classical']).lower()}",
        "bigons: " + "; ".join(f"{b.first}-{b.second}@{b.index}" for b in bigons),
    ])
    return 0


def cmd_orbit_check(args) -> int:
    flavor = OrbitFlavor.parse(args.flavor)
    x, y = parse_vector(args.x), parse_vector(args.y)
    verdict = orbit_verdict(x, y, flavor)
    tx, ix, _ = orbit_invariants(x)
    ty, iy, _ = orbit_invariants(y)
    record = {**verdict.to_dict(), "flavor": str(flavor),
              "invariants": {"x": {"trace": tx, "type_I": ix}, "y": {"trace": ty, "type_I": iy}}}
    _emit(args, record, [f"member: {str(verdict.member).lower()}", f"reason: {verdict.reason}"])
    return 0


def cmd_witness(args) -> int:
    flavor = OrbitFlavor.parse(args.flavor)
    x, y = parse_vector(args.x), parse_vector(args.y)
    if flavor.world == VIRTUAL:
        w = witness_virtual(x, y)
    else:
        w = witness_classical(x, y, irreducible=flavor.irreducible, pure=flavor.pure)
    if act(x, w) != y:
        raise ContractViolation(f"witness does not carry {fmt_vector(x)} to {fmt_vector(y)}")
    irreducible, pure = is_irreducible(w), is_pure(w)
    if (flavor.irreducible and not irreducible) or (flavor.pure and not pure):
        raise ContractViolation(f"witness does not have the requested flavor {flavor}")
    record = {"degree": w.degree, "word": format_word(w), "length": len(w),
              "verified": True, "irreducible": irreducible, "pure": pure}
    _emit(args, record, [f"word: {format_word(w)}", f"degree: {w.degree}", f"length: {len(w)}",
                         "verified: true", f"irreducible: {str(irreducible).lower()}",
                         f"pure: {str(pure).lower()}"])
    return 0


def cmd_closure_check(args) -> int:
    w = _word(args)
    verdict = closure_admits(w)
    lines = [f"admits: {str(verdict.admits).lower()}"]
    if verdict.witness is not None:
        lines.append(f"witness: {fmt_vector(verdict.witness)}")
    lines += [f"cycle {fmt_vector(c)}: {s}" for c, s in verdict.cycle_report]
    _emit(args, {"degree": w.degree, "word": format_word(w), **verdict.to_dict()}, lines)
    return 0


def cmd_gen(args) -> int:
    if args.family == "torus":
        w = torus(args.p, args.q)
    elif args.family == "weaving":
        if args.q is None:
            w = weaving_star(args.n) if args.star else weaving(args.n)
        else:
            w = weaving_pq(args.n, args.q)
    else:
        w = permutation_braid(Permutation(parse_vector(args.perm)))
    _emit(args, w.to_dict(), [format_word(w)])
    return 0


def cmd_oracle(args) -> int:
    x = parse_vector(args.start)
    spec = SearchSpec(degree=args.degree or len(x), world=args.world,
                      require_irreducible=args.irreducible, require_pure=args.pure,
                      max_length=args.max_len, bound=args.bound)
    vectors = sorted(reachable_set(x, spec))
    _emit(args, {"degree": spec.degree, "from": list(x), "vectors": [list(v) for v in vectors]},
          [fmt_vector(v) for v in vectors])
    return 0


def cmd_render(args) -> int:
    from .render import render_to_file

    w = _word(args)
    x = parse_vector(args.input) if args.input else None
    path = render_to_file(w, args.out, x)
    _emit(args, {"path": str(path), **w.to_dict()}, [f"wrote: {path}"])
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="print one JSON object instead of text lines")

    wordargs = _Parser(add_help=False)
    wordargs.add_argument("--word", required=True, help='braid word, e.g. "s1 S2 v1"')
    wordargs.add_argument("--degree", type=int, help="number of strands (default: max index + 1)")

    parser = _Parser(prog="braidorbit", description="Up-down action of classical and virtual braid words.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("act", parents=[common, wordargs], help="act on a tuple")
    p.add_argument("--input", required=True, help="comma-separated top labels")
    p.set_defaults(func=cmd_act)

    p = sub.add_parser("color", parents=[common, wordargs], help="full edge colouring per strand")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("ou", parents=[common, wordargs], help="OU matrix with row/column sums")
    p.set_defaults(func=cmd_ou)

    p = sub.add_parser("check", parents=[common, wordargs],
                       help="degree, permutation, purity, irreducibility and bigons (0-based positions)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("orbit-check", parents=[common], help="decide orbit membership")
    p.add_argument("--flavor", default="classical",
                   help="classical or virtual, optionally +pure and/or +irreducible")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.set_defaults(func=cmd_orbit_check)

    p = sub.add_parser("witness", parents=[common], help="explicit word carrying x to y")
    p.add_argument("--flavor", default="classical")
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("closure-check", parents=[common, wordargs],
                       help="does the closure admit an up-down colouring")
    p.set_defaults(func=cmd_closure_check)

    p = sub.add_parser("gen", parents=[common], help="generate torus, weaving or permutation braids")
    gen = p.add_subparsers(dest="family", required=True, parser_class=_Parser)
    g = gen.add_parser("torus", parents=[common])
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--q", type=int, required=True)
    g = gen.add_parser("weaving", parents=[common])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--q", type=int, help="number of sweeps (default n, the pure weaving braid)")
    g.add_argument("--star", action="store_true", help="mirror image")
    g = gen.add_parser("permbraid", parents=[common])
    g.add_argument("--perm", required=True, help="images of 1..n, e.g. 3,1,2")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", parents=[common], help="brute-force reachable sets")
    osub = p.add_subparsers(dest="oracle_cmd", required=True, parser_class=_Parser)
    r = osub.add_parser("reachable", parents=[common])
    r.add_argument("--from", dest="start", required=True)
    r.add_argument("--degree", type=int)
    r.add_argument("--world", choices=["classical", "virtual"], default="classical")
    r.add_argument("--max-len", type=int, default=4)
    r.add_argument("--bound", type=int, help="only report vectors with |entries| <= bound")
    r.add_argument("--irreducible", action="store_true")
    r.add_argument("--pure", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("render", parents=[common, wordargs], help="draw the diagram to an image file")
    p.add_argument("--input", help="top labels; when given, edges are annotated with the colouring")
    p.add_argument("--out", required=True, help="output path; format from extension (svg, pdf, png)")
    p.set_defaults(func=cmd_render)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except (ContractViolation, MaxRepairExceeded) as exc:
        print(f"braidorbit: internal contract violation: {exc}", file=sys.stderr)
        return 2
    except (InputError, ValueError) as exc:
        print(f"braidorbit: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
