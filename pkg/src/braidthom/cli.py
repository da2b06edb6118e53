"""Command-line front end.

Exit status: 0 on success, 1 when the answer is a mathematical "no"
(e.g. ``equal`` on unequal elements, a failing relation suite), 2 on bad input.

Element arguments are either a generator word (``"x0 b1,2 a1,3^-1"``) or a
diagram ``top|Bn:letters|bottom``; ``-`` reads standard input and ``@path``
reads a file.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any

from . import bns, braids, diagrams, gens, quotient, render, trees
from .diagrams import Diagram

EXIT_OK, EXIT_FALSE, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _read(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read().strip()
    if arg.startswith("@"):
        try:
            with open(arg[1:], encoding="utf-8") as fh:
                return fh.read().strip()
        except OSError as exc:
            raise InputError(f"cannot read {arg[1:]}: {exc.strerror}") from None
    return arg


def parse_element(arg: str) -> Diagram:
    text = _read(arg)
    try:
        if "|" in text:
            return diagrams.parse_diagram(text)
        return gens.eval_word(text)
    except (ValueError, KeyError) as exc:
        raise InputError(str(exc)) from None


def _frac(x: Fraction) -> str:
    return str(x)


def _emit(args, data: dict[str, Any]) -> None:
    if args.json:
        print(json.dumps(data, ensure_ascii=False))
        return
    for key, value in data.items():
        if isinstance(value, (list, tuple)) and key in ("chars",):
            value = "(" + ",".join(str(v) for v in value) + ")"
        elif isinstance(value, list):
            value = "{" + ", ".join(str(v) for v in value) + "}"
        elif isinstance(value, bool):
            value = "true" if value else "false"
        if isinstance(value, str) and "\n" in value:
            print(value)
        else:
            print(f"{key}={value}")


# -- subcommands --------------------------------------------------------------------


def cmd_eval(args) -> int:
    d = parse_element(args.input)
    out = d if args.raw else diagrams.reduce(d)
    _emit(args, {"diagram": diagrams.format_diagram(out)})
    return EXIT_OK


def cmd_invariants(args) -> int:
    d = parse_element(args.input)
    r = diagrams.reduce(d)
    kind = diagrams.classify(d)
    data: dict[str, Any] = {"class": str(kind)}
    if kind != diagrams.Kind.VBR:
        data["chars"] = list(diagrams.characters(d))
    if kind in (diagrams.Kind.PBR, diagrams.Kind.IDENTITY):
        data["xess"] = [_frac(p) for p in diagrams.x_ess(d)]
    data["size"] = r.strands
    data["reduced"] = diagrams.format_diagram(r)
    _emit(args, data)
    return EXIT_OK


def cmd_equal(args) -> int:
    g, h = parse_element(args.left), parse_element(args.right)
    same = diagrams.equal(g, h)
    _emit(args, {"equal": same})
    return EXIT_OK if same else EXIT_FALSE


def cmd_reduce(args) -> int:
    d = parse_element(args.input)
    r = diagrams.reduce(d, pick=args.pick)
    _emit(args, {"diagram": diagrams.format_diagram(r), "strands": r.strands})
    return EXIT_OK


def cmd_relations(args) -> int:
    name = args.presentation.lower()
    if name not in ("vbr", "fbr"):
        raise InputError(f"unknown presentation {args.presentation!r}: use vbr or fbr")
    if args.bound < 3:
        raise InputError("the relation suite needs a bound of at least 3")
    rep = gens.relation_suite(name, args.bound, reverse_b=args.reverse_b)
    by_tag = rep.by_tag()
    if args.json:
        print(json.dumps({
            "presentation": name, "bound": args.bound, "reverse_b": args.reverse_b,
            "passed": rep.passed, "failed": len(rep.failed),
            "by_tag": {t: list(v) for t, v in by_tag.items()},
            "failures": [str(r) for r in rep.failed[: args.show]],
        }))
    else:
        print(f"{'tag':<6} {'pass':>6} {'fail':>6}")
        for tag, (ok, bad) in by_tag.items():
            print(f"{tag:<6} {ok:>6} {bad:>6}")
        total = len(rep.results)
        if rep.ok:
            print(f"all instances pass ({total})")
        else:
            print(f"{len(rep.failed)} of {total} instances fail")
            for r in rep.failed[: args.show]:
                print(f"  {r}")
    return EXIT_OK if rep.ok else EXIT_FALSE


def cmd_xess(args) -> int:
    d = parse_element(args.input)
    if not diagrams.in_pbr(d):
        raise InputError("X_ess is defined for elements of Pbr only")
    _emit(args, {"xess": [_frac(p) for p in diagrams.x_ess(d)]})
    return EXIT_OK


def cmd_loose(args) -> int:
    try:
        p = braids.parse_braid(_read(args.braid))
        m = args.m
        verdict = braids.is_brunnian(p) if m is None else braids.is_m_loose(p, m)
    except braids.BraidError as exc:
        raise InputError(str(exc)) from None
    key = "brunnian" if m is None else f"{m}-loose"
    _emit(args, {key: verdict, "trivial": braids.is_trivial(p)})
    return EXIT_OK if verdict else EXIT_FALSE


def cmd_quotient(args) -> int:
    d = parse_element(args.input)
    if not d.braid.is_pure:
        raise InputError("the quotient map is defined on Fbr only")
    q = quotient.ab_reduce(quotient.quotient_map(d))
    _emit(args, {
        "top": trees.serialize_tree(q.top),
        "vector": quotient.format_vector(q.vector),
        "bottom": trees.serialize_tree(q.bottom),
        "identity": quotient.ab_is_identity(q),
    })
    return EXIT_OK


def cmd_bns(args) -> int:
    if args.element is not None:
        if args.character is None:
            raise InputError("--element needs --character")
        try:
            chi = bns.parse_character(args.character)
        except bns.CharacterError as exc:
            raise InputError(str(exc)) from None
        d = parse_element(args.element)
        if not d.braid.is_pure:
            raise InputError("characters are defined on Fbr only")
        value = bns.evaluate(chi, d)
        _emit(args, {"value": str(value), "survives": value != 0})
        return EXIT_OK
    if args.bound < 4:
        raise InputError("builtin witnesses need a bound of at least 4")
    rep = bns.builtin_witnesses(args.bound)
    if args.json:
        print(json.dumps({
            "bound": rep.bound, "ok": rep.ok,
            "cases": [
                {"label": c.label, "ok": c.ok, "dead": c.dead, "undominated": c.undominated,
                 "components": c.components, "notes": c.notes}
                for c in rep.cases
            ],
        }))
    else:
        print(rep.summary())
    return EXIT_OK if rep.ok else EXIT_FALSE


def cmd_render(args) -> int:
    d = parse_element(args.input)
    svg = render.render_svg(d)
    if args.output in (None, "-"):
        sys.stdout.write(svg)
        return EXIT_OK
    try:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(svg)
    except OSError as exc:
        raise InputError(f"cannot write {args.output}: {exc.strerror}") from None
    return EXIT_OK


# -- argument parsing ------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def build_parser() -> argparse.ArgumentParser:
    # subcommands suppress the default so a global --json is not overwritten
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit one JSON object")

    p = _Parser(prog="braidthom", description="Exact arithmetic in the braided Thompson groups.")
    p.add_argument("--json", action="store_true", help="emit one JSON object")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_):
        sp = sub.add_parser(name, help=help_, parents=[common])
        sp.set_defaults(func=func)
        return sp

    sp = add("eval", cmd_eval, "evaluate a word or diagram and print a reduced diagram")
    sp.add_argument("input")
    sp.add_argument("--emit-diagram", action="store_true", help="accepted for clarity; output is a diagram")
    sp.add_argument("--raw", action="store_true", help="skip reduction")

    add("invariants", cmd_invariants, "class, characters, X_ess and reduced size").add_argument("input")

    sp = add("equal", cmd_equal, "exit 0 if the two elements are equal, 1 otherwise")
    sp.add_argument("left")
    sp.add_argument("right")

    sp = add("reduce", cmd_reduce, "reduce a diagram")
    sp.add_argument("input")
    sp.add_argument("--pick", choices=("first", "last"), default="first")

    sp = add("relations", cmd_relations, "check a relation catalog up to an index bound")
    sp.add_argument("presentation", help="vbr or fbr")
    sp.add_argument("bound", type=int)
    sp.add_argument("--reverse-b", action="store_true",
                    help="read the B-family conjugations right to left")
    sp.add_argument("--show", type=int, default=10, help="failures to list")

    add("xess", cmd_xess, "essential breakpoints of an element of Pbr").add_argument("input")

    sp = add("loose", cmd_loose, "test m-looseness of a pure braid (Brunnian if m is omitted)")
    sp.add_argument("braid", help="e.g. B3:1,-2,1,-2,1,-2")
    sp.add_argument("m", type=int, nargs="?")

    add("quotient", cmd_quotient, "image in the abelianized quotient").add_argument("input")

    sp = add("bns", cmd_bns, "built-in witness checks, or evaluate a character")
    sp.add_argument("--bound", type=int, default=6)
    sp.add_argument("--character", help="a,b,c,d over (phi0, phi1, omega0, omega1)")
    sp.add_argument("--element")

    sp = add("render", cmd_render, "write an SVG picture")
    sp.add_argument("input")
    sp.add_argument("-o", "--output")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
