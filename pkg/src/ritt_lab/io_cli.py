"""Polynomial expression parsing, JSON reports, and the command line tool.

Every subcommand prints exactly one JSON document on stdout and exits 0
whenever a result was computed (including No and Unknown verdicts); domain
and syntax errors go to stderr with exit code 1, usage errors exit 2.
"""

import argparse
import json
import os
import sys
from dataclasses import fields, is_dataclass
from fractions import Fraction

from . import decompose as dec
from . import forms, semigroup, symmetry
from .errors import BadParams, ParseError, RittLabError
from .polynomials import AffineMap, Poly, Z, compose, iterate

SCHEMA_TAG = "ritt-lab/1"

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["schema", "command", "input", "result"],
    "properties": {
        "schema": {"const": SCHEMA_TAG},
        "command": {"type": "string"},
        "input": {"type": "object"},
        "result": {},
    },
    "additionalProperties": False,
}


# ---------------------------------------------------------------------------
# Parsing.  Grammar (whitespace allowed between tokens, '/' only inside
# rational literals, '-' both unary and binary):
#
#   expr     := ('+' | '-')? term (('+' | '-') term)*
#   term     := factor ('*' factor)*
#   factor   := base ('^' uint)?
#   base     := rational | 'z' | '(' expr ')'
#   rational := uint ('/' positive-uint)?
# ---------------------------------------------------------------------------


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    out = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            num = int(text[start:i])
            if i < n and text[i] == "/" and i + 1 < n and text[i + 1].isdigit():
                i += 1
                dstart = i
                while i < n and text[i].isdigit():
                    i += 1
                den = int(text[dstart:i])
                if den == 0:
                    raise ParseError("zero denominator", dstart)
                out.append(("num", Fraction(num, den), start))
            else:
                out.append(("num", Fraction(num), start))
            continue
        if ch == "z":
            out.append(("z", None, i))
            i += 1
            continue
        if ch in "+-*^()":
            out.append((ch, None, i))
            i += 1
            continue
        if ch.isalpha():
            raise ParseError(f"only the variable 'z' is allowed, got {ch!r}", i)
        raise ParseError(f"unexpected character {ch!r}", i)
    out.append(("end", None, n))
    return out


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> tuple[str, object, int]:
        return self.tokens[self.i]

    def take(self) -> tuple[str, object, int]:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expr(self) -> Poly:
        sign = 1
        if self.peek()[0] in "+-":
            sign = -1 if self.take()[0] == "-" else 1
        node = self.term() * sign
        while self.peek()[0] in "+-":
            op = self.take()[0]
            rhs = self.term()
            node = node + rhs if op == "+" else node - rhs
        return node

    def term(self) -> Poly:
        node = self.factor()
        while self.peek()[0] == "*":
            self.take()
            node = node * self.factor()
        return node

    def factor(self) -> Poly:
        node = self.base()
        if self.peek()[0] == "^":
            self.take()
            kind, val, pos = self.peek()
            if kind != "num" or not isinstance(val, Fraction) or val.denominator != 1:
                raise ParseError("expected a nonnegative integer exponent", pos)
            self.take()
            node = node ** int(val)
        return node

    def base(self) -> Poly:
        kind, val, pos = self.peek()
        if kind == "num":
            self.take()
            return Poly((val,))
        if kind == "z":
            self.take()
            return Z
        if kind == "(":
            self.take()
            node = self.expr()
            kind2, _, pos2 = self.peek()
            if kind2 != ")":
                raise ParseError("expected ')'", pos2)
            self.take()
            return node
        raise ParseError("expected a polynomial term", pos)


def parse_poly(text: str) -> Poly:
    """Parse the grammar above into a Poly; raises ParseError with the
    offending character offset."""
    p = _Parser(text)
    node = p.expr()
    kind, _, pos = p.peek()
    if kind != "end":
        raise ParseError("unexpected trailing input", pos)
    return node


def render_poly(p: Poly) -> str:
    """Canonical text form; parse_poly(render_poly(p)) == p."""
    return str(p)


# ---------------------------------------------------------------------------
# JSON serialization
# ---------------------------------------------------------------------------


def _jsonable(obj):
    if isinstance(obj, Poly):
        return str(obj)
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, AffineMap):
        return {"a": _jsonable(obj.a), "b": _jsonable(obj.b)}
    if is_dataclass(obj) and not isinstance(obj, type):
        out = {"type": type(obj).__name__}
        for f in fields(obj):
            out[f.name] = _jsonable(getattr(obj, f.name))
        return out
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if obj is None or isinstance(obj, (bool, int, str)):
        return obj
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def report(command: str, inputs: dict, result) -> dict:
    return {
        "schema": SCHEMA_TAG,
        "command": command,
        "input": _jsonable(inputs),
        "result": _jsonable(result),
    }


# ---------------------------------------------------------------------------
# CLI
# ---------------------------------------------------------------------------


def bounds_from_env(environ=None) -> semigroup.SearchBounds:
    """Default search bounds, overridable via RITT_LAB_BOUNDS="t,l,w"."""
    raw = (environ if environ is not None else os.environ).get("RITT_LAB_BOUNDS")
    if not raw:
        return semigroup.SearchBounds()
    parts = raw.split(",")
    if len(parts) != 3:
        raise BadParams("RITT_LAB_BOUNDS must be 'tmax,lmax,wordmax'")
    try:
        t, l, w = (int(x) for x in parts)
    except ValueError as exc:
        raise BadParams("RITT_LAB_BOUNDS must hold three integers") from exc
    return semigroup.SearchBounds(tmax=t, lmax=l, wordmax=w)


def _parse_element(text: str) -> semigroup.SemidirectElement:
    parts = text.split(",")
    if len(parts) != 2:
        raise BadParams(f"element must look like 'j,s', got {text!r}")
    try:
        j, s = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise BadParams(f"element must hold two integers, got {text!r}") from exc
    return semigroup.SemidirectElement(j=j, s=s)


def _cmd_compose(args):
    p, q = parse_poly(args.p), parse_poly(args.q)
    out = compose(p, q)
    return report("compose", {"p": args.p, "q": args.q},
                  {"poly": out, "degree": out.degree})


def _cmd_iterate(args):
    p = parse_poly(args.p)
    out = iterate(p, args.k)
    return report("iterate", {"p": args.p, "k": args.k},
                  {"poly": out, "degree": out.degree})


def _cmd_decompose(args):
    p = parse_poly(args.p)
    if args.m is not None:
        d = dec.right_factor(p, args.m)
        result = {"m": args.m, "found": d is not None}
        if d is not None:
            result["left"] = d.left
            result["right"] = d.right
        return report("decompose", {"p": args.p, "m": args.m}, result)
    out = [
        {"m": d.right.degree, "left": d.left, "right": d.right}
        for d in dec.all_decompositions(p)
    ]
    return report("decompose", {"p": args.p}, {"decompositions": out})


def _cmd_special(args):
    p = parse_poly(args.p)
    return report("special", {"p": args.p}, forms.is_special(p))


def _cmd_aut(args):
    p = parse_poly(args.p)
    return report("aut", {"p": args.p}, symmetry.aut_group(p))


def _cmd_gsym(args):
    p = parse_poly(args.p)
    return report("gsym", {"p": args.p}, symmetry.g_group(p))


def _cmd_chebyshev(args):
    out = forms.chebyshev(args.n)
    return report("chebyshev", {"n": args.n}, {"poly": out, "degree": out.degree})


def _cmd_common_iterate(args):
    a, b = parse_poly(args.a), parse_poly(args.b)
    bounds = bounds_from_env()
    out = semigroup.common_iterate(a, b, bounds)
    return report("common-iterate", {"a": args.a, "b": args.b},
                  {"outcome": out, "bounds": bounds})


def _cmd_twisted(args):
    a, b = parse_poly(args.a), parse_poly(args.b)
    bounds = bounds_from_env()
    out = semigroup.twisted_pair(a, b, bounds)
    return report("twisted", {"a": args.a, "b": args.b},
                  {"outcome": out, "bounds": bounds})


def _cmd_classify(args):
    gens = [parse_poly(t) for t in args.polys]
    base = bounds_from_env()
    bounds = semigroup.SearchBounds(
        tmax=args.tmax if args.tmax is not None else base.tmax,
        lmax=args.lmax if args.lmax is not None else base.lmax,
        wordmax=args.wordmax if args.wordmax is not None else base.wordmax,
    )
    verdict = semigroup.classify(gens, bounds)
    return report("classify", {"polys": list(args.polys)},
                  {"verdict": verdict, "bounds": bounds})


def _cmd_semidirect(args):
    rpoly = parse_poly(args.r)
    ctx = semigroup.semidirect_context(rpoly, args.d)
    inputs = {"r": args.r, "d": args.d, "op": args.op, "x": args.x, "y": args.y}
    ctx_info = {"d": ctx.d, "twist": ctx.twist, "ell": ctx.ell}
    if args.op == "mul":
        if args.x is None or args.y is None:
            raise BadParams("mul needs --x and --y")
        out = semigroup.semidirect_mul(ctx, _parse_element(args.x), _parse_element(args.y))
        return report("semidirect", inputs, {"context": ctx_info, "product": out})
    if args.op == "realize":
        if args.x is None:
            raise BadParams("realize needs --x")
        out = semigroup.semidirect_realize(ctx, _parse_element(args.x))
        return report("semidirect", inputs, {"context": ctx_info, "poly": out})
    return report("semidirect", inputs,
                  {"context": ctx_info, "left_amenable": semigroup.sgr_left_amenable(ctx)})


def _cmd_folner(args):
    rpoly = parse_poly(args.r)
    ctx = semigroup.semidirect_context(rpoly, args.d)
    x = _parse_element(args.x)
    ratio = semigroup.folner_ratio(ctx, x, args.n)
    return report(
        "folner",
        {"r": args.r, "d": args.d, "x": args.x, "n": args.n},
        {"ratio": ratio, "window_size": ctx.d * (args.n + 1)},
    )


def _cmd_ritt1(args):
    a, c, b, d = (parse_poly(t) for t in (args.a, args.c, args.b, args.d))
    return report(
        "ritt1",
        {"a": args.a, "c": args.c, "b": args.b, "d": args.d},
        dec.ritt_first(a, c, b, d),
    )


def _cmd_ritt2(args):
    if args.kind == "power":
        if args.r is None or args.s is None or args.n is None:
            raise BadParams("power kind needs --r, --s, --n")
        quad = dec.ritt_second_family("power", r=parse_poly(args.r), s=args.s, n=args.n)
    else:
        if args.m is None or args.n is None:
            raise BadParams("chebyshev kind needs --m, --n")
        quad = dec.ritt_second_family("chebyshev", m=args.m, n=args.n)
    a, c, b, d = quad
    return report(
        "ritt2-verify",
        {"kind": args.kind, "r": args.r, "s": args.s, "n": args.n, "m": args.m},
        {"a": a, "c": c, "b": b, "d": d, "composite": compose(a, c), "verified": True},
    )


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="ritt-lab",
        description="Exact composition dynamics of rational-coefficient polynomials",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compose", help="p o q")
    p.add_argument("p")
    p.add_argument("q")
    p.set_defaults(handler=_cmd_compose)

    p = sub.add_parser("iterate", help="k-fold self-composition")
    p.add_argument("p")
    p.add_argument("k", type=int)
    p.set_defaults(handler=_cmd_iterate)

    p = sub.add_parser("decompose", help="functional decompositions of p")
    p.add_argument("p")
    p.add_argument("m", type=int, nargs="?", default=None,
                   help="right factor degree (default: all divisors)")
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser("special", help="conjugate of z^n or +-T_n?")
    p.add_argument("p")
    p.set_defaults(handler=_cmd_special)

    p = sub.add_parser("aut", help="commuting affine symmetries")
    p.add_argument("p")
    p.set_defaults(handler=_cmd_aut)

    p = sub.add_parser("gsym", help="affine symmetries with companions")
    p.add_argument("p")
    p.set_defaults(handler=_cmd_gsym)

    p = sub.add_parser("chebyshev", help="Chebyshev polynomial T_n")
    p.add_argument("n", type=int)
    p.set_defaults(handler=_cmd_chebyshev)

    p = sub.add_parser("common-iterate", help="search a^k == b^l")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(handler=_cmd_common_iterate)

    p = sub.add_parser("twisted", help="search the power-twisted relations")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(handler=_cmd_twisted)

    p = sub.add_parser("classify", help="amenability verdict with certificates")
    p.add_argument("polys", nargs="+")
    p.add_argument("--tmax", type=int, default=None)
    p.add_argument("--lmax", type=int, default=None)
    p.add_argument("--wordmax", type=int, default=None)
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("semidirect", help="rotation-subgroup semigroup arithmetic")
    p.add_argument("r")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--op", choices=["mul", "realize", "left-amenable"], required=True)
    p.add_argument("--x", default=None, help="element 'j,s'")
    p.add_argument("--y", default=None, help="element 'j,s'")
    p.set_defaults(handler=_cmd_semidirect)

    p = sub.add_parser("folner", help="exact window invariance defect")
    p.add_argument("r")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--x", required=True, help="element 'j,s'")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=_cmd_folner)

    p = sub.add_parser("ritt1", help="common refinement of a o c == b o d")
    p.add_argument("a")
    p.add_argument("c")
    p.add_argument("b")
    p.add_argument("d")
    p.set_defaults(handler=_cmd_ritt1)

    p = sub.add_parser("ritt2-verify", help="build and verify a classical identity")
    p.add_argument("kind", choices=["power", "chebyshev"])
    p.add_argument("--r", default=None, help="inner polynomial (power kind)")
    p.add_argument("--s", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--m", type=int, default=None)
    p.set_defaults(handler=_cmd_ritt2)

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc = args.handler(args)
    except RittLabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(json.dumps(doc, indent=2))
    return 0
