"""Command-line surface: value tables, classification reports, suites.

Function specs form a tiny expression language over the built-ins, e.g.

    mobius
    c:4                          (or: --fn c --r 4)
    scale:-3/2(phi)
    dirichlet(c:4, c_bar:12)
    gcdk:12(phi)
    tensor(mobius, phi)

Output is TSV by default, a JSON report with --json. Reports are
byte-identical for identical inputs when --no-timing is passed.
Exit codes: 0 pass, 1 failed expectation or failed suite, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Optional, Sequence, Union

from . import numtheory as nt
from . import ramanujan as rj
from .arith import (
    ArithFn,
    classical,
    compose,
    dirichlet,
    eta,
    format_rational,
    pointwise_product,
    scale,
    sum_of_squares,
    unitary,
)
from .classes import (
    CONSISTENT,
    MULTIPLICATIVE,
    QUASIMULTIPLICATIVE,
    REARICK,
    SELBERG,
    SEMIMULTIPLICATIVE,
    SelbergFactorization,
    Witness,
    check_rearick,
    classify_all,
)
from .multivar import (
    MultiArithFn,
    MultiSelbergFactorization,
    MultiWitness,
    SelbergSystem,
    classify_all_u,
    dirichlet_u,
    selberg_not_semimultiplicative,
    tensor,
)
from .suites import SuiteResult, run_suite

SCHEMA_VERSION = "1"

EXPECT_CHOICES = (MULTIPLICATIVE, QUASIMULTIPLICATIVE, SEMIMULTIPLICATIVE, SELBERG, REARICK)


class FnSpecError(ValueError):
    """A function spec that cannot be parsed or resolved."""


_IDENT_CHARS = frozenset("abcdefghijklmnopqrstuvwxyz0123456789_-")
_PARAM_CHARS = frozenset("0123456789-/")

_UNARY = ("scale", "dilate", "kovern", "noverk", "gcdk", "lcmk")
_UNARY_KIND = {
    "dilate": "dilate_kn",
    "kovern": "k_over_n",
    "noverk": "n_over_k",
    "gcdk": "gcd_k",
    "lcmk": "lcm_k",
}
_BINARY = ("dirichlet", "product", "unitary", "tensor")

Fn = Union[ArithFn, MultiArithFn]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str) -> FnSpecError:
        return FnSpecError(f"{msg} (at position {self.pos} in {self.text!r})")

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] == " ":
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, chars: frozenset) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in chars:
            self.pos += 1
        return self.text[start : self.pos]

    def parse(self) -> tuple:
        self.skip_ws()
        node = self.expr()
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error("trailing characters")
        return node

    def expr(self) -> tuple:
        self.skip_ws()
        name = self.take(_IDENT_CHARS)
        if not name:
            raise self.error("expected a function name")
        param: Optional[str] = None
        if self.peek() == ":":
            self.pos += 1
            param = self.take(_PARAM_CHARS)
            if not param:
                raise self.error(f"{name}: expected a parameter after ':'")
        args: list[tuple] = []
        if self.peek() == "(":
            self.pos += 1
            while True:
                args.append(self.expr())
                self.skip_ws()
                if self.peek() == ",":
                    self.pos += 1
                    continue
                if self.peek() == ")":
                    self.pos += 1
                    break
                raise self.error("expected ',' or ')'")
        return (name, param, args)


def _int_param(name: str, param: Optional[str], fallback: Optional[int], what: str) -> int:
    if param is not None:
        try:
            value = int(param)
        except ValueError:
            raise FnSpecError(f"{name}: parameter {param!r} is not an integer")
    elif fallback is not None:
        value = fallback
    else:
        raise FnSpecError(f"{name} needs a parameter: write {name}:{what.upper()} or pass --{what}")
    if value < 1:
        raise FnSpecError(f"{name}: {what} must be a positive integer, got {value}")
    return value


def _build(node: tuple, r: Optional[int], k: Optional[int]) -> Fn:
    name, param, args = node

    if name in _UNARY:
        if len(args) != 1:
            raise FnSpecError(f"{name} takes exactly one argument, got {len(args)}")
        if param is None:
            raise FnSpecError(f"{name} needs a parameter, e.g. {name}:2(...)")
        inner = _build(args[0], r, k)
        if not isinstance(inner, ArithFn):
            raise FnSpecError(f"{name} applies to one-variable functions only")
        if name == "scale":
            try:
                const = Fraction(param)
            except (ValueError, ZeroDivisionError):
                raise FnSpecError(f"scale: bad constant {param!r}")
            if const == 0:
                raise FnSpecError("scale: constant must be nonzero")
            return scale(inner, const)
        try:
            kk = int(param)
        except ValueError:
            raise FnSpecError(f"{name}: parameter {param!r} is not an integer")
        if kk < 1:
            raise FnSpecError(f"{name}: parameter must be a positive integer, got {kk}")
        return compose(inner, _UNARY_KIND[name], kk)

    if name in _BINARY:
        if len(args) != 2:
            raise FnSpecError(f"{name} takes exactly two arguments, got {len(args)}")
        if param is not None:
            raise FnSpecError(f"{name} takes no ':' parameter")
        lhs = _build(args[0], r, k)
        rhs = _build(args[1], r, k)
        both_one = isinstance(lhs, ArithFn) and isinstance(rhs, ArithFn)
        if name == "tensor":
            if not both_one:
                raise FnSpecError("tensor combines one-variable functions")
            return tensor(lhs, rhs)
        if name == "dirichlet":
            if both_one:
                return dirichlet(lhs, rhs)
            if isinstance(lhs, MultiArithFn) and isinstance(rhs, MultiArithFn):
                return dirichlet_u(lhs, rhs)
            raise FnSpecError("dirichlet needs two functions of the same arity")
        if not both_one:
            raise FnSpecError(f"{name} combines one-variable functions")
        return pointwise_product(lhs, rhs) if name == "product" else unitary(lhs, rhs)

    if args:
        raise FnSpecError(f"{name} takes no arguments")

    if name in ("mobius", "mu"):
        return classical("mobius")
    if name in ("phi", "euler_phi"):
        return classical("euler_phi")
    if name == "one":
        return classical("one")
    if name in ("identity", "identity_n"):
        return classical("identity_n")
    if name == "c":
        return rj.c_fn(_int_param(name, param, r, "r"))
    if name == "c_bar":
        return rj.c_bar_fn(_int_param(name, param, r, "r"))
    if name == "mu_bar":
        return rj.mu_bar_fn(_int_param(name, param, r, "r"))
    if name == "g":
        return rj.g_fn(_int_param(name, param, r, "r"))
    if name == "eta":
        return eta(_int_param(name, param, k, "k"))
    if name in ("r2", "r4", "r8"):
        return sum_of_squares(int(name[1]))
    if name == "selberg-not-semi":
        return selberg_not_semimultiplicative()
    if name == "c-two-var":
        return rj.c_two_var()
    if name == "c-bar-two-var":
        return rj.c_bar_two_var()
    raise FnSpecError(f"unknown function {name!r}")


def parse_fn_spec(text: str, r: Optional[int] = None, k: Optional[int] = None) -> Fn:
    """Resolve a function spec string to a callable function object."""
    return _build(_Parser(text).parse(), r, k)


def _parse_range(text: str) -> tuple[int, int]:
    if ".." in text:
        lo_s, _, hi_s = text.partition("..")
    else:
        lo_s = hi_s = text
    try:
        lo, hi = int(lo_s), int(hi_s)
    except ValueError:
        raise FnSpecError(f"bad range {text!r}; write LO..HI")
    if lo < 1 or hi < lo:
        raise FnSpecError(f"bad range {text!r}; need 1 <= LO <= HI")
    return lo, hi


def _witness_obj(w: Witness) -> dict:
    out = {
        "m": w.m,
        "n": w.n,
        "lhs": format_rational(w.lhs),
        "rhs": format_rational(w.rhs),
        "law": w.law,
    }
    if w.shift is not None:
        out["shift"] = w.shift
    return out


def _multi_witness_obj(w: MultiWitness) -> dict:
    out = {
        "n": list(w.n),
        "m": list(w.m) if w.m is not None else None,
        "lhs": format_rational(w.lhs),
        "rhs": format_rational(w.rhs),
        "law": w.law,
    }
    if w.shift is not None:
        out["shift"] = list(w.shift)
    return out


def _witness_text(w: Optional[Witness]) -> str:
    if w is None:
        return ""
    s = f"m={w.m} n={w.n} lhs={format_rational(w.lhs)} rhs={format_rational(w.rhs)}"
    if w.shift is not None:
        s += f" a={w.shift}"
    return s


def _multi_witness_text(w: Optional[MultiWitness]) -> str:
    if w is None:
        return ""
    mtxt = ",".join(map(str, w.m)) if w.m is not None else "-"
    s = (
        f"n={','.join(map(str, w.n))} m={mtxt} "
        f"lhs={format_rational(w.lhs)} rhs={format_rational(w.rhs)}"
    )
    if w.shift is not None:
        s += f" a={','.join(map(str, w.shift))}"
    return s


def _selberg_obj(fac: SelbergFactorization) -> dict:
    return {
        "constant": format_rational(fac.constant),
        "a": fac.a,
        "tables": {
            str(p): {str(e): format_rational(v) for e, v in sorted(col.items())}
            for p, col in sorted(fac.tables.items())
        },
    }


def _sig_key(sig: tuple[int, ...]) -> str:
    return ",".join(map(str, sig))


def _factorization_u_obj(fac: MultiSelbergFactorization) -> dict:
    return {
        "constant": format_rational(fac.constant),
        "a": list(fac.a),
        "tables": {
            str(p): {_sig_key(e): format_rational(v) for e, v in sorted(col.items())}
            for p, col in sorted(fac.tables.items())
        },
    }


def _system_obj(system: SelbergSystem) -> dict:
    return {
        "constant": format_rational(system.constant),
        "exceptions": list(system.exceptions),
        "anchors": [[p, list(sig)] for p, sig in system.anchors],
        "tables": {
            str(p): {_sig_key(e): format_rational(v) for e, v in sorted(col.items())}
            for p, col in sorted(system.tables.items())
        },
    }


def _cmd_eval(args: argparse.Namespace) -> tuple[dict, list[str], bool]:
    fn = parse_fn_spec(args.fn, args.r, args.k)
    if not isinstance(fn, ArithFn):
        raise FnSpecError("eval supports one-variable functions; use classify --arity 2")
    lo, hi = _parse_range(args.n)
    rows = [(n, format_rational(fn(n))) for n in range(lo, hi + 1)]
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "eval",
        "fn": fn.name,
        "results": [{"n": n, "value": v} for n, v in rows],
    }
    lines = ["n\tvalue"] + [f"{n}\t{v}" for n, v in rows]
    return report, lines, False


def _cmd_classify(args: argparse.Namespace) -> tuple[dict, list[str], bool]:
    fn = parse_fn_spec(args.fn, args.r, args.k)
    if args.window < 2:
        raise FnSpecError(f"window must be at least 2, got {args.window}")
    if args.arity is not None and args.arity != getattr(fn, "arity", 1):
        raise FnSpecError(
            f"--arity {args.arity} does not match {fn.name} (arity {getattr(fn, 'arity', 1)})"
        )
    rows: list[dict] = []
    lines = ["class\tverdict\tc\ta\twitness\treason"]
    if isinstance(fn, ArithFn):
        reports = classify_all(fn, args.window)
        reports[REARICK] = check_rearick(fn, args.window)
        order = (MULTIPLICATIVE, QUASIMULTIPLICATIVE, SEMIMULTIPLICATIVE, SELBERG, REARICK)
        for klass in order:
            rep = reports[klass]
            row = {
                "class": klass,
                "verdict": rep.verdict,
                "c": format_rational(rep.c) if rep.c is not None else None,
                "a": rep.a,
                "witness": _witness_obj(rep.witness) if rep.witness else None,
                "reason": rep.reason,
            }
            if rep.selberg is not None:
                row["selberg"] = _selberg_obj(rep.selberg)
            rows.append(row)
            lines.append(
                "\t".join(
                    [
                        klass,
                        rep.verdict,
                        format_rational(rep.c) if rep.c is not None else "",
                        str(rep.a) if rep.a is not None else "",
                        _witness_text(rep.witness),
                        rep.reason,
                    ]
                )
            )
    else:
        ureports = classify_all_u(fn, args.window)
        for klass in (MULTIPLICATIVE, QUASIMULTIPLICATIVE, SEMIMULTIPLICATIVE, SELBERG):
            urep = ureports[klass]
            row = {
                "class": klass,
                "verdict": urep.verdict,
                "c": format_rational(urep.c) if urep.c is not None else None,
                "a": list(urep.a) if urep.a is not None else None,
                "witness": _multi_witness_obj(urep.witness) if urep.witness else None,
                "reason": urep.reason,
            }
            if urep.forcing:
                row["forcing"] = [list(pt) for pt in urep.forcing]
            if urep.factorization is not None:
                row["factorization"] = _factorization_u_obj(urep.factorization)
            if urep.system is not None:
                row["system"] = _system_obj(urep.system)
            rows.append(row)
            lines.append(
                "\t".join(
                    [
                        klass,
                        urep.verdict,
                        format_rational(urep.c) if urep.c is not None else "",
                        ",".join(map(str, urep.a)) if urep.a is not None else "",
                        _multi_witness_text(urep.witness),
                        urep.reason,
                    ]
                )
            )
        reports = ureports
    failed = False
    for expected in args.expect or ():
        if expected not in {r["class"] for r in rows}:
            raise FnSpecError(f"--expect {expected} is not available for {fn.name}")
        verdict = next(r["verdict"] for r in rows if r["class"] == expected)
        if verdict != CONSISTENT:
            failed = True
            lines.append(f"# expectation failed: {expected} is {verdict}")
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "classify",
        "fn": fn.name,
        "window": args.window,
        "arity": getattr(fn, "arity", 1),
        "results": rows,
    }
    if args.expect:
        report["expect"] = list(args.expect)
        report["passed"] = not failed
    return report, lines, failed


def _cmd_verify(args: argparse.Namespace) -> tuple[dict, list[str], bool]:
    try:
        result: SuiteResult = run_suite(args.suite, args.window)
    except ValueError as exc:
        raise FnSpecError(str(exc))
    rows = [{"name": c.name, "ok": c.ok, "detail": c.detail} for c in result.checks]
    lines = ["check\tok\tdetail"]
    lines.extend(f"{c.name}\t{'pass' if c.ok else 'FAIL'}\t{c.detail}" for c in result.checks)
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "verify",
        "suite": result.suite,
        "window": result.window,
        "passed": result.ok,
        "results": rows,
    }
    return report, lines, not result.ok


def _build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="multclass",
        description="Classify arithmetical functions and verify their identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="emit a JSON report")
        p.add_argument(
            "--no-timing", action="store_true", help="omit timing for byte-identical output"
        )

    p_eval = sub.add_parser("eval", help="print a value table for a function spec")
    p_eval.add_argument("--fn", required=True, help="function spec, e.g. c:4 or dirichlet(mobius,one)")
    p_eval.add_argument("--r", type=int, help="modulus for bare c/c_bar/mu_bar/g")
    p_eval.add_argument("--k", type=int, help="parameter for bare eta")
    p_eval.add_argument("--n", default="1..16", help="range LO..HI (default 1..16)")
    common(p_eval)

    p_cls = sub.add_parser("classify", help="run every class check on a function spec")
    p_cls.add_argument("--fn", required=True, help="function spec")
    p_cls.add_argument("--r", type=int, help="modulus for bare c/c_bar/mu_bar/g")
    p_cls.add_argument("--k", type=int, help="parameter for bare eta")
    p_cls.add_argument("--window", type=int, default=64, help="sweep bound (default 64)")
    p_cls.add_argument("--arity", type=int, help="assert the parsed function's arity")
    p_cls.add_argument(
        "--expect",
        action="append",
        choices=EXPECT_CHOICES,
        help="exit 1 unless this class is consistent (repeatable)",
    )
    common(p_cls)

    p_ver = sub.add_parser("verify", help="run a named verification suite")
    p_ver.add_argument("--suite", required=True, help="suite name; see docs")
    p_ver.add_argument("--window", type=int, default=64, help="sweep bound (default 64)")
    common(p_ver)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_arg_parser()
    args = parser.parse_args(argv)
    handlers = {"eval": _cmd_eval, "classify": _cmd_classify, "verify": _cmd_verify}
    start = time.perf_counter()
    try:
        report, lines, failed = handlers[args.command](args)
    except (FnSpecError, nt.SieveBoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    elapsed = time.perf_counter() - start
    if args.json:
        if not args.no_timing:
            report["timing"] = {"seconds": round(elapsed, 6)}
        sys.stdout.write(json.dumps(report, indent=2, sort_keys=True) + "\n")
    else:
        if not args.no_timing:
            lines.append(f"# elapsed_seconds: {elapsed:.6f}")
        sys.stdout.write("\n".join(lines) + "\n")
    return 1 if failed else 0
