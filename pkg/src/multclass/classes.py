"""Window classifiers for the multiplicative-function hierarchy.

Each checker sweeps every instance of its defining identity that fits in a
finite window [1, N] and returns a ClassReport. A "consistent" verdict
means no counterexample exists up to the window; it is finite evidence,
not a proof. A "refuted" verdict always carries a witness whose inequality
can be re-evaluated from scratch.

Sweeps run in a fixed order (by (m*n, m) for coprime-pair laws, by (m, n)
for the gcd-lcm law), so reports are deterministic and the stored witness
is the least one. Checkers only read their input function, hence are safe
to run concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from . import numtheory as nt
from .arith import ArithFn, Rational

MULTIPLICATIVE = "multiplicative"
QUASIMULTIPLICATIVE = "quasimultiplicative"
SEMIMULTIPLICATIVE = "semimultiplicative"
SELBERG = "selberg"
REARICK = "rearick"

CONSISTENT = "consistent"
REFUTED = "refuted"
IDENTICALLY_ZERO = "identically_zero"

LAW_MULT = "f(m*n) = f(m)*f(n)"
LAW_QUASI = "f(1)*f(m*n) = f(m)*f(n)"
LAW_UNIT = "f(1) != 0 on a function with nonzero values"
LAW_SUPPORT = "f(n) = 0 whenever a does not divide n"
LAW_SHIFTED = "f(a)*f(a*m*n) = f(a*m)*f(a*n)"
LAW_REARICK = "f(m)*f(n) = f(gcd(m,n))*f(lcm(m,n))"


@dataclass(frozen=True)
class Witness:
    """A concrete failed instance of a law: lhs != rhs at (m, n)."""

    m: int
    n: int
    lhs: Rational
    rhs: Rational
    law: str
    shift: Optional[int] = None  # the a in shifted laws


def recheck_witness(f: ArithFn, w: Witness) -> bool:
    """Re-evaluate the witness's law from scratch; True when the violation
    reproduces."""
    a = w.shift if w.shift is not None else 1
    if w.law == LAW_MULT:
        return f(w.m * w.n) != f(w.m) * f(w.n)
    if w.law == LAW_QUASI:
        return f(1) * f(w.m * w.n) != f(w.m) * f(w.n)
    if w.law == LAW_UNIT:
        return f(w.m) == 0 and f(w.n) != 0
    if w.law == LAW_SUPPORT:
        return w.n % a != 0 and f(w.n) != 0
    if w.law == LAW_SHIFTED:
        return f(a) * f(a * w.m * w.n) != f(a * w.m) * f(a * w.n)
    if w.law == LAW_REARICK:
        g = math.gcd(w.m, w.n)
        return f(w.m) * f(w.n) != f(g) * f(math.lcm(w.m, w.n))
    raise ValueError(f"unknown law {w.law!r}")


@dataclass
class ClassReport:
    """Outcome of one class check over one window."""

    klass: str
    verdict: str
    window: int
    c: Optional[Rational] = None
    a: Optional[int] = None
    selberg: "Optional[SelbergFactorization]" = None
    witness: Optional[Witness] = None
    reason: str = ""

    @property
    def consistent(self) -> bool:
        return self.verdict == CONSISTENT


def coprime_pairs(bound: int) -> Iterator[tuple[int, int]]:
    """Every ordered coprime pair (m, n) with m*n <= bound, by (m*n, m)."""
    for prod in range(1, bound + 1):
        for m in nt.divisors(prod):
            n = prod // m
            if math.gcd(m, n) == 1:
                yield m, n


def _require_window(window: int) -> None:
    if window < 1:
        raise ValueError(f"window must be a positive integer, got {window}")


def _least_support(f: ArithFn, window: int) -> Optional[int]:
    for n in range(1, window + 1):
        if f(n) != 0:
            return n
    return None


def check_multiplicative(f: ArithFn, window: int) -> ClassReport:
    """Sweep f(mn) = f(m) f(n) over coprime m, n with mn <= window."""
    _require_window(window)
    for m, n in coprime_pairs(window):
        lhs = f(m * n)
        rhs = f(m) * f(n)
        if lhs != rhs:
            return ClassReport(
                MULTIPLICATIVE,
                REFUTED,
                window,
                witness=Witness(m, n, lhs, rhs, LAW_MULT),
                reason=f"f({m * n}) = {lhs} but f({m})*f({n}) = {rhs}",
            )
    return ClassReport(MULTIPLICATIVE, CONSISTENT, window)


def check_quasimultiplicative(f: ArithFn, window: int) -> ClassReport:
    """Sweep c f(mn) = f(m) f(n) over coprime pairs; c is forced to f(1).

    A function with any nonzero value but f(1) = 0 is refuted outright:
    the pair (k, 1) with f(k) != 0 forces c = f(1) = 0, which the class
    forbids.
    """
    _require_window(window)
    k = _least_support(f, window)
    if k is None:
        return ClassReport(QUASIMULTIPLICATIVE, IDENTICALLY_ZERO, window)
    f1 = f(1)
    if f1 == 0:
        return ClassReport(
            QUASIMULTIPLICATIVE,
            REFUTED,
            window,
            witness=Witness(1, k, f1, f(k), LAW_UNIT),
            reason=f"f(1) = 0 although f({k}) = {f(k)} != 0, so the forced constant vanishes",
        )
    for m, n in coprime_pairs(window):
        lhs = f1 * f(m * n)
        rhs = f(m) * f(n)
        if lhs != rhs:
            return ClassReport(
                QUASIMULTIPLICATIVE,
                REFUTED,
                window,
                c=f1,
                witness=Witness(m, n, lhs, rhs, LAW_QUASI),
                reason=f"f(1)*f({m * n}) = {lhs} but f({m})*f({n}) = {rhs}",
            )
    return ClassReport(QUASIMULTIPLICATIVE, CONSISTENT, window, c=f1)


def check_semimultiplicative(f: ArithFn, window: int) -> ClassReport:
    """Locate the least support point a, require the support to lie in a's
    multiples, then sweep f(a) f(amn) = f(am) f(an) over coprime m, n."""
    _require_window(window)
    a = _least_support(f, window)
    if a is None:
        return ClassReport(SEMIMULTIPLICATIVE, IDENTICALLY_ZERO, window)
    for n in range(a + 1, window + 1):
        if n % a != 0 and f(n) != 0:
            return ClassReport(
                SEMIMULTIPLICATIVE,
                REFUTED,
                window,
                a=a,
                witness=Witness(a, n, f(n), 0, LAW_SUPPORT, shift=a),
                reason=f"least support point is a = {a}, yet f({n}) = {f(n)} with {a} not dividing {n}",
            )
    fa = f(a)
    for m, n in coprime_pairs(window // a):
        lhs = fa * f(a * m * n)
        rhs = f(a * m) * f(a * n)
        if lhs != rhs:
            return ClassReport(
                SEMIMULTIPLICATIVE,
                REFUTED,
                window,
                a=a,
                c=fa,
                witness=Witness(m, n, lhs, rhs, LAW_SHIFTED, shift=a),
                reason=f"f({a})*f({a * m * n}) = {lhs} but f({a * m})*f({a * n}) = {rhs}",
            )
    return ClassReport(SEMIMULTIPLICATIVE, CONSISTENT, window, c=fa, a=a)


def check_rearick(f: ArithFn, window: int) -> ClassReport:
    """Sweep the gcd-lcm identity f(m) f(n) = f((m,n)) f([m,n]) for all
    m, n <= window.

    The lcm is evaluated directly even when it exceeds the window (ArithFn
    is total, so no truncation happens). Pairs where {gcd, lcm} equals
    {m, n} hold trivially and are skipped.
    """
    _require_window(window)
    for m in range(1, window + 1):
        for n in range(m + 1, window + 1):
            if n % m == 0:
                continue
            lhs = f(m) * f(n)
            rhs = f(math.gcd(m, n)) * f(math.lcm(m, n))
            if lhs != rhs:
                return ClassReport(
                    REARICK,
                    REFUTED,
                    window,
                    witness=Witness(m, n, lhs, rhs, LAW_REARICK),
                    reason=(
                        f"f({m})*f({n}) = {lhs} but "
                        f"f({math.gcd(m, n)})*f({math.lcm(m, n)}) = {rhs}"
                    ),
                )
    return ClassReport(REARICK, CONSISTENT, window)


@dataclass(eq=False)
class SelbergFactorization:
    """Leading constant f(a) plus per-prime factor columns F_p(e).

    Stored columns cover every exponent whose probe point a*p^(e - nu_p(a))
    fits inside the window; factor() computes anything further on demand
    from the source function. Primes absent from the tables behave as
    F_p(0) = 1 columns.
    """

    constant: Rational
    a: int
    window: int
    tables: dict[int, dict[int, Fraction]]
    source: ArithFn

    def factor(self, p: int, e: int) -> Fraction:
        col = self.tables.get(p)
        if col is not None and e in col:
            return col[e]
        na = nt.nu(p, self.a)
        if e < na:
            return Fraction(0)
        return Fraction(self.source(self.a * p ** (e - na))) / Fraction(self.constant)

    def reconstruct(self, n: int) -> Fraction:
        """constant * product of F_p(nu_p(n)) over the relevant primes."""
        val = Fraction(self.constant)
        ps = sorted(set(nt.factorize(n).primes()) | set(nt.factorize(self.a).primes()))
        for p in ps:
            val *= self.factor(p, nt.nu(p, n))
        return val


def extract_selberg(
    f: ArithFn, window: int, report: Optional[ClassReport] = None
) -> SelbergFactorization:
    """Read the per-prime factor system off a window-consistent
    semimultiplicative function: F_p(e) = f(a p^(e - nu_p(a))) / f(a), with
    value 0 for e < nu_p(a)."""
    rep = report if report is not None else check_semimultiplicative(f, window)
    if rep.verdict != CONSISTENT:
        raise ValueError(
            f"{f.name} is not semimultiplicative-consistent on window {window} "
            f"(verdict {rep.verdict})"
        )
    assert rep.a is not None and rep.c is not None
    a, fa = rep.a, rep.c
    tables: dict[int, dict[int, Fraction]] = {}
    for p in nt.primes_up_to(window):
        na = nt.nu(p, a)
        col: dict[int, Fraction] = {}
        e = 0
        while True:
            if e < na:
                col[e] = Fraction(0)
            else:
                probe = a * p ** (e - na)
                if probe > window:
                    break
                col[e] = Fraction(f(probe)) / Fraction(fa)
            e += 1
        tables[p] = col
    return SelbergFactorization(fa, a, window, tables, f)


def classify_all(f: ArithFn, window: int) -> dict[str, ClassReport]:
    """All four class checks for one function.

    In one variable the Selberg class coincides with the semimultiplicative
    class, so the selberg report carries the semimultiplicative verdict plus
    the extracted factor system when consistent.
    """
    mult = check_multiplicative(f, window)
    quasi = check_quasimultiplicative(f, window)
    semi = check_semimultiplicative(f, window)
    selberg = ClassReport(
        SELBERG, semi.verdict, window, c=semi.c, a=semi.a,
        witness=semi.witness, reason=semi.reason,
    )
    if semi.verdict == CONSISTENT:
        selberg.selberg = extract_selberg(f, window, report=semi)
    return {
        MULTIPLICATIVE: mult,
        QUASIMULTIPLICATIVE: quasi,
        SEMIMULTIPLICATIVE: semi,
        SELBERG: selberg,
    }
