"""Arithmetical functions with exact rational values.

An ArithFn pairs a total map from positive integers to ints or Fractions
with a short printable name. Values stay exact end to end: convolutions and
products are computed over the divisor lattice with integer/Fraction
arithmetic only. Evaluation is memoized per function; the cache only skips
recomputation and never changes a value, so sharing a function between
threads is safe.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Union

from . import numtheory as nt

Rational = Union[int, Fraction]

COMPOSE_KINDS = ("dilate_kn", "k_over_n", "n_over_k", "gcd_k", "lcm_k")
_COMPOSE_TOKEN = {
    "dilate_kn": "dilate",
    "k_over_n": "kovern",
    "n_over_k": "noverk",
    "gcd_k": "gcdk",
    "lcm_k": "lcmk",
}


def format_rational(v: Rational) -> str:
    """Canonical text form: "7", "-2", "3/2"."""
    f = Fraction(v)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


class ArithFn:
    """A named total function on positive integers with exact values."""

    __slots__ = ("name", "_eval")

    def __init__(
        self,
        name: str,
        fn: Callable[[int], Rational],
        memo: bool = True,
        memo_size: int = 1 << 17,
    ):
        self.name = name
        self._eval = lru_cache(maxsize=memo_size)(fn) if memo else fn

    def __call__(self, n: int) -> Rational:
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"{self.name} is defined on positive integers, got {n!r}")
        return self._eval(n)

    def table(self, upper: int) -> list[Rational]:
        """Values at 1..upper; bulk form used by sweeps and the CLI."""
        return [self(n) for n in range(1, upper + 1)]

    def __repr__(self) -> str:
        return f"ArithFn({self.name})"


def _mobius_eval(n: int) -> int:
    fz = nt.factorize(n)
    if any(e >= 2 for _, e in fz):
        return 0
    return -1 if len(fz) % 2 else 1


mobius = ArithFn("mobius", _mobius_eval)
euler_phi = ArithFn("phi", nt.euler_phi)
one = ArithFn("one", lambda n: 1)
identity_n = ArithFn("identity", lambda n: n, memo=False)

_CLASSICAL = {
    "mobius": mobius,
    "euler_phi": euler_phi,
    "phi": euler_phi,
    "one": one,
    "identity_n": identity_n,
    "identity": identity_n,
}


def classical(name: str) -> ArithFn:
    """One of the stock functions: mobius, euler_phi, one, identity_n."""
    try:
        return _CLASSICAL[name]
    except KeyError:
        raise ValueError(f"unknown classical function {name!r}") from None


def eta(k: int) -> ArithFn:
    """m -> m when m divides k, else 0."""
    if k < 1:
        raise ValueError(f"eta needs a positive parameter, got {k}")
    return ArithFn(f"eta:{k}", lambda m: m if k % m == 0 else 0)


def dirichlet(f: ArithFn, g: ArithFn) -> ArithFn:
    """Dirichlet convolution: n -> sum of f(d) g(n/d) over divisors d of n."""

    def conv(n: int) -> Rational:
        return sum(f(d) * g(n // d) for d in nt.divisors(n))

    return ArithFn(f"dirichlet({f.name},{g.name})", conv)


def unitary(f: ArithFn, g: ArithFn) -> ArithFn:
    """Unitary convolution: the divisor sum restricted to gcd(d, n/d) = 1."""

    def conv(n: int) -> Rational:
        return sum(f(d) * g(n // d) for d in nt.unitary_divisors(n))

    return ArithFn(f"unitary({f.name},{g.name})", conv)


def pointwise_product(f: ArithFn, g: ArithFn) -> ArithFn:
    """n -> f(n) * g(n)."""
    return ArithFn(f"product({f.name},{g.name})", lambda n: f(n) * g(n))


def scale(f: ArithFn, c: Rational) -> ArithFn:
    """n -> c * f(n) for a nonzero constant c."""
    cf = Fraction(c)
    if cf == 0:
        raise ValueError("scale constant must be nonzero")
    cv: Rational = cf.numerator if cf.denominator == 1 else cf
    return ArithFn(f"scale:{format_rational(cf)}({f.name})", lambda n: cv * f(n))


def compose(f: ArithFn, kind: str, k: int) -> ArithFn:
    """The five parameterized composition transforms of f by k.

    dilate_kn: f(k*n); k_over_n: f(k/n); n_over_k: f(n/k);
    gcd_k: f(gcd(k, n)); lcm_k: f(lcm(k, n)). Quotients that are not
    positive integers contribute 0 (zero extension).
    """
    if k < 1:
        raise ValueError(f"composition parameter must be positive, got {k}")
    if kind == "dilate_kn":
        fn = lambda n: f(k * n)
    elif kind == "k_over_n":
        fn = lambda n: f(k // n) if k % n == 0 else 0
    elif kind == "n_over_k":
        fn = lambda n: f(n // k) if n % k == 0 else 0
    elif kind == "gcd_k":
        fn = lambda n: f(math.gcd(k, n))
    elif kind == "lcm_k":
        fn = lambda n: f(math.lcm(k, n))
    else:
        raise ValueError(f"unknown composition kind {kind!r}")
    return ArithFn(f"{_COMPOSE_TOKEN[kind]}:{k}({f.name})", fn)


# counts[m] = number of integer tuples (x_1, ..., x_s) with sum of squares m;
# built one coordinate at a time, so each level is a plain enumeration over
# the last coordinate (no closed-form shortcuts).
_square_tables: dict[int, list[int]] = {}


def _square_rep_counts(s: int, upper: int) -> list[int]:
    have = _square_tables.get(s)
    if have is not None and len(have) > upper:
        return have
    target = max(upper, 256, 2 * (len(have) - 1) if have else 0)
    counts = [1] + [0] * target
    for _ in range(s):
        nxt = [0] * (target + 1)
        for m in range(target + 1):
            c = counts[m]
            x = 1
            while x * x <= m:
                c += 2 * counts[m - x * x]
                x += 1
            nxt[m] = c
        counts = nxt
    _square_tables[s] = counts
    return counts


def sum_of_squares(s: int, budget: int = 20000) -> ArithFn:
    """r_s(n): representations of n as an ordered sum of s signed squares.

    Counted by exhaustive enumeration; no divisor-sum evaluation is used
    anywhere. Arguments above `budget` are rejected to keep the enumeration
    bounded.
    """
    if s not in (2, 4, 8):
        raise ValueError(f"s must be 2, 4 or 8, got {s}")

    def fn(n: int) -> int:
        if n > budget:
            raise ValueError(f"r{s} enumeration is budgeted to n <= {budget}, got {n}")
        return _square_rep_counts(s, n)[n]

    return ArithFn(f"r{s}", fn, memo=False)
