"""Ramanujan sums, the regular-integer analogue, and even-function checks.

The modulus comes first: c(r, n), c_bar(r, n). Both sums depend on n only
through gcd(|n|, r), with gcd(0, r) = r, so n may be any integer even
though the classifiers only ever look at positive n.

Everything exact is integer arithmetic over divisor sums. The exponential
sums c_oracle and c_bar_oracle are floating point on purpose: they are
independent cross-checks for the tests and are never used by the library
itself. Angles are reduced exactly ((a*n) mod r before dividing by r) so
the rounding error stays near machine epsilon times the residue count.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from . import numtheory as nt
from .arith import ArithFn, Rational, mobius
from .multivar import MultiArithFn

_TWO_PI = 2.0 * math.pi


def _gcd_level(r: int, n: int) -> int:
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"modulus must be a positive integer, got {r!r}")
    if not isinstance(n, int):
        raise ValueError(f"argument must be an integer, got {n!r}")
    return math.gcd(abs(n), r)


@lru_cache(maxsize=1 << 16)
def _c_at(r: int, level: int) -> int:
    return sum(d * mobius(r // d) for d in nt.divisors(level))


def c(r: int, n: int) -> int:
    """Ramanujan's sum c_r(n) = sum of d*mu(r/d) over d | gcd(n, r)."""
    return _c_at(r, _gcd_level(r, n))


@lru_cache(maxsize=512)
def _roots(r: int) -> tuple[complex, ...]:
    return tuple(cmath.exp(complex(0.0, _TWO_PI * k / r)) for k in range(r))


@lru_cache(maxsize=512)
def _coprime_residues(r: int) -> tuple[int, ...]:
    return tuple(a for a in range(1, r + 1) if math.gcd(a, r) == 1)


def c_oracle(r: int, n: int) -> complex:
    """Exponential-sum form of c_r(n) over the invertible residues."""
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"modulus must be a positive integer, got {r!r}")
    roots = _roots(r)
    return sum(roots[(a * n) % r] for a in _coprime_residues(r))


def g(r: int, n: int) -> int:
    """Characteristic function of the unitary divisors of r."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"argument must be a positive integer, got {n!r}")
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"modulus must be a positive integer, got {r!r}")
    return 1 if nt.is_unitary_divisor(n, r) else 0


def mu_bar(r: int, n: int) -> int:
    """The Moebius companion of g_r, multiplicative in n.

    At a prime power p^j the value depends on a = nu_p(r): for a = 1 it is
    -1 at j = 2 and 0 otherwise; for a >= 2 it is -1 at j = 1 and j = a+1,
    +1 at j = a, else 0; for p not dividing r it is plain mu at p^j.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"argument must be a positive integer, got {n!r}")
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"modulus must be a positive integer, got {r!r}")
    out = 1
    for p, j in nt.factorize(n):
        a = nt.nu(p, r)
        if a == 1:
            v = -1 if j == 2 else 0
        elif a >= 2:
            v = 1 if j == a else (-1 if j in (1, a + 1) else 0)
        else:
            v = -1 if j == 1 else 0
        if v == 0:
            return 0
        out *= v
    return out


def mu_bar_oracle(r: int, n: int) -> int:
    """mu_bar via Moebius inversion of mu_bar_r * 1 = g_r."""
    return sum(g(r, d) * mobius(n // d) for d in nt.divisors(n))


@lru_cache(maxsize=1 << 16)
def _c_bar_at(r: int, level: int) -> int:
    return sum(d * mu_bar(r, r // d) for d in nt.divisors(level))


def c_bar(r: int, n: int) -> int:
    """Regular-residue Ramanujan sum: sum of d*mu_bar_r(r/d) over
    d | gcd(n, r); equals the exponential sum over the regular residues."""
    return _c_bar_at(r, _gcd_level(r, n))


@lru_cache(maxsize=512)
def _regular(r: int) -> tuple[int, ...]:
    return tuple(nt.regular_residues(r))


def c_bar_oracle(r: int, n: int) -> complex:
    """Exponential-sum form of c_bar_r(n) over the regular residues."""
    if not isinstance(r, int) or r < 1:
        raise ValueError(f"modulus must be a positive integer, got {r!r}")
    roots = _roots(r)
    return sum(roots[(a * n) % r] for a in _regular(r))


@dataclass(frozen=True)
class EvenFnProfile:
    """Periodicity and evenness of one function against one modulus.

    witness, when a check fails, is (n, comparison point, f(n), f(point)):
    the comparison point is n + r for a periodicity failure and gcd(n, r)
    for an evenness failure.
    """

    modulus: int
    is_periodic: bool
    is_even: bool
    witness: Optional[tuple[int, int, Rational, Rational]] = None


def even_profile(f: ArithFn, r: int, periods: int = 2) -> EvenFnProfile:
    """Scan f on [1, periods*r] for r-periodicity and r-evenness."""
    if r < 1:
        raise ValueError(f"modulus must be positive, got {r}")
    if periods < 2:
        raise ValueError(f"need at least 2 periods, got {periods}")
    periodic, per_witness = True, None
    for n in range(1, (periods - 1) * r + 1):
        if f(n) != f(n + r):
            periodic, per_witness = False, (n, n + r, f(n), f(n + r))
            break
    even, even_witness = True, None
    for n in range(1, periods * r + 1):
        m = math.gcd(n, r)
        if f(n) != f(m):
            even, even_witness = False, (n, m, f(n), f(m))
            break
    witness = per_witness if per_witness is not None else even_witness
    return EvenFnProfile(r, periodic, even, witness)


def semimult_params_c(r: int) -> tuple[int, int]:
    """Closed-form shift and value for n -> c_r(n): a = r/radical(r)."""
    if r < 1:
        raise ValueError(f"modulus must be positive, got {r}")
    a = r // nt.radical(r)
    return a, c(r, a)


def semimult_params_c_bar(r: int) -> tuple[int, int]:
    """Closed-form shift and value for n -> c_bar_r(n): a is the product
    of the primes appearing in r with exponent exactly 1."""
    if r < 1:
        raise ValueError(f"modulus must be positive, got {r}")
    a = math.prod(p for p, e in nt.factorize(r) if e == 1)
    return a, c_bar(r, a)


def mu_bar_indicator(r: int) -> int:
    """The constant in the quasimultiplicativity identity for c_bar_r:
    1 when r = 1 or r is squareful, else 0; equals c_bar_r(1)."""
    if r < 1:
        raise ValueError(f"modulus must be positive, got {r}")
    return 1 if r == 1 or nt.is_squareful(r) else 0


def c_fn(r: int) -> ArithFn:
    """n -> c_r(n) as a one-variable function."""
    return ArithFn(f"c:{r}", lambda n: c(r, n))


def c_bar_fn(r: int) -> ArithFn:
    """n -> c_bar_r(n) as a one-variable function."""
    return ArithFn(f"c_bar:{r}", lambda n: c_bar(r, n))


def mu_bar_fn(r: int) -> ArithFn:
    """n -> mu_bar_r(n) as a one-variable function."""
    return ArithFn(f"mu_bar:{r}", lambda n: mu_bar(r, n))


def g_fn(r: int) -> ArithFn:
    """n -> g_r(n) as a one-variable function."""
    return ArithFn(f"g:{r}", lambda n: g(r, n))


def c_two_var() -> MultiArithFn:
    """(n, r) -> c_r(n) with the modulus in the second slot."""
    return MultiArithFn("c-two-var", 2, lambda pt: c(pt[1], pt[0]))


def c_bar_two_var() -> MultiArithFn:
    """(n, r) -> c_bar_r(n) with the modulus in the second slot."""
    return MultiArithFn("c-bar-two-var", 2, lambda pt: c_bar(pt[1], pt[0]))
