"""Named verification suites behind the command-line verify command.

Each suite sweeps one family of identities or classifier properties over a
window and returns per-item checks with short deterministic details, so a
JSON report of a suite run is stable enough for golden files.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from . import numtheory as nt
from . import ramanujan as rj
from .arith import (
    COMPOSE_KINDS,
    compose,
    dirichlet,
    eta,
    euler_phi,
    mobius,
    one,
    pointwise_product,
    scale,
    sum_of_squares,
    unitary,
)
from .classes import (
    CONSISTENT,
    IDENTICALLY_ZERO,
    check_multiplicative,
    check_quasimultiplicative,
    check_rearick,
    check_semimultiplicative,
    extract_selberg,
)
from .corpus import corpus
from .multivar import (
    check_semimultiplicative_u,
    check_two_variable_theorem,
    dirichlet_u,
    extract_selberg_u,
    tensor,
)

ORACLE_TOLERANCE = 1e-6


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class SuiteResult:
    suite: str
    window: int
    checks: list[Check]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]


def suite_rearick(window: int) -> SuiteResult:
    """The gcd-lcm identity holds exactly for the semimultiplicative corpus
    members (the zero function satisfies it vacuously)."""
    checks = []
    for f in corpus():
        semi = check_semimultiplicative(f, window)
        rea = check_rearick(f, window)
        semi_ok = semi.verdict in (CONSISTENT, IDENTICALLY_ZERO)
        agree = (rea.verdict == CONSISTENT) == semi_ok
        checks.append(Check(f.name, agree, f"rearick={rea.verdict} semi={semi.verdict}"))
    return SuiteResult("rearick", window, checks)


def suite_selberg_reconstruct(window: int) -> SuiteResult:
    """Factor tables read off each consistent corpus function reproduce it."""
    checks = []
    for f in corpus():
        rep = check_semimultiplicative(f, window)
        if rep.verdict != CONSISTENT:
            checks.append(Check(f.name, True, f"skipped: {rep.verdict}"))
            continue
        fac = extract_selberg(f, window, report=rep)
        bad = next((n for n in range(1, window + 1) if fac.reconstruct(n) != f(n)), None)
        checks.append(
            Check(f.name, bad is None, "reconstructed" if bad is None else f"mismatch at n={bad}")
        )
    uw = min(window, 12)
    import itertools

    for mf in (
        tensor(mobius, mobius),
        tensor(rj.c_fn(4), rj.c_fn(4)),
        tensor(scale(mobius, 2), euler_phi),
    ):
        rep = check_semimultiplicative_u(mf, uw)
        if rep.verdict != CONSISTENT:
            checks.append(Check(mf.name, False, f"unexpected verdict {rep.verdict}"))
            continue
        fac = extract_selberg_u(mf, uw, report=rep)
        bad = next(
            (
                pt
                for pt in itertools.product(range(1, uw + 1), repeat=mf.arity)
                if fac.reconstruct(pt) != mf(pt)
            ),
            None,
        )
        checks.append(
            Check(mf.name, bad is None, "reconstructed" if bad is None else f"mismatch at {bad}")
        )
    return SuiteResult("selberg-reconstruct", window, checks)


def suite_mu_bar_dual(window: int) -> SuiteResult:
    """Prime-power recipe vs Moebius inversion of mu_bar * 1 = g."""
    checks = []
    for r in range(1, window + 1):
        bad = next(
            (n for n in range(1, window + 1) if rj.mu_bar(r, n) != rj.mu_bar_oracle(r, n)),
            None,
        )
        checks.append(Check(f"r={r}", bad is None, "" if bad is None else f"mismatch at n={bad}"))
    return SuiteResult("mu-bar-dual", window, checks)


def suite_unitary_identity(window: int) -> SuiteResult:
    """c_bar as a unitary-divisor sum of c, and both families as Dirichlet
    convolutions in n of their eta twists with the constant 1."""
    checks = []
    for r in range(1, window + 1):
        uds = nt.unitary_divisors(r)
        bad = next(
            (
                n
                for n in range(1, window + 1)
                if rj.c_bar(r, n) != sum(rj.c(d, n) for d in uds)
            ),
            None,
        )
        checks.append(
            Check(f"unitary:r={r}", bad is None, "" if bad is None else f"mismatch at n={bad}")
        )
    for r in range(1, min(window, 64) + 1):
        twist = pointwise_product(eta(r), compose(mobius, "k_over_n", r))
        conv = dirichlet(twist, one)
        bad = next((n for n in range(1, 4 * r + 1) if conv(n) != rj.c(r, n)), None)
        checks.append(
            Check(f"conv-n:c:r={r}", bad is None, "" if bad is None else f"mismatch at n={bad}")
        )
        twist_bar = pointwise_product(eta(r), compose(rj.mu_bar_fn(r), "k_over_n", r))
        conv_bar = dirichlet(twist_bar, one)
        bad = next((n for n in range(1, 4 * r + 1) if conv_bar(n) != rj.c_bar(r, n)), None)
        checks.append(
            Check(
                f"conv-n:c_bar:r={r}", bad is None, "" if bad is None else f"mismatch at n={bad}"
            )
        )
    return SuiteResult("unitary-identity", window, checks)


def suite_quasi_identities(window: int) -> SuiteResult:
    """c_r(m)c_r(n) = mu(r) c_r(mn) and the c_bar analogue with the
    squareful indicator, for coprime m, n."""
    checks = []
    for r in range(1, window + 1):
        mu_r = mobius(r)
        bad = None
        for m in range(1, window + 1):
            for n in range(1, window + 1):
                if math.gcd(m, n) != 1:
                    continue
                if rj.c(r, m) * rj.c(r, n) != mu_r * rj.c(r, m * n):
                    bad = (m, n)
                    break
            if bad:
                break
        checks.append(Check(f"c:r={r}", bad is None, "" if bad is None else f"fails at {bad}"))
    for r in range(1, window + 1):
        ind = rj.mu_bar_indicator(r)
        bad = None
        for m in range(1, window + 1):
            for n in range(1, window + 1):
                if math.gcd(m, n) != 1:
                    continue
                if rj.c_bar(r, m) * rj.c_bar(r, n) != ind * rj.c_bar(r, m * n):
                    bad = (m, n)
                    break
            if bad:
                break
        checks.append(
            Check(f"c_bar:r={r}", bad is None, "" if bad is None else f"fails at {bad}")
        )
    return SuiteResult("quasi-identities", window, checks)


def suite_oracle_agreement(window: int) -> SuiteResult:
    """Divisor-sum values vs exponential sums, both families."""
    checks = []
    for r in range(1, window + 1):
        bad = None
        for n in range(1, window + 1):
            z = rj.c_oracle(r, n)
            if abs(z.real - rj.c(r, n)) > ORACLE_TOLERANCE or abs(z.imag) > ORACLE_TOLERANCE:
                bad = ("c", n)
                break
            zb = rj.c_bar_oracle(r, n)
            if (
                abs(zb.real - rj.c_bar(r, n)) > ORACLE_TOLERANCE
                or abs(zb.imag) > ORACLE_TOLERANCE
            ):
                bad = ("c_bar", n)
                break
        checks.append(Check(f"r={r}", bad is None, "" if bad is None else f"{bad[0]} at n={bad[1]}"))
    return SuiteResult("oracle-agreement", window, checks)


def _regular_count_brute(r: int) -> int:
    return sum(
        1 for a in range(r) if any((a * a * x - a) % r == 0 for x in range(r))
    )


def suite_two_variable_theorem(window: int) -> SuiteResult:
    """Evenness in n plus multiplicativity in r imply two-variable
    multiplicativity, for both families; regular-residue counts agree with
    brute-forced solvability of a*a*x = a (mod r) and the totient formula."""
    checks = []
    w = min(window, 30)
    for mf, label in ((rj.c_two_var(), "c"), (rj.c_bar_two_var(), "c_bar")):
        rep = check_two_variable_theorem(mf, w)
        checks.append(
            Check(
                label,
                rep.ok,
                f"even={rep.even_ok} mult_r={rep.mult_in_modulus_ok} "
                f"twovar={rep.conclusion.verdict} chain={rep.chain_ok}",
            )
        )
    bad = None
    for r in range(1, window + 1):
        formula = math.prod(nt.euler_phi(p**k) + 1 for p, k in nt.factorize(r))
        if not (_regular_count_brute(r) == len(nt.regular_residues(r)) == formula):
            bad = r
            break
    checks.append(Check("regular-count", bad is None, "" if bad is None else f"fails at r={bad}"))
    return SuiteResult("two-variable-theorem", window, checks)


def suite_closure_properties(window: int) -> SuiteResult:
    """Algebraic laws of the convolutions and the class-closure statements
    exercised on concrete pairs."""
    w = min(window, 48)
    checks = []

    inv = dirichlet(mobius, one)
    bad = next((n for n in range(1, w + 1) if inv(n) != (1 if n == 1 else 0)), None)
    checks.append(Check("mobius-inversion", bad is None, "" if bad is None else f"at n={bad}"))

    ab = dirichlet(mobius, euler_phi)
    ba = dirichlet(euler_phi, mobius)
    bad = next((n for n in range(1, w + 1) if ab(n) != ba(n)), None)
    checks.append(Check("dirichlet-commutes", bad is None, "" if bad is None else f"at n={bad}"))
    left = dirichlet(dirichlet(mobius, euler_phi), one)
    right = dirichlet(mobius, dirichlet(euler_phi, one))
    bad = next((n for n in range(1, w + 1) if left(n) != right(n)), None)
    checks.append(Check("dirichlet-associates", bad is None, "" if bad is None else f"at n={bad}"))
    uab = unitary(mobius, euler_phi)
    uba = unitary(euler_phi, mobius)
    bad = next((n for n in range(1, w + 1) if uab(n) != uba(n)), None)
    checks.append(Check("unitary-commutes", bad is None, "" if bad is None else f"at n={bad}"))
    uleft = unitary(unitary(mobius, euler_phi), one)
    uright = unitary(mobius, unitary(euler_phi, one))
    bad = next((n for n in range(1, w + 1) if uleft(n) != uright(n)), None)
    checks.append(Check("unitary-associates", bad is None, "" if bad is None else f"at n={bad}"))

    rep = check_multiplicative(dirichlet(mobius, euler_phi), w)
    checks.append(Check("dirichlet-multiplicative", rep.verdict == CONSISTENT, rep.verdict))

    fc, gc = rj.c_fn(4), rj.c_bar_fn(12)
    closure_cases = [
        ("dirichlet", dirichlet(fc, gc)),
        ("product", pointwise_product(fc, gc)),
    ]
    closure_cases.extend((f"compose:{kind}", compose(fc, kind, 2)) for kind in COMPOSE_KINDS)
    for name, fn in closure_cases:
        rep = check_semimultiplicative(fn, w)
        checks.append(Check(f"semi-closure:{name}", rep.verdict == CONSISTENT, rep.verdict))

    rep = check_semimultiplicative(compose(euler_phi, "gcd_k", 12), w)
    checks.append(Check("semi-closure:gcdk-of-multiplicative", rep.verdict == CONSISTENT, rep.verdict))

    uw = min(window, 10)
    conv = dirichlet_u(tensor(mobius, mobius), tensor(euler_phi, euler_phi))
    urep = check_semimultiplicative_u(conv, uw)
    checks.append(Check("dirichlet-u-semi", urep.verdict == CONSISTENT, urep.verdict))

    return SuiteResult("closure-properties", window, checks)


def suite_lahiri_rs(window: int) -> SuiteResult:
    """The square-count functions are quasimultiplicative with c = r_s(1)."""
    w = min(window, 200)
    checks = []
    for s in (2, 4, 8):
        f = sum_of_squares(s)
        rep = check_quasimultiplicative(f, w)
        ok = rep.verdict == CONSISTENT and rep.c == f(1)
        checks.append(Check(f"r{s}", ok, f"verdict={rep.verdict} c={rep.c}"))
    return SuiteResult("lahiri-rs", window, checks)


SUITES: dict[str, Callable[[int], SuiteResult]] = {
    "rearick": suite_rearick,
    "selberg-reconstruct": suite_selberg_reconstruct,
    "mu-bar-dual": suite_mu_bar_dual,
    "unitary-identity": suite_unitary_identity,
    "quasi-identities": suite_quasi_identities,
    "oracle-agreement": suite_oracle_agreement,
    "two-variable-theorem": suite_two_variable_theorem,
    "closure-properties": suite_closure_properties,
    "lahiri-rs": suite_lahiri_rs,
}


def run_suite(name: str, window: int) -> SuiteResult:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; known: {', '.join(sorted(SUITES))}")
    if window < 2:
        raise ValueError(f"window must be at least 2, got {window}")
    return SUITES[name](window)
