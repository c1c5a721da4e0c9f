"""The shared one-variable test corpus.

Classical seeds, both Ramanujan families up to modulus 48, and a spread of
convolution, pointwise-product, and composition closures of those. The
verification suites and the class-hierarchy checks all sweep this list, so
it deliberately mixes multiplicative, quasimultiplicative (including
negative constants), shifted, and finitely-supported functions.
"""

from __future__ import annotations

from .arith import (
    COMPOSE_KINDS,
    ArithFn,
    compose,
    dirichlet,
    euler_phi,
    mobius,
    pointwise_product,
    scale,
)
from .ramanujan import c_bar_fn, c_fn

CORPUS_MODULUS_BOUND = 48


def base_functions() -> list[ArithFn]:
    """Seeds: mu, phi, 2*mu, and both Ramanujan families."""
    fns = [mobius, euler_phi, scale(mobius, 2)]
    fns.extend(c_fn(r) for r in range(1, CORPUS_MODULUS_BOUND + 1))
    fns.extend(c_bar_fn(r) for r in range(1, CORPUS_MODULUS_BOUND + 1))
    return fns


def closure_functions() -> list[ArithFn]:
    """Convolutions, products, and all five compositions over the seeds."""
    out = [
        dirichlet(mobius, euler_phi),
        dirichlet(c_fn(4), c_bar_fn(12)),
        dirichlet(c_fn(8), c_fn(8)),
        dirichlet(scale(mobius, 2), c_fn(9)),
        pointwise_product(mobius, euler_phi),
        pointwise_product(c_fn(4), c_bar_fn(6)),
        pointwise_product(c_fn(9), c_fn(9)),
    ]
    for kind in COMPOSE_KINDS:
        for f, k in ((euler_phi, 2), (euler_phi, 3), (c_fn(4), 2), (c_fn(4), 4)):
            out.append(compose(f, kind, k))
    return out


def corpus() -> list[ArithFn]:
    """Fresh corpus instances; per-function memo caches start empty."""
    return base_functions() + closure_functions()
