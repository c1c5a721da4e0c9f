import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from multclass import numtheory as nt
from multclass.arith import (
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

mobius = classical("mobius")
phi = classical("euler_phi")
one = classical("one")
identity_n = classical("identity_n")

WINDOW = 200


def test_classical_tables():
    assert mobius.table(10) == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    assert phi.table(10) == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4]
    assert one.table(4) == [1, 1, 1, 1]
    assert identity_n.table(4) == [1, 2, 3, 4]


def test_arithfn_rejects_bad_arguments():
    with pytest.raises(ValueError):
        mobius(0)
    with pytest.raises(ValueError):
        mobius(-3)
    with pytest.raises(ValueError):
        mobius(2.5)


def test_dirichlet_mobius_one_is_unit():
    # mu * 1 = e, the convolution identity
    e = dirichlet(mobius, one)
    assert e(1) == 1
    for n in range(2, WINDOW + 1):
        assert e(n) == 0, n


def test_dirichlet_phi_one_is_n():
    f = dirichlet(phi, one)
    for n in range(1, WINDOW + 1):
        assert f(n) == n


def test_dirichlet_mobius_n_is_phi():
    f = dirichlet(mobius, identity_n)
    for n in range(1, WINDOW + 1):
        assert f(n) == phi(n)


def test_dirichlet_brute():
    f = dirichlet(phi, phi)
    for n in range(1, 60):
        assert f(n) == sum(phi(d) * phi(n // d) for d in nt.divisors(n))


def test_unitary_brute():
    f = unitary(mobius, phi)
    for n in range(1, 60):
        assert f(n) == sum(
            mobius(d) * phi(n // d)
            for d in nt.divisors(n)
            if math.gcd(d, n // d) == 1
        )


def test_pointwise_product():
    f = pointwise_product(mobius, phi)
    for n in range(1, 40):
        assert f(n) == mobius(n) * phi(n)


def test_scale():
    f = scale(mobius, 2)
    assert f.table(6) == [2, -2, -2, 0, -2, 2]
    g = scale(phi, Fraction(-3, 2))
    assert g(4) == -3
    assert g(5) == -6
    with pytest.raises(ValueError):
        scale(mobius, 0)


def test_compose_dilate():
    f = compose(phi, "dilate_kn", 3)
    for n in range(1, 40):
        assert f(n) == phi(3 * n)


def test_compose_k_over_n():
    # f(n) = phi(12/n) when n | 12, else 0
    f = compose(phi, "k_over_n", 12)
    assert [f(n) for n in range(1, 14)] == [4, 2, 2, 2, 0, 1, 0, 0, 0, 0, 0, 1, 0]


def test_compose_n_over_k():
    f = compose(phi, "n_over_k", 4)
    assert [f(n) for n in range(1, 13)] == [0, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 2]


def test_compose_gcd_lcm():
    f = compose(phi, "gcd_k", 12)
    g = compose(phi, "lcm_k", 4)
    for n in range(1, 40):
        assert f(n) == phi(math.gcd(n, 12))
        assert g(n) == phi((n * 4) // math.gcd(n, 4))


def test_compose_rejects_unknown_kind():
    with pytest.raises(ValueError):
        compose(phi, "quotient", 3)


def test_eta():
    f = eta(6)
    assert [f(n) for n in range(1, 8)] == [1, 2, 3, 0, 0, 6, 0]


def test_sum_of_squares_brute():
    def brute(s, n):
        # all integer s-tuples with squares summing to n
        bound = math.isqrt(n)
        counts = [0] * (n + 1)
        counts[0] = 1
        for _ in range(s):
            nxt = [0] * (n + 1)
            for total in range(n + 1):
                if counts[total] == 0:
                    continue
                for x in range(-bound, bound + 1):
                    t = total + x * x
                    if t <= n:
                        nxt[t] += counts[total]
            counts = nxt
        return counts[n]

    for s in (2, 4, 8):
        f = sum_of_squares(s)
        for n in range(1, 30):
            assert f(n) == brute(s, n), (s, n)


def test_sum_of_squares_known_values():
    r2 = sum_of_squares(2)
    assert [r2(n) for n in (1, 2, 3, 4, 5, 25)] == [4, 4, 0, 4, 8, 12]
    assert sum_of_squares(4)(1) == 8
    assert sum_of_squares(8)(1) == 16
    with pytest.raises(ValueError):
        sum_of_squares(3)


def test_format_rational():
    assert format_rational(5) == "5"
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-3, 2)) == "-3/2"


@given(st.integers(min_value=1, max_value=400), st.integers(min_value=1, max_value=400))
def test_dirichlet_commutes(m, n):
    f = dirichlet(mobius, phi)
    g = dirichlet(phi, mobius)
    assert f(m) == g(m)
    assert f(n) == g(n)


def test_names_are_stable():
    assert mobius.name == "mobius"
    assert eta(4).name == "eta:4"
    assert sum_of_squares(2).name == "r2"
    assert dirichlet(mobius, one).name == "dirichlet(mobius,one)"
    assert compose(phi, "gcd_k", 12).name == "gcdk:12(phi)"
