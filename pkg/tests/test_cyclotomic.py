import random
from fractions import Fraction

import pytest

from hyperprym.cyclotomic import Cyc, minimal_polynomial, real_subfield_minpoly
from hyperprym.polys import QPoly


def test_root_relations():
    for d in (5, 7, 11):
        xi = Cyc.root(d)
        assert xi**d == Cyc.one(d)
        assert xi ** (d - 1) == xi.inverse()
        s = Cyc.zero(d)
        for k in range(d):
            s = s + Cyc.root(d, k)
        assert s.is_zero()


def test_field_ops():
    rng = random.Random(3)
    d = 7
    for _ in range(20):
        a = Cyc(d, [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(d - 1)])
        if a.is_zero():
            continue
        assert a * a.inverse() == Cyc.one(d)
        b = Cyc(d, [rng.randint(-3, 3) for _ in range(d - 1)])
        assert (a + b) * (a - b) == a * a - b * b


def test_galois_is_field_automorphism():
    d = 11
    xi = Cyc.root(d)
    a = xi + 3 * xi**4
    b = xi**2 - xi.inverse()
    for l in (2, 3, 7):
        assert (a * b).galois(l) == a.galois(l) * b.galois(l)
        assert (a + b).galois(l) == a.galois(l) + b.galois(l)


# minimal polynomial of xi + xi^(-1): degree (d-1)/2, totally real.
# d=5 and d=7 values are classical (golden-ratio and heptagon constants).
def test_real_subfield_minpolys():
    assert real_subfield_minpoly(5) == QPoly([-1, 1, 1])  # x^2 + x - 1
    assert real_subfield_minpoly(7) == QPoly([-1, -2, 1, 1])  # x^3 + x^2 - 2x - 1
    p11 = real_subfield_minpoly(11)
    assert p11.degree == 5
    eta = Cyc.root(11) + Cyc.root(11, 10)
    assert eta * 0 + sum_eval(p11, eta) == Cyc.zero(11)


def sum_eval(p: QPoly, e: Cyc) -> Cyc:
    acc = Cyc.zero(e.d)
    power = Cyc.one(e.d)
    for c in p.c:
        acc = acc + power * c
        power = power * e
    return acc


def test_minimal_polynomial_of_root_is_phi():
    d = 5
    mp = minimal_polynomial(Cyc.root(d))
    assert mp == QPoly([1, 1, 1, 1, 1])


def test_rejects_composite_order():
    with pytest.raises(ValueError):
        Cyc(9, [1])
