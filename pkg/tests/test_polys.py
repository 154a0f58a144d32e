import random
from fractions import Fraction

from hyperprym.polys import (
    QPoly,
    RatFun,
    frac_str,
    irreducible_factors_q,
    is_squarefree,
    padd,
    pdivmod,
    pgcd,
    pmul,
    pmultiplicity,
    ppow,
    pxgcd,
    qpoly,
    ratfun_q,
)


def rand_poly(rng, deg, height=9):
    return qpoly([rng.randint(-height, height) for _ in range(deg + 1)])


def test_divmod_roundtrip():
    rng = random.Random(7)
    for _ in range(50):
        a = rand_poly(rng, rng.randint(0, 6))
        b = rand_poly(rng, rng.randint(0, 4))
        if not b:
            continue
        q, r = pdivmod(a, b)
        assert padd(pmul(q, b), r) == a
        assert len(r) < len(b) or not r


def test_xgcd_identity():
    rng = random.Random(11)
    for _ in range(40):
        a = rand_poly(rng, rng.randint(0, 5))
        b = rand_poly(rng, rng.randint(0, 5))
        if not a and not b:
            continue
        g, s, t = pxgcd(a, b)
        assert padd(pmul(s, a), pmul(t, b)) == g
        assert g == pgcd(a, b)


def test_pow_and_multiplicity():
    x_minus_2 = qpoly([-2, 1])
    p = pmul(ppow(x_minus_2, 3), qpoly([1, 0, 1]))
    assert pmultiplicity(p, x_minus_2) == 3
    assert pmultiplicity(p, qpoly([1, 1])) == 0


def test_squarefree():
    assert is_squarefree(qpoly([0, -1, 0, 0, 0, 1]))  # x^5 - x
    assert not is_squarefree(pmul(qpoly([1, 1]), qpoly([1, 1])))


def test_qpoly_ops():
    x = QPoly.x()
    f = (x**2 + 1) ** 2 - x**5
    assert f.degree == 5
    assert f(Fraction(0)) == 1
    assert f == QPoly([1, 0, 2, 0, 1, -1])
    g = f.gcd(f.deriv())
    assert g.degree == 0
    assert (f * x).exact_div(x) == f


def test_ratfun_normal_form():
    a = ratfun_q([0, 1], [1])  # x
    b = ratfun_q([0, 0, 2], [0, 2])  # 2x^2 / 2x == x
    assert a == b
    c = a / ratfun_q([1, 1])
    assert c * ratfun_q([1, 1]) == a
    assert (a - a).is_zero()


def test_ratfun_denominator_monic():
    r = ratfun_q([1], [2, 4])
    assert r.den[-1] == 1
    assert r.eval(Fraction(1)) == Fraction(1, 6)


def test_frac_str():
    assert frac_str(Fraction(-3, 7)) == "-3/7"
    assert frac_str(Fraction(4)) == "4"


def test_irreducible_factors():
    x = QPoly.x()
    f = (x - 1) * (x**2 + 1) * (x**2 - 2)
    fac = irreducible_factors_q(f)
    assert [h.degree for h in fac] == [1, 2, 2]
    prod = QPoly([1])
    for h in fac:
        prod = prod * h
    assert prod == f.monic()
