"""Odd-degree hyperelliptic curves over Q with Mumford/Cantor class arithmetic.

A curve is y^2 = f(x) with deg f = 2g+1 and f squarefree; the single point at
infinity makes every degree-0 class representable by a reduced Mumford pair
(u, v) with u monic, deg u <= g, deg v < deg u and u | v^2 - f.

Torsion certificates pin an explicit d-torsion class for d = 2g+1 prime: data
(a, t) with f = a^2 - (x - t)^d and a(t) != 0 give

    (y - a)(y + a) = y^2 - a^2 = -(x - t)^d,

so div(y - a) = d*((t, a(t)) - infinity) and eta = [(t, a(t)) - infinity] is
d-torsion, nonzero because no function has a single simple pole on a curve of
positive genus.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import BadDegree, ExhaustedRetries, InvalidClass, NotPrime, NotSquarefree
from .polys import QPoly


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


@dataclass(frozen=True)
class HyperellipticCurve:
    f: QPoly
    genus: int

    def __repr__(self):
        return f"HyperellipticCurve(genus={self.genus}, f={self.f!r})"


def make_curve(f: QPoly) -> HyperellipticCurve:
    f = QPoly(f)
    if f.degree < 5 or f.degree % 2 == 0:
        raise BadDegree(f"deg f = {f.degree}; need an odd degree >= 5")
    if not f.squarefree():
        raise NotSquarefree("f has a repeated root")
    return HyperellipticCurve(f=f, genus=(f.degree - 1) // 2)


@dataclass(frozen=True)
class MumfordClass:
    u: QPoly
    v: QPoly

    def is_zero(self) -> bool:
        return self.u.degree == 0

    def __repr__(self):
        return f"MumfordClass(u={self.u!r}, v={self.v!r})"


MUMFORD_ZERO = MumfordClass(QPoly([1]), QPoly([]))


def mumford_valid(curve: HyperellipticCurve, cls: MumfordClass) -> bool:
    if cls.u.is_zero() or cls.u.c[-1] != 1:
        return False
    if cls.v.degree >= cls.u.degree:
        return False
    _, r = (cls.v * cls.v - curve.f).divmod(cls.u)
    return r.is_zero()


def _require_valid(curve, cls):
    if not mumford_valid(curve, cls):
        raise InvalidClass(f"u does not divide v^2 - f for {cls!r}")


def mumford_neg(curve: HyperellipticCurve, cls: MumfordClass) -> MumfordClass:
    return MumfordClass(cls.u, (-cls.v) % cls.u)


def cantor_add(curve: HyperellipticCurve, a: MumfordClass, b: MumfordClass) -> MumfordClass:
    """Reduced Mumford representative of a + b (Cantor composition + reduction)."""
    _require_valid(curve, a)
    _require_valid(curve, b)
    f = curve.f
    u1, v1 = a.u, a.v
    u2, v2 = b.u, b.v
    # composition: d = gcd(u1, u2, v1 + v2) = s1*u1 + s2*u2 + s3*(v1 + v2)
    d0, e1, e2 = _xgcd_poly(u1, u2)
    d, c1, c2 = _xgcd_poly(d0, v1 + v2)
    s1 = c1 * e1
    s2 = c1 * e2
    s3 = c2
    u = (u1 * u2).exact_div(d * d)
    num = s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + f)
    v = num.exact_div(d) % u
    u = u.monic()
    # reduction to deg u <= g
    g = curve.genus
    while u.degree > g:
        u = (f - v * v).exact_div(u).monic()
        v = (-v) % u
    return MumfordClass(u, v)


def _xgcd_poly(a: QPoly, b: QPoly):
    from .polys import pxgcd

    g, s, t = pxgcd(list(a.c), list(b.c))
    return QPoly(g), QPoly(s), QPoly(t)


def cantor_mul(curve: HyperellipticCurve, n: int, cls: MumfordClass) -> MumfordClass:
    if n < 0:
        return cantor_mul(curve, -n, mumford_neg(curve, cls))
    out = MUMFORD_ZERO
    base = cls
    while n:
        if n & 1:
            out = cantor_add(curve, out, base)
        n >>= 1
        if n:
            base = cantor_add(curve, base, base)
    return out


def torsion_order(curve: HyperellipticCurve, cls: MumfordClass, bound: int):
    """Smallest n in [1, bound] with n*cls = 0, or None if every n fails."""
    acc = MUMFORD_ZERO
    for n in range(1, bound + 1):
        acc = cantor_add(curve, acc, cls)
        if acc.is_zero():
            return n
    return None


@dataclass(frozen=True)
class TorsionCertificate:
    a: QPoly
    t: Fraction
    d: int

    def __repr__(self):
        return f"TorsionCertificate(d={self.d}, t={self.t}, a={self.a!r})"


def eta_class(curve: HyperellipticCurve, cert: TorsionCertificate) -> MumfordClass:
    """The certified d-torsion class eta = [(t, a(t)) - infinity] = (x - t, a(t))."""
    return MumfordClass(QPoly([-cert.t, 1]), QPoly([cert.a(cert.t)]))


def verify_certificate(curve: HyperellipticCurve, cert: TorsionCertificate) -> dict:
    """Exact certificate checks; failures are entries, not exceptions."""
    checks = {}
    x_minus_t = QPoly([-cert.t, 1])
    identity = cert.a * cert.a - x_minus_t**cert.d
    checks["polynomial_identity"] = identity == curve.f
    checks["degree"] = curve.f.degree == cert.d == 2 * curve.genus + 1
    checks["d_prime"] = _is_prime(cert.d)
    checks["squarefree"] = curve.f.squarefree()
    checks["a_t_nonzero"] = cert.a(cert.t) != 0
    if all(checks.values()):
        eta = eta_class(curve, cert)
        checks["eta_on_curve"] = mumford_valid(curve, eta)
        checks["torsion_order"] = torsion_order(curve, eta, cert.d) == cert.d
    else:
        checks["eta_on_curve"] = False
        checks["torsion_order"] = False
    checks["ok"] = all(checks.values())
    return checks


def generate_instance(genus: int, seed: int, height: int = 3, retries: int = 1000):
    """Deterministic (curve, certificate) with d = 2*genus + 1.

    Draws integer a(x) of degree <= genus and integer t from a seeded RNG and
    keeps the first draw whose f = a^2 - (x-t)^d is squarefree with a(t) != 0
    and whose eta has exact Cantor order d.
    """
    d = 2 * genus + 1
    if not _is_prime(d):
        raise NotPrime(f"2*genus + 1 = {d} is not prime")
    if height < 1:
        raise ValueError("height must be >= 1")
    rng = random.Random(seed)
    for _ in range(retries):
        coeffs = [rng.randint(-height, height) for _ in range(genus + 1)]
        t = Fraction(rng.randint(-height, height))
        a = QPoly(coeffs)
        if a.is_zero() or a(t) == 0:
            continue
        f = a * a - QPoly([-t, 1]) ** d
        if f.degree != d or not f.squarefree():
            continue
        curve = HyperellipticCurve(f=f, genus=genus)
        cert = TorsionCertificate(a=a, t=t, d=d)
        if torsion_order(curve, eta_class(curve, cert), d) == d:
            return curve, cert
    raise ExhaustedRetries(f"no valid instance in {retries} draws (genus={genus}, seed={seed}, height={height})")


def class_has_effective(curve: HyperellipticCurve, cls: MumfordClass, m: int) -> bool:
    """Whether cls + m*infinity is an effective class, for 0 <= m <= 2g.

    By Riemann-Roch on the odd-degree model this reduces to the reduced
    representative having deg u <= m (the leftover infinity multiplicity is
    always absorbable).
    """
    if not 0 <= m <= 2 * curve.genus:
        raise ValueError("m out of range")
    reduced = cantor_add(curve, cls, MUMFORD_ZERO)
    return reduced.u.degree <= m


def is_generic_eta(curve: HyperellipticCurve, cert: TorsionCertificate) -> bool:
    """Genericity test on eta: eta^2 is not 2L minus an effective degree-4 divisor.

    Since L = [2*infinity] is trivial in the degree-0 group, the test is
    equivalent to: the reduced representative of -2*eta has deg u > 4.  Always
    false when g <= 4 (every reduced u has degree <= g) and for eta = 0.
    """
    eta = eta_class(curve, cert)
    if eta.is_zero():
        return False
    minus_2eta = cantor_mul(curve, -2, eta)
    return not class_has_effective(curve, minus_2eta, 4)
