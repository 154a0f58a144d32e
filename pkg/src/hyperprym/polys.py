"""Dense polynomial and rational-function arithmetic over an exact field.

Polynomials are plain lists of coefficients, constant term first, trimmed so
the last entry is nonzero (the zero polynomial is the empty list).  The
functions are duck-typed: coefficients may be `fractions.Fraction` or any
exact field element supporting +, -, *, / and == (the cyclotomic elements in
`cyclotomic.py` qualify).  `QPoly` is a thin wrapper used where a concrete
type reads better than a bare list.
"""

from __future__ import annotations

from fractions import Fraction


def ptrim(c: list) -> list:
    n = len(c)
    while n > 0 and c[n - 1] == 0:
        n -= 1
    return c[:n]


def pdeg(c: list) -> int:
    """Degree; -1 for the zero polynomial."""
    return len(c) - 1


def padd(a: list, b: list) -> list:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = out[i] + x
    return ptrim(out)


def pneg(a: list) -> list:
    return [-x for x in a]


def psub(a: list, b: list) -> list:
    return padd(a, pneg(b))


def pscale(a: list, s) -> list:
    if s == 0:
        return []
    return ptrim([x * s for x in a])


def pmul(a: list, b: list) -> list:
    if not a or not b:
        return []
    zero = a[0] - a[0]
    out = [zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return ptrim(out)


def pdivmod(a: list, b: list) -> tuple[list, list]:
    """Euclidean division; requires field coefficients."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = []
    db = len(b) - 1
    lb = b[-1]
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        coeff = r[-1] / lb
        q = padd(q, [coeff * 0] * shift + [coeff])
        for i in range(db + 1):
            r[shift + i] = r[shift + i] - coeff * b[i]
        r = ptrim(r)
    return q, r


def pmod(a: list, b: list) -> list:
    return pdivmod(a, b)[1]


def pmonic(a: list) -> list:
    if not a:
        return []
    lc = a[-1]
    if lc == lc / lc:  # already monic
        return list(a)
    return [x / lc for x in a]


def pgcd(a: list, b: list) -> list:
    """Monic gcd."""
    while b:
        a, b = b, pmod(a, b)
    return pmonic(a)


def pxgcd(a: list, b: list) -> tuple[list, list, list]:
    """(g, s, t) with s*a + t*b = g, g monic (or zero)."""
    if not a and not b:
        return [], [], []
    r0, r1 = list(a), list(b)
    s0, s1 = [_one_of(a, b)], []
    t0, t1 = [], [_one_of(a, b)]
    while r1:
        q, r = pdivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, psub(s0, pmul(q, s1))
        t0, t1 = t1, psub(t0, pmul(q, t1))
    lc = r0[-1]
    inv = (lc / lc) / lc
    return pscale(r0, inv), pscale(s0, inv), pscale(t0, inv)


def _one_of(a: list, b: list):
    c = (a or b)[-1]
    return c / c


def pderiv(a: list) -> list:
    return ptrim([a[i] * i for i in range(1, len(a))])


def peval(a: list, x):
    """Horner evaluation; x may live in any ring containing the coefficients."""
    if not a:
        return x * 0
    acc = a[-1]
    for c in reversed(a[:-1]):
        acc = acc * x + c
    return acc


def ppow(a: list, n: int) -> list:
    if n < 0:
        raise ValueError("negative polynomial power")
    out = [_one_of(a, a)] if a else []
    if n == 0:
        if not a:
            raise ValueError("0**0 polynomial")
        return out
    base = list(a)
    while n:
        if n & 1:
            out = pmul(out, base)
        base = pmul(base, base) if n > 1 else base
        n >>= 1
    return out


def pmultiplicity(a: list, h: list) -> int:
    """Multiplicity of the (nonconstant) factor h in a; a must be nonzero."""
    if not a:
        raise ValueError("multiplicity in the zero polynomial")
    m = 0
    while True:
        q, r = pdivmod(a, h)
        if r:
            return m
        a = q
        m += 1


def is_squarefree(a: list) -> bool:
    g = pgcd(a, pderiv(a))
    return pdeg(g) == 0


def qfrac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot coerce {x!r} to a rational")


def qpoly(coeffs) -> list[Fraction]:
    return ptrim([qfrac(c) for c in coeffs])


def frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def poly_to_strings(a: list[Fraction]) -> list[str]:
    return [frac_str(c) for c in a]


class RatFun:
    """Rational function num/den over an exact field, in lowest terms.

    Normal form: den monic, gcd(num, den) = 1.  Two equal rational functions
    therefore compare equal structurally, which the cover module relies on for
    byte-identical normal forms.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _normalized=False):
        num = list(num)
        den = [_field_one(num, den)] if den is None else list(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if _normalized:
            self.num, self.den = num, den
            return
        if not num:
            self.num, self.den = [], [_lead_one(den)]
            return
        g = pgcd(num, den)
        if pdeg(g) > 0:
            num = pdivmod(num, g)[0]
            den = pdivmod(den, g)[0]
        lc = den[-1]
        if lc != lc / lc:
            inv = (lc / lc) / lc
            num = pscale(num, inv)
            den = pscale(den, inv)
        self.num, self.den = num, den

    def is_zero(self) -> bool:
        return not self.num

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        return (
            isinstance(other, RatFun)
            and self.num == other.num
            and self.den == other.den
        )

    def __hash__(self):
        return hash((tuple(self.num), tuple(self.den)))

    def __add__(self, other):
        return RatFun(
            padd(pmul(self.num, other.den), pmul(other.num, self.den)),
            pmul(self.den, other.den),
        )

    def __sub__(self, other):
        return RatFun(
            psub(pmul(self.num, other.den), pmul(other.num, self.den)),
            pmul(self.den, other.den),
        )

    def __neg__(self):
        return RatFun(pneg(self.num), list(self.den), _normalized=True)

    def __mul__(self, other):
        if isinstance(other, RatFun):
            return RatFun(pmul(self.num, other.num), pmul(self.den, other.den))
        return RatFun(pscale(self.num, other), list(self.den))

    def __truediv__(self, other):
        if isinstance(other, RatFun):
            if not other.num:
                raise ZeroDivisionError("division by the zero rational function")
            return RatFun(pmul(self.num, other.den), pmul(self.den, other.num))
        return self * RatFun([_lead_one(self.den)], [other])

    def scale(self, s) -> "RatFun":
        if s == 0:
            return RatFun([], [_lead_one(self.den)], _normalized=True)
        return RatFun(pscale(self.num, s), list(self.den))

    def eval(self, x):
        return peval(self.num, x) / peval(self.den, x)

    def __repr__(self):
        if pdeg(self.den) == 0 and self.den[0] == self.den[0] / self.den[0]:
            return f"RatFun({self.num})"
        return f"RatFun({self.num} / {self.den})"


def _field_one(num, den):
    src = num or den
    if not src:
        return Fraction(1)
    c = src[-1]
    return c / c if c != 0 else Fraction(1)


def _lead_one(p):
    c = p[-1]
    return c / c


def ratfun_q(num, den=(1,)) -> RatFun:
    return RatFun(qpoly(num), qpoly(den))


class QPoly:
    """Polynomial over Q.  Immutable coefficient list, constant term first."""

    __slots__ = ("c",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, QPoly):
            self.c = coeffs.c
        else:
            self.c = tuple(qpoly(list(coeffs)))

    @staticmethod
    def x() -> "QPoly":
        return QPoly([0, 1])

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def __bool__(self):
        return bool(self.c)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QPoly([other])
        return isinstance(other, QPoly) and self.c == other.c

    def __hash__(self):
        return hash(self.c)

    def _lift(self, other) -> "QPoly":
        if isinstance(other, QPoly):
            return other
        return QPoly([other])

    def __add__(self, other):
        return QPoly(padd(list(self.c), list(self._lift(other).c)))

    __radd__ = __add__

    def __sub__(self, other):
        return QPoly(psub(list(self.c), list(self._lift(other).c)))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return QPoly(pneg(list(self.c)))

    def __mul__(self, other):
        return QPoly(pmul(list(self.c), list(self._lift(other).c)))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return QPoly(ppow(list(self.c), n))

    def divmod(self, other) -> tuple["QPoly", "QPoly"]:
        q, r = pdivmod(list(self.c), list(self._lift(other).c))
        return QPoly(q), QPoly(r)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def exact_div(self, other) -> "QPoly":
        q, r = self.divmod(other)
        if r:
            raise ValueError("inexact polynomial division")
        return q

    def gcd(self, other) -> "QPoly":
        return QPoly(pgcd(list(self.c), list(self._lift(other).c)))

    def deriv(self) -> "QPoly":
        return QPoly(pderiv(list(self.c)))

    def monic(self) -> "QPoly":
        return QPoly(pmonic(list(self.c)))

    def __call__(self, x):
        return peval(list(self.c), x)

    def shift(self, k: int) -> "QPoly":
        """Multiply by x^k."""
        if not self.c:
            return self
        return QPoly([Fraction(0)] * k + list(self.c))

    def squarefree(self) -> bool:
        return is_squarefree(list(self.c))

    def __repr__(self):
        if not self.c:
            return "QPoly(0)"
        parts = []
        for i in range(len(self.c) - 1, -1, -1):
            co = self.c[i]
            if co == 0:
                continue
            term = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if i > 0 and abs(co) == 1:
                coeff = "-" if co < 0 else ""
            else:
                coeff = frac_str(co)
                if i > 0:
                    coeff += "*"
            parts.append(coeff + term)
        return "QPoly(" + " + ".join(parts).replace("+ -", "- ") + ")"


def irreducible_factors_q(a: "QPoly") -> list["QPoly"]:
    """Monic irreducible factors over Q of a squarefree polynomial.

    Zassenhaus-free: factors are found by rational root extraction plus a
    recursive Kronecker-style search on the remaining part.  Degrees here stay
    tiny (curve polynomials of degree <= 2g+1), so the simple route is fine.
    """
    a = a.monic()
    factors: list[QPoly] = []
    # rational roots first
    changed = True
    while changed and a.degree > 0:
        changed = False
        for r in _rational_root_candidates(a):
            if a(r) == 0:
                factors.append(QPoly([-r, 1]))
                a = a.exact_div(QPoly([-r, 1]))
                changed = True
                break
    if a.degree > 0:
        rest = _factor_no_rational_roots(a)
        factors.extend(rest)
    factors.sort(key=lambda f: (f.degree, f.c))
    return factors


def _rational_root_candidates(a: QPoly):
    if a.c[0] == 0:
        yield Fraction(0)
        return
    from math import lcm

    scale = lcm(*[co.denominator for co in a.c])
    ic = [int(co * scale) for co in a.c]
    p0, pn = abs(ic[0]), abs(ic[-1])
    for p in _divisors(p0):
        for q in _divisors(pn):
            yield Fraction(p, q)
            yield Fraction(-p, q)


def _divisors(n: int):
    n = abs(n)
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def _factor_no_rational_roots(a: QPoly) -> list[QPoly]:
    """Split a squarefree monic rational polynomial with no rational roots.

    A modular certificate settles most inputs instantly: if a stays
    irreducible mod some good prime it is irreducible over Q, and the factor
    degree patterns mod several primes prune which split degrees are even
    possible before any trial division runs.  A factor the bounded search
    still misses only coarsens the grouping of conjugate roots; users of the
    factor list (place partitions in the cover module) stay exact because
    they re-check homogeneity with gcds before trusting a multiplicity.
    """
    if a.degree <= 3:
        return [a]
    degrees = _possible_factor_degrees(a)
    split = _try_integer_split(a, degrees)
    if split is None:
        return [a]
    f, g = split
    return sorted(
        _factor_no_rational_roots(f) + _factor_no_rational_roots(g),
        key=lambda h: (h.degree, h.c),
    )


def _possible_factor_degrees(a: QPoly) -> set[int]:
    """Degrees k with 2 <= k <= deg/2 not excluded by factor patterns mod p."""
    n = a.degree
    possible = set(range(2, n // 2 + 1))
    if any(c.denominator != 1 for c in a.c):
        return possible
    ic = [int(c) for c in a.c]
    tried = 0
    for p in (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if ic[-1] % p == 0:
            continue
        pattern = _modular_factor_degrees(ic, p)
        if pattern is None:  # not squarefree mod p
            continue
        sums = _subset_sums(pattern)
        possible &= sums
        tried += 1
        if not possible or tried >= 3:
            break
    return possible


def _modular_factor_degrees(ic: list[int], p: int):
    """Multiset of irreducible factor degrees of the reduction mod p, or None."""
    f = [c % p for c in ic]
    fd = [(i * f[i]) % p for i in range(1, len(f))]
    if _gcd_mod(f, fd, p) is None:
        return None
    degrees = []
    # distinct-degree: gcd(x^(p^k) - x, remaining)
    rem = list(f)
    xq = [0, 1]
    k = 0
    while len(rem) - 1 > 0:
        k += 1
        if 2 * k > len(rem) - 1:
            degrees.append(len(rem) - 1)
            break
        xq = _powmod_poly(xq, p, rem, p)
        g = _gcd_poly_mod(_sub_mod(xq, [0, 1], p), rem, p)
        dg = len(g) - 1
        if dg > 0:
            degrees.extend([k] * (dg // k))
            rem = _div_exact_mod(rem, g, p)
            xq = _mod_poly(xq, rem, p)
    return degrees


def _subset_sums(degrees: list[int]) -> set[int]:
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    return sums


def _gcd_mod(f, g, p):
    """None if gcd(f, f') is nonconstant (squarefree test helper)."""
    gg = _gcd_poly_mod(f, g, p)
    return gg if len(gg) == 1 else None


def _trim_mod(a, p):
    a = [x % p for x in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def _sub_mod(a, b, p):
    n = max(len(a), len(b))
    return _trim_mod(
        [(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)], p
    )


def _mod_poly(a, b, p):
    a = _trim_mod(a, p)
    b = _trim_mod(b, p)
    inv = pow(b[-1], -1, p)
    while len(a) >= len(b) and a:
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        for i in range(len(b)):
            a[shift + i] = (a[shift + i] - c * b[i]) % p
        a = _trim_mod(a, p)
    return a


def _gcd_poly_mod(a, b, p):
    a, b = _trim_mod(a, p), _trim_mod(b, p)
    while b:
        a, b = b, _mod_poly(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [x * inv % p for x in a]
    return a


def _div_exact_mod(a, b, p):
    a = _trim_mod(a, p)
    b = _trim_mod(b, p)
    inv = pow(b[-1], -1, p)
    q = [0] * (len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        c = a[-1] * inv % p
        shift = len(a) - len(b)
        q[shift] = c
        for i in range(len(b)):
            a[shift + i] = (a[shift + i] - c * b[i]) % p
        a = _trim_mod(a, p)
    return _trim_mod(q, p)


def _powmod_poly(a, e, mod, p):
    out = [1]
    base = _mod_poly(a, mod, p)
    while e:
        if e & 1:
            out = _mod_poly(_mul_mod(out, base, p), mod, p)
        e >>= 1
        if e:
            base = _mod_poly(_mul_mod(base, base, p), mod, p)
    return out


def _mul_mod(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim_mod(out, p)


def _try_integer_split(a: QPoly, degrees: set[int]):
    """Trial division by monic integer factors of the allowed degrees (2 or 3)."""
    if any(c.denominator != 1 for c in a.c):
        return None
    from itertools import product

    ic = [Fraction(c) for c in a.c]
    n = len(ic) - 1
    bound = min(30, max(3, max(abs(int(v)) for v in ic)))
    for df in (2, 3):
        if df > n // 2 or df not in degrees:
            continue
        rng = range(-bound, bound + 1)
        for tail in product(rng, repeat=df):
            if tail[0] == 0:
                continue  # a has no rational roots, so no factor with zero constant term
            f = [Fraction(v) for v in tail] + [Fraction(1)]
            q, r = pdivmod(ic, f)
            if not r and all(c.denominator == 1 for c in q):
                return QPoly(f), QPoly(q)
    return None
