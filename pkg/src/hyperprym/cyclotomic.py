"""Exact arithmetic in Q(xi) = Q[X]/Phi_d(X) for an odd prime d.

Elements are stored on the power basis 1, xi, ..., xi^(d-2); for prime d the
cyclotomic polynomial is Phi_d = 1 + X + ... + X^(d-1), so xi^(d-1) reduces to
-(1 + xi + ... + xi^(d-2)).  Only the small kernel the package needs lives
here: ring operations, inverses, powers of xi, and exact minimal polynomials.
"""

from __future__ import annotations

from fractions import Fraction

from .polys import QPoly, pdivmod, pmul, ptrim, pxgcd


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


class Cyc:
    """Element of Q(xi_d), d an odd prime."""

    __slots__ = ("d", "vec")

    def __init__(self, d: int, vec):
        if d < 3 or not _is_prime(d):
            raise ValueError(f"d = {d} must be an odd prime")
        v = [Fraction(x) for x in vec]
        if len(v) > d - 1:
            v = _reduce_mod_phi(v, d)
        v += [Fraction(0)] * (d - 1 - len(v))
        self.d = d
        self.vec = tuple(v)

    @staticmethod
    def zero(d: int) -> "Cyc":
        return Cyc(d, [])

    @staticmethod
    def one(d: int) -> "Cyc":
        return Cyc(d, [1])

    @staticmethod
    def from_rational(d: int, x) -> "Cyc":
        return Cyc(d, [Fraction(x)])

    @staticmethod
    def root(d: int, k: int = 1) -> "Cyc":
        """xi^k."""
        k %= d
        if k == d - 1:
            return Cyc(d, [-1] * (d - 1))
        v = [Fraction(0)] * (d - 1)
        v[k] = Fraction(1)
        return Cyc(d, v)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.vec)

    def is_rational(self) -> bool:
        return all(x == 0 for x in self.vec[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("not a rational element")
        return self.vec[0]

    def _coerce(self, other) -> "Cyc":
        if isinstance(other, Cyc):
            if other.d != self.d:
                raise ValueError("mixed cyclotomic orders")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyc.from_rational(self.d, other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.vec[0] == other
        return isinstance(other, Cyc) and self.d == other.d and self.vec == other.vec

    def __hash__(self):
        return hash((self.d, self.vec))

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Cyc(self.d, [a + b for a, b in zip(self.vec, o.vec)])

    __radd__ = __add__

    def __neg__(self):
        return Cyc(self.d, [-a for a in self.vec])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Cyc(self.d, [a - b for a, b in zip(self.vec, o.vec)])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        prod = pmul(list(self.vec), list(o.vec))
        return Cyc(self.d, _reduce_mod_phi(prod, self.d))

    __rmul__ = __mul__

    def inverse(self) -> "Cyc":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero cyclotomic element")
        phi = _phi_poly(self.d)
        g, s, _ = pxgcd(ptrim(list(self.vec)), phi)
        if len(g) != 1:
            raise ArithmeticError("element not invertible mod Phi_d")
        inv = [c / g[0] for c in s]
        return Cyc(self.d, _reduce_mod_phi(inv, self.d))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = Cyc.one(self.d)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def galois(self, l: int) -> "Cyc":
        """Image under xi -> xi^l."""
        out = Cyc.zero(self.d)
        for k, c in enumerate(self.vec):
            if c != 0:
                out = out + Cyc.root(self.d, (k * l) % self.d) * c
        return out

    def conjugate(self) -> "Cyc":
        """Complex conjugation xi -> xi^(-1)."""
        return self.galois(self.d - 1)

    def __repr__(self):
        return f"Cyc(d={self.d}, {list(self.vec)})"


def _phi_poly(d: int) -> list[Fraction]:
    return [Fraction(1)] * d


def _reduce_mod_phi(v: list[Fraction], d: int) -> list[Fraction]:
    v = [Fraction(x) for x in v]
    _, r = pdivmod(v, _phi_poly(d))
    r += [Fraction(0)] * (d - 1 - len(r))
    return r[: d - 1]


def minimal_polynomial(e: Cyc) -> QPoly:
    """Exact monic minimal polynomial of e over Q.

    First linear dependency among the power-basis coordinate vectors of
    1, e, e^2, ..., found by exact Gaussian elimination.
    """
    d = e.d
    rows: list[list[Fraction]] = []
    powers: list[Cyc] = []
    cur = Cyc.one(d)
    for n in range(d):
        rows.append(list(cur.vec))
        powers.append(cur)
        rel = _dependency(rows)
        if rel is not None:
            return QPoly(rel).monic()
        cur = cur * e
    raise ArithmeticError("no minimal polynomial found below the field degree")


def _dependency(rows: list[list[Fraction]]):
    """Coefficients c with sum c_i rows[i] = 0 and c[-1] = 1, else None."""
    n = len(rows)
    if n == 0:
        return None
    width = len(rows[0])
    # Solve rows[:-1]^T * x = -rows[-1]^T, i.e. the last row as a combination
    # of the previous ones.
    aug = [[rows[i][j] for i in range(n - 1)] + [-rows[-1][j]] for j in range(width)]
    sol = _solve_overdetermined(aug, n - 1)
    if sol is None:
        return None
    return sol + [Fraction(1)]


def _solve_overdetermined(aug: list[list[Fraction]], nvars: int):
    m = len(aug)
    rows = [list(r) for r in aug]
    piv_rows = []
    r = 0
    for c in range(nvars):
        pr = None
        for i in range(r, m):
            if rows[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        piv_rows.append((r, c))
        r += 1
    # consistency
    for i in range(m):
        if all(rows[i][c] == 0 for c in range(nvars)) and rows[i][nvars] != 0:
            return None
    sol = [Fraction(0)] * nvars
    for rr, cc in piv_rows:
        sol[cc] = rows[rr][nvars]
    # the system may be underdetermined; any solution works for a dependency,
    # but for minimal polynomials pivots always fill every used column.
    return sol


def real_subfield_minpoly(d: int) -> QPoly:
    """Minimal polynomial of xi + xi^(-1), the degree-(d-1)/2 totally real generator."""
    return minimal_polynomial(Cyc.root(d, 1) + Cyc.root(d, d - 1))
