"""The degree-d cover z^d = y - a(x) of a certified curve, with its dihedral action.

Elements of the cover's function field are kept in the normal form

    sum over (e, q), e in {0,1}, 0 <= q < d, of  r_{e,q}(x) * y^e * z^q

with r_{e,q} rational functions (denominators in x only).  The rewriting
rules are fixed so equal elements have identical normal forms:

    y^2 -> f(x)
    z^d -> y - a(x)
    z^-1 -> z^(d-1) * (y + a) / (-(x - t)^d)
    y^-1 -> y / f(x)

The deck action is sigma: z -> xi z (exact over Q(xi), or a root-of-unity tag
on eigen-pure elements) and the lifted hyperelliptic involution

    j: x -> x,  y -> -y,  z -> (x - t)/z.

Local valuations are read from per-place tables re-derived from y^2 = f and
z^d = y - a; a cross-check that deg div(dx) = 2*cover_genus - 2 runs in the
test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Union

from .curves import (
    HyperellipticCurve,
    TorsionCertificate,
    cantor_mul,
    class_has_effective,
    eta_class,
    verify_certificate,
)
from .cyclotomic import Cyc
from .errors import AmbiguousValuation, BadCertificate, SieveMismatch, ZeroElement
from .linalg import rank_bareiss
from .polys import QPoly, RatFun, irreducible_factors_q, pdeg, pgcd, pdivmod, pmul, qpoly


# ---------------------------------------------------------------------------
# cover and function representations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DihedralCover:
    curve: HyperellipticCurve
    cert: TorsionCertificate
    d: int
    cover_genus: int

    @property
    def genus(self) -> int:
        return self.curve.genus

    def f_list(self) -> list[Fraction]:
        return list(self.curve.f.c)

    def a_list(self) -> list[Fraction]:
        return list(self.cert.a.c)

    def xt_list(self) -> list[Fraction]:
        return [Fraction(-self.cert.t), Fraction(1)]

    def __repr__(self):
        return f"DihedralCover(g={self.genus}, d={self.d}, cover_genus={self.cover_genus})"


def build_cover(curve: HyperellipticCurve, cert: TorsionCertificate) -> DihedralCover:
    report = verify_certificate(curve, cert)
    if not report["ok"]:
        bad = [k for k, v in report.items() if not v and k != "ok"]
        raise BadCertificate(f"certificate checks failed: {', '.join(bad)}")
    g = curve.genus
    return DihedralCover(curve=curve, cert=cert, d=cert.d, cover_genus=g + (cert.d - 1) * (g - 1))


class FunctionRep:
    """Normal-form element of the cover's function field."""

    __slots__ = ("cover", "coeffs")

    def __init__(self, cover: DihedralCover, coeffs: dict):
        clean = {}
        for (e, q), c in sorted(coeffs.items()):
            if not isinstance(c, RatFun):
                raise TypeError("coefficients must be RatFun")
            if c.is_zero():
                continue
            if e not in (0, 1) or not 0 <= q < cover.d:
                raise ValueError(f"key {(e, q)} not in normal form")
            clean[(e, q)] = c
        self.cover = cover
        self.coeffs = clean

    def is_zero(self) -> bool:
        return not self.coeffs

    def keys(self):
        return sorted(self.coeffs)

    def is_cyclotomic(self) -> bool:
        for c in self.coeffs.values():
            for x in c.num + c.den:
                if isinstance(x, Cyc):
                    return True
        return False

    def __eq__(self, other):
        return (
            isinstance(other, FunctionRep)
            and self.cover is other.cover
            and self.coeffs == other.coeffs
        )

    def __add__(self, other):
        a, b = _match_fields(self, other)
        out = dict(a.coeffs)
        for k, c in b.coeffs.items():
            out[k] = out[k] + c if k in out else c
        return FunctionRep(self.cover, out)

    def __neg__(self):
        return FunctionRep(self.cover, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, Cyc)):
            return FunctionRep(self.cover, {k: c * other for k, c in self.coeffs.items()})
        a, b = _match_fields(self, other)
        cyc = a.is_cyclotomic()
        out: dict = {}
        for (e1, q1), c1 in a.coeffs.items():
            for (e2, q2), c2 in b.coeffs.items():
                _accumulate(self.cover, out, e1 + e2, q1 + q2, c1 * c2, cyc)
        return FunctionRep(self.cover, out)

    __rmul__ = __mul__

    def scale_rat(self, r: RatFun) -> "FunctionRep":
        return FunctionRep(self.cover, {k: c * r for k, c in self.coeffs.items()})

    def __repr__(self):
        if not self.coeffs:
            return "FunctionRep(0)"
        bits = []
        for (e, q), c in sorted(self.coeffs.items()):
            mon = ("y" if e else "") + (f"z^{q}" if q > 1 else "z" if q == 1 else "")
            bits.append(f"({c!r}){mon}" if mon else f"({c!r})")
        return "FunctionRep(" + " + ".join(bits) + ")"


def _to_cyc_ratfun(r: RatFun, d: int) -> RatFun:
    def conv(lst):
        return [x if isinstance(x, Cyc) else Cyc.from_rational(d, x) for x in lst]

    return RatFun(conv(r.num), conv(r.den), _normalized=True)


def rep_to_cyclotomic(rep: FunctionRep) -> FunctionRep:
    d = rep.cover.d
    return FunctionRep(rep.cover, {k: _to_cyc_ratfun(c, d) for k, c in rep.coeffs.items()})


def _match_fields(a: FunctionRep, b: FunctionRep):
    if a.cover is not b.cover and a.cover != b.cover:
        raise ValueError("elements live on different covers")
    ac, bc = a.is_cyclotomic(), b.is_cyclotomic()
    if ac and not bc:
        b = rep_to_cyclotomic(b)
    elif bc and not ac:
        a = rep_to_cyclotomic(a)
    return a, b


def _coerce_list(lst, cyc: bool, d: int):
    if not cyc:
        return lst
    return [Cyc.from_rational(d, x) for x in lst]


def _accumulate(cover: DihedralCover, out: dict, e: int, q: int, coeff: RatFun, cyc: bool):
    """Reduce y^e z^q * coeff into normal-form keys, adding into `out`."""
    if coeff.is_zero():
        return
    d = cover.d
    if e >= 2:
        fl = _coerce_list(cover.f_list(), cyc, d)
        _accumulate(cover, out, e - 2, q, RatFun(pmul(coeff.num, fl), coeff.den), cyc)
        return
    if q >= d:
        # z^d = y - a
        al = _coerce_list(cover.a_list(), cyc, d)
        _accumulate(cover, out, e + 1, q - d, coeff, cyc)
        _accumulate(cover, out, e, q - d, RatFun(pmul(coeff.num, [-x for x in al]), coeff.den), cyc)
        return
    if q < 0:
        # z^-d = (y + a) / (-(x - t)^d)
        al = _coerce_list(cover.a_list(), cyc, d)
        xt = _coerce_list(cover.xt_list(), cyc, d)
        xtd = [x * (-1) for x in _list_pow(xt, d)]
        neg = RatFun(coeff.num, pmul(coeff.den, xtd))
        _accumulate(cover, out, e + 1, q + d, neg, cyc)
        _accumulate(cover, out, e, q + d, RatFun(pmul(neg.num, al), neg.den), cyc)
        return
    key = (e, q)
    out[key] = out[key] + coeff if key in out else coeff


def _list_pow(lst, n):
    out = [lst[-1] / lst[-1]] if lst else []
    base = list(lst)
    while n:
        if n & 1:
            out = pmul(out, base)
        n >>= 1
        if n:
            base = pmul(base, base)
    return out


def rep_zero(cover: DihedralCover) -> FunctionRep:
    return FunctionRep(cover, {})


def rep_term(cover: DihedralCover, e: int, q: int, coeff: RatFun) -> FunctionRep:
    """coeff(x) * y^e * z^q, any integer exponents, normalized."""
    out: dict = {}
    _accumulate(cover, out, e, q, coeff, _has_cyc(coeff))
    return FunctionRep(cover, out)


def _has_cyc(r: RatFun) -> bool:
    return any(isinstance(x, Cyc) for x in r.num + r.den)


# ---------------------------------------------------------------------------
# deck action
# ---------------------------------------------------------------------------


def apply_sigma(rep: FunctionRep) -> FunctionRep:
    """sigma: z -> xi z, exact over Q(xi)."""
    d = rep.cover.d
    out = {}
    for (e, q), c in rep.coeffs.items():
        out[(e, q)] = _to_cyc_ratfun(c, d) * Cyc.root(d, q)
    return FunctionRep(rep.cover, out)


def apply_sigma_power(rep: FunctionRep, k: int) -> FunctionRep:
    d = rep.cover.d
    out = {}
    for (e, q), c in rep.coeffs.items():
        out[(e, q)] = _to_cyc_ratfun(c, d) * Cyc.root(d, (q * k) % d)
    return FunctionRep(rep.cover, out)


def apply_j(rep: FunctionRep) -> FunctionRep:
    """j: y -> -y, z -> (x - t)/z, a ring homomorphism.

    On a single key, j(r(x) y^e z^q) = r(x) (-y)^e j(z)^q with
    j(z^q) = -(y + a) z^(d-q) / (x - t)^(d-q) for 0 < q < d.
    """
    cover = rep.cover
    d = cover.d
    cyc = rep.is_cyclotomic()
    out: dict = {}
    for (e, q), c in rep.coeffs.items():
        al = _coerce_list(cover.a_list(), cyc, d)
        if e == 1:
            base = {(1, 0): c * (-1)}
        else:
            base = {(0, 0): c}
        if q:
            xt = _coerce_list(cover.xt_list(), cyc, d)
            xtq = _list_pow(xt, d - q)
            pieces = []
            for (eb, qb), cb in base.items():
                minus_over = RatFun(cb.num, pmul(cb.den, xtq)) * (-1)
                pieces.append((eb + 1, qb + d - q, minus_over))
                pieces.append((eb, qb + d - q, RatFun(pmul(minus_over.num, al), minus_over.den)))
        else:
            pieces = [(eb, qb, cb) for (eb, qb), cb in base.items()]
        for eb, qb, cb in pieces:
            _accumulate(cover, out, eb, qb, cb, cyc)
    return FunctionRep(cover, out)


# ---------------------------------------------------------------------------
# differentials
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DifferentialRep:
    """A holomorphic differential body * dx on the cover."""

    body: FunctionRep
    eigen_index: Union[int, str]
    monomial: Optional[tuple[int, int, int]] = None  # (p, m, q): x^p (x-t)^m z^q dx / y

    def __eq__(self, other):
        return isinstance(other, DifferentialRep) and self.body == other.body

    def __repr__(self):
        if self.monomial is not None:
            p, m, q = self.monomial
            bits = []
            if p:
                bits.append(f"x^{p}" if p > 1 else "x")
            if m:
                bits.append(f"(x-t)^{m}" if m > 1 else "(x-t)")
            if q:
                bits.append(f"z^{q}" if q != 1 else "z")
            head = " ".join(bits) if bits else "1"
            return f"DifferentialRep({head} dx/y, eigen={self.eigen_index})"
        return f"DifferentialRep({self.body!r} dx, eigen={self.eigen_index})"


def diff_monomial(cover: DihedralCover, p: int, m: int, q: int) -> DifferentialRep:
    """x^p (x-t)^m z^q dx / y as a normalized differential."""
    coeff = RatFun(
        pmul(_x_power(p), _list_pow(cover.xt_list(), m)), cover.f_list()
    )
    body = rep_term(cover, 1, q, coeff)  # 1/y = y/f
    return DifferentialRep(body=body, eigen_index=q % cover.d, monomial=(p, m, q))


def _x_power(p: int) -> list[Fraction]:
    return [Fraction(0)] * p + [Fraction(1)]


def diff_add(a: DifferentialRep, b: DifferentialRep) -> DifferentialRep:
    eigen: Union[int, str]
    if a.eigen_index == b.eigen_index:
        eigen = a.eigen_index
    else:
        eigen = "mixed"
    return DifferentialRep(body=a.body + b.body, eigen_index=eigen, monomial=None)


def diff_apply_j(diff: DifferentialRep) -> DifferentialRep:
    body = apply_j(diff.body)
    d = diff.body.cover.d
    eigen: Union[int, str]
    if isinstance(diff.eigen_index, int):
        eigen = (d - diff.eigen_index) % d
    else:
        eigen = "mixed"
    return DifferentialRep(body=body, eigen_index=eigen, monomial=None)


def diff_apply_sigma(diff: DifferentialRep) -> DifferentialRep:
    return DifferentialRep(
        body=apply_sigma(diff.body), eigen_index=diff.eigen_index, monomial=None
    )


# ---------------------------------------------------------------------------
# places and valuations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Place:
    """A sigma-orbit of points sharing one valuation table.

    kind: "weierstrass" (data = an irreducible factor of f), "t_plus",
    "t_minus", "infinity", or "generic" (data = a rational x0 off the
    branch set).  npoints counts geometric points in the orbit.
    """

    kind: str
    data: object = None
    npoints: int = 0

    def __repr__(self):
        if self.kind == "weierstrass":
            return f"Place(weierstrass, h={self.data!r})"
        if self.kind == "generic":
            return f"Place(generic, x0={self.data})"
        return f"Place({self.kind})"


@lru_cache(maxsize=64)
def places(cover: DihedralCover) -> tuple[Place, ...]:
    out = []
    for h in irreducible_factors_q(cover.curve.f):
        out.append(Place("weierstrass", h, cover.d * h.degree))
    out.append(Place("t_plus", None, cover.d))
    out.append(Place("t_minus", None, cover.d))
    out.append(Place("infinity", None, cover.d))
    return tuple(out)


# (v(y), v(z), v(dx)) per place kind; infinity's v(y) = -d is filled per cover.
_TABLES = {
    "weierstrass": (1, 0, 1),
    "t_plus": (0, 1, 0),
    "t_minus": (0, 0, 0),
    "infinity": (None, -1, -3),
    "generic": (0, 0, 0),
}


def _coeff_valuation(cover: DihedralCover, place: Place, num: list, den: list) -> int:
    if place.kind == "infinity":
        return -2 * (pdeg(num) - pdeg(den))
    if place.kind == "weierstrass":
        h = list(place.data.c)
        return 2 * (_mult_checked(num, h) - _mult_checked(den, h))
    if place.kind in ("t_plus", "t_minus"):
        xt = [Fraction(x) for x in cover.xt_list()]
        return _mult_checked(num, xt) - _mult_checked(den, xt)
    if place.kind == "generic":
        x0 = Fraction(place.data)
        lin = [(-x0), Fraction(1)]
        return _mult_checked(num, lin) - _mult_checked(den, lin)
    raise ValueError(f"unknown place kind {place.kind}")


def _mult_checked(poly: list, h: list) -> int:
    """Multiplicity of the factor h, exact across the whole root group.

    For deg h > 1 the group of conjugate roots shares one multiplicity only
    when gcd steps stay all-or-nothing; a partial gcd means the queried
    element separates conjugate roots and no single integer answers.
    """
    if not poly:
        raise ZeroElement("valuation of the zero polynomial")
    m = 0
    cur = list(poly)
    hm = [c / h[-1] for c in h]
    while True:
        g = pgcd(cur, hm)
        if pdeg(g) == 0:
            return m
        if pdeg(g) == pdeg(hm):
            cur = pdivmod(cur, hm)[0]
            m += 1
            continue
        raise AmbiguousValuation("element separates conjugate roots of the place group")


def _table_for(cover: DihedralCover, place: Place) -> tuple[int, int, int]:
    vy, vz, vdx = _TABLES[place.kind]
    if place.kind == "infinity":
        vy = -cover.d
    return vy, vz, vdx


def monomial_valuation(cover: DihedralCover, p: int, m: int, q: int, place: Place) -> int:
    """Exact valuation of x^p (x-t)^m z^q dx / y at the place."""
    vy, vz, vdx = _table_for(cover, place)
    num = pmul(_x_power(p), _list_pow(cover.xt_list(), m))
    return _coeff_valuation(cover, place, num, [Fraction(1)]) + q * vz + vdx - vy


def valuation(cover: DihedralCover, obj, place: Place) -> int:
    """Exact valuation of a FunctionRep or DifferentialRep at a place.

    Single-key elements (and monomial-tagged differentials) are always exact.
    For sums, the minimum of the key valuations is returned when it is
    attained by a unique key; a tie raises AmbiguousValuation since the true
    valuation could be larger after cancellation.
    """
    if isinstance(obj, DifferentialRep):
        if obj.monomial is not None:
            p, m, q = obj.monomial
            return monomial_valuation(cover, p, m, q, place)
        _, _, vdx = _table_for(cover, place)
        return valuation(cover, obj.body, place) + vdx
    rep: FunctionRep = obj
    if rep.is_zero():
        raise ZeroElement("valuation of zero")
    vy, vz, _ = _table_for(cover, place)
    vals = []
    for (e, q), c in rep.coeffs.items():
        vals.append(_coeff_valuation(cover, place, c.num, c.den) + e * vy + q * vz)
    lo = min(vals)
    if vals.count(lo) > 1:
        raise AmbiguousValuation("tied minimum over normal-form keys")
    return lo


# ---------------------------------------------------------------------------
# eigenbasis sieve
# ---------------------------------------------------------------------------


def expected_eigendim(cover: DihedralCover, i: int) -> int:
    return cover.genus if i % cover.d == 0 else cover.genus - 1


def eigenbasis(cover: DihedralCover, i: int) -> list[DifferentialRep]:
    """Basis of the xi^i eigenspace of the holomorphic differentials.

    Valuation sieve over the two monomial families x^p z^i dx/y and
    x^p (x-t)^(d-i) z^(i-d) dx/y; both are non-negative away from infinity,
    where the exponent bounds p <= (d-3-i)/2 and p <= (i-3)/2 come from.  If
    the narrow families fall short the sieve widens before giving up.
    """
    if not 0 <= i < cover.d:
        raise ValueError("eigen index out of range")
    want = expected_eigendim(cover, i)
    plc = places(cover)
    cands = []
    for p in range(0, (cover.d - 3 - i) // 2 + 1):
        cands.append((p, 0, i))
    if i >= 3:
        for p in range(0, (i - 3) // 2 + 1):
            cands.append((p, cover.d - i, i - cover.d))
    good = [c for c in cands if _holomorphic(cover, c, plc)]
    basis = [diff_monomial(cover, *c) for c in good]
    if len(basis) == want and _rank_of_diffs(basis) == want:
        return basis
    return _widened_sieve(cover, i, want, plc)


def _holomorphic(cover, cand, plc) -> bool:
    p, m, q = cand
    return all(monomial_valuation(cover, p, m, q, place) >= 0 for place in plc)


def _widened_sieve(cover, i, want, plc) -> list[DifferentialRep]:
    g = cover.genus
    basis: list[DifferentialRep] = []
    for q in (i, i - cover.d):
        for m in range(0, cover.d + 1):
            for p in range(0, 2 * g + 1):
                if not _holomorphic(cover, (p, m, q), plc):
                    continue
                cand = diff_monomial(cover, p, m, q)
                if _rank_of_diffs(basis + [cand]) == len(basis) + 1:
                    basis.append(cand)
                if len(basis) == want:
                    return basis
    raise SieveMismatch(
        f"eigenspace {i}: found {len(basis)} independent holomorphic forms, expected {want}"
    )


def diffs_to_vectors(diffs: list[DifferentialRep]) -> list[list[Fraction]]:
    """Coordinates of differentials in a common Q-basis (for exact ranks).

    Per normal-form key, all coefficients are put over one common denominator
    so that entries depend linearly on the element.
    """
    keys = sorted({k for df in diffs for k in df.body.coeffs})
    common: dict = {}
    for k in keys:
        den = [Fraction(1)]
        for df in diffs:
            c = df.body.coeffs.get(k)
            if c is not None:
                den = _poly_lcm(den, c.den)
        common[k] = den
    # numerators after scaling to the common denominator
    chunks: dict = {}
    width: dict = {}
    for k in keys:
        nums = []
        for df in diffs:
            c = df.body.coeffs.get(k)
            if c is None:
                nums.append([])
            else:
                scale = pdivmod(common[k], c.den)[0]
                nums.append(pmul(c.num, scale))
        width[k] = max((len(n) for n in nums), default=0)
        chunks[k] = nums
    vectors = []
    for idx in range(len(diffs)):
        v: list[Fraction] = []
        for k in keys:
            n = chunks[k][idx]
            v.extend(list(n) + [Fraction(0)] * (width[k] - len(n)))
        vectors.append(v)
    return vectors


def _poly_lcm(a: list, b: list) -> list:
    g = pgcd(a, b)
    lcm = pmul(a, pdivmod(b, g)[0])
    return [c / lcm[-1] for c in lcm]


def _rank_of_diffs(diffs: list[DifferentialRep]) -> int:
    if not diffs:
        return 0
    return rank_bareiss(diffs_to_vectors(diffs))


# ---------------------------------------------------------------------------
# the j-invariant spaces V(i) and the cotangent decomposition
# ---------------------------------------------------------------------------


def v_basis(cover: DihedralCover, i: int) -> list[DifferentialRep]:
    """Basis {s + js} of V(i) for 1 <= i <= (d-1)/2; every element is j-fixed."""
    k = (cover.d - 1) // 2
    if not 1 <= i <= k:
        raise ValueError(f"V(i) defined for 1 <= i <= {k}")
    out = []
    for s in eigenbasis(cover, i):
        out.append(diff_add(s, diff_apply_j(s)))
    return out


def cotangent_decomposition(cover: DihedralCover) -> dict:
    """Dimension bookkeeping for the invariant cotangent space.

    Checks sum_i dim V(i) = k(g-1) with the V(i) independent, which pins the
    genus of the quotient curve C0.
    """
    k = (cover.d - 1) // 2
    g = cover.genus
    dims = {}
    all_vs: list[DifferentialRep] = []
    for i in range(1, k + 1):
        vb = v_basis(cover, i)
        dims[i] = len(vb)
        all_vs.extend(vb)
    rank = _rank_of_diffs(all_vs)
    expected = k * (g - 1)
    report = {
        "dims": dims,
        "total": sum(dims.values()),
        "independence_rank": rank,
        "expected_total": expected,
        "j_invariant": all(
            diff_apply_j(v).body == v.body for v in all_vs
        ),
        "ok": sum(dims.values()) == expected == rank,
    }
    return report


def power_is_generic(curve: HyperellipticCurve, cert: TorsionCertificate, i: int) -> bool:
    """Whether eta^i passes the effectivity-based genericity test.

    The certified eta itself never does (minus twice a degree-1 class reduces
    to degree 2), but its powers can when g >= 5.
    """
    eta = eta_class(curve, cert)
    minus_2i = cantor_mul(curve, -2 * i, eta)
    if minus_2i.is_zero():
        return False
    return not class_has_effective(curve, minus_2i, 4)
