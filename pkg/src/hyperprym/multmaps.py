"""Multiplication maps on eigendifferentials and their exact ranks.

Products of eigendifferentials with cancelling indices descend to quadratic
differentials on the base curve, written (P(x) + Q(x) y) dx^2 / y^2 with
deg P <= 2g-2 and deg Q <= g-3.  The involution fixes the P part and negates
the Q part, so the invariant projection is the Q-truncation.  All ranks are
computed by fraction-free elimination; nothing numeric enters this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cover import DifferentialRep, DihedralCover, eigenbasis, diff_apply_j, v_basis
from .curves import HyperellipticCurve
from .errors import NotDescending, ZeroSection
from .linalg import rank_bareiss
from .polys import QPoly, RatFun, pdivmod, pmul


@dataclass(frozen=True)
class QuadDifferential:
    """(P + Q*y) dx^2 / y^2 on the base curve."""

    p: QPoly
    q: QPoly

    def is_zero(self) -> bool:
        return self.p.is_zero() and self.q.is_zero()

    def invariant_part(self) -> "QuadDifferential":
        return QuadDifferential(self.p, QPoly([]))


def omega2_invariant_basis(curve: HyperellipticCurve) -> list[QuadDifferential]:
    """Basis {x^p dx^2/y^2 : 0 <= p <= 2g-2} of the invariant quadratic differentials."""
    if curve.genus < 2:
        raise ValueError("genus must be >= 2")
    out = []
    for p in range(0, 2 * curve.genus - 1):
        out.append(QuadDifferential(QPoly([0] * p + [1]), QPoly([])))
    return out


def multiply(cover: DihedralCover, s: DifferentialRep, s2: DifferentialRep) -> QuadDifferential:
    """Exact product of two eigendifferentials with cancelling indices.

    The product body has only sigma-invariant keys (0,0), (1,0), say A + B*y;
    then (A + B y) dx^2 = (A f + B f y) dx^2 / y^2 after y^2 = f.
    """
    if not isinstance(s.eigen_index, int) or not isinstance(s2.eigen_index, int):
        raise NotDescending("mixed eigen elements do not descend")
    if (s.eigen_index + s2.eigen_index) % cover.d != 0:
        raise NotDescending(
            f"indices {s.eigen_index} + {s2.eigen_index} != 0 mod {cover.d}"
        )
    body = s.body * s2.body
    for (e, q) in body.coeffs:
        if q != 0:
            raise NotDescending("product left a nonzero z power; inputs were not eigen-pure")
    a = body.coeffs.get((0, 0))
    b = body.coeffs.get((1, 0))
    f = list(cover.curve.f.c)
    p_poly = _ratfun_times_poly_exact(a, f) if a is not None else QPoly([])
    q_poly = _ratfun_times_poly_exact(b, f) if b is not None else QPoly([])
    quad = QuadDifferential(p_poly, q_poly)
    _check_degrees(cover.curve, quad)
    return quad


def _ratfun_times_poly_exact(r: RatFun, f: list[Fraction]) -> QPoly:
    num = pmul(r.num, f)
    quo, rem = pdivmod(num, r.den)
    if rem:
        raise ValueError("product of holomorphic differentials failed to clear denominators")
    return QPoly(quo)


def _check_degrees(curve: HyperellipticCurve, quad: QuadDifferential):
    g = curve.genus
    if quad.p.degree > 2 * g - 2 or quad.q.degree > g - 3:
        raise ValueError("quadratic differential exceeds the holomorphic degree bounds")


def quad_vector(curve: HyperellipticCurve, quad: QuadDifferential, invariant_only: bool) -> list[Fraction]:
    """Coordinates in the monomial basis of H0(omega^2) (or its invariant part)."""
    g = curve.genus
    pv = list(quad.p.c) + [Fraction(0)] * (2 * g - 1 - len(quad.p.c))
    if invariant_only:
        return pv
    qv = list(quad.q.c) + [Fraction(0)] * (max(g - 2, 0) - len(quad.q.c))
    return pv + qv


@dataclass(frozen=True)
class ExactMatrix:
    """Exact rational matrix with basis labels, for reports and CSV dumps."""

    entries: tuple
    row_labels: tuple
    col_labels: tuple

    @property
    def rank(self) -> int:
        return rank_bareiss([list(r) for r in self.entries])

    def shape(self) -> tuple[int, int]:
        return len(self.entries), len(self.col_labels)


def codifferential_matrix(cover: DihedralCover) -> tuple[ExactMatrix, int]:
    """Matrix of the summed multiplication map into the invariant quadratic
    differentials, rows ordered lexicographically by (i, row, column)."""
    k = (cover.d - 1) // 2
    curve = cover.curve
    rows = []
    labels = []
    for i in range(1, k + 1):
        bi = eigenbasis(cover, i)
        bmi = eigenbasis(cover, cover.d - i)
        for r, s in enumerate(bi):
            for c, s2 in enumerate(bmi):
                quad = multiply(cover, s, s2)
                rows.append(quad_vector(curve, quad.invariant_part(), True))
                labels.append(f"i={i},r={r},c={c}")
    cols = tuple(f"x^{p} dx^2/y^2" for p in range(2 * curve.genus - 1))
    mat = ExactMatrix(tuple(tuple(r) for r in rows), tuple(labels), cols)
    return mat, mat.rank


def mult_rank_single(cover: DihedralCover, i: int) -> int:
    """Rank of the single-summand multiplication into all quadratic differentials."""
    k = (cover.d - 1) // 2
    if not 1 <= i <= k:
        raise ValueError(f"need 1 <= i <= {k}")
    bi = eigenbasis(cover, i)
    bmi = eigenbasis(cover, cover.d - i)
    rows = []
    for s in bi:
        for s2 in bmi:
            quad = multiply(cover, s, s2)
            rows.append(quad_vector(cover.curve, quad, False))
    return rank_bareiss(rows)


def mult_single_kernel_dim(cover: DihedralCover, i: int) -> int:
    bi = eigenbasis(cover, i)
    bmi = eigenbasis(cover, cover.d - i)
    return len(bi) * len(bmi) - mult_rank_single(cover, i)


def _diagonal_rows(cover: DihedralCover, i: int) -> list[list[Fraction]]:
    rows = []
    for s in eigenbasis(cover, i):
        quad = multiply(cover, s, diff_apply_j(s))
        if not quad.q.is_zero():
            raise ValueError("s * js failed to be involution invariant")
        rows.append(quad_vector(cover.curve, quad, True))
    return rows


def diagonal_image_intersection(cover: DihedralCover, i: int, l: int) -> int:
    """dim of span{s * js : s in basis of eigenspace i} cap the same for l."""
    li = _diagonal_rows(cover, i)
    ll = _diagonal_rows(cover, l)
    ri = rank_bareiss(li)
    rl = rank_bareiss(ll)
    rboth = rank_bareiss(li + ll)
    return ri + rl - rboth


def lem_surj_rank(cover: DihedralCover, i: int, s: DifferentialRep) -> int:
    """Rank of t + jt -> s*(jt) + (js)*t on V(i), the transpose of the
    deformation pairing against a fixed section s; full rank g-1 means the
    pairing is onto V(i)*."""
    if s.body.is_zero():
        raise ZeroSection("the fixed section must be nonzero")
    js = diff_apply_j(s)
    rows = []
    for t in eigenbasis(cover, i):
        jt = diff_apply_j(t)
        quad1 = multiply(cover, s, jt)
        quad2 = multiply(cover, js, t)
        p = quad1.p + quad2.p
        q = quad1.q + quad2.q
        if not q.is_zero():
            raise ValueError("dual map image failed to be involution invariant")
        rows.append(quad_vector(cover.curve, QuadDifferential(p, QPoly([])), True))
    return rank_bareiss(rows)
