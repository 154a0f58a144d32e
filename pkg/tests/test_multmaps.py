import random
from fractions import Fraction

import pytest

from hyperprym.cover import build_cover, diff_apply_j, eigenbasis
from hyperprym.errors import NotDescending, ZeroSection
from hyperprym.instances import named_instance
from hyperprym.multmaps import (
    QuadDifferential,
    codifferential_matrix,
    diagonal_image_intersection,
    lem_surj_rank,
    mult_rank_single,
    mult_single_kernel_dim,
    multiply,
    omega2_invariant_basis,
)
from hyperprym.polys import QPoly


@pytest.fixture(scope="module")
def covers():
    return {name: build_cover(*named_instance(name)) for name in ("G2D5", "G3D7", "G5D11")}


def test_omega2_invariant_sizes():
    for name, size in (("G2D5", 3), ("G3D7", 5), ("G5D11", 9)):
        curve, _ = named_instance(name)
        assert len(omega2_invariant_basis(curve)) == size == 2 * curve.genus - 1


def test_multiply_examples(covers):
    cov = covers["G2D5"]
    b1 = eigenbasis(cov, 1)[0]
    b4 = eigenbasis(cov, 4)[0]
    # (z dx/y) * (x-t) z^-1 dx/y -> (x-t) dx^2/y^2, here t = 0
    quad = multiply(cov, b1, b4)
    assert quad.p == QPoly([0, 1]) and quad.q.is_zero()
    b0 = eigenbasis(cov, 0)[0]
    assert multiply(cov, b0, b0) == QuadDifferential(QPoly([1]), QPoly([]))
    with pytest.raises(NotDescending):
        multiply(cov, b1, b1)


def test_multiply_bilinear_and_iota_equivariant(covers):
    # products of opposite eigen elements: bilinearity over random combinations
    cov = covers["G3D7"]
    rng = random.Random(4)
    b1 = eigenbasis(cov, 1)
    b6 = eigenbasis(cov, 6)
    for _ in range(5):
        c = [Fraction(rng.randint(-3, 3)) for _ in range(4)]
        from hyperprym.cover import DifferentialRep, diff_add

        s = DifferentialRep(body=b1[0].body * c[0] + b1[1].body * c[1], eigen_index=1)
        t = DifferentialRep(body=b6[0].body * c[2] + b6[1].body * c[3], eigen_index=6)
        quad = multiply(cov, s, t)
        ref_p = QPoly([])
        ref_q = QPoly([])
        for i, si in enumerate(b1):
            for j, tj in enumerate(b6):
                q = multiply(cov, si, tj)
                ref_p = ref_p + q.p * (c[i] * c[2 + j])
                ref_q = ref_q + q.q * (c[i] * c[2 + j])
        assert quad.p == ref_p and quad.q == ref_q
    # iota sends y -> -y: on products s * js the Q part must vanish
    for i in (1, 2, 3):
        for s in eigenbasis(cov, i):
            q = multiply(cov, s, diff_apply_j(s))
            assert q.q.is_zero()


# codifferential ranks; 2 < 3 reflects the positive-dimensional fibers at
# (g, d) = (2, 5), while 5 = 2g-1 and 9 = 2g-1 are the surjective regimes.
def test_codifferential_ranks(covers):
    expected = {"G2D5": (2, 3), "G3D7": (12, 5), "G5D11": (80, 9)}
    for name, (nrows, rank) in expected.items():
        mat, r = codifferential_matrix(covers[name])
        assert mat.shape()[0] == nrows
        assert r == rank
        assert r == _modular_rank_oracle(mat)


def _modular_rank_oracle(mat) -> int:
    """Rank check over two word-size prime fields (an upper bound that matches
    the rational rank for good primes; agreement on two primes is decisive for
    these small matrices)."""
    best = 0
    for p in (10**9 + 7, 998244353):
        rows = []
        for row in mat.entries:
            r = []
            for val in row:
                den = val.denominator % p
                r.append(val.numerator % p * pow(den, -1, p) % p)
            rows.append(r)
        best = max(best, _rank_mod_p(rows, p))
    return best


def _rank_mod_p(rows, p):
    rows = [list(r) for r in rows]
    rank = 0
    cols = len(rows[0]) if rows else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [x * inv % p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        rank += 1
        r += 1
    return rank


# Certificate-family eta is eta = O(P_t - oo), so omega (x) eta has the base
# point P_t and the generic-eta surjectivity ranks are not available at i = 1;
# the full rank 3g-3 appears exactly at the generic power (i = 3 on G5D11).
def test_mult_rank_single(covers):
    assert mult_rank_single(covers["G2D5"], 1) == 1
    assert mult_rank_single(covers["G3D7"], 1) == 3
    assert mult_rank_single(covers["G5D11"], 1) == 7
    assert mult_rank_single(covers["G5D11"], 3) == 12 == 3 * 5 - 3


def test_pencil_trick_kernel_prediction(covers):
    # base-point-free pencil trick: at the generic power on G5D11 the kernel
    # is h0(eta^{2i}) = 0; at the degenerate i=1 summand it is forced positive.
    cov = covers["G5D11"]
    assert mult_single_kernel_dim(cov, 3) == 16 - 12
    assert mult_single_kernel_dim(cov, 1) == 16 - 7


def test_diagonal_intersections(covers):
    assert diagonal_image_intersection(covers["G2D5"], 1, 2) == 0
    assert diagonal_image_intersection(covers["G2D5"], 1, 1) >= 1
    assert diagonal_image_intersection(covers["G3D7"], 1, 2) == 0
    assert diagonal_image_intersection(covers["G3D7"], 1, 3) == 0


def test_diagonal_intersection_2_3_structural(covers):
    # (x-t)^3 (x+t) = x^2(x-t)^2 - t^2(x-t)^2 = (x-t)^4 + 2t(x-t)^3 lies in
    # both monomial diagonal spans on every certificate instance, so this
    # dimension is 1, not the generic-curve 0.
    assert diagonal_image_intersection(covers["G3D7"], 2, 3) == 1


def test_lem_surj_ranks(covers):
    for name in ("G2D5", "G3D7"):
        cov = covers[name]
        g = cov.genus
        k = (cov.d - 1) // 2
        for i in range(1, k + 1):
            for s in eigenbasis(cov, i):
                assert lem_surj_rank(cov, i, s) == g - 1


def test_lem_surj_zero_section(covers):
    cov = covers["G2D5"]
    from hyperprym.cover import DifferentialRep, FunctionRep

    zero = DifferentialRep(body=FunctionRep(cov, {}), eigen_index=1)
    with pytest.raises(ZeroSection):
        lem_surj_rank(cov, 1, zero)
