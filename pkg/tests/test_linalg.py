import random
from fractions import Fraction

from hyperprym.linalg import (
    det_int,
    hnf_rows,
    int_identity,
    mat_mul,
    mat_transpose,
    minpoly_int_matrix,
    nullspace,
    rank_bareiss,
    saturation_of_columns,
    smith_normal_form,
    solve_columns_int,
    solve_linear,
    symplectic_transform,
)
from hyperprym.polys import QPoly


def frac_rows(rows):
    return [[Fraction(x) for x in r] for r in rows]


def test_rank_and_nullspace():
    rows = frac_rows([[1, 2, 3], [2, 4, 6], [0, 1, 1]])
    assert rank_bareiss(rows) == 2
    ns = nullspace(rows)
    assert len(ns) == 1
    v = ns[0]
    for r in rows:
        assert sum(a * b for a, b in zip(r, v)) == 0


def test_rank_matches_random_gaussian():
    rng = random.Random(5)
    for _ in range(30):
        n, m = rng.randint(1, 6), rng.randint(1, 6)
        rows = frac_rows([[rng.randint(-4, 4) for _ in range(m)] for _ in range(n)])
        assert rank_bareiss(rows) == len(rows) - len(nullspace(mat_transpose_q(rows)))


def mat_transpose_q(rows):
    return [list(r) for r in zip(*rows)]


def test_solve_linear():
    rows = frac_rows([[2, 1], [1, 3]])
    sol = solve_linear(rows, [Fraction(5), Fraction(10)])
    assert sol == [Fraction(1), Fraction(3)]
    assert solve_linear(frac_rows([[1, 1], [1, 1]]), [Fraction(0), Fraction(1)]) is None


def test_hnf_properties():
    rng = random.Random(9)
    for _ in range(25):
        n, m = rng.randint(1, 5), rng.randint(1, 5)
        a = [[rng.randint(-6, 6) for _ in range(m)] for _ in range(n)]
        h, u, pivots = hnf_rows(a)
        assert mat_mul(u, a) == h
        assert abs(det_int(u)) == 1
        for i, c in enumerate(pivots):
            assert h[i][c] > 0
            for j in range(i):
                assert 0 <= h[j][c] < h[i][c]


def test_smith_form():
    rng = random.Random(13)
    for _ in range(25):
        n, m = rng.randint(1, 5), rng.randint(1, 5)
        a = [[rng.randint(-6, 6) for _ in range(m)] for _ in range(n)]
        divisors, u, v, uinv = smith_normal_form(a)
        d = mat_mul(mat_mul(u, a), v)
        assert abs(det_int(u)) == 1
        assert abs(det_int(v)) == 1
        assert mat_mul(u, uinv) == int_identity(n)
        for i in range(n):
            for j in range(m):
                if i == j and i < len(divisors):
                    assert d[i][j] == divisors[i]
                else:
                    assert d[i][j] == 0
        for i in range(len(divisors) - 1):
            assert divisors[i + 1] % divisors[i] == 0


def test_saturation():
    # columns span 2Z x 3Z inside Z^2; saturation is all of Z^2
    a = [[2, 0], [0, 3]]
    sat = saturation_of_columns(a)
    assert abs(det_int(sat)) == 1
    # rank-1 saturation: (2,4) saturates to (1,2)
    sat2 = saturation_of_columns([[2], [4]])
    assert [abs(sat2[0][0]), abs(sat2[1][0])] == [1, 2]


def test_solve_columns_int():
    b = [[2, 1], [0, 3], [1, 0]]
    x = [[1, -2], [2, 5]]
    c = mat_mul(b, x)
    got = solve_columns_int(b, c)
    assert got == x


def test_symplectic_transform():
    rng = random.Random(21)
    j0 = [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]]
    for _ in range(15):
        # random unimodular change of basis of the standard form
        u = random_unimodular(rng, 4)
        omega = mat_mul(mat_mul(mat_transpose(u), j0), u)
        t = symplectic_transform(omega)
        back = mat_mul(mat_mul(mat_transpose(t), omega), t)
        assert back == j0
        assert abs(det_int(t)) == 1


def random_unimodular(rng, n):
    u = int_identity(n)
    for _ in range(12):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        q = rng.randint(-2, 2)
        for col in range(n):
            u[i][col] += q * u[j][col]
    return u


def test_minpoly_int_matrix():
    a = [[0, 1], [1, 1]]  # x^2 - x - 1
    assert minpoly_int_matrix(a) == QPoly([-1, -1, 1])
    assert minpoly_int_matrix(int_identity(3)) == QPoly([-1, 1])
