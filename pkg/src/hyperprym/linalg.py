"""Exact linear algebra: fraction-free ranks over Q and integer lattice tools.

Rational matrices are lists of lists of Fraction; integer matrices are lists
of lists of int (arbitrary precision, never numpy).  Everything here is
deterministic and exact; no floating point enters any rank, normal form, or
solve.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import NotIntegral
from .polys import QPoly


# ---------------------------------------------------------------------------
# rational matrices
# ---------------------------------------------------------------------------


def clear_denominators(rows: list[list[Fraction]]) -> list[list[int]]:
    out = []
    for row in rows:
        m = lcm(*[c.denominator for c in row]) if row else 1
        out.append([int(c * m) for c in row])
    return out


def rank_bareiss(rows: list[list[Fraction]]) -> int:
    """Exact rank by fraction-free (Bareiss) elimination."""
    a = clear_denominators(rows)
    if not a or not a[0]:
        return 0
    n, m = len(a), len(a[0])
    rank = 0
    prev = 1
    row = 0
    for col in range(m):
        piv = None
        for i in range(row, n):
            if a[i][col] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[row], a[piv] = a[piv], a[row]
        for i in range(row + 1, n):
            for j in range(col + 1, m):
                a[i][j] = (a[row][col] * a[i][j] - a[i][col] * a[row][j]) // prev
            a[i][col] = 0
        prev = a[row][col]
        row += 1
        rank += 1
        if row == n:
            break
    return rank


def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    a = [list(map(Fraction, r)) for r in rows]
    if not a:
        return a, []
    n, m = len(a), len(a[0])
    pivots = []
    r = 0
    for c in range(m):
        pr = None
        for i in range(r, n):
            if a[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        a[r], a[pr] = a[pr], a[r]
        pv = a[r][c]
        a[r] = [x / pv for x in a[r]]
        for i in range(n):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    return a, pivots


def nullspace(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    """Basis of the right kernel."""
    if not rows:
        return []
    m = len(rows[0])
    red, pivots = rref(rows)
    free = [c for c in range(m) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * m
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        basis.append(v)
    return basis


def solve_linear(rows: list[list[Fraction]], rhs: list[Fraction]):
    """One solution of rows * x = rhs, or None if inconsistent."""
    if not rows:
        return [] if all(v == 0 for v in rhs) else None
    m = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    for row in red:
        if all(x == 0 for x in row[:m]) and row[m] != 0:
            return None
    x = [Fraction(0)] * m
    for r, pc in enumerate(pivots):
        if pc < m:
            x[pc] = red[r][m]
        elif red[r][m] != 0:
            return None
    return x


def mat_inverse_q(rows: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(rows)
    aug = [list(map(Fraction, rows[i])) + [Fraction(1 if j == i else 0) for j in range(n)] for i in range(n)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [row[n:] for row in red]


# ---------------------------------------------------------------------------
# integer matrices
# ---------------------------------------------------------------------------


def int_identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, k = len(a), len(b)
    m = len(b[0]) if b else 0
    bt = list(zip(*b)) if b else []
    return [[sum(ar[t] * bc[t] for t in range(k)) for bc in bt] for ar in a]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, s):
    return [[x * s for x in row] for row in a]


def mat_transpose(a):
    return [list(r) for r in zip(*a)] if a else []

def mat_eq(a, b) -> bool:
    return len(a) == len(b) and all(ra == rb for ra, rb in zip(a, b))


def is_identity(a) -> bool:
    return mat_eq(a, int_identity(len(a)))


def mat_pow(a, n: int):
    size = len(a)
    out = int_identity(size)
    base = [list(r) for r in a]
    while n:
        if n & 1:
            out = mat_mul(out, base)
        n >>= 1
        if n:
            base = mat_mul(base, base)
    return out


def det_int(a) -> int:
    """Determinant by fraction-free elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(r) for r in a]
    prev = 1
    sign = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if piv is None:
                return 0
            m[k], m[piv] = m[piv], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def hnf_rows(a: list[list[int]]) -> tuple[list[list[int]], list[list[int]], list[int]]:
    """Row Hermite normal form.

    Returns (H, U, pivot_cols) with U unimodular, U*A = H, pivots positive and
    entries above each pivot reduced to [0, pivot).
    """
    n = len(a)
    m = len(a[0]) if n else 0
    h = [list(r) for r in a]
    u = int_identity(n)
    r = 0
    pivots = []
    for c in range(m):
        piv = None
        for i in range(r, n):
            if h[i][c] != 0:
                if piv is None or abs(h[i][c]) < abs(h[piv][c]):
                    piv = i
        if piv is None:
            continue
        h[r], h[piv] = h[piv], h[r]
        u[r], u[piv] = u[piv], u[r]
        # euclidean elimination below the pivot
        while True:
            done = True
            for i in range(r + 1, n):
                if h[i][c] != 0:
                    q = h[i][c] // h[r][c]
                    if q:
                        h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                        u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                    if h[i][c] != 0:
                        h[r], h[i] = h[i], h[r]
                        u[r], u[i] = u[i], u[r]
                        done = False
            if done:
                break
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        for i in range(r):
            q = h[i][c] // h[r][c]
            if q:
                h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                u[i] = [x - q * y for x, y in zip(u[i], u[r])]
        pivots.append(c)
        r += 1
        if r == n:
            break
    return h, u, pivots


def smith_normal_form(a: list[list[int]]):
    """U * A * V = D diagonal with d_i | d_{i+1}.

    Returns (d, U, V, Uinv) where d is the list of nonzero diagonal entries
    (the elementary divisors), and Uinv is maintained alongside U so callers
    can read saturated column-space bases from its leading columns.
    """
    n = len(a)
    m = len(a[0]) if n else 0
    d = [list(r) for r in a]
    u = int_identity(n)
    uinv = int_identity(n)
    v = int_identity(m)

    def row_op(i, j, q):  # row_i -= q*row_j ; uinv col_j += q*col_i
        d[i] = [x - q * y for x, y in zip(d[i], d[j])]
        u[i] = [x - q * y for x, y in zip(u[i], u[j])]
        for t in range(n):
            uinv[t][j] += q * uinv[t][i]

    def col_op(i, j, q):  # col_i -= q*col_j
        for t in range(n):
            d[t][i] -= q * d[t][j]
        for t in range(m):
            v[t][i] -= q * v[t][j]

    def row_swap(i, j):
        d[i], d[j] = d[j], d[i]
        u[i], u[j] = u[j], u[i]
        for t in range(n):
            uinv[t][i], uinv[t][j] = uinv[t][j], uinv[t][i]

    def col_swap(i, j):
        for t in range(n):
            d[t][i], d[t][j] = d[t][j], d[t][i]
        for t in range(m):
            v[t][i], v[t][j] = v[t][j], v[t][i]

    def row_negate(i):
        d[i] = [-x for x in d[i]]
        u[i] = [-x for x in u[i]]
        for t in range(n):
            uinv[t][i] = -uinv[t][i]

    s = 0
    while s < min(n, m):
        # find the smallest nonzero entry in the trailing block
        piv = None
        best = None
        for i in range(s, n):
            for j in range(s, m):
                if d[i][j] != 0 and (best is None or abs(d[i][j]) < best):
                    best = abs(d[i][j])
                    piv = (i, j)
        if piv is None:
            break
        row_swap(s, piv[0])
        col_swap(s, piv[1])
        if d[s][s] < 0:
            row_negate(s)
        dirty = False
        for i in range(s + 1, n):
            if d[i][s] != 0:
                q = d[i][s] // d[s][s]
                row_op(i, s, q)
                if d[i][s] != 0:
                    dirty = True
        for j in range(s + 1, m):
            if d[s][j] != 0:
                q = d[s][j] // d[s][s]
                col_op(j, s, q)
                if d[s][j] != 0:
                    dirty = True
        if dirty:
            continue
        # divisibility sweep
        bad = None
        for i in range(s + 1, n):
            for j in range(s + 1, m):
                if d[i][j] % d[s][s] != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            row_op(s, bad, -1)  # add row `bad` into row s, then restart the step
            continue
        s += 1
    divisors = [d[i][i] for i in range(min(n, m)) if d[i][i] != 0]
    return divisors, u, v, uinv


def saturation_of_columns(a: list[list[int]]) -> list[list[int]]:
    """Basis (as columns) of the saturation of the column span of a.

    The saturation is the largest sublattice of Z^n with the same rational
    span; its basis is read off the leading columns of U^{-1} from the Smith
    form U A V = D.
    """
    divisors, _, _, uinv = smith_normal_form(a)
    r = len(divisors)
    return [[uinv[i][j] for j in range(r)] for i in range(len(a))]


def solve_columns_int(b: list[list[int]], c: list[list[int]]) -> list[list[int]]:
    """X with B X = C over Z, for B of full column rank; raises NotIntegral."""
    n = len(b)
    r = len(b[0]) if n else 0
    bt = mat_transpose(b)  # r x n
    h, u, pivots = hnf_rows(bt)
    if len(pivots) != r:
        raise NotIntegral("basis matrix is column rank deficient")
    cols_out = []
    ct = mat_transpose(c)
    for cv in ct:
        # solve y * H = cv with y rational, then x = y * U
        y = [Fraction(0)] * r
        cur = [Fraction(x) for x in cv]
        for i, pc in enumerate(pivots):
            y[i] = Fraction(cur[pc]) / h[i][pc]
            cur = [cur[j] - y[i] * h[i][j] for j in range(n)]
        if any(x != 0 for x in cur):
            raise NotIntegral("vector not in the rational span of the basis")
        x = [sum(y[i] * u[i][j] for i in range(r)) for j in range(r)]
        if any(val.denominator != 1 for val in x):
            raise NotIntegral("vector not in the integral lattice")
        cols_out.append([int(val) for val in x])
    return mat_transpose(cols_out)


def in_lattice(b: list[list[int]], vec: list[int]) -> bool:
    try:
        solve_columns_int(b, [[v] for v in vec])
        return True
    except NotIntegral:
        return False


def symplectic_transform(omega: list[list[int]]) -> list[list[int]]:
    """T unimodular with T^t * Omega * T = [[0, I], [-I, 0]].

    Requires Omega antisymmetric, unimodular (all symplectic divisors 1),
    which holds for intersection forms of closed oriented surfaces.
    """
    n = len(omega)
    if n % 2:
        raise ValueError("odd-dimensional symplectic reduction")

    def form(x, y):
        return sum(x[i] * sum(omega[i][j] * y[j] for j in range(n)) for i in range(n))

    basis = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    a_vecs = []
    b_vecs = []
    while basis:
        e1 = basis[0]
        vals = [form(e1, w) for w in basis]
        g = 0
        for vl in vals:
            g = gcd(g, vl)
        if g == 0:
            raise ValueError("degenerate form")
        if g != 1:
            raise ValueError("form is not unimodular on this block")
        e2 = _combination_for_gcd(basis, vals)
        assert form(e1, e2) == 1
        rest = []
        for w in basis:
            al = form(w, e2)
            bl = form(w, e1)
            w2 = [wi - al * x + bl * y for wi, x, y in zip(w, e1, e2)]
            if any(w2):
                rest.append(w2)
        # HNF keeps a genuine lattice basis of the projected complement (an
        # independent subset of the projections could have finite index in it)
        if rest:
            h, _, _ = hnf_rows(rest)
            rest = [row for row in h if any(row)]
        a_vecs.append(e1)
        b_vecs.append(e2)
        basis = rest
    cols = a_vecs + b_vecs
    t = [[cols[j][i] for j in range(n)] for i in range(n)]
    return t


def _combination_for_gcd(basis, vals):
    """Integer combination of basis vectors whose form value against e1 is 1."""
    n = len(basis[0])
    cur = None
    cur_val = 0
    for w, vl in zip(basis, vals):
        if vl == 0:
            continue
        if cur is None:
            cur, cur_val = list(w), vl
        else:
            g, s, t = _xgcd(cur_val, vl)
            cur = [s * a + t * b for a, b in zip(cur, w)]
            cur_val = g
        if abs(cur_val) == 1:
            break
    if cur_val == -1:
        cur = [-x for x in cur]
        cur_val = 1
    if cur_val != 1:
        raise ValueError("could not realize pairing 1")
    return cur


def _xgcd(a: int, b: int):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def minpoly_int_matrix(a: list[list[int]]) -> QPoly:
    """Exact minimal polynomial of an integer matrix."""
    n = len(a)
    vecs: list[list[Fraction]] = []
    powers = int_identity(n)
    for _ in range(n + 1):
        flat = [Fraction(powers[i][j]) for i in range(n) for j in range(n)]
        vecs.append(flat)
        dep = _first_dependency(vecs)
        if dep is not None:
            return QPoly(dep).monic()
        powers = mat_mul(powers, a)
    raise ArithmeticError("minimal polynomial not found")


def _first_dependency(vecs: list[list[Fraction]]):
    k = len(vecs)
    rows = [[vecs[i][j] for i in range(k - 1)] for j in range(len(vecs[0]))]
    rhs = [-vecs[-1][j] for j in range(len(vecs[0]))]
    sol = solve_linear(rows, rhs)
    if sol is None:
        return None
    return sol + [Fraction(1)]
