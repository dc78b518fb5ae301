"""Exact integer / rational / prime-field linear algebra.

All geometry in this package reduces to small exact-arithmetic kernels:

* Smith-form based integer solving (grading functionals, lattice kernels,
  saturations),
* Fraction Gaussian elimination for small dense matrices,
* fast row echelon over a prime field (blocked float64 multiply, exact
  because every intermediate value stays below 2**53),
* certified rational rank for the large multiplication matrices: a mod-p
  echelon proposes the rank, Dixon p-adic lifting produces candidate
  kernel vectors, and an exact bigint verification promotes the answer
  from "probable" to proven.  On any failure we fall back to plain
  Fraction elimination, which is always correct.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

# A prime just above 2**21 keeps 64-term float64 dot products of residues
# exact with room to defer modular reductions across several panels
# (64*(p-1)**2 ~ 2**48 per update), while staying above the 10**6
# coefficient range used for random elements.
DEFAULT_PRIME = 2097169
MIN_FIELD_CHAR = 2_000_000

_BLOCK = 64


def gcd_vector(vec) -> int:
    g = 0
    for x in vec:
        g = math.gcd(g, int(x))
    return g


def primitive_vector(vec):
    """Divide out the content, preserving direction (gcd is positive)."""
    g = gcd_vector(vec)
    if g == 0:
        return tuple(int(x) for x in vec)
    return tuple(int(x) // g for x in vec)


def dot(u, v) -> int:
    return sum(int(a) * int(b) for a, b in zip(u, v))


# ---------------------------------------------------------------------------
# Fraction elimination (small matrices, ultimate fallback)
# ---------------------------------------------------------------------------

def rref_fraction(rows):
    """Reduced row echelon form over Q.  Returns (rref_rows, pivot_columns)."""
    mat = [[Fraction(x) for x in row] for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if mat[i][c] != 0), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return mat, pivots


def rank_fraction(rows) -> int:
    return len(rref_fraction(rows)[1])


def nullspace_fraction(rows):
    """Basis of the right kernel over Q, as primitive integer vectors."""
    if not rows:
        return []
    ncols = len(rows[0])
    rref, pivots = rref_fraction(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for i, c in enumerate(pivots):
            vec[c] = -rref[i][f]
        den = 1
        for x in vec:
            den = den * x.denominator // math.gcd(den, x.denominator)
        basis.append(primitive_vector([int(x * den) for x in vec]))
    return basis


# ---------------------------------------------------------------------------
# Integer lattice algebra via a diagonalization of Smith type
# ---------------------------------------------------------------------------

def _diagonalize(mat):
    """Return (U, D, V) with D = U @ mat @ V diagonal, U and V unimodular."""
    a = [list(map(int, row)) for row in mat]
    m = len(a)
    n = len(a[0]) if m else 0
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def addmul_row(dst, src, q):
        a[dst] = [x + q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def addmul_col(dst, src, q):
        for row in a:
            row[dst] += q * row[src]
        for row in v:
            row[dst] += q * row[src]

    t = 0
    while t < min(m, n):
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < best):
                    best = abs(a[i][j])
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            reduced = False
            for i in range(t + 1, m):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    addmul_row(i, t, -q)
                    if a[i][t] != 0:
                        swap_rows(t, i)
                        reduced = True
            for j in range(t + 1, n):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    addmul_col(j, t, -q)
                    if a[t][j] != 0:
                        swap_cols(t, j)
                        reduced = True
            if not reduced:
                break
        t += 1
    return u, a, v


def integer_kernel(mat):
    """Saturated basis of {x in Z^n : mat @ x = 0}."""
    if not mat:
        return []
    n = len(mat[0])
    _, d, v = _diagonalize(mat)
    r = sum(1 for i in range(min(len(d), n)) if d[i][i] != 0)
    return [tuple(v[i][j] for i in range(n)) for j in range(r, n)]


def solve_integer(mat, rhs):
    """One integer solution x of mat @ x = rhs, or None.

    Free coordinates of the diagonalized system are pinned to zero, so the
    returned solution is deterministic.
    """
    if not mat:
        return None
    m = len(mat)
    n = len(mat[0])
    u, d, v = _diagonalize(mat)
    ub = [dot(u[i], rhs) for i in range(m)]
    y = [0] * n
    for i in range(min(m, n)):
        di = d[i][i]
        if di != 0:
            if ub[i] % di != 0:
                return None
            y[i] = ub[i] // di
        elif ub[i] != 0:
            return None
    for i in range(n, m):
        if ub[i] != 0:
            return None
    if m < n:
        for i in range(m, min(m, n)):
            y[i] = 0
    # check trailing equations when m > n handled above; assemble x = V y
    x = tuple(sum(v[i][j] * y[j] for j in range(n)) for i in range(n))
    for row, b in zip(mat, rhs):
        if dot(row, x) != int(b):
            return None
    return x


def saturation_basis(vectors):
    """Basis of span_Q(vectors) ∩ Z^n (the saturated lattice of the span)."""
    vecs = [v for v in vectors if any(x != 0 for x in v)]
    if not vecs:
        return []
    n = len(vecs[0])
    perp = integer_kernel(vecs)          # functionals vanishing on the span
    if not perp:
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    return integer_kernel(perp)          # saturated double annihilator


def coordinates_in_basis(basis, vec):
    """Integer coordinates of vec in the given lattice basis, or None."""
    cols = list(zip(*basis))  # matrix with basis vectors as columns
    return solve_integer([list(row) for row in cols], vec)


def rank_int(rows) -> int:
    """Exact rank of a small integer matrix."""
    return rank_fraction(rows)


# ---------------------------------------------------------------------------
# Prime field elimination
# ---------------------------------------------------------------------------

def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_below(start: int):
    """Yield primes descending from start (exclusive)."""
    n = start - 1
    while n > 2:
        if _is_probable_prime(n):
            yield n
        n -= 1


def _fast_mod_inplace(x: np.ndarray, p: int, inv_p: float) -> None:
    """x mod p in place for integer-valued float64 data with |x| < 2**53.

    floor(x/p) computed via multiplication is off by at most one, so a
    single fix-up pass restores the exact residue."""
    q = np.floor(x * inv_p)
    x -= q * p
    x[x < 0] += p
    x[x >= p] -= p


def _echelon_small_float(a: np.ndarray, p: int):
    """Row echelon over GF(p) with blocked float64 updates.

    Requires p < 2**23 so that 64-term dot products of residues stay exact
    in float64 (64 * (p-1)**2 < 2**53).  Scalar work touches only the
    64-column panel; the trailing block is updated by forward substitution
    on the pivot rows plus one GEMM.  Only the rank and pivot columns of
    the result are meaningful to callers.
    """
    m, n = a.shape
    inv_p = 1.0 / p
    p2 = float(p - 1) ** 2
    panel_growth = _BLOCK * p2
    cap = float(1 << 51)  # keep |values| comfortably under 2**53
    # `bound` tracks the magnitude of not-yet-reduced entries in the live
    # region (rows >= r).  Columns/rows are reduced exactly where they are
    # read; the full block is reduced only when the bound approaches cap.
    bound = float(p - 1)
    r = 0
    pivots = []
    col = 0
    while col < n and r < m:
        hi = min(col + _BLOCK, n)
        recorded = []  # (pivot_row, inverse, multipliers for rows below)
        r0 = r
        for c in range(col, hi):
            colv = a[r:, c]
            _fast_mod_inplace(colv, p, inv_p)
            nz = np.nonzero(colv)[0]
            if nz.size == 0:
                continue
            i = r + int(nz[0])
            if i != r:
                a[[r, i], col:] = a[[i, r], col:]
                # keep recorded multiplier columns aligned with row contents
                for rk, _, fk in recorded:
                    fk[r - rk - 1], fk[i - rk - 1] = fk[i - rk - 1], fk[r - rk - 1]
            row = a[r, col:hi]
            _fast_mod_inplace(row, p, inv_p)
            inv = pow(int(a[r, c]), -1, p)
            row *= inv
            _fast_mod_inplace(row, p, inv_p)
            f = a[r + 1:, c].copy()
            if f.size:
                block = a[r + 1:, col:hi]
                block -= np.outer(f, row)
            recorded.append((r, inv, f))
            pivots.append(c)
            r += 1
        # panel columns accumulate at most one p^2 per pivot
        if hi < n and recorded:
            trail = a[:, hi:]
            # finalize pivot rows by forward substitution
            for idx, (rk, inv, fk) in enumerate(recorded):
                row = trail[rk]
                if idx:
                    mult = np.array([recorded[k][2][rk - recorded[k][0] - 1]
                                     for k in range(idx)])
                    row -= mult @ trail[r0:rk]
                _fast_mod_inplace(row, p, inv_p)
                row *= inv
                _fast_mod_inplace(row, p, inv_p)
            # one GEMM handles every row below the panel
            if m > r:
                below = np.empty((m - r, len(recorded)))
                for k, (rk, _, fk) in enumerate(recorded):
                    below[:, k] = fk[r - rk - 1:]
                trail[r:] -= below @ trail[r0:r]
                bound += panel_growth
                if bound + panel_growth > cap:
                    _fast_mod_inplace(trail[r:], p, inv_p)
                    bound = float(p - 1)
        col = hi
    return r, pivots, a


def _echelon_int64(a: np.ndarray, p: int):
    """Unblocked row echelon over GF(p) in int64; works for p < 2**31.5."""
    m, n = a.shape
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = a[r] * inv % p
        f = a[r + 1:, c].copy()
        rows = np.nonzero(f)[0]
        if rows.size:
            a[r + 1 + rows] = (a[r + 1 + rows] - f[rows, None] * a[r]) % p
        pivots.append(c)
        r += 1
    return r, pivots, a


def _to_mod_array(rows, p: int, dtype):
    if isinstance(rows, np.ndarray):
        if rows.dtype == object:
            a = np.array([[int(x) % p for x in row] for row in rows],
                         dtype=dtype)
        else:
            a = (rows.astype(np.int64) % p).astype(dtype)
    else:
        a = np.array([[int(x) % p for x in row] for row in rows], dtype=dtype)
    if a.ndim == 1:
        a = a.reshape(len(rows), -1)
    return a


def echelon_mod_p(rows, p: int):
    """Row echelon form over GF(p); returns (rank, pivot_columns, matrix)."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    if nrows == 0 or ncols == 0:
        return 0, [], np.zeros((nrows, ncols))
    if p < (1 << 23):
        a = _to_mod_array(rows, p, np.float64)
        return _echelon_small_float(a, p)
    if p >= (1 << 32):
        raise ValueError("prime too large for the int64 elimination path")
    a = _to_mod_array(rows, p, np.int64)
    return _echelon_int64(a, p)


def rank_mod_p(rows, p: int) -> int:
    return echelon_mod_p(rows, p)[0]


def ranks_with_prefix_mod_p(rows, split: int, p: int) -> tuple[int, int]:
    """(rank of the first `split` columns, rank of the whole matrix) from a
    single elimination; columns are processed left to right, so pivots with
    index below `split` are exactly the prefix rank."""
    _, pivots, _ = echelon_mod_p(rows, p)
    return sum(1 for c in pivots if c < split), len(pivots)


def rref_mod_p(rows, p: int):
    """Full RREF over GF(p).  Returns (rank, pivots, int64 matrix)."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    if nrows == 0 or ncols == 0:
        return 0, [], np.zeros((nrows, ncols), dtype=np.int64)
    if p < (1 << 22):
        return _rref_small_float(_to_mod_array(rows, p, np.float64), p)
    a = _to_mod_array(rows, p, np.int64)
    m, n = a.shape
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = a[r] * pow(int(a[r, c]), -1, p) % p
        others = np.nonzero(a[:, c])[0]
        others = others[others != r]
        if others.size:
            a[others] = (a[others] - a[others, c][:, None] * a[r]) % p
        pivots.append(c)
        r += 1
    return r, pivots, a


def _rref_small_float(a: np.ndarray, p: int):
    """Float64 RREF with deferred reductions; exact for p < 2**22."""
    m, n = a.shape
    inv_p = 1.0 / p
    p2 = float(p - 1) ** 2
    cap = float(1 << 51)
    bound = float(p - 1)
    r = 0
    pivots = []
    for c in range(n):
        if r == m:
            break
        colv = a[:, c]
        _fast_mod_inplace(colv, p, inv_p)
        nz = np.nonzero(colv[r:])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        row = a[r]
        _fast_mod_inplace(row, p, inv_p)
        row *= pow(int(row[c]), -1, p)
        _fast_mod_inplace(row, p, inv_p)
        others = np.nonzero(colv)[0]
        others = others[others != r]
        if others.size:
            a[others] -= np.outer(a[others, c], row)
            bound += p2
            if bound + p2 > cap:
                _fast_mod_inplace(a, p, inv_p)
                bound = float(p - 1)
        pivots.append(c)
        r += 1
    _fast_mod_inplace(a, p, inv_p)
    return r, pivots, a.astype(np.int64)


# ---------------------------------------------------------------------------
# Certified rational rank (Dixon lifting + exact verification)
# ---------------------------------------------------------------------------

def rational_reconstruct(residue: int, modulus: int):
    """Classic half-gcd rational reconstruction of residue mod modulus."""
    bound = math.isqrt(modulus // 2)
    r0, r1 = modulus, residue % modulus
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if r1 > bound or s1 == 0 or abs(s1) > bound or math.gcd(r1, abs(s1)) != 1:
        return None
    return Fraction(r1, s1)


def vector_rational_reconstruct(residues, modulus: int):
    """Reconstruct a rational vector, exploiting a shared denominator.

    After each expensive single-entry reconstruction the running
    denominator is applied to the remaining residues, which then usually
    pass a cheap integerness test.  Returns None when any entry fails."""
    bound = math.isqrt(modulus // 2)
    den = 1
    out = []
    for r in residues:
        r = int(r) % modulus
        y = r * den % modulus
        if y <= bound:
            out.append(Fraction(y, den))
            continue
        if modulus - y <= bound:
            out.append(Fraction(-(modulus - y), den))
            continue
        f = rational_reconstruct(y, modulus)
        if f is None:
            return None
        out.append(Fraction(f.numerator, f.denominator * den))
        den *= f.denominator
    return out


class _DixonSolver:
    """Solves square integer systems S x = b exactly via p-adic lifting."""

    def __init__(self, s_rows, p: int):
        self.p = p
        self.n = len(s_rows)
        self.s_int = np.array(s_rows, dtype=np.int64)
        if self.n and np.abs(self.s_int).max() * self.n * p >= (1 << 62):
            raise ArithmeticError("entries too large for int64 lifting")
        # dense inverse mod p via RREF of [S | I]
        aug = np.concatenate(
            [self.s_int % p, np.eye(self.n, dtype=np.int64)], axis=1)
        r, piv, mat = rref_mod_p(aug, p)
        if piv[: self.n] != list(range(self.n)):
            raise ZeroDivisionError("matrix singular mod p")
        self.inv_mod_p = mat[:, self.n:].astype(np.int64)

    def solve(self, b, max_digits: int):
        """Return exact Fraction solution vector, or None if lifting fails."""
        p = self.p
        r = np.array(b, dtype=np.int64)
        digits = []
        modulus = 1
        accum = np.zeros(self.n, dtype=object)
        check_at = 24
        for step in range(max_digits):
            z = self.inv_mod_p @ (r % p) % p
            digits.append(z)
            accum = accum + z.astype(object) * modulus
            modulus *= p
            r = (r - self.s_int @ z) // p
            if step + 1 >= check_at or step + 1 == max_digits:
                check_at = check_at * 2
                sol = self._try_reconstruct(accum, modulus)
                if sol is not None:
                    return sol
        return None

    def _try_reconstruct(self, accum, modulus):
        return vector_rational_reconstruct(accum, modulus)


def _verify_left_kernel(mat: np.ndarray, nz_rows, nz_cols, nz_vals,
                        vec_fracs) -> bool:
    """Exact bigint check that vec @ mat == 0, using the sparse structure."""
    den = 1
    for f in vec_fracs:
        den = den * f.denominator // math.gcd(den, f.denominator)
    w = [int(f * den) for f in vec_fracs]
    totals = [0] * mat.shape[1]
    for i, j, v in zip(nz_rows, nz_cols, nz_vals):
        wi = w[i]
        if wi:
            totals[j] += wi * v
    return all(t == 0 for t in totals)


def rank_rational_certified(rows, *, prime: int = DEFAULT_PRIME,
                            small_limit: int = 4000) -> int:
    """Rank over Q, certified.

    A mod-p echelon gives a lower bound r (a nonzero r x r minor mod p is
    nonzero over Q).  If r equals the row or column count the rank is
    pinned.  Otherwise rank <= r is certified by producing rows-r exact
    left-kernel vectors via Dixon lifting and verifying them with bigint
    arithmetic.  Any failure falls back to Fraction elimination, which is
    always correct.
    """
    mat = np.asarray(rows, dtype=np.int64)
    if mat.ndim == 1:
        mat = mat.reshape(len(rows), -1)
    nrows, ncols = mat.shape
    if nrows == 0 or ncols == 0:
        return 0
    if nrows * ncols <= small_limit:
        return rank_fraction(mat.tolist())
    # cheap full-rank shortcut in the natural orientation
    r0 = rank_mod_p(mat, prime)
    if r0 == nrows or r0 == ncols:
        return r0
    for attempt, p in enumerate(primes_below(prime + 1)):
        result = _certify_left_kernel(mat, p)
        if result is not None:
            return result
        if attempt >= 2:
            break
    return rank_fraction(mat.tolist())


def _certify_left_kernel(mat: np.ndarray, prime: int):
    """Certified rank via exact left-kernel vectors, or None on failure."""
    nrows, ncols = mat.shape
    tr = mat.T
    r, piv, _ = echelon_mod_p(tr, prime)
    if r == nrows or r == ncols:
        return r  # full rank mod p pins the rank over Q
    if r == 0:
        return 0 if not mat.any() else None
    free = [j for j in range(nrows) if j not in set(piv)]
    # r independent rows of the (ncols x r) pivot submatrix of mat^T
    sub = tr[:, piv]
    rr, row_piv, _ = echelon_mod_p(sub.T, prime)
    if rr != r:
        return None
    square = sub[row_piv, :]
    try:
        solver = _DixonSolver(square.tolist(), prime)
    except (ZeroDivisionError, ArithmeticError):
        return None
    max_entry = int(np.abs(square).max())
    bits = r * (math.log2(max_entry + 1) + 0.5 * math.log2(max(r, 2)) + 1) + 64
    max_digits = int(bits / math.log2(prime) * 2) + 32
    nz_rows, nz_cols = np.nonzero(mat)
    nz_vals = [int(v) for v in mat[nz_rows, nz_cols]]
    nz_rows = nz_rows.tolist()
    nz_cols = nz_cols.tolist()
    for f in free:
        b = [-int(x) for x in tr[row_piv, f]]
        sol = solver.solve(b, max_digits)
        if sol is None:
            return None
        vec = [Fraction(0)] * nrows
        vec[f] = Fraction(1)
        for val, j in zip(sol, piv):
            vec[j] = val
        if not _verify_left_kernel(mat, nz_rows, nz_cols, nz_vals, vec):
            return None
    return r
