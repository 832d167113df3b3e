"""Exact linear algebra: Gaussian elimination over a field, Hermite and
Smith normal forms over Z, and integral linear-system solving.

Field matrices are plain lists of rows of FieldElement; integer matrices
are lists of rows of int.  Everything is deterministic for a fixed input:
pivots are chosen first-nonzero in fixed column order.
"""

from __future__ import annotations

from typing import NamedTuple, Optional, Sequence

from .field import FieldElement


# ---------------------------------------------------------------------------
# small vector helpers over a field
# ---------------------------------------------------------------------------

def dot(u: Sequence[FieldElement], v: Sequence[FieldElement]) -> FieldElement:
    acc = u[0] * v[0]
    for a, b in zip(u[1:], v[1:]):
        acc = acc + a * b
    return acc


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_neg(u):
    return tuple(-a for a in u)


def vec_scale(c, u):
    return tuple(c * a for a in u)


def vec_is_zero(u) -> bool:
    return all(a.is_zero() for a in u)


# ---------------------------------------------------------------------------
# field-matrix elimination
# ---------------------------------------------------------------------------

class LinearSolveResult(NamedTuple):
    rank: int
    kernel: list  # kernel basis vectors, reduced-echelon parametrization
    solution: Optional[tuple]  # present iff the system is consistent
    certificate: Optional[tuple]  # row y with y*A = 0, y.b != 0 when not


def rank_kernel_solve(A, b=None) -> LinearSolveResult:
    """Exact elimination on A (optionally augmented by b).

    Returns the rank, a deterministic reduced-echelon kernel basis, and,
    when b is given, either a particular solution (free variables zero) or
    an inconsistency certificate row.
    """
    if not A:
        raise ValueError("matrix must have at least one row")
    rows, cols = len(A), len(A[0])
    field = A[0][0].field
    work = [list(row) for row in A]
    rhs = list(b) if b is not None else None
    # transform tracks the row operations applied to the identity, used for
    # the inconsistency certificate
    transform = [[field.one if i == j else field.zero for j in range(rows)]
                 for i in range(rows)]

    pivot_cols = []
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if not work[i][c].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        transform[r], transform[pivot] = transform[pivot], transform[r]
        if rhs is not None:
            rhs[r], rhs[pivot] = rhs[pivot], rhs[r]
        inv = work[r][c].inverse()
        work[r] = [inv * x for x in work[r]]
        transform[r] = [inv * x for x in transform[r]]
        if rhs is not None:
            rhs[r] = inv * rhs[r]
        for i in range(rows):
            if i != r and not work[i][c].is_zero():
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
                transform[i] = [x - f * y
                                for x, y in zip(transform[i], transform[r])]
                if rhs is not None:
                    rhs[i] = rhs[i] - f * rhs[r]
        pivot_cols.append(c)
        r += 1
        if r == rows:
            break

    rank = r
    free_cols = [c for c in range(cols) if c not in pivot_cols]
    kernel = []
    for f in free_cols:
        vec = [field.zero] * cols
        vec[f] = field.one
        for i, pc in enumerate(pivot_cols):
            vec[pc] = -work[i][f]
        kernel.append(tuple(vec))

    solution = None
    certificate = None
    if rhs is not None:
        consistent = True
        for i in range(rank, rows):
            if not rhs[i].is_zero():
                consistent = False
                certificate = tuple(transform[i])
                break
        if consistent:
            sol = [field.zero] * cols
            for i, pc in enumerate(pivot_cols):
                sol[pc] = rhs[i]
            solution = tuple(sol)
    return LinearSolveResult(rank, kernel, solution, certificate)


def solve_unique(A, b):
    """Solution of a square system with invertible A; raises on failure."""
    res = rank_kernel_solve(A, b)
    if res.solution is None or res.rank != len(A[0]):
        raise ValueError("system is not uniquely solvable")
    return res.solution


def rref_rows(rows):
    """Nonzero rows of the reduced row echelon form, deterministically."""
    if not rows:
        return []
    work = [list(r) for r in rows]
    cols = len(work[0])
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(work))
                      if not work[i][c].is_zero()), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = work[r][c].inverse()
        work[r] = [inv * x for x in work[r]]
        for i in range(len(work)):
            if i != r and not work[i][c].is_zero():
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        r += 1
        if r == len(work):
            break
    return [tuple(row) for row in work[:r]]


def mat_rank(A) -> int:
    return rank_kernel_solve(A).rank


def transpose(A):
    return [list(col) for col in zip(*A)]


# ---------------------------------------------------------------------------
# integer normal forms
# ---------------------------------------------------------------------------

def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """g, x, y with x*a + y*b = g = gcd(a, b) >= 0.

    When a divides b the answer is (|a|, sign(a), 0); the normal-form
    eliminations rely on y = 0 in that case so that already-cleared
    entries are not contaminated."""
    if a != 0 and b % a == 0:
        return (abs(a), 1 if a > 0 else -1, 0)
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _combine_rows(M, i, j, a, b, c, d):
    """Rows i, j of M become (a*ri + b*rj, c*ri + d*rj)."""
    ri, rj = M[i], M[j]
    M[i] = [a * x + b * y for x, y in zip(ri, rj)]
    M[j] = [c * x + d * y for x, y in zip(ri, rj)]


def hnf(A: Sequence[Sequence[int]]):
    """Row Hermite normal form: returns (H, U) with U unimodular,
    U*A = H, H in echelon form with positive pivots and entries above
    each pivot reduced into [0, pivot)."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    H = [list(map(int, row)) for row in A]
    U = _identity(rows)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot = None
        for i in range(r, rows):
            if H[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != r:
            H[r], H[pivot] = H[pivot], H[r]
            U[r], U[pivot] = U[pivot], U[r]
        for i in range(r + 1, rows):
            if H[i][c] == 0:
                continue
            a, b = H[r][c], H[i][c]
            g, x, y = xgcd(a, b)
            _combine_rows(H, r, i, x, y, -(b // g), a // g)
            _combine_rows(U, r, i, x, y, -(b // g), a // g)
        if H[r][c] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        p = H[r][c]
        for i in range(r):
            q = H[i][c] // p
            if q:
                H[i] = [x - q * y for x, y in zip(H[i], H[r])]
                U[i] = [x - q * y for x, y in zip(U[i], U[r])]
        r += 1
    return H, U


def snf(A: Sequence[Sequence[int]]):
    """Smith normal form: returns (D, U, V) with U, V unimodular,
    U*A*V = D diagonal, entries nonnegative, d1 | d2 | ..."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    D = [list(map(int, row)) for row in A]
    U = _identity(rows)
    V = _identity(cols)

    def col_combine(M, i, j, a, b, c, d):
        for row in M:
            x, y = row[i], row[j]
            row[i] = a * x + b * y
            row[j] = c * x + d * y

    k = 0
    while k < min(rows, cols):
        # move a nonzero entry into the (k, k) position
        found = None
        for i in range(k, rows):
            for j in range(k, cols):
                if D[i][j] != 0:
                    found = (i, j)
                    break
            if found:
                break
        if not found:
            break
        i, j = found
        if i != k:
            D[k], D[i] = D[i], D[k]
            U[k], U[i] = U[i], U[k]
        if j != k:
            col_combine(D, k, j, 0, 1, 1, 0)
            col_combine(V, k, j, 0, 1, 1, 0)
        while True:
            # clear column k
            for i in range(k + 1, rows):
                if D[i][k] == 0:
                    continue
                a, b = D[k][k], D[i][k]
                g, x, y = xgcd(a, b)
                _combine_rows(D, k, i, x, y, -(b // g), a // g)
                _combine_rows(U, k, i, x, y, -(b // g), a // g)
            # clear row k
            row_clear = all(D[k][j] == 0 for j in range(k + 1, cols))
            if row_clear:
                if all(D[i][k] == 0 for i in range(k + 1, rows)):
                    break
                continue
            for j in range(k + 1, cols):
                if D[k][j] == 0:
                    continue
                a, b = D[k][k], D[k][j]
                g, x, y = xgcd(a, b)
                col_combine(D, k, j, x, y, -(b // g), a // g)
                col_combine(V, k, j, x, y, -(b // g), a // g)
        # divisibility: D[k][k] must divide the rest of the block
        bad = None
        for i in range(k + 1, rows):
            for j in range(k + 1, cols):
                if D[i][j] % D[k][k] != 0:
                    bad = i
                    break
            if bad:
                break
        if bad is not None:
            D[k] = [x + y for x, y in zip(D[k], D[bad])]
            U[k] = [x + y for x, y in zip(U[k], U[bad])]
            continue  # redo the clearing at the same k
        if D[k][k] < 0:
            D[k] = [-x for x in D[k]]
            U[k] = [-x for x in U[k]]
        k += 1
    return D, U, V


def integer_kernel(A: Sequence[Sequence[int]]):
    """Canonical (HNF) basis of {x in Z^n : A x = 0}, as a list of rows."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    if cols == 0:
        return []
    At = [[A[i][j] for i in range(rows)] for j in range(cols)]
    H, U = hnf(At)
    basis = [U[i] for i in range(cols)
             if all(h == 0 for h in H[i])]
    if not basis:
        return []
    K, _ = hnf(basis)
    return [row for row in K if any(x != 0 for x in row)]


def integer_solve(A: Sequence[Sequence[int]], b: Sequence[int]):
    """Some integral x with A x = b, or None.

    The witness is canonical: the particular solution from HNF
    back-substitution, reduced modulo the integer kernel so that each
    kernel-pivot coordinate lies in [0, pivot)."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    if cols == 0:
        return None if any(x != 0 for x in b) else ()
    At = [[A[i][j] for i in range(rows)] for j in range(cols)]
    H, U = hnf(At)
    residual = list(map(int, b))
    t = [0] * cols
    for i in range(cols):
        pivot_col = None
        for j in range(rows):
            if H[i][j] != 0:
                pivot_col = j
                break
        if pivot_col is None:
            continue
        if residual[pivot_col] % H[i][pivot_col] != 0:
            return None
        q = residual[pivot_col] // H[i][pivot_col]
        t[i] = q
        residual = [x - q * y for x, y in zip(residual, H[i])]
    if any(x != 0 for x in residual):
        return None
    x = [sum(t[i] * U[i][j] for i in range(cols)) for j in range(cols)]
    for krow in integer_kernel(A):
        pivot_col = next(j for j, v in enumerate(krow) if v != 0)
        q = x[pivot_col] // krow[pivot_col]
        if q:
            x = [a - q * k for a, k in zip(x, krow)]
    return tuple(x)
