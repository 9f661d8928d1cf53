"""Small exact linear algebra over Q and Z, plus an exact simplex solver.

Matrices are plain lists of rows.  Sizes in this package stay below ~100,
so clarity wins over speed everywhere here.
"""

from __future__ import annotations

import math
from fractions import Fraction


# --------------------------------------------------------------------------
# over Q


def rref(rows):
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    m = [[Fraction(x) for x in row] for row in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows) -> int:
    return len(rref(rows)[1]) if rows else 0


def nullspace(rows, ncols: int):
    """Basis of the rational nullspace, scaled to primitive integer vectors."""
    if not rows:
        return [[int(i == j) for i in range(ncols)] for j in range(ncols)]
    m, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -m[r][f]
        basis.append(primitive(v))
    return basis


def primitive(v):
    """Scale a rational vector to a coprime integer vector with first nonzero entry positive."""
    v = [Fraction(x) for x in v]
    den = 1
    for x in v:
        den = den * x.denominator // math.gcd(den, x.denominator)
    ints = [int(x * den) for x in v]
    g = math.gcd(*ints) if any(ints) else 1
    ints = [x // g for x in ints]
    lead = next((x for x in ints if x), 0)
    if lead < 0:
        ints = [-x for x in ints]
    return ints


def content(v) -> int:
    return math.gcd(*v) if any(v) else 0


# --------------------------------------------------------------------------
# over Z


def _egcd(a: int, b: int):
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def column_echelon(rows, ncols: int):
    """Unimodular column reduction.

    Returns ``(H, U, pivots)`` with ``H = A U``, ``U`` unimodular and ``H`` in
    column echelon form: column ``p`` of ``H`` (for ``p < len(pivots)``) has
    its first nonzero entry in row ``pivots[p]``, rows increasing; all later
    columns of ``H`` are zero.
    """
    H = [list(map(int, row)) for row in rows]
    U = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def colop(M, p, c, s, t, u, v):
        # col_p, col_c <- s*col_p + t*col_c, u*col_p + v*col_c
        for row in M:
            x, y = row[p], row[c]
            row[p] = s * x + t * y
            row[c] = u * x + v * y

    pivots = []
    p = 0
    for r in range(len(H)):
        if p == ncols:
            break
        nz = [c for c in range(p, ncols) if H[r][c] != 0]
        if not nz:
            continue
        if H[r][p] == 0:
            c = nz[0]
            for M in (H, U):
                for row in M:
                    row[p], row[c] = row[c], row[p]
        for c in range(p + 1, ncols):
            b = H[r][c]
            if b == 0:
                continue
            a = H[r][p]
            g, s, t = _egcd(a, b)
            colop(H, p, c, s, t, -b // g, a // g)
            colop(U, p, c, s, t, -b // g, a // g)
        if H[r][p] < 0:
            for M in (H, U):
                for row in M:
                    row[p] = -row[p]
        pivots.append(r)
        p += 1
    return H, U, pivots


def integer_kernel(rows, ncols: int):
    """Basis of the lattice {x in Z^ncols : A x = 0} (always saturated)."""
    if not rows:
        return [[int(i == j) for i in range(ncols)] for j in range(ncols)]
    _, U, pivots = column_echelon(rows, ncols)
    return [[U[i][c] for i in range(ncols)] for c in range(len(pivots), ncols)]


def integer_solve(rows, ncols: int, rhs):
    """Some integer ``x`` with ``A x = rhs``, or ``None`` if there is none."""
    if not rows:
        return [0] * ncols if not any(rhs) else None
    H, U, pivots = column_echelon(rows, ncols)
    resid = list(map(int, rhs))
    x = [0] * ncols
    for p, r in enumerate(pivots):
        q, rem = divmod(resid[r], H[r][p])
        if rem:
            return None
        x[p] = q
        if q:
            for i in range(len(H)):
                resid[i] -= q * H[i][p]
    if any(resid):
        return None
    return [sum(U[i][c] * x[c] for c in range(ncols)) for i in range(ncols)]


def lattice_basis(generators, dim: int):
    """LLL-reduced basis of the lattice spanned by integer ``generators``."""
    from sympy import ZZ
    from sympy.polys.matrices import DomainMatrix

    gens = [list(map(int, g)) for g in generators if any(g)]
    if not gens:
        return []
    # row-style Hermite reduction via column echelon of the transpose
    At = [[g[i] for g in gens] for i in range(dim)]
    H, _, pivots = column_echelon(At, len(gens))
    basis = [[H[i][c] for i in range(dim)] for c in range(len(pivots))]
    reduced = DomainMatrix(basis, (len(basis), dim), ZZ).lll().to_list()
    return [[int(x) for x in row] for row in reduced]


# --------------------------------------------------------------------------
# exact linear programming


def _pivot(T, r, c):
    inv = 1 / T[r][c]
    T[r] = [x * inv for x in T[r]]
    for i in range(len(T)):
        if i != r and T[i][c] != 0:
            f = T[i][c]
            T[i] = [a - f * b for a, b in zip(T[i], T[r])]


def _run_simplex(T, basis, cost, allowed):
    # Bland's rule, maximization
    while True:
        in_basis = set(basis)
        enter = None
        for j in allowed:
            if j in in_basis:
                continue
            reduced = cost[j] - sum(cost[basis[i]] * T[i][j] for i in range(len(T)))
            if reduced > 0:
                enter = j
                break
        if enter is None:
            return "optimal"
        best = None
        for i, row in enumerate(T):
            if row[enter] > 0:
                key = (row[-1] / row[enter], basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return "unbounded"
        _pivot(T, best[1], enter)
        basis[best[1]] = enter


def lp_maximize(A, b, c):
    """Maximize ``c.x`` subject to ``A x = b``, ``x >= 0``, exactly.

    Returns ``(status, value, x)`` with status ``"optimal"``,
    ``"infeasible"`` or ``"unbounded"``.
    """
    nvar = len(c)
    rows = []
    for row, rhs in zip(A, b):
        row = [Fraction(x) for x in row]
        rhs = Fraction(rhs)
        if rhs < 0:
            row, rhs = [-x for x in row], -rhs
        rows.append((row, rhs))
    m = len(rows)
    # phase 1 with one artificial per row
    T = []
    for i, (row, rhs) in enumerate(rows):
        T.append(row + [Fraction(int(k == i)) for k in range(m)] + [rhs])
    basis = [nvar + i for i in range(m)]
    cost1 = [Fraction(0)] * nvar + [Fraction(-1)] * m
    _run_simplex(T, basis, cost1, range(nvar + m))
    if sum(T[i][-1] for i in range(m) if basis[i] >= nvar) != 0:
        return "infeasible", None, None
    # drive artificials out; drop redundant rows
    keep = []
    for i in range(m):
        if basis[i] >= nvar:
            col = next((j for j in range(nvar) if T[i][j] != 0), None)
            if col is None:
                continue
            _pivot(T, i, col)
            basis[i] = col
        keep.append(i)
    T = [T[i][:nvar] + [T[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]
    cost = [Fraction(x) for x in c]
    status = _run_simplex(T, basis, cost, range(nvar))
    if status == "unbounded":
        return status, None, None
    x = [Fraction(0)] * nvar
    for i, j in enumerate(basis):
        x[j] = T[i][-1]
    return "optimal", sum(ci * xi for ci, xi in zip(cost, x)), x
