"""Independent reference computations in sympy, sharing no code with the package."""

from itertools import combinations
from math import comb

import sympy as sp


def sym(x):
    """Package scalar -> sympy number."""
    return sp.Rational(x.re.numerator, x.re.denominator) + sp.I * sp.Rational(x.im.numerator, x.im.denominator)


def minors(rows):
    """All 2x2 minors via sympy determinants, keyed by 1-based pairs."""
    M = sp.Matrix([[sym(a), sym(b)] for a, b in rows])
    n = M.rows
    return {(i + 1, j + 1): sp.expand(M.extract([i, j], [0, 1]).det()) for i, j in combinations(range(n), 2)}


def cross_ratio(rows, t):
    """Cross-ratio from sympy minors; returns a sympy value, sp.zoo for infinity, None for 0/0."""
    P = minors(rows)

    def p(a, b):
        return P[(a, b)] if a < b else -P[(b, a)]

    i, j, k, l = t
    num = sp.expand(p(i, k) * p(j, l))
    den = sp.expand(p(i, l) * p(j, k))
    if num == 0 and den == 0:
        return None
    if den == 0:
        return sp.zoo
    return sp.nsimplify(sp.simplify(num / den))


def point_value(p):
    """Package ProjectivePoint -> sympy value (sp.zoo for infinity)."""
    if p.is_infinity():
        return sp.zoo
    return sym(p.value)


def census(n):
    """Sum over zero-row sets of (set partitions with >= 2 blocks)."""
    return sum(comb(n, z) * (sp.bell(n - z) - 1) for z in range(n - 1))


def stratum_brute_force(n, bound=1):
    """Vanishing patterns of all planes with entries in {-bound..bound} (small n only)."""
    from itertools import product

    vals = range(-bound, bound + 1)
    seen = set()
    for flat in product(vals, repeat=2 * n):
        rows = [(flat[2 * r], flat[2 * r + 1]) for r in range(n)]
        minors_ = {(i, j): rows[i - 1][0] * rows[j - 1][1] - rows[j - 1][0] * rows[i - 1][1]
                   for i, j in combinations(range(1, n + 1), 2)}
        if any(minors_.values()):
            seen.add(frozenset(pr for pr, v in minors_.items() if v == 0))
    return seen
