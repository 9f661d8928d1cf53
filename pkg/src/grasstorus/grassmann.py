"""2-planes in C^n, their Plücker coordinates, and the diagonal torus action.

Indices are 1-based throughout.  ``PluckerVector.p(i, j)`` follows the
determinant convention ``P_ji = -P_ij``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .exact_scalar import ONE, ZERO, GaussianRational, gq


@lru_cache(maxsize=None)
def pairs(n: int) -> tuple[tuple[int, int], ...]:
    return tuple(combinations(range(1, n + 1), 2))


@lru_cache(maxsize=None)
def quadruples(n: int) -> tuple[tuple[int, int, int, int], ...]:
    return tuple(combinations(range(1, n + 1), 4))


def _det(r, s):
    return r[0] * s[1] - s[0] * r[1]


@dataclass(frozen=True)
class Plane:
    """An ``n x 2`` matrix of rank 2; row ``i`` is ``(a_i, b_i)``."""

    n: int
    rows: tuple

    def __post_init__(self):
        rows = tuple((gq(a), gq(b)) for a, b in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.n:
            raise ValueError(f"expected {self.n} rows, got {len(rows)}")
        if self.n < 2:
            raise ValueError("a 2-plane needs n >= 2")
        if not any(_det(rows[i - 1], rows[j - 1]) for i, j in pairs(self.n)):
            raise ValueError("matrix has rank < 2: every 2x2 minor vanishes")

    @classmethod
    def from_rows(cls, rows) -> Plane:
        return cls(len(rows), tuple(rows))

    def row(self, i: int):
        return self.rows[i - 1]

    def times(self, g) -> Plane:
        """Right multiplication by a 2x2 matrix ``g = ((p, q), (r, s))``."""
        (p, q), (r, s) = g
        return Plane(self.n, tuple((a * p + b * r, a * q + b * s) for a, b in self.rows))

    def permuted(self, perm) -> Plane:
        """Row ``perm[i-1]`` of the result is row ``i`` of ``self``."""
        rows = [None] * self.n
        for i, target in enumerate(perm):
            rows[target - 1] = self.rows[i]
        return Plane(self.n, tuple(rows))

    def to_json(self) -> dict:
        return {"n": self.n, "rows": [[str(a), str(b)] for a, b in self.rows]}

    @classmethod
    def from_json(cls, data: dict) -> Plane:
        return cls(int(data["n"]), tuple((gq(a), gq(b)) for a, b in data["rows"]))


class PluckerVector:
    """Plücker coordinates ``P_ij`` (``i < j``) of a 2-plane, up to a common factor."""

    __slots__ = ("n", "coords")

    def __init__(self, n: int, coords):
        self.n = n
        full = {}
        for (i, j), v in dict(coords).items():
            if not (1 <= i <= n and 1 <= j <= n) or i == j:
                raise ValueError(f"bad index pair {(i, j)} for n={n}")
            v = gq(v)
            if i > j:
                i, j, v = j, i, -v
            full[(i, j)] = v
        self.coords = {pr: full.get(pr, ZERO) for pr in pairs(n)}
        if not any(self.coords.values()):
            raise ValueError("all Plücker coordinates vanish")

    def p(self, i: int, j: int) -> GaussianRational:
        if i < j:
            return self.coords[(i, j)]
        if i > j:
            return -self.coords[(j, i)]
        return ZERO

    def p_unordered(self, i: int, j: int) -> GaussianRational:
        """Access ignoring index order (``P_ji = P_ij``)."""
        if i == j:
            return ZERO
        return self.coords[(min(i, j), max(i, j))]

    def vanishing(self) -> frozenset:
        return frozenset(pr for pr, v in self.coords.items() if not v)

    def scaled(self, c) -> PluckerVector:
        c = gq(c)
        return PluckerVector(self.n, {pr: v * c for pr, v in self.coords.items()})

    def projectively_equal(self, other: PluckerVector) -> bool:
        if self.n != other.n or self.vanishing() != other.vanishing():
            return False
        ref = next(pr for pr, v in self.coords.items() if v)
        ratio = other.coords[ref] / self.coords[ref]
        return all(other.coords[pr] == ratio * v for pr, v in self.coords.items())

    def __eq__(self, other):
        if not isinstance(other, PluckerVector):
            return NotImplemented
        return self.n == other.n and self.coords == other.coords

    def __hash__(self):
        return hash((self.n, tuple(self.coords.values())))

    def __repr__(self):
        nz = ", ".join(f"P{i}{j}={v}" for (i, j), v in self.coords.items() if v)
        return f"PluckerVector(n={self.n}: {nz})"

    def to_json(self) -> dict:
        return {"n": self.n, "coords": {f"{i},{j}": str(v) for (i, j), v in self.coords.items()}}


@dataclass(frozen=True)
class TorusElement:
    n: int
    factors: tuple

    def __post_init__(self):
        factors = tuple(gq(t) for t in self.factors)
        object.__setattr__(self, "factors", factors)
        if len(factors) != self.n:
            raise ValueError(f"expected {self.n} factors, got {len(factors)}")
        if not all(factors):
            raise ValueError("torus factors must be nonzero")

    @classmethod
    def of(cls, *factors) -> TorusElement:
        return cls(len(factors), tuple(factors))

    def __mul__(self, other: TorusElement) -> TorusElement:
        if self.n != other.n:
            raise ValueError("torus dimension mismatch")
        return TorusElement(self.n, tuple(a * b for a, b in zip(self.factors, other.factors)))

    def act_on_plane(self, plane: Plane) -> Plane:
        return Plane(plane.n, tuple((t * a, t * b) for t, (a, b) in zip(self.factors, plane.rows)))


def plucker_of(plane: Plane) -> PluckerVector:
    rows = plane.rows
    return PluckerVector(plane.n, {(i, j): _det(rows[i - 1], rows[j - 1]) for i, j in pairs(plane.n)})


def plucker_relation_residues(pv: PluckerVector):
    """Yield ``((i,j,k,l), P_ij P_kl - P_ik P_jl + P_jk P_il)`` for all i<j<k<l."""
    c = pv.coords
    for i, j, k, l in quadruples(pv.n):
        yield (i, j, k, l), c[(i, j)] * c[(k, l)] - c[(i, k)] * c[(j, l)] + c[(j, k)] * c[(i, l)]


def check_plucker_relations(pv: PluckerVector) -> bool:
    return not any(r for _, r in plucker_relation_residues(pv))


def torus_act(t: TorusElement, pv: PluckerVector) -> PluckerVector:
    if t.n != pv.n:
        raise ValueError(f"torus of dimension {t.n} cannot act on n={pv.n}")
    f = t.factors
    return PluckerVector(pv.n, {(i, j): f[i - 1] * f[j - 1] * v for (i, j), v in pv.coords.items()})


def reconstruct_torus(pv1: PluckerVector, pv2: PluckerVector) -> TorusElement | None:
    """A torus element carrying ``pv1`` to a multiple of ``pv2``, or ``None``.

    Solves ``t_i t_j P_ij(pv1) = lam P_ij(pv2)`` over the nonvanishing pairs.
    The normalization puts ``t = 1`` at the first index of the nonvanishing
    graph (and on rows that vanish identically).
    """
    if pv1.n != pv2.n:
        raise ValueError("dimension mismatch")
    if pv1.vanishing() != pv2.vanishing():
        raise ValueError("vanishing patterns differ; the vectors lie in different strata")
    n = pv1.n
    ratio = {pr: pv2.coords[pr] / v for pr, v in pv1.coords.items() if v}
    adj = {i: [] for i in range(1, n + 1)}
    for i, j in ratio:
        adj[i].append(j)
        adj[j].append(i)
    active = [i for i in adj if adj[i]]
    root = active[0]

    def r(i, j):
        return ratio[(min(i, j), max(i, j))]

    # an odd cycle pins lam (up to the diagonal); a bipartite graph lets us take lam = 1
    lam = ONE
    for j in adj[root]:
        common = [k for k in adj[j] if k in adj[root] and k != root]
        if common:
            k = common[0]
            lam = r(j, k) / (r(root, j) * r(root, k))
            break
    t = {root: ONE}
    queue = [root]
    while queue:
        i = queue.pop(0)
        for j in adj[i]:
            if j not in t:
                t[j] = lam * r(i, j) / t[i]
                queue.append(j)
    if any(t[i] * t[j] != lam * v for (i, j), v in ratio.items()):
        return None
    return TorusElement(n, tuple(t.get(i, ONE) for i in range(1, n + 1)))


# --------------------------------------------------------------------------
# random sampling (exact)


def random_scalar(rng: random.Random, bound: int = 5, gaussian: bool = True, nonzero: bool = False):
    while True:
        re = rng.randint(-bound, bound)
        im = rng.randint(-bound, bound) if gaussian and rng.random() < 0.5 else 0
        x = GaussianRational(re, im)
        if x or not nonzero:
            return x


def random_plane(rng: random.Random, n: int, bound: int = 5) -> Plane:
    while True:
        rows = tuple((random_scalar(rng, bound), random_scalar(rng, bound)) for _ in range(n))
        try:
            return Plane(n, rows)
        except ValueError:
            continue


def random_main_plane(rng: random.Random, n: int, bound: int = 6) -> Plane:
    """A plane with no vanishing Plücker coordinate (rejection sampling)."""
    while True:
        plane = random_plane(rng, n, bound)
        if not plucker_of(plane).vanishing():
            return plane


def random_torus(rng: random.Random, n: int, bound: int = 4) -> TorusElement:
    return TorusElement(n, tuple(random_scalar(rng, bound, nonzero=True) for _ in range(n)))
