"""Strata of G(n,2): vanishing patterns of Plücker coordinates.

A pattern is realizable exactly when it comes from a *parallel structure*:
a set of zero rows plus a partition of the remaining rows into at least two
classes of mutually parallel rows.  Two rows vanish against each other iff
they lie in the same class or one of them is a zero row.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .exact_scalar import GaussianRational, ProjectivePoint
from .grassmann import Plane, PluckerVector, pairs, plucker_of, random_scalar
from .linalg import nullspace


@dataclass(frozen=True, order=True)
class Signature:
    """The set of Plücker pairs that vanish on a stratum."""

    n: int
    vanishing: tuple

    def __post_init__(self):
        norm = set()
        for pr in self.vanishing:
            i, j = sorted(int(x) for x in pr)
            if not (1 <= i < j <= self.n):
                raise ValueError(f"pair {pr} out of range for n={self.n}")
            norm.add((i, j))
        object.__setattr__(self, "vanishing", tuple(sorted(norm)))
        if len(norm) == len(pairs(self.n)):
            raise ValueError("a signature must leave some Plücker coordinate nonvanishing")

    @classmethod
    def of(cls, n: int, *prs) -> Signature:
        return cls(n, tuple(prs))

    @classmethod
    def parse(cls, n: int, text: str) -> Signature:
        """Parse ``"1,2;3,4"`` (empty string for the main stratum)."""
        prs = []
        for chunk in text.split(";"):
            chunk = chunk.strip()
            if not chunk:
                continue
            parts = [p.strip() for p in chunk.split(",")]
            if len(parts) != 2:
                raise ValueError(f"expected a pair 'i,j', got {chunk!r}")
            prs.append((int(parts[0]), int(parts[1])))
        return cls(n, tuple(prs))

    def __contains__(self, pr) -> bool:
        i, j = pr
        return (min(i, j), max(i, j)) in self._set

    @property
    def _set(self) -> frozenset:
        return _pair_set(self.vanishing)

    @property
    def nonvanishing(self) -> tuple:
        s = self._set
        return tuple(pr for pr in pairs(self.n) if pr not in s)

    def is_main(self) -> bool:
        return not self.vanishing

    def to_json(self) -> dict:
        return {"n": self.n, "vanishing": [list(pr) for pr in self.vanishing]}

    @classmethod
    def from_json(cls, data: dict) -> Signature:
        return cls(int(data["n"]), tuple(tuple(pr) for pr in data["vanishing"]))

    def label(self) -> str:
        return ";".join(f"{i},{j}" for i, j in self.vanishing) or "main"


@lru_cache(maxsize=None)
def _pair_set(vanishing: tuple) -> frozenset:
    return frozenset(vanishing)


@dataclass(frozen=True)
class ParallelStructure:
    n: int
    zero_rows: tuple
    classes: tuple

    def __post_init__(self):
        zero = tuple(sorted(self.zero_rows))
        classes = tuple(sorted(tuple(sorted(c)) for c in self.classes))
        object.__setattr__(self, "zero_rows", zero)
        object.__setattr__(self, "classes", classes)
        seen = sorted(zero + tuple(i for c in classes for i in c))
        if seen != list(range(1, self.n + 1)):
            raise ValueError("zero rows and classes must partition 1..n")
        if any(not c for c in classes):
            raise ValueError("classes must be nonempty")
        if len(classes) < 2:
            raise ValueError("rank 2 needs at least two parallel classes")

    def class_of(self, i: int):
        return next((c for c in self.classes if i in c), None)

    def signature(self) -> Signature:
        zero = set(self.zero_rows)
        van = [
            (i, j) for i, j in pairs(self.n)
            if i in zero or j in zero or self.class_of(i) == self.class_of(j)
        ]
        return Signature(self.n, tuple(van))


def signature_of(pv: PluckerVector) -> Signature:
    return Signature(pv.n, tuple(sorted(pv.vanishing())))


def parallel_structure_of(sig: Signature) -> ParallelStructure | None:
    n = sig.n
    zero = [i for i in range(1, n + 1) if all((i, j) in sig for j in range(1, n + 1) if j != i)]
    rest = [i for i in range(1, n + 1) if i not in zero]
    classes = []
    for i in rest:
        for c in classes:
            if (i, c[0]) in sig:
                c.append(i)
                break
        else:
            classes.append([i])
    # the relation must be an equivalence: within-class pairs vanish, cross-class pairs do not
    for a, b in combinations(rest, 2):
        same = any(a in c and b in c for c in classes)
        if same != ((a, b) in sig):
            return None
    if len(rest) < 2 or len(classes) < 2:
        return None
    return ParallelStructure(n, tuple(zero), tuple(tuple(c) for c in classes))


def is_admissible(sig: Signature) -> bool:
    return parallel_structure_of(sig) is not None


def require_structure(sig: Signature) -> ParallelStructure:
    ps = parallel_structure_of(sig)
    if ps is None:
        raise ValueError(f"signature {sig.label()} (n={sig.n}) is not admissible")
    return ps


def witness_plane(ps: ParallelStructure, seed: int) -> Plane:
    """A random plane in the stratum of ``ps``."""
    rng = random.Random(seed)
    target = ps.signature()
    while True:
        directions = []
        while len(directions) < len(ps.classes):
            d = (random_scalar(rng), random_scalar(rng))
            if not (d[0] or d[1]):
                continue
            if ProjectivePoint(*d) not in [ProjectivePoint(*e) for e in directions]:
                directions.append(d)
        rows = [(GaussianRational(0), GaussianRational(0))] * ps.n
        for c, (a, b) in zip(ps.classes, directions):
            for i in c:
                m = random_scalar(rng, nonzero=True)
                rows[i - 1] = (m * a, m * b)
        plane = Plane(ps.n, tuple(rows))
        if signature_of(plucker_of(plane)) == target:
            return plane


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for k in range(len(part)):
            yield part[:k] + [[first] + part[k]] + part[k + 1:]


def enumerate_strata(n: int) -> list[Signature]:
    """Every admissible signature for G(n,2), ordered by (#zero rows, pairs)."""
    if not 4 <= n <= 8:
        raise ValueError("enumerate_strata supports 4 <= n <= 8")
    return list(_enumerate(n))


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple:
    out = []
    for z in range(0, n - 1):
        level = []
        for zero in combinations(range(1, n + 1), z):
            rest = [i for i in range(1, n + 1) if i not in zero]
            for part in _set_partitions(rest):
                if len(part) >= 2:
                    level.append(ParallelStructure(n, zero, tuple(map(tuple, part))).signature())
        out.extend(sorted(level, key=lambda s: s.vanishing))
    return tuple(out)


@dataclass(frozen=True)
class StabilizerLattice:
    """Exponent vectors spanning the stabilizer subtorus (diagonal included)."""

    n: int
    basis: tuple

    @property
    def rank(self) -> int:
        return len(self.basis)


def stabilizer_lattice(sig: Signature) -> StabilizerLattice:
    require_structure(sig)
    n = sig.n
    # unknowns u_1..u_n, lam: u_i + u_j - lam = 0 on nonvanishing pairs
    rows = []
    for i, j in sig.nonvanishing:
        row = [0] * (n + 1)
        row[i - 1] += 1
        row[j - 1] += 1
        row[n] = -1
        rows.append(row)
    basis = [tuple(v[:n]) for v in nullspace(rows, n + 1)]
    return StabilizerLattice(n, tuple(basis))
