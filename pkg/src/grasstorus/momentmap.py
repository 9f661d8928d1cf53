"""Moment map onto the hypersimplex and the admissible polytopes of strata."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .grassmann import PluckerVector, pairs
from .linalg import lp_maximize, rank
from .strata import ParallelStructure, Signature, require_structure


def vertex_vector(n: int, pr) -> list[int]:
    v = [0] * n
    v[pr[0] - 1] = 1
    v[pr[1] - 1] = 1
    return v


@dataclass(frozen=True)
class HypersimplexPoint:
    coords: tuple

    def __post_init__(self):
        coords = tuple(Fraction(x) for x in self.coords)
        object.__setattr__(self, "coords", coords)
        if sum(coords) != 2 or any(x < 0 or x > 1 for x in coords):
            raise ValueError(f"{coords} is not in the hypersimplex")

    @property
    def n(self) -> int:
        return len(self.coords)


@dataclass(frozen=True)
class AdmissiblePolytope:
    """Convex hull of the vertices ``e_i + e_j`` for the listed pairs."""

    n: int
    vertices: frozenset
    dim: int

    @classmethod
    def from_vertices(cls, n: int, vertices) -> AdmissiblePolytope:
        vertices = frozenset(tuple(sorted(v)) for v in vertices)
        if not vertices:
            raise ValueError("a polytope needs at least one vertex")
        vs = [vertex_vector(n, pr) for pr in vertices]
        base = vs[0]
        dim = rank([[a - b for a, b in zip(v, base)] for v in vs[1:]]) if len(vs) > 1 else 0
        return cls(n, vertices, dim)

    def sorted_vertices(self):
        return sorted(self.vertices)

    def to_json(self) -> dict:
        return {"n": self.n, "vertices": [list(v) for v in self.sorted_vertices()], "dim": self.dim}


@dataclass(frozen=True)
class HyperplaneForm:
    """The linear form ``q_I(x) = sum_{i in I} x_i``, set equal to 1."""

    index_set: frozenset

    def __call__(self, x) -> Fraction:
        return sum((Fraction(x[i - 1]) for i in self.index_set), Fraction(0))


def moment_map(pv: PluckerVector) -> HypersimplexPoint:
    weights = {pr: v.norm_sq() for pr, v in pv.coords.items()}
    total = sum(weights.values())
    x = [Fraction(0)] * pv.n
    for (i, j), w in weights.items():
        if w:
            x[i - 1] += w
            x[j - 1] += w
    return HypersimplexPoint(tuple(xi / total for xi in x))


def admissible_polytope(sig: Signature) -> AdmissiblePolytope:
    require_structure(sig)
    return AdmissiblePolytope.from_vertices(sig.n, sig.nonvanishing)


def theorem6_form(ps: ParallelStructure) -> HyperplaneForm | None:
    """The wall ``sum_{i in I} x_i = 1`` of a two-class structure without zero rows."""
    if ps.zero_rows or len(ps.classes) != 2:
        return None
    return HyperplaneForm(frozenset(ps.class_of(1)))


def _convex_system(poly: AdmissiblePolytope, point):
    verts = poly.sorted_vertices()
    A = [[vertex_vector(poly.n, v)[i] for v in verts] for i in range(poly.n)]
    A.append([1] * len(verts))
    b = list(point) + [1]
    return verts, A, b


def in_relative_interior(poly: AdmissiblePolytope, point: HypersimplexPoint) -> bool:
    """Exact test: ``point`` is a convex combination of all vertices with positive weights."""
    if point.n != poly.n:
        raise ValueError("dimension mismatch")
    verts, A, b = _convex_system(poly, point.coords)
    k = len(verts)
    # lam_v = mu_v + s with mu, s >= 0; maximize s
    A2 = [row + [sum(row)] for row in A]
    status, value, _ = lp_maximize(A2, b, [0] * k + [1])
    if status == "unbounded":
        raise AssertionError("bounded by construction")
    return status == "optimal" and value > 0


def is_face(poly: AdmissiblePolytope, sub_vertices) -> bool:
    """Whether the hull of ``sub_vertices`` is a face of ``poly`` (possibly all of it)."""
    sub = frozenset(tuple(sorted(v)) for v in sub_vertices)
    if not sub or not sub <= poly.vertices:
        return False
    barycenter = [Fraction(0)] * poly.n
    for v in sub:
        for i in v:
            barycenter[i - 1] += Fraction(1, len(sub))
    verts, A, b = _convex_system(poly, barycenter)
    status, value, _ = lp_maximize(A, b, [0 if v in sub else 1 for v in verts])
    return status == "optimal" and value == 0


def face_maximizing(poly: AdmissiblePolytope, functional) -> frozenset:
    """Vertex set of the face on which ``functional`` attains its maximum."""
    def score(v):
        return sum(functional[i - 1] for i in v)
    best = max(score(v) for v in poly.vertices)
    return frozenset(v for v in poly.vertices if score(v) == best)


def hypersimplex(n: int) -> AdmissiblePolytope:
    return AdmissiblePolytope.from_vertices(n, pairs(n))
