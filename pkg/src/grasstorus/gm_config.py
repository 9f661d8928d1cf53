"""Planes in C^n as ordered configurations of n points on the projective line."""

from __future__ import annotations

from dataclasses import dataclass

from .crossratio import CrossTuple
from .exact_scalar import ONE, ZERO, ProjectivePoint, gq
from .grassmann import Plane


@dataclass(frozen=True)
class PointConfiguration:
    n: int
    points: tuple

    def __post_init__(self):
        if len(self.points) != self.n:
            raise ValueError(f"expected {self.n} points, got {len(self.points)}")
        if not all(isinstance(p, ProjectivePoint) for p in self.points):
            raise TypeError("points must be ProjectivePoint instances")

    @classmethod
    def of(cls, *points) -> PointConfiguration:
        pts = tuple(p if isinstance(p, ProjectivePoint) else ProjectivePoint(*map(gq, p)) for p in points)
        return cls(len(pts), pts)

    def is_generic(self) -> bool:
        return len(set(self.points)) == self.n

    def to_json(self) -> dict:
        return {"n": self.n, "points": [[str(p.first), str(p.second)] for p in self.points]}

    @classmethod
    def from_json(cls, data: dict) -> PointConfiguration:
        pts = tuple(ProjectivePoint(gq(a), gq(b)) for a, b in data["points"])
        return cls(int(data["n"]), pts)


def config_of_plane(plane: Plane) -> PointConfiguration:
    pts = []
    for i, (a, b) in enumerate(plane.rows, start=1):
        if not a and not b:
            raise ValueError(f"row {i} is zero and gives no point")
        pts.append(ProjectivePoint(a, b))
    return PointConfiguration(plane.n, tuple(pts))


def plane_of_config(config: PointConfiguration) -> Plane:
    if len(set(config.points)) < 2:
        raise ValueError("all points coincide; the rows span a line, not a plane")
    return Plane(config.n, tuple((p.first, p.second) for p in config.points))


def _det(p: ProjectivePoint, q: ProjectivePoint):
    return p.first * q.second - p.second * q.first


def _apply(g, p: ProjectivePoint) -> ProjectivePoint:
    # row vector (a, b) times g, matching Plane.times
    (p11, p12), (p21, p22) = g
    return ProjectivePoint(p.first * p11 + p.second * p21, p.first * p12 + p.second * p22)


def apply_transform(g, config: PointConfiguration) -> PointConfiguration:
    return PointConfiguration(config.n, tuple(_apply(g, p) for p in config.points))


def normalize_config(config: PointConfiguration):
    """Send points 1, 2, 3 to ``[1:0], [0:1], [1:1]``.

    Returns ``(normalized configuration, g)`` where ``g`` acts on row vectors
    on the right.  With ``p3 = alpha p1 + beta p2`` the matrix ``g`` inverts
    the basis ``(alpha p1, beta p2)``.
    """
    if config.n < 3:
        raise ValueError("normalization needs at least three points")
    p1, p2, p3 = config.points[:3]
    if p1 == p2 or p1 == p3 or p2 == p3:
        raise ValueError("the first three points must be pairwise distinct")
    d = _det(p1, p2)
    alpha = _det(p3, p2) / d
    beta = _det(p1, p3) / d
    m11, m12 = alpha * p1.first, alpha * p1.second
    m21, m22 = beta * p2.first, beta * p2.second
    det = m11 * m22 - m12 * m21
    g = ((m22 / det, -m12 / det), (-m21 / det, m11 / det))
    return apply_transform(g, config), g


def cross_ratio_of_points(p1, p2, p3, p4) -> ProjectivePoint | None:
    num = _det(p1, p3) * _det(p2, p4)
    den = _det(p1, p4) * _det(p2, p3)
    if not num and not den:
        return None
    return ProjectivePoint(num, den)


def affine_coordinates(config: PointConfiguration) -> list:
    """Affine coordinates ``z`` of normalized points 4..n (``[z : 1]``)."""
    normalized, _ = normalize_config(config)
    out = []
    for p in normalized.points[3:]:
        if p.second == ZERO:
            raise ValueError("point at infinity has no affine coordinate")
        out.append(p.first / p.second)
    return out


def cross_tuple_of_config(config: PointConfiguration) -> CrossTuple:
    from .grassmann import quadruples

    pts = config.points
    return CrossTuple(config.n, {
        t: cross_ratio_of_points(*(pts[i - 1] for i in t)) for t in quadruples(config.n)
    })


IDENTITY = ((ONE, ZERO), (ZERO, ONE))
