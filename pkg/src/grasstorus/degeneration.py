"""One-parameter Laurent families of planes and their limits as t -> 0."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .crossratio import CrossTuple
from .exact_scalar import LaurentScalar, ProjectivePoint, format_laurent, laurent_limit_ratio, parse_laurent, T
from .grassmann import pairs, quadruples, random_plane
from .param_space import member_of_virtual
from .strata import Signature, require_structure, witness_plane


@dataclass(frozen=True)
class LaurentPlane:
    n: int
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(_laurent(x) for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.n or any(len(r) != 2 for r in rows):
            raise ValueError(f"expected {self.n} rows of two entries")
        if not any(plucker_laurent(self).values()):
            raise ValueError("family has rank < 2: every Plücker series vanishes identically")

    @classmethod
    def from_plane(cls, plane) -> LaurentPlane:
        return cls(plane.n, plane.rows)

    def scale_variable(self, c) -> LaurentPlane:
        return LaurentPlane(self.n, tuple((a.scale_variable(c), b.scale_variable(c)) for a, b in self.rows))

    def to_json(self) -> dict:
        return {"n": self.n, "rows": [[format_laurent(a), format_laurent(b)] for a, b in self.rows]}

    @classmethod
    def from_json(cls, data) -> LaurentPlane:
        if not isinstance(data, dict) or "n" not in data or "rows" not in data:
            raise ValueError("family must be an object with 'n' and 'rows'")
        rows = []
        for row in data["rows"]:
            if not isinstance(row, list) or len(row) != 2:
                raise ValueError(f"bad row {row!r}")
            rows.append(tuple(parse_laurent(str(x)) for x in row))
        return cls(int(data["n"]), tuple(rows))

    @classmethod
    def load(cls, path) -> LaurentPlane:
        with open(path, encoding="utf-8") as fh:
            return cls.from_json(json.load(fh))


def _laurent(x) -> LaurentScalar:
    if isinstance(x, LaurentScalar):
        return x
    if isinstance(x, str):
        return parse_laurent(x)
    return LaurentScalar.constant(x)


def plucker_laurent(lp: LaurentPlane) -> dict:
    r = lp.rows
    return {(i, j): r[i - 1][0] * r[j - 1][1] - r[j - 1][0] * r[i - 1][1] for i, j in pairs(lp.n)}


@dataclass(frozen=True)
class LimitReport:
    limit_signature: Signature
    limit_tuple: CrossTuple
    member_of_virtual: bool

    def to_json(self) -> dict:
        return {
            "limit_signature": [list(pr) for pr in self.limit_signature.vanishing],
            "limit_tuple": self.limit_tuple.to_json(),
            "member_of_virtual": self.member_of_virtual,
        }


def limit_signature(lp: LaurentPlane) -> Signature:
    P = plucker_laurent(lp)
    v0 = min(f.valuation() for f in P.values() if f)
    return Signature(lp.n, tuple(pr for pr, f in P.items() if not f or f.valuation() > v0))


def limit_tuple(lp: LaurentPlane) -> CrossTuple:
    P = plucker_laurent(lp)

    def p(i, j):
        return P[(i, j)]

    values = {}
    for i, j, k, l in quadruples(lp.n):
        num, den = p(i, k) * p(j, l), p(i, l) * p(j, k)
        if not num and not den:
            values[(i, j, k, l)] = None
        elif not den:
            values[(i, j, k, l)] = ProjectivePoint.infinity()
        else:
            values[(i, j, k, l)] = laurent_limit_ratio(num, den)
    return CrossTuple(lp.n, values)


def limit_point(lp: LaurentPlane) -> LimitReport:
    sig = limit_signature(lp)
    tup = limit_tuple(lp)
    ok = tup.is_complete() and member_of_virtual(tup, sig)
    return LimitReport(sig, tup, ok)


def continuity_check(lp: LaurentPlane) -> bool:
    """Whether the limit tuple lies in the virtual space of the limit stratum."""
    return limit_point(lp).member_of_virtual


def degenerating_family(sig: Signature, seed: int) -> LaurentPlane:
    """``witness(sig) + t * random plane``: generic for t != 0, lands on ``sig`` at t = 0."""
    ps = require_structure(sig)
    rng = random.Random(seed)
    base = witness_plane(ps, rng.randrange(1 << 30))
    while True:
        pert = random_plane(rng, sig.n)
        rows = tuple(
            (LaurentScalar.constant(a) + T * LaurentScalar.constant(c),
             LaurentScalar.constant(b) + T * LaurentScalar.constant(d))
            for (a, b), (c, d) in zip(base.rows, pert.rows)
        )
        lp = LaurentPlane(sig.n, rows)
        if all(plucker_laurent(lp).values()) and limit_signature(lp) == sig:
            return lp


def random_family(rng: random.Random, sig: Signature) -> LaurentPlane:
    return degenerating_family(sig, rng.randrange(1 << 30))

