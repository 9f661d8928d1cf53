"""Reference tables of virtual spaces for G(4,2) and G(5,2), and the checker.

Each G(5,2) row lists the five sorted cross-ratios ``w1234, w1235, w1245,
w1345, w2345`` as patterns in a parameter ``[c:c']``.  A row *matches* the
computed virtual space when

* its constant entries are exactly the forced coordinates,
* the patterned tuple is a member for sampled parameters, and
* sampled members of the virtual space all fit the pattern.

Rows marked ``disputed`` carry both the tabulated pattern and the one
computed here; the tabulated pattern is expected to fail and the computed one
to pass on every sample.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .crossratio import CrossTuple, POINT_INF, POINT_ONE, POINT_ZERO, embed_phi
from .exact_scalar import ProjectivePoint, gq
from .grassmann import plucker_of, quadruples
from .param_space import member_of_virtual, sample_virtual_points, virtual_space_of
from .strata import Signature, enumerate_strata, require_structure, witness_plane

# pattern -> (num, den) as linear forms in (c, c')
PATTERNS = {
    "[c:c']": ((1, 0), (0, 1)),
    "[c':c]": ((0, 1), (1, 0)),
    "[c-c':c]": ((1, -1), (1, 0)),
    "[c:c-c']": ((1, 0), (1, -1)),
    "[c'-c:c']": ((-1, 1), (0, 1)),
    "[c':c'-c]": ((0, 1), (-1, 1)),
}
CONSTANTS = {"[0:1]": POINT_ZERO, "[1:0]": POINT_INF, "[1:1]": POINT_ONE}


@dataclass(frozen=True)
class GoldenRow:
    label: str
    signature: str
    entries: tuple
    closed_parameter: bool = False  # parameter ranges over all of CP^1
    derived: tuple | None = None  # computed replacement for a disputed row
    dispute: str = ""
    preregistered: bool = False  # discrepancy known before the tables were checked

    @property
    def disputed(self) -> bool:
        return self.derived is not None


def _row(label, sig, text, closed=False, derived=None, dispute="", preregistered=False):
    entries = tuple(e.strip() for e in text.replace(",", ";").split(";"))
    if derived is not None:
        derived = tuple(e.strip() for e in derived.split(";"))
    return GoldenRow(label, sig, entries, closed, derived, dispute, preregistered)


G52_ROWS = (
    # single vanishing pair
    _row("F12", "1,2", "[1:1];[1:1];[1:1];[c:c'];[c':c]", derived="[1:1];[1:1];[1:1];[c:c'];[c:c']",
         dispute="relation: w1345 = w2345, not reciprocal", preregistered=True),
    _row("F13", "1,3", "[0:1];[0:1];[c:c'];[1:1];[c':c]"),
    _row("F14", "1,4", "[1:0];[c:c'];[0:1];[0:1];[c-c':c]"),
    _row("F15", "1,5", "[c:c'];[1:0];[1:0];[1:0];[c:c-c']"),
    _row("F23", "2,3", "[1:0];[1:0];[c:c'];[c:c'];[1:1]"),
    _row("F24", "2,4", "[0:1];[c:c'];[1:0];[c'-c:c'];[0:1]"),
    _row("F25", "2,5", "[c:c'];[0:1];[0:1];[c':c'-c];[1:0]"),
    _row("F34", "3,4", "[1:1];[c:c'];[c:c'];[1:0];[1:0]"),
    _row("F35", "3,5", "[c:c'];[1:1];[c':c];[0:1];[0:1]"),
    _row("F45", "4,5", "[c:c'];[c:c'];[1:1];[1:1];[1:1]"),
    # two vanishing pairs
    _row("F12,34", "1,2;3,4", "[1:1];[1:1];[1:1];[1:0];[1:0]"),
    _row("F12,35", "1,2;3,5", "[1:1];[1:1];[1:1];[0:1];[0:1]"),
    _row("F12,45", "1,2;4,5", "[1:1];[1:1];[1:1];[1:1];[1:1]"),
    _row("F13,24", "1,3;2,4", "[0:1];[0:1];[1:0];[1:1];[0:1]"),
    _row("F13,25", "1,3;2,5", "[0:1];[0:1];[0:1];[1:1];[1:0]"),
    _row("F13,45", "1,3;4,5", "[0:1];[0:1];[1:1];[1:1];[1:1]"),
    _row("F14,23", "1,4;2,3", "[1:0];[1:0];[0:1];[0:1];[1:1]"),
    _row("F14,35", "1,4;3,5", "[1:0];[1:1];[0:1];[0:1];[0:1]"),
    _row("F14,25", "1,4;2,5", "[1:0];[0:1];[0:1];[0:1];[1:0]"),
    _row("F15,24", "1,5;2,4", "[0:1];[1:0];[1:0];[1:0];[0:1]"),
    _row("F15,34", "1,5;3,4", "[1:1];[1:0];[1:0];[1:0];[1:0]"),
    _row("F15,23", "1,5;2,3", "[1:0];[1:0];[1:0];[1:0];[1:1]"),
    _row("F23,45", "2,3;4,5", "[1:0];[1:0];[1:1];[1:1];[1:1]"),
    _row("F24,35", "2,4;3,5", "[0:1];[1:1];[0:1];[0:1];[0:1]", derived="[0:1];[1:1];[1:0];[0:1];[0:1]",
         dispute="forced value: w1245 has P24 in the denominator"),
    _row("F25,34", "2,5;3,4", "[1:1];[0:1];[0:1];[1:0];[1:0]"),
    # three pairs forming a triangle
    _row("F34,35,45", "3,4;3,5;4,5", "[1:1];[1:1];[1:1];[c:c'];[c:c']", True),
    _row("F24,25,45", "2,4;2,5;4,5", "[0:1];[0:1];[c:c'];[1:1];[c':c]", True),
    _row("F23,25,35", "2,3;2,5;3,5", "[1:0];[c:c'];[0:1];[0:1];[c-c':c]", True),
    _row("F23,24,34", "2,3;2,4;3,4", "[c:c'];[1:0];[1:0];[1:0];[c:c-c']", True),
    _row("F14,15,45", "1,4;1,5;4,5", "[0:1];[0:1];[c:c'];[c:c'];[1:1]", True,
         derived="[1:0];[1:0];[c:c'];[c:c'];[1:1]",
         dispute="forced values: w1234, w1235 have P14, P15 in the denominator"),
    _row("F13,15,35", "1,3;1,5;3,5", "[0:1];[c:c'];[1:0];[c'-c:c'];[0:1]", True),
    _row("F13,14,34", "1,3;1,4;3,4", "[c:c'];[0:1];[0:1];[c':c'-c];[1:0]", True),
    _row("F12,15,25", "1,2;1,5;2,5", "[1:1];[c:c'];[c:c'];[1:0];[1:0]", True),
    _row("F12,14,24", "1,2;1,4;2,4", "[c:c'];[1:1];[c':c];[0:1];[0:1]", True),
    _row("F12,13,23", "1,2;1,3;2,3", "[c:c'];[c:c'];[1:1];[1:1];[1:1]", True),
)


# --------------------------------------------------------------------------
# pattern evaluation


def pattern_point(entry: str, c: ProjectivePoint) -> ProjectivePoint:
    if entry in CONSTANTS:
        return CONSTANTS[entry]
    (p, q), (r, s) = PATTERNS[entry]
    return ProjectivePoint(p * c.first + q * c.second, r * c.first + s * c.second)


def pattern_tuple(entries, c: ProjectivePoint) -> CrossTuple:
    return CrossTuple(5, {t: pattern_point(e, c) for t, e in zip(quadruples(5), entries)})


def solve_parameter(entry: str, value: ProjectivePoint) -> ProjectivePoint:
    """The ``[c:c']`` that ``entry`` sends to ``value`` (patterns are Möbius maps)."""
    (p, q), (r, s) = PATTERNS[entry]
    det = p * s - q * r
    x, y = value.first, value.second
    return ProjectivePoint((s * x - q * y) / det, (-r * x + p * y) / det)


def fits_pattern(entries, x: CrossTuple) -> bool:
    free = [(e, t) for e, t in zip(entries, quadruples(5)) if e in PATTERNS]
    if not free:
        return pattern_tuple(entries, POINT_ONE) == x
    e, t = free[0]
    return pattern_tuple(entries, solve_parameter(e, x[t])) == x


def _parameter_samples(rng, closed: bool, count: int) -> list:
    out = []
    while len(out) < count:
        c = ProjectivePoint(gq(rng.randint(-9, 9), rng.choice((0, rng.randint(-9, 9)))), gq(rng.randint(1, 9)))
        if not c.is_special():
            out.append(c)
    if closed:
        out += [POINT_ZERO, POINT_ONE, POINT_INF]
    return out


# --------------------------------------------------------------------------
# checks


@dataclass
class RowResult:
    row: GoldenRow
    forced_ok: bool
    pattern_members: bool
    members_fit: bool
    derived_ok: bool | None = None
    samples: int = 0
    notes: list = field(default_factory=list)

    @property
    def matches(self) -> bool:
        return self.forced_ok and self.pattern_members and self.members_fit

    @property
    def passed(self) -> bool:
        if self.row.disputed:
            return not self.matches and bool(self.derived_ok)
        return self.matches

    def to_json(self) -> dict:
        out = {
            "row": self.row.label,
            "status": self.status,
            "forced": self.forced_ok,
            "pattern_members": self.pattern_members,
            "members_fit": self.members_fit,
            "samples": self.samples,
        }
        if self.row.disputed:
            out["derived"] = list(self.row.derived)
            out["derived_confirmed"] = self.derived_ok
            out["dispute"] = self.row.dispute
            out["preregistered"] = self.row.preregistered
        return out

    @property
    def status(self) -> str:
        if self.row.disputed:
            return "NOTED-DISCREPANCY" if self.passed else "FAIL"
        return "MATCH" if self.passed else "FAIL"


def _forced_ok(entries, sig: Signature) -> bool:
    forced = virtual_space_of(sig).forced()
    for t, e in zip(quadruples(5), entries):
        if (e in CONSTANTS) != (t in forced):
            return False
        if e in CONSTANTS and CONSTANTS[e] != forced[t]:
            return False
    return True


def _virtual_members(sig: Signature, samples: int, seed: int) -> list[CrossTuple]:
    desc = virtual_space_of(sig)
    if desc.ghost():
        return sample_virtual_points(sig, samples, seed)
    ps = require_structure(sig)
    rng = random.Random(seed)
    return [embed_phi(plucker_of(witness_plane(ps, rng.randrange(1 << 30)))) for _ in range(samples)]


def _check_entries(entries, sig, closed, members, rng, count):
    forced_ok = _forced_ok(entries, sig)
    params = _parameter_samples(rng, closed, count)
    pattern_members = all(member_of_virtual(pattern_tuple(entries, c), sig) for c in params)
    members_fit = all(fits_pattern(entries, x) for x in members)
    return forced_ok, pattern_members, members_fit


def check_row(row: GoldenRow, samples: int = 20, seed: int = 0) -> RowResult:
    sig = Signature.parse(5, row.signature)
    members = _virtual_members(sig, samples, seed)
    rng = random.Random(seed)
    f, p, m = _check_entries(row.entries, sig, row.closed_parameter, members, rng, samples)
    res = RowResult(row, f, p, m, samples=len(members))
    if row.disputed:
        res.derived_ok = all(_check_entries(row.derived, sig, row.closed_parameter, members, rng, samples))
        if not m:
            res.notes.append("sampled members do not fit the tabulated pattern")
        if not p:
            res.notes.append("the tabulated pattern leaves the virtual space")
    return res


def same_virtual_space(a: Signature, b: Signature) -> bool:
    da, db = virtual_space_of(a), virtual_space_of(b)
    if da.forced() != db.forced():
        return False
    return all(member_of_virtual(x, b) for x in _virtual_members(a, 10, 1)) and all(
        member_of_virtual(x, a) for x in _virtual_members(b, 10, 2)
    )


def g52_extra_checks() -> list[tuple[str, bool]]:
    """Structural claims about the remaining G(5,2) strata."""
    out = []
    idx = range(1, 6)
    for i in idx:
        rest = [j for j in idx if j != i]
        y = Signature(5, tuple((a, b) for a in rest for b in rest if a < b))
        d = virtual_space_of(y)
        out.append((f"Y{i} all coordinates ghost, no constraints",
                    len(d.ghost()) == 5 and not d.constraints))
        wi = Signature(5, tuple((min(i, j), max(i, j)) for j in rest))
        d = virtual_space_of(wi)
        out.append((f"W{i} only w{''.join(map(str, rest))} strong, rest ghost",
                    d.strong() == [tuple(rest)] and len(d.ghost()) == 4))
    for i, j in ((1, 2), (3, 4), (2, 5)):
        k, l, m = [x for x in idx if x not in (i, j)]
        four = Signature(5, ((i, j), (k, l), (k, m), (l, m)))
        out.append((f"F{i}{j},{k}{l},{k}{m},{l}{m} = F{i}{j}", same_virtual_space(four, Signature.of(5, (i, j)))))
        out.append((f"F{i}{j},{k}{l},{k}{m},{l}{m} = F{k}{l},{k}{m},{l}{m}",
                    same_virtual_space(four, Signature(5, ((k, l), (k, m), (l, m))))))
    return out


def g42_checks() -> list[tuple[str, bool]]:
    """G(4,2): one cross-ratio; every virtual space is its ordinary parameter space.

    A stratum either fixes ``w1234`` to a constant, leaves it generic in
    ``CP^1 \\ {0,1,inf}``, or leaves it undefined; in the last case the
    ordinary space is a point and the virtual space is the whole closure.
    """
    from .degeneration import degenerating_family, limit_point

    out = [("exactly one cross-ratio", len(quadruples(4)) == 1)]
    strata = enumerate_strata(4)
    closure_points = set()
    ok = True
    for sig in strata:
        d = virtual_space_of(sig)
        if d.constraints:
            ok = False
        kinds = {c.kind for c in d.status.values()}
        if len(kinds) != 1:
            ok = False
        if not sig.is_main():
            closure_points.add(limit_point(degenerating_family(sig, 1)).limit_tuple[(1, 2, 3, 4)])
        for seed in range(3):
            x = embed_phi(plucker_of(witness_plane(require_structure(sig), seed)))
            v = x[(1, 2, 3, 4)]
            if d.ghost():
                ok = ok and v is None
            elif d.forced():
                ok = ok and v == d.forced()[(1, 2, 3, 4)]
            else:
                ok = ok and not v.is_special() and member_of_virtual(x, sig)
    out.append(("36 strata", len(strata) == 36))
    out.append(("each virtual space equals its parameter space", ok))
    out.append(("closure adds exactly 0, 1, inf", closure_points >= {POINT_ZERO, POINT_ONE, POINT_INF}))
    return out


def check_g52(samples: int = 20, seed: int = 0) -> tuple[list[RowResult], list]:
    return [check_row(r, samples, seed) for r in G52_ROWS], g52_extra_checks()



def g52_verdict(rows, extra) -> bool:
    """Every row confirmed, every discrepancy pre-registered, every extra check passing."""
    return (all(r.passed for r in rows)
            and all(r.row.preregistered for r in rows if r.row.disputed)
            and all(ok for _, ok in extra))
