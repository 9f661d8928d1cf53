"""Cross-ratios ``w_{i,j,k,l} = [P_ik P_jl : P_il P_jk]`` on G(n,2).

A cross-ratio value is a :class:`ProjectivePoint`, or ``None`` when both the
numerator and the denominator vanish (undefined).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations

from .exact_scalar import ONE, ZERO, ProjectivePoint, format_point, gq, parse_point
from .grassmann import PluckerVector, quadruples
from .strata import Signature, require_structure

POINT_ZERO = ProjectivePoint(ZERO, ONE)
POINT_ONE = ProjectivePoint(ONE, ONE)
POINT_INF = ProjectivePoint.infinity()


def _check_tuple(n: int, t) -> None:
    if len(t) != 4 or len(set(t)) != 4 or not all(1 <= x <= n for x in t):
        raise ValueError(f"{t} is not a 4-tuple of distinct indices in 1..{n}")


def numerator_denominator(pv: PluckerVector, t):
    i, j, k, l = t
    return pv.p(i, k) * pv.p(j, l), pv.p(i, l) * pv.p(j, k)


def evaluate_cross_ratio(pv: PluckerVector, t) -> ProjectivePoint | None:
    """Evaluate in the given index order, with antisymmetric Plücker access."""
    _check_tuple(pv.n, t)
    num, den = numerator_denominator(pv, t)
    if not num and not den:
        return None
    return ProjectivePoint(num, den)


# --------------------------------------------------------------------------
# classification on a stratum


STRONG = "strong"
WEAK = "weak"
NON_ADMISSIBLE = "non-admissible"


@dataclass(frozen=True)
class Classification:
    kind: str
    forced: ProjectivePoint | None = None

    def __str__(self):
        if self.kind == WEAK:
            return f"weak({self.forced})"
        return self.kind


CLASS_STRONG = Classification(STRONG)
CLASS_NON_ADMISSIBLE = Classification(NON_ADMISSIBLE)


def classify_cross_ratio(sig: Signature, t) -> Classification:
    require_structure(sig)
    return _classify(sig, t)


def _classify(sig: Signature, t) -> Classification:
    i, j, k, l = t
    num_zero = (i, k) in sig or (j, l) in sig
    den_zero = (i, l) in sig or (j, k) in sig
    if num_zero and den_zero:
        return CLASS_NON_ADMISSIBLE
    if num_zero:
        return Classification(WEAK, POINT_ZERO)
    if den_zero:
        return Classification(WEAK, POINT_INF)
    if (i, j) in sig or (k, l) in sig:
        return Classification(WEAK, POINT_ONE)
    return CLASS_STRONG


def classify_all(sig: Signature) -> dict:
    require_structure(sig)
    return {t: _classify(sig, t) for t in quadruples(sig.n)}


# --------------------------------------------------------------------------
# the embedding into (CP^1)^N


@dataclass(frozen=True)
class CrossTuple:
    """Values of all ``C(n,4)`` sorted cross-ratios."""

    n: int
    values: dict

    def __post_init__(self):
        if set(self.values) != set(quadruples(self.n)):
            raise ValueError("a cross tuple must cover every sorted 4-subset")

    def __getitem__(self, t):
        return self.values[tuple(t)]

    def __eq__(self, other):
        return isinstance(other, CrossTuple) and self.n == other.n and self.values == other.values

    def __hash__(self):
        return hash((self.n, tuple(self.values[t] for t in quadruples(self.n))))

    def is_complete(self) -> bool:
        return all(v is not None for v in self.values.values())

    def ordered(self) -> list:
        return [self.values[t] for t in quadruples(self.n)]

    @classmethod
    def from_list(cls, n: int, values) -> CrossTuple:
        qs = quadruples(n)
        values = list(values)
        if len(values) != len(qs):
            raise ValueError(f"expected {len(qs)} values, got {len(values)}")
        return cls(n, {t: _as_point(v) for t, v in zip(qs, values)})

    def to_json(self) -> list:
        return [{"tuple": list(t), "value": format_point(self.values[t])} for t in quadruples(self.n)]

    @classmethod
    def from_json(cls, n: int, data) -> CrossTuple:
        values = {tuple(e["tuple"]): parse_point(str(e["value"])) for e in data}
        return cls(n, values)

    def __str__(self):
        return "(" + ", ".join(format_point(v) for v in self.ordered()) + ")"


def _as_point(v):
    if v is None or isinstance(v, ProjectivePoint):
        return v
    if isinstance(v, str):
        return parse_point(v)
    return ProjectivePoint(gq(v))


def embed_phi(pv: PluckerVector) -> CrossTuple:
    return CrossTuple(pv.n, {t: evaluate_cross_ratio(pv, t) for t in quadruples(pv.n)})


# --------------------------------------------------------------------------
# z-coordinates on the main stratum


def z_coordinates(pv: PluckerVector) -> list:
    """``[z_4, ..., z_n]`` with ``z_l = w_{1,2,3,l}``; main stratum only."""
    if pv.vanishing():
        raise ValueError("z-coordinates are defined on the main stratum only")
    out = []
    for l in range(4, pv.n + 1):
        num, den = numerator_denominator(pv, (1, 2, 3, l))
        out.append(num / den)
    return out


def cross_ratio_from_z(t, z) -> ProjectivePoint:
    """Sorted cross-ratio ``w_t`` from ``z = [z_4, ..., z_n]`` by the closed formulas."""
    z = [gq(x) for x in z]
    n = len(z) + 3
    if any(not x or x == ONE for x in z) or len(set(z)) != len(z):
        raise ValueError("z-coordinates must avoid 0 and 1 and be pairwise distinct")
    t = tuple(t)
    _check_tuple(n, t)
    if list(t) != sorted(t):
        raise ValueError("tuple must be sorted")

    def Z(i):
        return z[i - 4]

    head = tuple(x for x in t if x <= 3)
    tail = [x for x in t if x >= 4]
    if head == (1, 2, 3):
        num, den = Z(tail[0]), ONE
    elif len(head) == 2:
        i, j = tail
        if head == (1, 2):
            num, den = Z(j), Z(i)
        elif head == (1, 3):
            num, den = 1 - Z(j), 1 - Z(i)
        else:
            num, den = Z(i) * (1 - Z(j)), Z(j) * (1 - Z(i))
    elif len(head) == 1:
        i, j, k = tail
        if head == (1,):
            num, den = Z(i) - Z(k), Z(i) - Z(j)
        elif head == (2,):
            num, den = Z(j) * (Z(i) - Z(k)), Z(k) * (Z(i) - Z(j))
        else:
            num, den = (1 - Z(j)) * (Z(i) - Z(k)), (1 - Z(k)) * (Z(i) - Z(j))
    else:
        i, j, k, l = tail
        num, den = (Z(i) - Z(k)) * (Z(j) - Z(l)), (Z(i) - Z(l)) * (Z(j) - Z(k))
    return ProjectivePoint(num, den)


# --------------------------------------------------------------------------
# identity suite


@dataclass
class IdentityReport:
    checked: dict
    failures: dict

    @property
    def passed(self) -> bool:
        return not any(self.failures.values())

    def to_json(self) -> dict:
        return {
            name: {"checked": self.checked[name], "failed": len(self.failures[name])}
            for name in self.checked
        }


def identity_suite(pv: PluckerVector) -> IdentityReport:
    """Check the four cross-ratio identity families over every index choice.

    * reciprocal: ``w_{ijkl} w_{jikl} = 1``
    * complement: ``1 - w_{ijkl} = w_{ikjl}``; with unordered Plücker access
      and ``i<j<k<l`` the same identity reads ``1 - w_{ijkl} = -w_{ikjl}``,
      which is checked as ``complement_unordered``
    * transfer: ``w_{mjkl} = (w_{ijmk} - 1) / (w_{ijmk} - w_{ijlk})``
    * cocycle: ``w_{ijkl} w_{ijkm}^{-1} w_{ijlm} = 1``
    """
    n = pv.n
    if pv.vanishing():
        raise ValueError("the identity suite needs a main-stratum vector")
    idx = range(1, n + 1)
    w = {}
    for t in permutations(idx, 4):
        num, den = numerator_denominator(pv, t)
        w[t] = num / den
    if any(not v or v == ONE for v in w.values()):
        raise ValueError("degenerate cross-ratio on a main-stratum vector")

    checked = {k: 0 for k in ("reciprocal", "complement", "complement_unordered", "transfer", "cocycle")}
    failures = {k: [] for k in checked}

    def record(name, idxs, ok):
        checked[name] += 1
        if not ok:
            failures[name].append(idxs)

    for i, j, k, l in permutations(idx, 4):
        record("reciprocal", (i, j, k, l), w[(i, j, k, l)] * w[(j, i, k, l)] == ONE)
        record("complement", (i, j, k, l), 1 - w[(i, j, k, l)] == w[(i, k, j, l)])
    for i, j, k, l in combinations(idx, 4):
        q = pv.p_unordered
        wu = (q(i, k) * q(j, l)) / (q(i, l) * q(j, k))
        wu_swapped = (q(i, j) * q(k, l)) / (q(i, l) * q(k, j))
        record("complement_unordered", (i, j, k, l), 1 - wu == -wu_swapped)
    for i, j, k, l, m in permutations(idx, 5):
        a = w[(i, j, m, k)]
        record("transfer", (i, j, k, l, m), w[(m, j, k, l)] == (a - 1) / (a - w[(i, j, l, k)]))
        record("cocycle", (i, j, k, l, m), w[(i, j, k, l)] * w[(i, j, k, m)].inverse() * w[(i, j, l, m)] == ONE)
    return IdentityReport(checked, failures)
