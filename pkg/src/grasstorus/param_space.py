"""Torus orbits via cross-ratios and the virtual parameter spaces of strata.

The virtual space of a stratum is described by the status of each sorted
cross-ratio (forced to 0, 1 or infinity; free and generic; or free "ghost"
when undefined on the stratum) and by multiplicative constraints among the
free coordinates.

Constraints are found by integer linear algebra.  Every cross-ratio is a
Laurent monomial in the Plücker coordinates.  On a stratum, a 3-term Plücker
relation with exactly one vanishing product becomes a binomial
``P_a P_b = s P_c P_d`` (``s = +-1``).  A vector ``v`` over the free tuples
gives a relation ``prod w_t^v_t = sign`` whenever its total exponent lies in
the lattice spanned by the binomials.  Vectors with zero total exponent are
formal identities valid on the whole closure (checked separately by the
5-point relations), so only relations independent of those are reported.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .crossratio import (
    NON_ADMISSIBLE, STRONG, WEAK, CrossTuple, classify_all, embed_phi,
)
from .exact_scalar import ONE
from .grassmann import PluckerVector, pairs, quadruples, reconstruct_torus
from .linalg import integer_kernel, integer_solve, lattice_basis, rank
from .strata import Signature, require_structure, signature_of


# --------------------------------------------------------------------------
# orbits


@dataclass(frozen=True)
class OrbitClass:
    """A point of ``F_sigma``: the stratum plus all defined cross-ratio values."""

    signature: Signature
    values: tuple


def orbit_class(pv: PluckerVector) -> OrbitClass:
    phi = embed_phi(pv)
    vals = tuple((t, v) for t, v in phi.values.items() if v is not None)
    return OrbitClass(signature_of(pv), vals)


def same_orbit(pv1: PluckerVector, pv2: PluckerVector) -> bool:
    if pv1.n != pv2.n:
        raise ValueError("dimension mismatch")
    return orbit_class(pv1) == orbit_class(pv2)


def same_orbit_by_torus(pv1: PluckerVector, pv2: PluckerVector) -> bool:
    """Independent route: explicit torus reconstruction."""
    if pv1.vanishing() != pv2.vanishing():
        return False
    return reconstruct_torus(pv1, pv2) is not None


# --------------------------------------------------------------------------
# virtual spaces


@dataclass(frozen=True)
class Constraint:
    """``prod w_t ^ exponents[t] = sign``, holding projectively."""

    exponents: tuple
    sign: int = 1

    def as_dict(self) -> dict:
        return dict(self.exponents)

    def holds(self, x: CrossTuple) -> bool:
        lhs = rhs = ONE
        for t, e in self.exponents:
            p = x[t]
            if e > 0:
                lhs = lhs * p.first ** e
                rhs = rhs * p.second ** e
            else:
                lhs = lhs * p.second ** -e
                rhs = rhs * p.first ** -e
        return lhs == rhs * self.sign

    def to_json(self) -> dict:
        out = {"exponents": {"".join(map(str, t)): e for t, e in self.exponents}}
        if self.sign != 1:
            out["sign"] = self.sign
        return out

    def __str__(self):
        body = " * ".join(
            f"w{''.join(map(str, t))}" + ("" if e == 1 else f"^{e}") for t, e in self.exponents
        )
        return f"{body} = {self.sign}"


@dataclass(frozen=True)
class VirtualSpaceDescription:
    n: int
    signature: Signature
    status: dict
    constraints: tuple
    binomials: tuple = field(default=(), compare=False)

    def forced(self) -> dict:
        return {t: c.forced for t, c in self.status.items() if c.kind == WEAK}

    def free(self) -> list:
        return [t for t, c in self.status.items() if c.kind != WEAK]

    def strong(self) -> list:
        return [t for t, c in self.status.items() if c.kind == STRONG]

    def ghost(self) -> list:
        return [t for t, c in self.status.items() if c.kind == NON_ADMISSIBLE]

    def to_json(self) -> dict:
        return {
            "forced": [{"tuple": list(t), "value": str(v)} for t, v in self.forced().items()],
            "free": [list(t) for t in self.free()],
            "ghost": [list(t) for t in self.ghost()],
            "constraints": [c.to_json() for c in self.constraints],
        }


def cross_ratio_exponents(n: int, t) -> list[int]:
    """Exponent vector of ``w_t`` over the sorted pairs, sign of ordering ignored."""
    idx = {pr: k for k, pr in enumerate(pairs(n))}
    i, j, k, l = t
    v = [0] * len(idx)
    for a, b, e in ((i, k, 1), (j, l, 1), (i, l, -1), (j, k, -1)):
        v[idx[(min(a, b), max(a, b))]] += e
    return v


def _ordering_sign(t) -> int:
    # P_ab for a > b contributes a factor -1
    i, j, k, l = t
    flips = sum(a > b for a, b in ((i, k), (j, l), (i, l), (j, k)))
    return -1 if flips % 2 else 1


def binomial_relations(sig: Signature) -> list:
    """``(exponent vector, sign)`` for each 3-term relation with one vanishing product.

    The vector ``e`` and sign ``s`` mean ``prod P^e = s`` on the stratum.
    """
    n = sig.n
    idx = {pr: k for k, pr in enumerate(pairs(n))}
    out = []
    for i, j, k, l in quadruples(n):
        # P_ij P_kl - P_ik P_jl + P_il P_jk = 0
        terms = [(((i, j), (k, l)), 1), (((i, k), (j, l)), -1), (((i, l), (j, k)), 1)]
        alive = [(prs, s) for prs, s in terms if not any(pr in sig for pr in prs)]
        if len(alive) != 2:
            continue
        (p1, s1), (p2, s2) = alive
        # s1 * P(p1) + s2 * P(p2) = 0  =>  P(p1) / P(p2) = -s2 / s1
        v = [0] * len(idx)
        for pr in p1:
            v[idx[pr]] += 1
        for pr in p2:
            v[idx[pr]] -= 1
        out.append((tuple(v), -s2 * s1))
    return out


@lru_cache(maxsize=None)
def virtual_space_of(sig: Signature) -> VirtualSpaceDescription:
    require_structure(sig)
    n = sig.n
    status = classify_all(sig)
    free = [t for t, c in status.items() if c.kind != WEAK]
    binoms = binomial_relations(sig)
    npairs = len(pairs(n))
    E = [cross_ratio_exponents(n, t) for t in free]
    B = [v for v, _ in binoms]
    constraints = ()
    if free:
        # kernel of [E_free | -B] over Z, projected onto the free part
        A = [[E[c][r] for c in range(len(free))] + [-B[c][r] for c in range(len(B))]
             for r in range(npairs)]
        kernel = integer_kernel(A, len(free) + len(B))
        L = lattice_basis([v[:len(free)] for v in kernel], len(free))
        constraints = _select_constraints(L, E, B, binoms, free)
    return VirtualSpaceDescription(n, sig, status, constraints, tuple(binoms))


def _select_constraints(L, E, B, binoms, free):
    npairs = len(E[0])

    def image(v):
        return [sum(v[c] * E[c][r] for c in range(len(free))) for r in range(npairs)]

    chosen, images = [], []
    for v in sorted(L, key=lambda v: (sum(map(abs, v)), [-x for x in v])):
        img = image(v)
        if rank(images + [img]) > len(images):
            images.append(img)
            chosen.append(v)
    out = []
    Bcols = [[B[c][r] for c in range(len(B))] for r in range(npairs)]
    for v in chosen:
        lead = next(x for x in v if x)
        if lead < 0:
            v = [-x for x in v]
        m = integer_solve(Bcols, len(B), image(v))
        if m is None:
            raise AssertionError("constraint outside the binomial lattice")
        flips = sum(mi for mi, (_, s) in zip(m, binoms) if s == -1)
        # each cross-ratio is a monomial in sorted-pair P's up to the ordering sign
        flips += sum(vi for vi, t in zip(v, free) if _ordering_sign(t) == -1)
        sign = -1 if flips % 2 else 1
        exps = tuple((t, vi) for t, vi in zip(free, v) if vi)
        out.append(Constraint(exps, sign))
    return tuple(out)


# --------------------------------------------------------------------------
# closure membership


def five_point_residues(x: CrossTuple):
    """Yield ``(subset, [r1..r4])`` for the homogenized relations of each 5-subset.

    With ``w_k = [c_k : c'_k]`` for the sorted 4-subsets of ``a<b<c<d<e`` in
    order ``abcd, abce, abde, acde, bcde``::

        c1 c2' c3 = c1' c2 c3'
        c4 (c1' - c1) c2' = c4' (c2' - c2) c1'
        c5 (c1' - c1) c2 = c5' (c2' - c2) c1
        c5 c4' c3 = c5' c4 c3'
    """
    for a, b, c, d, e in combinations(range(1, x.n + 1), 5):
        w = [x[t] for t in ((a, b, c, d), (a, b, c, e), (a, b, d, e), (a, c, d, e), (b, c, d, e))]
        (c1, d1), (c2, d2), (c3, d3), (c4, d4), (c5, d5) = [(p.first, p.second) for p in w]
        yield (a, b, c, d, e), [
            c1 * d2 * c3 - d1 * c2 * d3,
            c4 * (d1 - c1) * d2 - d4 * (d2 - c2) * d1,
            c5 * (d1 - c1) * c2 - d5 * (d2 - c2) * c1,
            c5 * d4 * c3 - d5 * c4 * d3,
        ]


def in_closure(x: CrossTuple) -> bool:
    return not any(any(r) for _, r in five_point_residues(x))


def membership_failures(x: CrossTuple, sig: Signature) -> list[str]:
    """Reasons ``x`` is not in the virtual space of ``sig`` (empty when it is)."""
    if x.n != sig.n:
        raise ValueError("dimension mismatch")
    if not x.is_complete():
        raise ValueError("membership needs every cross-ratio defined")
    desc = virtual_space_of(sig)
    reasons = []
    for t, c in desc.status.items():
        v = x[t]
        if c.kind == WEAK and v != c.forced:
            reasons.append(f"w{''.join(map(str, t))}={v}, forced {c.forced}")
        elif c.kind == STRONG and v.is_special():
            reasons.append(f"w{''.join(map(str, t))}={v} must avoid 0, 1, inf")
    for con in desc.constraints:
        if not con.holds(x):
            reasons.append(f"constraint {con} fails")
    for subset, res in five_point_residues(x):
        if any(res):
            reasons.append(f"5-point relations fail on {subset}")
    return reasons


def member_of_virtual(x: CrossTuple, sig: Signature) -> bool:
    return not membership_failures(x, sig)


def project_strong(x: CrossTuple, sig: Signature) -> list:
    """The projection onto the strongly admissible coordinates (sorted tuple order)."""
    if not member_of_virtual(x, sig):
        raise ValueError("point is not in the virtual space of this stratum")
    return [x[t] for t in virtual_space_of(sig).strong()]


# --------------------------------------------------------------------------
# containment between virtual spaces


class NotApplicable(ValueError):
    """The inner polytope is not a proper face of the outer one."""


def sample_virtual_points(sig: Signature, samples: int, seed: int) -> list[CrossTuple]:
    """Random points of the virtual space of ``sig``.

    Strata without ghost coordinates use witness planes directly; otherwise
    limits of main-stratum families degenerating onto a witness supply the
    ghost values.
    """
    from .degeneration import degenerating_family, limit_point
    from .grassmann import plucker_of
    from .strata import witness_plane

    ps = require_structure(sig)
    rng = random.Random(seed)
    desc = virtual_space_of(sig)
    out = []
    for _ in range(samples):
        s = rng.randrange(1 << 30)
        if not desc.ghost():
            out.append(embed_phi(plucker_of(witness_plane(ps, s))))
        else:
            out.append(limit_point(degenerating_family(sig, s)).limit_tuple)
    return out


def check_containment(outer: Signature, inner: Signature, samples: int, seed: int) -> bool:
    from .momentmap import admissible_polytope, is_face

    p_out = admissible_polytope(outer)
    p_in = admissible_polytope(inner)
    if p_in.vertices == p_out.vertices or not is_face(p_out, p_in.vertices):
        raise NotApplicable(f"P[{inner.label()}] is not a boundary face of P[{outer.label()}]")
    return all(member_of_virtual(x, inner) for x in sample_virtual_points(outer, samples, seed))
