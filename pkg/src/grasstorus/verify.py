"""Randomized verification suites driven by the ``verify`` command."""

from __future__ import annotations

import random
from collections import Counter

from .crossratio import identity_suite
from .exact_scalar import GaussianRational
from .grassmann import (
    Plane, check_plucker_relations, plucker_of, random_main_plane, random_plane, random_torus,
    reconstruct_torus, torus_act,
)
from .momentmap import (
    admissible_polytope, in_relative_interior, moment_map, theorem6_form, vertex_vector,
)
from .param_space import same_orbit, same_orbit_by_torus
from .strata import ParallelStructure, _set_partitions, enumerate_strata, require_structure, witness_plane

SUITES = ("plucker", "identities", "theorem6", "orbit", "momentmap")


class Tally:
    def __init__(self):
        self.checked = Counter()
        self.failed = Counter()
        self.examples = {}

    def record(self, name: str, ok: bool, example=None):
        self.checked[name] += 1
        if not ok:
            self.failed[name] += 1
            self.examples.setdefault(name, example)

    @property
    def passed(self) -> bool:
        return not sum(self.failed.values())

    def to_json(self) -> dict:
        return {name: {"checked": self.checked[name], "failed": self.failed[name]} for name in sorted(self.checked)}


def suite_plucker(n, samples, rng, tally):
    for _ in range(samples):
        plane = random_plane(rng, n)
        tally.record("three_term_relations", check_plucker_relations(plucker_of(plane)), plane.to_json())


def suite_identities(n, samples, rng, tally):
    for _ in range(samples):
        pv = plucker_of(random_main_plane(rng, n))
        report = identity_suite(pv)
        for name, count in report.checked.items():
            tally.checked[name] += count
            if report.failures[name]:
                tally.failed[name] += len(report.failures[name])
                tally.examples.setdefault(name, report.failures[name][0])


def two_class_structures(n: int):
    """Two-class parallel structures without zero rows, the class of 1 listed first."""
    for part in _set_partitions(list(range(1, n + 1))):
        if len(part) == 2:
            yield ParallelStructure(n, (), tuple(map(tuple, part)))


def suite_theorem6(n, samples, rng, tally):
    for ps in two_class_structures(n):
        sig = ps.signature()
        poly = admissible_polytope(sig)
        form = theorem6_form(ps)
        inside = form.index_set
        expected = {(min(i, j), max(i, j)) for i in inside for j in range(1, n + 1) if j not in inside}
        tally.record("vertex_set", set(poly.vertices) == expected, sig.label())
        tally.record("dimension", poly.dim == n - 2, sig.label())
        tally.record("vertices_on_wall", all(form(vertex_vector(n, v)) == 1 for v in poly.vertices), sig.label())
        for _ in range(samples):
            x = moment_map(plucker_of(witness_plane(ps, rng.randrange(1 << 30)))).coords
            tally.record("moment_image_on_wall", form(x) == 1, sig.label())


def _perturbed(rng, plane: Plane) -> Plane:
    """Change the direction of one row with a nonzero first entry, staying generic."""
    while True:
        rows = list(plane.rows)
        i = rng.choice([k for k, (a, _) in enumerate(rows) if a])
        a, b = rows[i]
        rows[i] = (a, b + GaussianRational(rng.randint(1, 5)))
        candidate = Plane(plane.n, tuple(rows))
        if not plucker_of(candidate).vanishing():
            return candidate


def suite_orbit(n, samples, rng, tally):
    for _ in range(samples):
        plane = random_main_plane(rng, n)
        pv = plucker_of(plane)
        t = random_torus(rng, n)
        moved = torus_act(t, pv)
        tally.record("same_orbit_true", same_orbit(pv, moved))
        found = reconstruct_torus(pv, moved)
        tally.record("torus_round_trip", found is not None and torus_act(found, pv).projectively_equal(moved))
        other = plucker_of(_perturbed(rng, plane))
        tally.record("perturbed_not_same_orbit", not same_orbit(pv, other))
        tally.record("routes_agree", same_orbit(pv, other) == same_orbit_by_torus(pv, other))
        # orbits inside a random stratum
        sig = rng.choice(enumerate_strata(n)) if 4 <= n <= 6 else None
        if sig is not None:
            w = plucker_of(witness_plane(require_structure(sig), rng.randrange(1 << 30)))
            moved = torus_act(random_torus(rng, n), w)
            tally.record("stratum_same_orbit", same_orbit(w, moved) and same_orbit_by_torus(w, moved))


def suite_momentmap(n, samples, rng, tally):
    for _ in range(samples):
        x = moment_map(plucker_of(random_plane(rng, n))).coords
        tally.record("sum_is_two", sum(x) == 2)
        tally.record("box", all(0 <= xi <= 1 for xi in x))
    if n <= 6:
        for sig in enumerate_strata(n):
            plane = witness_plane(require_structure(sig), rng.randrange(1 << 30))
            ok = in_relative_interior(admissible_polytope(sig), moment_map(plucker_of(plane)))
            tally.record("relative_interior", ok, sig.label())


_RUNNERS = {
    "plucker": suite_plucker,
    "identities": suite_identities,
    "theorem6": suite_theorem6,
    "orbit": suite_orbit,
    "momentmap": suite_momentmap,
}


def run_suite(suite: str, n: int, samples: int, seed: int) -> Tally:
    if suite not in _RUNNERS:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    if n < 4:
        raise ValueError("n must be at least 4")
    tally = Tally()
    _RUNNERS[suite](n, samples, random.Random(seed), tally)
    return tally
