import random
from math import gcd

import pytest

from grasstorus.crossratio import CrossTuple, embed_phi
from grasstorus.degeneration import degenerating_family, limit_point
from grasstorus.exact_scalar import ProjectivePoint, gq
from grasstorus.grassmann import (
    Plane, PluckerVector, plucker_of, random_main_plane, random_torus, reconstruct_torus, torus_act,
)
from grasstorus.param_space import (
    NotApplicable, check_containment, five_point_residues, in_closure, member_of_virtual,
    membership_failures, orbit_class, project_strong, same_orbit, same_orbit_by_torus,
    virtual_space_of,
)
from grasstorus.strata import Signature, enumerate_strata, require_structure, witness_plane

MAIN = Signature.of(5)
S13 = Signature.of(5, (1, 3))
S12 = Signature.of(5, (1, 2))
TRIANGLE = Signature.of(5, (3, 4), (3, 5), (4, 5))
FIXED = Signature(5, tuple((i, j) for i in range(1, 6) for j in range(i + 1, 6) if (i, j) != (1, 2)))
W1 = Signature.of(5, (1, 2), (1, 3), (1, 4), (1, 5))
Y1 = Signature.of(5, (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (4, 5))


def key(t):
    return "".join(map(str, t))


def constraint_dicts(desc):
    return [{key(t): e for t, e in c.exponents} for c in desc.constraints]


def test_virtual_space_13():
    d = virtual_space_of(S13)
    assert {key(t): str(v) for t, v in d.forced().items()} == {"1234": "0", "1235": "0", "1345": "1"}
    assert d.free() == [(1, 2, 4, 5), (2, 3, 4, 5)]
    assert constraint_dicts(d) == [{"1245": 1, "2345": 1}]
    assert d.constraints[0].sign == 1


def test_virtual_space_triangle():
    d = virtual_space_of(TRIANGLE)
    assert {key(t): str(v) for t, v in d.forced().items()} == {"1234": "1", "1235": "1", "1245": "1"}
    assert d.free() == [(1, 3, 4, 5), (2, 3, 4, 5)] == d.ghost()
    assert constraint_dicts(d) == [{"1345": 1, "2345": -1}]


def test_virtual_space_main_and_fixed():
    d = virtual_space_of(MAIN)
    assert not d.forced() and not d.constraints and not d.binomials and len(d.free()) == 5
    d = virtual_space_of(FIXED)
    assert len(d.ghost()) == 5 and not d.constraints


def test_virtual_space_12_is_equality():
    d = virtual_space_of(S12)
    assert constraint_dicts(d) == [{"1345": 1, "2345": -1}]
    rng = random.Random(12)
    for _ in range(30):
        phi = embed_phi(plucker_of(witness_plane(require_structure(S12), rng.randrange(10 ** 6))))
        assert phi[(1, 3, 4, 5)] == phi[(2, 3, 4, 5)]
    explicit = embed_phi(plucker_of(Plane.from_rows([(1, 0), (2, 0), (1, 1), (1, 2), (1, 3)])))
    assert explicit[(1, 3, 4, 5)] == explicit[(2, 3, 4, 5)]


def test_json_encoding():
    out = virtual_space_of(TRIANGLE).to_json()
    assert out["forced"][0] == {"tuple": [1, 2, 3, 4], "value": "1"}
    assert out["free"] == [[1, 3, 4, 5], [2, 3, 4, 5]]
    assert out["constraints"] == [{"exponents": {"1345": 1, "2345": -1}}]


def test_inadmissible_rejected():
    with pytest.raises(ValueError):
        virtual_space_of(Signature.of(5, (1, 2), (1, 3)))


@pytest.mark.parametrize("n", [4, 5, 6])
def test_constraints_reduced_and_valid(n):
    rng = random.Random(n)
    for sig in enumerate_strata(n)[:: (1 if n < 6 else 5)]:
        d = virtual_space_of(sig)
        assert set(d.status) == set(CrossTuple.from_list(n, [0] * len(d.status)).values)
        for c in d.constraints:
            exps = [e for _, e in c.exponents]
            assert exps and gcd(*exps) == 1
        if d.ghost():
            x = limit_point(degenerating_family(sig, rng.randrange(10 ** 6))).limit_tuple
        else:
            x = embed_phi(plucker_of(witness_plane(require_structure(sig), rng.randrange(10 ** 6))))
        assert member_of_virtual(x, sig), (sig.label(), membership_failures(x, sig))


def test_membership_examples():
    half = gq(1) / 2
    assert member_of_virtual(CrossTuple.from_list(5, [1, 1, 1, half, half]), TRIANGLE)
    assert member_of_virtual(CrossTuple.from_list(5, [half, half, 1, 1, 1]), Signature.of(5, (4, 5)))
    good = CrossTuple.from_list(5, [0, 0, 3, 1, gq(1) / 3])
    assert member_of_virtual(good, S13)
    assert not member_of_virtual(CrossTuple.from_list(5, [0, 0, 1, 1, 1]), S13)
    assert not member_of_virtual(CrossTuple.from_list(5, [0, 0, 3, 1, 3]), S13)
    assert not member_of_virtual(CrossTuple.from_list(5, [1, 1, 1, half, 2]), TRIANGLE)
    with pytest.raises(ValueError, match="defined"):
        member_of_virtual(CrossTuple.from_list(5, [1, 1, 1, "undef", half]), TRIANGLE)


def test_triangle_parameter_may_be_special():
    for v in (0, 1, "inf"):
        assert member_of_virtual(CrossTuple.from_list(5, [1, 1, 1, v, v]), TRIANGLE)


def test_five_point_relations_hold_on_embeddings(rng):
    for n in (5, 6, 7):
        for _ in range(5):
            assert in_closure(embed_phi(plucker_of(random_main_plane(rng, n))))
    assert sum(1 for _ in five_point_residues(embed_phi(plucker_of(random_main_plane(rng, 6))))) == 6


def test_project_strong(pv5):
    phi = embed_phi(pv5)
    assert project_strong(phi, MAIN) == phi.ordered()
    x = CrossTuple.from_list(5, [0, 0, 3, 1, gq(1) / 3])
    assert project_strong(x, S13) == [ProjectivePoint(3), ProjectivePoint(gq(1) / 3)]
    fixed_member = limit_point(degenerating_family(FIXED, 1)).limit_tuple
    assert project_strong(fixed_member, FIXED) == []
    with pytest.raises(ValueError):
        project_strong(CrossTuple.from_list(5, [0, 0, 1, 1, 1]), S13)


def test_projection_is_orbit_invariant_and_separating(rng):
    for sig in enumerate_strata(5)[::6]:
        ps = require_structure(sig)
        a = plucker_of(witness_plane(ps, rng.randrange(10 ** 6)))
        b = plucker_of(witness_plane(ps, rng.randrange(10 ** 6)))
        moved = torus_act(random_torus(rng, 5), a)
        if virtual_space_of(sig).ghost():
            continue
        assert project_strong(embed_phi(a), sig) == project_strong(embed_phi(moved), sig)
        same = project_strong(embed_phi(a), sig) == project_strong(embed_phi(b), sig)
        assert same == same_orbit(a, b) == same_orbit_by_torus(a, b)


def test_same_orbit_examples(pv5):
    assert same_orbit(pv5, torus_act(random_torus(random.Random(1), 5), pv5))
    other = plucker_of(Plane.from_rows([(1, 0), (0, 1), (1, 1), (1, 2), (1, 3)]).times(((1, 0), (0, 1))))
    assert same_orbit(pv5, other)
    z23 = plucker_of(Plane.from_rows([(1, 0), (0, 1), (1, 1), (2, 1), (3, 1)]))
    assert not same_orbit(pv5, z23)
    par = plucker_of(Plane.from_rows([(1, 0), (0, 1), (1, 1), (1, 2), (1, 2)]))
    assert not same_orbit(pv5, par)
    with pytest.raises(ValueError):
        same_orbit(pv5, PluckerVector(4, {(1, 2): 1}))


def test_same_orbit_agrees_with_torus_reconstruction(rng):
    from grasstorus.grassmann import random_plane

    for _ in range(100):
        n = rng.randint(4, 6)
        a = plucker_of(random_plane(rng, n, bound=2))
        b = torus_act(random_torus(rng, n), a) if rng.random() < 0.5 else plucker_of(random_plane(rng, n, bound=2))
        torus_route = a.vanishing() == b.vanishing() and reconstruct_torus(a, b) is not None
        assert same_orbit(a, b) == torus_route


def test_orbit_class_defined_tuples(pv5):
    oc = orbit_class(PluckerVector(5, {(1, 2): 1, (1, 3): 1, (2, 3): 1}))
    assert oc.values == ()
    assert len(orbit_class(pv5).values) == 5


def test_containment_examples():
    assert check_containment(MAIN, W1, 6, 1)
    assert check_containment(MAIN, Y1, 6, 1)
    with pytest.raises(NotApplicable):
        check_containment(MAIN, S12, 6, 1)
    with pytest.raises(NotApplicable):
        check_containment(MAIN, MAIN, 6, 1)


def test_containment_along_boundary_faces():
    """Every proper face relation at n=5 carries virtual spaces inward."""
    from grasstorus.momentmap import admissible_polytope, is_face

    strata = enumerate_strata(5)
    checked = 0
    for outer in strata[::17]:
        po = admissible_polytope(outer)
        for inner in strata:
            pi = admissible_polytope(inner)
            if pi.vertices < po.vertices and is_face(po, pi.vertices):
                assert check_containment(outer, inner, 2, checked)
                checked += 1
    assert checked > 20


def test_negative_sign_constraints_hold():
    rng = random.Random(6)
    seen = nondegenerate = 0
    for sig in enumerate_strata(6):
        d = virtual_space_of(sig)
        if not any(c.sign == -1 for c in d.constraints):
            continue
        seen += 1
        for _ in range(2):
            if d.ghost():
                x = limit_point(degenerating_family(sig, rng.randrange(10 ** 6))).limit_tuple
            else:
                x = embed_phi(plucker_of(witness_plane(require_structure(sig), rng.randrange(10 ** 6))))
            assert all(c.holds(x) for c in d.constraints), sig.label()
            flipped = [c for c in d.constraints if c.sign == -1]
            for c in flipped:
                if all(not (x[t].is_zero() or x[t].is_infinity()) for t, _ in c.exponents):
                    assert not type(c)(c.exponents, 1).holds(x)
                    nondegenerate += 1
    assert seen > 0 and nondegenerate > 0
