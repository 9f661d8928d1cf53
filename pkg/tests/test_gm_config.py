import random

import pytest
from hypothesis import given, strategies as st

from grasstorus.crossratio import embed_phi, evaluate_cross_ratio, z_coordinates
from grasstorus.exact_scalar import ONE, ZERO, ProjectivePoint, gq
from grasstorus.gm_config import (
    PointConfiguration, affine_coordinates, apply_transform, config_of_plane,
    cross_ratio_of_points, cross_tuple_of_config, normalize_config, plane_of_config,
)
from grasstorus.grassmann import Plane, plucker_of, random_main_plane, random_scalar, random_torus
from grasstorus.param_space import same_orbit
from grasstorus.strata import ParallelStructure, witness_plane

seeds = st.integers(0, 10 ** 6)


def P(a, b=1):
    return ProjectivePoint(a, b)


W5_POINTS = (P(1, 0), P(0, 1), P(1, 1), P(1, 2), P(1, 3))


def test_config_of_plane_examples(w5):
    assert config_of_plane(w5).points == W5_POINTS
    ps = ParallelStructure(5, (), ((1,), (2,), (3,), (4, 5)))
    pts = config_of_plane(witness_plane(ps, 2)).points
    assert pts[3] == pts[4] and len(set(pts)) == 4
    with pytest.raises(ValueError, match="zero"):
        config_of_plane(Plane.from_rows([(1, 0), (0, 1), (0, 0)]))


def test_plane_of_config_examples(w5):
    cfg = PointConfiguration(5, W5_POINTS)
    plane = plane_of_config(cfg)
    assert all(a * d == b * c for (a, b), (c, d) in zip(plane.rows, w5.rows))
    assert config_of_plane(plane) == cfg
    with pytest.raises(ValueError):
        plane_of_config(PointConfiguration.of(*[P(1, 2)] * 4))
    rep = plucker_of(plane_of_config(PointConfiguration.of(P(1, 0), P(0, 1), P(1, 1), P(1, 2), P(1, 2))))
    assert rep.coords[(4, 5)] == 0


def test_normalize_examples(w5):
    cfg = config_of_plane(w5)
    normalized, g = normalize_config(cfg)
    assert normalized == cfg
    assert g == ((ONE, ZERO), (ZERO, ONE))
    assert affine_coordinates(cfg) == [gq(1) / 2, gq(1) / 3] == z_coordinates(plucker_of(w5))


def test_normalize_swap():
    cfg = PointConfiguration.of(P(0, 1), P(1, 0), P(1, 1), P(1, 2))
    normalized, g = normalize_config(cfg)
    assert normalized.points[:3] == (P(1, 0), P(0, 1), P(1, 1))
    assert normalized.points[3] == P(2)
    w = evaluate_cross_ratio(plucker_of(plane_of_config(cfg)), (1, 2, 3, 4))
    assert cross_ratio_of_points(*normalized.points) == w == P(2)


def test_normalize_rejects_degenerate_triple():
    with pytest.raises(ValueError):
        normalize_config(PointConfiguration.of(P(1, 0), P(1, 0), P(1, 1), P(1, 2)))


def test_cross_ratio_of_points_examples():
    z = gq(7, -2) / 3
    assert cross_ratio_of_points(P(1, 0), P(0, 1), P(1, 1), P(z)) == P(z)
    assert cross_ratio_of_points(P(1, 0), P(0, 1), P(5), P(5)) == P(1)
    assert cross_ratio_of_points(P(3), P(0, 1), P(3), P(5)) == P(0)
    assert cross_ratio_of_points(P(3), P(3), P(3), P(5)) is None


@given(seeds)
def test_round_trip(seed):
    rng = random.Random(seed)
    plane = random_main_plane(rng, 6)
    cfg = config_of_plane(plane)
    assert config_of_plane(plane_of_config(cfg)) == cfg
    assert PointConfiguration.from_json(cfg.to_json()) == cfg


@given(seeds)
def test_cross_ratio_is_mobius_invariant(seed):
    rng = random.Random(seed)
    pts = [P(random_scalar(rng), random_scalar(rng, nonzero=True)) for _ in range(4)]
    g = ((random_scalar(rng), random_scalar(rng)), (random_scalar(rng), random_scalar(rng)))
    if not g[0][0] * g[1][1] - g[0][1] * g[1][0]:
        return
    moved = apply_transform(g, PointConfiguration.of(*pts)).points
    assert cross_ratio_of_points(*moved) == cross_ratio_of_points(*pts)


@given(seeds, st.integers(4, 7))
def test_point_cross_ratios_match_plucker(seed, n):
    plane = random_main_plane(random.Random(seed), n)
    assert cross_tuple_of_config(config_of_plane(plane)) == embed_phi(plucker_of(plane))


@given(seeds, st.integers(4, 7))
def test_affine_coordinates_are_z(seed, n):
    plane = random_main_plane(random.Random(seed), n)
    normalized, g = normalize_config(config_of_plane(plane))
    assert normalized.points[:3] == (P(1, 0), P(0, 1), P(1, 1))
    assert affine_coordinates(config_of_plane(plane)) == z_coordinates(plucker_of(plane))


@given(seeds)
def test_orbits_match_normalized_configurations(seed):
    rng = random.Random(seed)
    a = random_main_plane(rng, 5)
    b = random_torus(rng, 5).act_on_plane(a) if rng.random() < 0.5 else random_main_plane(rng, 5)
    same_config = normalize_config(config_of_plane(a))[0] == normalize_config(config_of_plane(b))[0]
    assert same_config == same_orbit(plucker_of(a), plucker_of(b))
