"""Exact computations with torus orbits on the Grassmannian G(n,2).

Strata of vanishing Plücker coordinates, their moment polytopes, cross-ratio
coordinates on orbit spaces, virtual parameter spaces and their behaviour
under one-parameter degenerations.  All arithmetic is exact over Q(i).
"""

from .crossratio import CrossTuple, classify_cross_ratio, embed_phi, evaluate_cross_ratio
from .degeneration import LaurentPlane, continuity_check, limit_point, plucker_laurent
from .exact_scalar import GaussianRational, LaurentScalar, ProjectivePoint, gq
from .gm_config import PointConfiguration, config_of_plane, cross_ratio_of_points, normalize_config, plane_of_config
from .grassmann import Plane, PluckerVector, TorusElement, plucker_of, reconstruct_torus, torus_act
from .momentmap import admissible_polytope, moment_map
from .param_space import check_containment, member_of_virtual, project_strong, same_orbit, virtual_space_of
from .strata import Signature, enumerate_strata, parallel_structure_of, signature_of, stabilizer_lattice

__version__ = "0.1.0"

__all__ = [
    "CrossTuple", "GaussianRational", "LaurentPlane", "LaurentScalar", "Plane", "PluckerVector",
    "PointConfiguration", "ProjectivePoint", "Signature", "TorusElement", "admissible_polytope",
    "check_containment", "classify_cross_ratio", "config_of_plane", "continuity_check",
    "cross_ratio_of_points", "embed_phi", "enumerate_strata", "evaluate_cross_ratio", "gq",
    "limit_point", "member_of_virtual", "moment_map", "normalize_config", "parallel_structure_of",
    "plane_of_config", "plucker_laurent", "plucker_of", "project_strong", "reconstruct_torus",
    "same_orbit", "signature_of", "stabilizer_lattice", "torus_act", "virtual_space_of",
]
