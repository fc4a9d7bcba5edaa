"""Braid twists on cyclic branched covers of the disk, as groupoid functors.

Submodules: ``groupoid`` (free groupoids, functors), ``braid`` (braid
words), ``covering`` (disk and cover groupoids, lifted twists),
``ribbon`` (ribbon graphs), ``polygon`` (two-vertex polygon model),
``invariants`` (Riemann–Hurwitz arithmetic), ``operad`` (framed little
disks) and ``cli``.
"""

from .braid import BraidWord, braid_relators, delta, evaluate_braid, reduce_braid
from .covering import (
    build_cover_groupoid,
    build_disk_groupoid,
    deck_transformation,
    half_twist_functor,
    lifted_twist_functor,
    projection_functor,
    verify_cube_failure,
    verify_relations,
)
from .groupoid import (
    FreeGroupoid,
    GroupoidFunctor,
    PathWord,
    compose_functors,
    conjugate_support_check,
    functor_equal,
    identity_functor,
    reduce_path,
    support_of,
)
from .invariants import SurfaceInvariants, genus_dm, rh_invariants
from .report import VerificationReport
from .ribbon import RibbonGraph, build_cover_ribbon, faces, surface_invariants

__version__ = "0.1.0"
