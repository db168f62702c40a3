"""Face-number operations - public API.

This module re-exports the main entry points of the split modules. Import from
here for the public API.

Operations are organized internally by layer:
- field_ops: finite fields and exact linear algebra
- complex_ops: canonical complexes, faces, links, the .fct format
- homology_ops: boundary matrices, Betti numbers, relative homology
- manifold_ops: homology-manifold recognition, boundary, orientability
- vector_ops: face-vector transforms, identities and inequalities
- face_ring_ops: Artinian reductions, rigidity, Lefschetz ranks
- generator_ops: families, constructions, fixture catalog
- check_ops: the composed check kinds
"""

# Fields and complexes
from src.operations.complex_ops import build_from_facets, f_vector, link, read_fct, write_fct
from src.operations.field_ops import parse_field_spec

# Homology and manifolds
from src.operations.homology_ops import betti, betti_relative, im_psi
from src.operations.manifold_ops import boundary_complex, is_homology_manifold, is_orientable

# Face vectors
from src.operations.vector_ops import f_to_h, h_dprime_closed, h_prime, h_to_f, mk_reference

# Face rings
from src.operations.face_ring_ops import artinian_reduction, is_k_rigid, lefschetz_check

# Generators and checks
from src.operations.generator_ops import generate, load_fixture
from src.operations.check_ops import face_vector_set, run_checks

__all__ = [
    # Fields and complexes
    "build_from_facets",
    "f_vector",
    "link",
    "parse_field_spec",
    "read_fct",
    "write_fct",
    # Homology and manifolds
    "betti",
    "betti_relative",
    "boundary_complex",
    "im_psi",
    "is_homology_manifold",
    "is_orientable",
    # Face vectors
    "f_to_h",
    "h_dprime_closed",
    "h_prime",
    "h_to_f",
    "mk_reference",
    # Face rings
    "artinian_reduction",
    "is_k_rigid",
    "lefschetz_check",
    # Generators and checks
    "face_vector_set",
    "generate",
    "load_fixture",
    "run_checks",
]
