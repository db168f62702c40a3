"""Reduced and relative simplicial homology over finite fields.

This module handles chain-level computations:
- boundary_matrix: augmented boundary maps with lexicographic face order
- betti / betti_relative: Betti numbers from boundary ranks
- im_psi: image of H_{i-1}(Δ) in H_{i-1}(Δ, ∂Δ) by subspace arithmetic
- les_identity_check: long exact sequence identity for the pair (Δ, ∂Δ)
- betti_profile / chain_condition
"""

import itertools
from functools import lru_cache

import numpy as np

from src.exceptions import BadDimension, BadIndex, EmptyBoundary, NotASubcomplex
from src.models.schemas import BettiProfile, CheckReport, Face, FieldSpec, SimplicialComplex
from src.operations.complex_ops import faces, is_subcomplex, label_facets
from src.operations.field_ops import (
    MatrixOverField,
    hstack,
    image_dim_mod,
    kernel_basis,
    matmul,
    rank,
)


def _boundary_data(complex_: SimplicialComplex, i: int, field: FieldSpec) -> np.ndarray:
    """∂_i as an array; i = dim + 1 gives the zero map from C_{dim+1} = 0."""
    rows = faces(complex_, i - 1)
    cols = faces(complex_, i) if i <= complex_.dim else ()
    index = {face: r for r, face in enumerate(rows)}
    data = np.zeros((len(rows), len(cols)), dtype=np.int64)
    minus_one = field.p - 1
    for c, face in enumerate(cols):
        for j in range(len(face)):
            data[index[face[:j] + face[j + 1:]], c] = 1 if j % 2 == 0 else minus_one
    return data


def boundary_matrix(complex_: SimplicialComplex, i: int, field: FieldSpec) -> MatrixOverField:
    """Matrix of ∂_i : C_i -> C_{i-1} (augmented: ∂_0 maps every vertex to ∅).

    Args:
        complex_: The complex
        i: Chain degree, -1 <= i <= dim
        field: Coefficient field

    Returns:
        f_{i-1} x f_i matrix with rows/cols in lexicographic face order

    Raises:
        BadDimension: If i is out of range
    """
    if not -1 <= i <= complex_.dim:
        raise BadDimension(f"boundary degree {i} outside [-1, {complex_.dim}]")
    return MatrixOverField(field, _boundary_data(complex_, i, field))


@lru_cache(maxsize=4096)
def _betti(complex_: SimplicialComplex, field: FieldSpec) -> tuple[int, ...]:
    ranks = {
        i: rank(MatrixOverField(field, _boundary_data(complex_, i, field)))
        for i in range(0, complex_.dim + 2)
    }
    ranks[-1] = 0
    return tuple(
        len(faces(complex_, i)) - ranks[i] - ranks[i + 1] for i in range(-1, complex_.dim + 1)
    )


def betti(complex_: SimplicialComplex, field: FieldSpec) -> list[int]:
    """Reduced Betti numbers β̃_{-1}, ..., β̃_{d-1}.

    The complex {∅} has β̃_{-1} = 1; every complex with a vertex has β̃_{-1} = 0.
    """
    return list(_betti(complex_, field))


def _faces_of_sub(sub: SimplicialComplex, complex_: SimplicialComplex) -> set[Face]:
    """Faces of `sub` (including ∅ when sub has a vertex) as vertex ids of `complex_`."""
    lookup = complex_.label_map
    found: set[Face] = set()
    for facet in label_facets(sub):
        ids = tuple(sorted(lookup[v] for v in facet))
        for size in range(1, len(ids) + 1):
            found.update(itertools.combinations(ids, size))
    if sub.n:
        found.add(())
    return found


def _relative_betti(
    complex_: SimplicialComplex, sub_faces: set[Face], field: FieldSpec
) -> list[int]:
    keep = {k: [f for f in faces(complex_, k) if f not in sub_faces] for k in range(-1, complex_.d)}
    keep[complex_.d] = []

    def rel_rank(k: int) -> int:
        rows, cols = keep[k - 1], keep[k]
        if not rows or not cols:
            return 0
        row_index = {f: r for r, f in enumerate(faces(complex_, k - 1))}
        col_index = {f: c for c, f in enumerate(faces(complex_, k))}
        full = _boundary_data(complex_, k, field)
        block = full[np.ix_([row_index[f] for f in rows], [col_index[f] for f in cols])]
        return rank(MatrixOverField(field, block))

    ranks = {k: rel_rank(k) for k in range(0, complex_.d + 1)}
    ranks[-1] = 0
    return [len(keep[k]) - ranks[k] - ranks[k + 1] for k in range(-1, complex_.d)]


def betti_relative(
    complex_: SimplicialComplex, sub: SimplicialComplex, field: FieldSpec
) -> list[int]:
    """Betti numbers of C_*(Δ)/C_*(B) for degrees -1..d-1.

    With B = {∅} (no vertices) the quotient is the augmented complex of Δ and the
    result equals betti(Δ); otherwise ∅ ∈ B and this is ordinary relative homology.

    Raises:
        NotASubcomplex: If B is not a subcomplex of Δ (compared by original labels)
    """
    if not is_subcomplex(sub, complex_):
        raise NotASubcomplex("second argument is not a subcomplex")
    return _relative_betti(complex_, _faces_of_sub(sub, complex_), field)


def im_psi(
    complex_: SimplicialComplex, boundary: SimplicialComplex, i: int, field: FieldSpec
) -> int:
    """dim Im(H_{i-1}(Δ) -> H_{i-1}(Δ, ∂Δ)), reduced homology throughout.

    Computed as dim((Z_{i-1} + Brel) / Brel) with Brel = ∂C_i(Δ) + C_{i-1}(∂Δ).

    Raises:
        BadIndex: If i is outside 1..d
    """
    if not 1 <= i <= complex_.d:
        raise BadIndex(f"im_psi index {i} outside [1, {complex_.d}]")
    if boundary.n == 0:
        return betti(complex_, field)[i]
    k = i - 1
    cycles = kernel_basis(boundary_matrix(complex_, k, field))
    boundaries = MatrixOverField(field, _boundary_data(complex_, k + 1, field))
    sub_faces = _faces_of_sub(boundary, complex_)
    level = faces(complex_, k)
    units = np.zeros((len(level), 0), dtype=np.int64)
    chosen = [r for r, f in enumerate(level) if f in sub_faces]
    if chosen:
        units = np.zeros((len(level), len(chosen)), dtype=np.int64)
        units[chosen, np.arange(len(chosen))] = 1
    relative = hstack(boundaries, MatrixOverField(field, units))
    return image_dim_mod(cycles, relative)


def at_degree(values: list[int], degree: int) -> int:
    """Entry for `degree` of a list that starts at degree -1; zero outside."""
    k = degree + 1
    return values[k] if 0 <= k < len(values) else 0


def les_identity_check(
    complex_: SimplicialComplex,
    field: FieldSpec,
    boundary: SimplicialComplex | None = None,
) -> CheckReport:
    """Check Σ_{j<i} (-1)^{j-i-1}[β_j(Δ,∂Δ) - β̃_{j-1}(∂Δ) + β̃_{j-1}(Δ)] = dim Im ψ_i, i = 1..d.

    Raises:
        EmptyBoundary: If Δ has no boundary
    """
    if boundary is None:
        from src.operations.manifold_ops import boundary_complex

        boundary = boundary_complex(complex_, field)
    if boundary.n == 0:
        raise EmptyBoundary("long exact sequence check needs a nonempty boundary")
    beta = betti(complex_, field)
    beta_b = betti(boundary, field)
    beta_rel = betti_relative(complex_, boundary, field)
    residuals = []
    psi = []
    for i in range(1, complex_.d + 1):
        total = sum(
            (-1) ** (i - j + 1) * (at_degree(beta_rel, j) - at_degree(beta_b, j - 1) + at_degree(beta, j - 1))
            for j in range(i)
        )
        image = im_psi(complex_, boundary, i, field)
        psi.append(image)
        residuals.append(total - image)
    return CheckReport.from_residuals(
        "les_identity",
        residuals,
        indices=list(range(1, complex_.d + 1)),
        context={"field": str(field), "im_psi": psi, "beta_relative": beta_rel[1:]},
    )


def betti_profile(
    complex_: SimplicialComplex,
    field: FieldSpec,
    boundary: SimplicialComplex | None = None,
) -> BettiProfile:
    """Betti data of Δ, ∂Δ and the pair; a missing or vertex-free boundary means closed."""
    beta = betti(complex_, field)
    if boundary is None or boundary.n == 0:
        return BettiProfile(field=str(field), beta=beta, im_psi=beta[1:])
    beta_b = betti(boundary, field)
    return BettiProfile(
        field=str(field),
        beta=beta,
        beta_boundary=[at_degree(beta_b, k) for k in range(-1, complex_.d - 1)],
        beta_relative=betti_relative(complex_, boundary, field)[1:],
        im_psi=[im_psi(complex_, boundary, i, field) for i in range(1, complex_.d + 1)],
    )


def chain_condition(complex_: SimplicialComplex, field: FieldSpec) -> bool:
    """True iff ∂_i ∘ ∂_{i+1} = 0 for every i."""
    for i in range(0, complex_.dim):
        product = matmul(boundary_matrix(complex_, i, field), boundary_matrix(complex_, i + 1, field))
        if product.data.any():
            return False
    return True
