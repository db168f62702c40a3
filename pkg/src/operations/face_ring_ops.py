"""Stanley-Reisner rings and their Artinian reductions.

This module handles:
- monomial_basis / hilbert_dim: graded pieces of k[Δ] (monomials supported on faces)
- artinian_reduction: quotient by random linear forms, certified by the facet-rank test
- multiplication_rank: rank of ·ω^e between graded pieces of a reduction
- is_k_rigid / rigidity_union_dims: injectivity of ·θ_i from degree 1 to degree 2
- lefschetz_check: hard Lefschetz ranks for a homology sphere
- boundary_cone_ideal_dims: kernel of k(Γ) -> k(Σ) for the coned-off boundary

Relations in degree q are spanned by θ·m for basis monomials m of degree q-1.
Multiplying a monomial by x_v either leaves k[Δ] (support not a face) or lands on a
distinct basis monomial, so every multiplication matrix has at most one entry
per (vertex, monomial) pair.
"""

import itertools
from collections.abc import Sequence
from functools import lru_cache

import numpy as np

from src.exceptions import (
    BadParams,
    DegreeOutOfRange,
    DimensionTooSmall,
    EmptyBoundary,
    FieldTooSmall,
    GenericityFailure,
    HilbertMismatch,
    NotAHomologySphere,
)
from src.models.schemas import (
    CheckReport,
    FieldSpec,
    GradedQuotient,
    RigidityReport,
    SimplicialComplex,
    UnionRigidityReport,
)
from src.operations.complex_ops import all_faces, connected_components, f_vector
from src.operations.field_ops import (
    MatrixOverField,
    get_field,
    hstack,
    image_dim_mod,
    matmul,
    rank,
)
from src.operations.homology_ops import betti
from src.operations.manifold_ops import boundary_complex
from src.operations.vector_ops import binom, f_to_h
from src.utils.config import settings
from src.utils.log import get_logger
from src.utils.timing import timing

Monomial = tuple[int, ...]


# ---------------------------------------------------------------------------
# Monomial bases
# ---------------------------------------------------------------------------


@lru_cache(maxsize=256)
def _basis(complex_: SimplicialComplex, degree: int) -> tuple[Monomial, ...]:
    if degree == 0:
        return ((),)
    found = []
    for face in all_faces(complex_):
        if len(face) > degree:
            continue
        for extra in itertools.combinations_with_replacement(face, degree - len(face)):
            found.append(tuple(sorted(face + extra)))
    return tuple(sorted(found))


@lru_cache(maxsize=256)
def _index(complex_: SimplicialComplex, degree: int) -> dict[Monomial, int]:
    return {mono: i for i, mono in enumerate(_basis(complex_, degree))}


def monomial_basis(complex_: SimplicialComplex, degree: int) -> list[Monomial]:
    """Degree-q monomials of k[Δ] as sorted vertex-id multisets, lexicographically ordered.

    Degree 0 gives [()], the monomial 1.

    Raises:
        DegreeOutOfRange: If degree < 0
    """
    if degree < 0:
        raise DegreeOutOfRange(f"degree must be >= 0 (got {degree})")
    return list(_basis(complex_, degree))


def hilbert_dim(complex_: SimplicialComplex, degree: int, field: FieldSpec | None = None) -> int:
    """dim k[Δ]_q, cross-checked against Σ_j h_j C(q-j+d-1, d-1).

    The dimension does not depend on the field.

    Raises:
        DegreeOutOfRange: If degree < 0
        HilbertMismatch: If the monomial count disagrees with the h-vector formula
    """
    count = len(monomial_basis(complex_, degree))
    d = complex_.d
    if d == 0:
        return count
    h = f_to_h(f_vector(complex_), d)
    expected = sum(h[j] * binom(degree - j + d - 1, d - 1) for j in range(d + 1))
    if count != expected:
        raise HilbertMismatch(
            f"degree {degree}: {count} monomials but the h-vector predicts {expected}"
        )
    return count


# ---------------------------------------------------------------------------
# Relation matrices
# ---------------------------------------------------------------------------


def _multiplication_matrix(
    complex_: SimplicialComplex, degree: int, coefficients: Sequence[int], field: FieldSpec
) -> MatrixOverField:
    """Matrix of multiplication by Σ c_v x_v from degree q to degree q+1."""
    source = _basis(complex_, degree)
    target = _index(complex_, degree + 1)
    data = np.zeros((len(target), len(source)), dtype=np.int64)
    support = [v for v in range(1, complex_.n + 1) if coefficients[v - 1]]
    for col, mono in enumerate(source):
        for v in support:
            row = target.get(tuple(sorted(mono + (v,))))
            if row is not None:
                data[row, col] = coefficients[v - 1]
    return MatrixOverField(field, data)


def _relations(
    complex_: SimplicialComplex, forms: np.ndarray, degree: int, field: FieldSpec
) -> MatrixOverField:
    """Columns spanning (θ_1, ..., θ_r)_q inside k[Δ]_q."""
    rows = len(_basis(complex_, degree))
    if degree == 0 or len(forms) == 0:
        return MatrixOverField.zeros(rows, 0, field)
    blocks = [_multiplication_matrix(complex_, degree - 1, form, field) for form in forms]
    return hstack(*blocks)


def quotient_dims_after(
    complex_: SimplicialComplex, forms: np.ndarray, field: FieldSpec, max_degree: int
) -> list[int]:
    """dim (k[Δ]/(forms))_q for q = 0..max_degree."""
    return [
        len(_basis(complex_, q)) - rank(_relations(complex_, forms, q, field))
        for q in range(max_degree + 1)
    ]


# ---------------------------------------------------------------------------
# Generic linear forms
# ---------------------------------------------------------------------------


def _require_large_field(field: FieldSpec) -> None:
    if field.q < settings.min_generic_field_size:
        raise FieldTooSmall(
            f"GF({field}) has {field.q} elements; generic forms need at least "
            f"{settings.min_generic_field_size}"
        )


def _facet_ranks_full(complex_: SimplicialComplex, forms: np.ndarray, field: FieldSpec) -> bool:
    """Kind-Kleinschmidt: each facet's column block of the first d forms has full rank."""
    theta = forms[: complex_.d]
    for facet in complex_.facets:
        block = theta[:, [v - 1 for v in facet]]
        if rank(MatrixOverField(field, block)) != len(facet):
            return False
    return True


def _draw_forms(
    complex_: SimplicialComplex, field: FieldSpec, seed: int, count: int
) -> tuple[np.ndarray, int]:
    """Random forms (count x n) whose first d rows pass the facet-rank test.

    Raises:
        GenericityFailure: If every attempt fails
    """
    logger = get_logger()
    gf = get_field(field)
    rng = np.random.default_rng(seed)
    for attempt in range(1, settings.genericity_retries + 1):
        forms = gf.random(rng, (count, complex_.n))
        if _facet_ranks_full(complex_, forms, field):
            return forms, attempt
        logger.warning(
            f"Linear forms failed the facet-rank test (seed {seed}, attempt {attempt}); redrawing"
        )
    raise GenericityFailure(
        f"no l.s.o.p. found in {settings.genericity_retries} attempts (seed {seed}, GF({field}))"
    )


def artinian_reduction(
    complex_: SimplicialComplex,
    field: FieldSpec,
    seed: int,
    count: int | None = None,
    omega: bool = False,
) -> GradedQuotient:
    """k[Δ]/(θ_1, ..., θ_count) for seeded random forms, degrees 0..d.

    Args:
        complex_: The complex
        field: Coefficient field with at least min_generic_field_size elements
        seed: Seed of the form generator
        count: Number of forms, d (default) or d + 1
        omega: Also draw one more generic form, kept out of the quotient

    Raises:
        FieldTooSmall: If the field is too small for genericity
        GenericityFailure: If no certified system of parameters is found
        BadParams: If count is neither d nor d + 1
    """
    _require_large_field(field)
    d = complex_.d
    count = d if count is None else count
    if count not in (d, d + 1):
        raise BadParams(f"form count must be d={d} or d+1 (got {count})")
    forms, attempts = _draw_forms(complex_, field, seed, count + (1 if omega else 0))
    theta = forms[:count]
    with timing(
        f"Artinian reduction ({complex_.n} vertices, d={d}, GF({field}), seed {seed})",
        log_threshold_ms=settings.timing_log_threshold_ms,
    ):
        dims = quotient_dims_after(complex_, theta, field, d)
    return GradedQuotient(
        complex=complex_,
        field=field,
        seed=seed,
        attempts=attempts,
        forms=theta.tolist(),
        omega=forms[count].tolist() if omega else None,
        dims=dims,
        lsop_certificate=True,
    )


def multiplication_rank(quotient: GradedQuotient, power: int, degree: int) -> tuple[int, int]:
    """Rank and kernel dimension of ·ω^e : Q_q -> Q_{q+e}.

    Raises:
        BadParams: If the quotient was built without ω
        DegreeOutOfRange: If q < 0, e < 0 or q + e exceeds the stored degrees
    """
    if quotient.omega is None:
        raise BadParams("multiplication_rank needs a quotient built with omega=True")
    if degree < 0 or power < 0 or degree + power > quotient.max_degree:
        raise DegreeOutOfRange(
            f"·ω^{power} from degree {degree} leaves 0..{quotient.max_degree}"
        )
    complex_, field = quotient.complex, quotient.field
    omega = np.array(quotient.omega, dtype=np.int64)
    image = MatrixOverField(field, np.eye(len(_basis(complex_, degree)), dtype=np.int64))
    for step in range(power):
        image = matmul(_multiplication_matrix(complex_, degree + step, omega, field), image)
    forms = np.array(quotient.forms, dtype=np.int64).reshape(len(quotient.forms), complex_.n)
    relations = _relations(complex_, forms, degree + power, field)
    value = image_dim_mod(image, relations)
    return value, quotient.dims[degree] - value


# ---------------------------------------------------------------------------
# Rigidity and Lefschetz
# ---------------------------------------------------------------------------


def is_k_rigid(complex_: SimplicialComplex, field: FieldSpec, seed: int) -> RigidityReport:
    """Injectivity of ·θ_i : (k[Δ]/(θ_1..θ_{i-1}))_1 -> (...)_2 for i = 1..d+1.

    Raises:
        FieldTooSmall: If the field is too small for genericity
        DimensionTooSmall: If d < 2 (there is no degree-2 rigidity question)
        GenericityFailure: If no certified forms are found
    """
    _require_large_field(field)
    d = complex_.d
    if d < 2:
        raise DimensionTooSmall(f"rigidity needs d >= 2 (got {d})")
    forms, _ = _draw_forms(complex_, field, seed, d + 1)
    n1 = len(_basis(complex_, 1))
    n2 = len(_basis(complex_, 2))
    step_ranks: list[int] = []
    step_kernels: list[int] = []
    first_failing = None
    relations_2 = MatrixOverField.zeros(n2, 0, field)
    dim2_after_d = n2
    with timing(
        f"rigidity steps ({complex_.n} vertices, d={d}, GF({field}), seed {seed})",
        log_threshold_ms=settings.timing_log_threshold_ms,
    ):
        for i in range(1, d + 2):
            domain = n1 - rank(MatrixOverField(field, forms[: i - 1].T.copy()))
            multiply = _multiplication_matrix(complex_, 1, forms[i - 1], field)
            step_rank = image_dim_mod(multiply, relations_2)
            step_ranks.append(step_rank)
            step_kernels.append(domain - step_rank)
            if domain != step_rank and first_failing is None:
                first_failing = i
            relations_2 = hstack(relations_2, multiply)
            if i == d:
                dim2_after_d = n2 - rank(relations_2)
        dim2_after_d_plus_1 = n2 - rank(relations_2)
    return RigidityReport(
        field=str(field),
        seed=seed,
        rigid=first_failing is None,
        step_ranks=step_ranks,
        step_kernels=step_kernels,
        first_failing_step=first_failing,
        dim2_after_d=dim2_after_d,
        dim2_after_d_plus_1=dim2_after_d_plus_1,
    )


def rigidity_union_dims(
    complex_: SimplicialComplex, field: FieldSpec, seed: int
) -> UnionRigidityReport:
    """Measured dim (k[Δ]/Θ)_2 and ker(·ω : degree 1 -> 2) for a disjoint union of b pieces.

    Expected values for rigid pieces: h_2(Δ) + C(d,2)(b-1) and d(b-1).

    Raises:
        DimensionTooSmall: If d < 2
    """
    d = complex_.d
    if d < 2:
        raise DimensionTooSmall(f"union rigidity needs d >= 2 (got {d})")
    b = len(connected_components(complex_))
    quotient = artinian_reduction(complex_, field, seed, omega=True)
    _, kernel = multiplication_rank(quotient, 1, 1)
    h = f_to_h(f_vector(complex_), d)
    return UnionRigidityReport(
        components=b,
        dim2=quotient.dims[2],
        expected_dim2=h[2] + binom(d, 2) * (b - 1),
        omega_kernel=kernel,
        expected_omega_kernel=d * (b - 1),
    )


def lefschetz_check(sphere: SimplicialComplex, field: FieldSpec, seed: int) -> CheckReport:
    """·ω^{d-2i} : Q_i -> Q_{d-i} is bijective for every i <= d/2.

    A pass certifies the property at this seed only.

    Raises:
        NotAHomologySphere: If the reduced Betti numbers are not those of a sphere
    """
    d = sphere.d
    expected = [0] * d + [1]
    if sphere.n == 0 or betti(sphere, field) != expected:
        raise NotAHomologySphere("Lefschetz check needs the Betti numbers of a sphere")
    quotient = artinian_reduction(sphere, field, seed, omega=True)
    indices = list(range(d // 2 + 1))
    ranks = []
    residuals = []
    for i in indices:
        value, _ = multiplication_rank(quotient, d - 2 * i, i)
        ranks.append(value)
        residuals.append((quotient.dims[i] - value) + (quotient.dims[d - i] - value))
    return CheckReport.from_residuals(
        "lefschetz",
        residuals,
        indices=indices,
        context={"field": str(field), "seed": seed, "dims": quotient.dims, "ranks": ranks},
    )


def boundary_cone_ideal_dims(
    complex_: SimplicialComplex, field: FieldSpec, seed: int
) -> CheckReport:
    """dim I_1 and dim I_2 for I = ker(k(Γ) -> k(Σ)).

    Γ is Δ with every boundary component coned off and Σ is the union of those
    cones; both are reduced by the same generic forms. Asserts dim I_1 = f_0°(Δ)
    (the residual) and dim I_1 + d β̃_0(∂Δ) <= dim I_2.

    Raises:
        EmptyBoundary: If Δ has no boundary
        FieldTooSmall: If the field is too small for genericity
    """
    from src.operations.generator_ops import cone_off_boundary

    _require_large_field(field)
    boundary = boundary_complex(complex_, field)
    if boundary.n == 0:
        raise EmptyBoundary("coning off the boundary needs a nonempty boundary")
    d = complex_.d
    gamma, sigma = cone_off_boundary(complex_, field)
    forms, _ = _draw_forms(gamma, field, seed, d)
    lookup = gamma.label_map
    restricted = forms[:, [lookup[label] - 1 for label in sigma.labels]]
    gamma_dims = quotient_dims_after(gamma, forms, field, 2)
    sigma_dims = quotient_dims_after(sigma, restricted, field, 2)
    dim_i1 = gamma_dims[1] - sigma_dims[1]
    dim_i2 = gamma_dims[2] - sigma_dims[2]
    interior = complex_.n - boundary.n
    beta0 = len(connected_components(boundary)) - 1
    return CheckReport.from_residuals(
        "boundary_cone_ideal",
        [dim_i1 - interior],
        indices=[1],
        assertions={"ideal_growth": dim_i1 + d * beta0 <= dim_i2},
        context={
            "dim_I1": dim_i1,
            "dim_I2": dim_i2,
            "interior_vertices": interior,
            "boundary_components": beta0 + 1,
            "seed": seed,
        },
    )
