"""Composed checks behind `check <kind>` and the catalog flow.

This module handles:
- face_vector_set: f, h, g, interior vectors, β̃, h′, h″ and ḡ of one complex
- run_checks: every checker of one kind (manifold, ds, schenzel, bounds, rigidity,
  h2, lefschetz) or all applicable kinds

Face-ring checks need a field with at least min_generic_field_size elements; smaller
fields are replaced by the smallest such extension of the same characteristic.
"""

from dataclasses import dataclass
from functools import cached_property

from src.exceptions import (
    BadParams,
    BettiPreconditionViolated,
    DimensionTooSmall,
    Disconnected,
    EmptyBoundary,
    FaceNumbersError,
    FieldTooSmall,
    NotAHomologySphere,
    NotAManifold,
    WrongParity,
)
from src.models.schemas import (
    CheckReport,
    FaceVectorSet,
    FieldSpec,
    ManifoldReport,
    SimplicialComplex,
)
from src.operations.complex_ops import (
    connected_components,
    f_vector,
    link,
    neighborliness,
    reduced_euler,
)
from src.operations.face_ring_ops import (
    artinian_reduction,
    boundary_cone_ideal_dims,
    is_k_rigid,
    lefschetz_check,
    rigidity_union_dims,
)
from src.operations.field_ops import generic_extension
from src.operations.homology_ops import betti, im_psi, les_identity_check
from src.operations.manifold_ops import is_homology_manifold
from src.operations.vector_ops import (
    boundary_duality_residual,
    ds_boundary_residual,
    ds_closed_residual,
    f_to_h,
    g_vector,
    gbar,
    h2_boundary_check,
    h_dprime_boundary,
    h_dprime_closed,
    h_prime,
    hprime_ds_residual,
    hprime_growth_check,
    hprime_surjectivity_check,
    kalai_comparison,
    kalai_monotonicity_check,
    kuhnel_general_check,
    kuhnel_middle_check,
    macaulay_bounds,
)
from src.utils.log import get_logger

CHECK_KINDS = ("manifold", "ds", "schenzel", "bounds", "rigidity", "h2", "lefschetz")

# Raised when a kind does not apply to the complex; "all" skips such kinds.
PRECONDITION_ERRORS = (
    NotAManifold,
    EmptyBoundary,
    DimensionTooSmall,
    Disconnected,
    NotAHomologySphere,
    WrongParity,
    BettiPreconditionViolated,
    FieldTooSmall,
)


@dataclass
class CheckContext:
    """Lazily computed invariants of one complex over one field."""

    complex: SimplicialComplex
    field: FieldSpec
    seed: int = 0

    @cached_property
    def manifold(self) -> ManifoldReport:
        return is_homology_manifold(self.complex, self.field)

    @property
    def d(self) -> int:
        return self.complex.d

    @property
    def boundary(self) -> SimplicialComplex:
        return self.manifold.boundary

    @property
    def closed(self) -> bool:
        return self.manifold.closed

    @cached_property
    def generic_field(self) -> FieldSpec:
        lifted = generic_extension(self.field)
        if lifted != self.field:
            get_logger().info(f"Face-ring checks over GF({lifted}) instead of GF({self.field})")
        return lifted

    @cached_property
    def betti(self) -> list[int]:
        """β̃_0..β̃_{d-1}."""
        return betti(self.complex, self.field)[1:]

    @cached_property
    def f(self) -> list[int]:
        return f_vector(self.complex)

    @cached_property
    def h(self) -> list[int]:
        return f_to_h(self.f, self.d)

    @cached_property
    def h_prime(self) -> list[int]:
        return h_prime(self.h, self.betti, self.d)

    @cached_property
    def boundary_betti(self) -> list[int]:
        """β̃_0..β̃_{d-2} of ∂Δ."""
        return betti(self.boundary, self.field)[1:]

    @cached_property
    def boundary_h(self) -> list[int]:
        return f_to_h(f_vector(self.boundary), self.d - 1)

    @cached_property
    def gbar(self) -> list[int]:
        hp = h_prime(self.boundary_h, self.boundary_betti, self.d - 1)
        return gbar(hp, self.boundary_betti, self.d)

    @cached_property
    def im_psi(self) -> list[int]:
        return [im_psi(self.complex, self.boundary, i, self.field) for i in range(1, self.d + 1)]

    @property
    def connected(self) -> bool:
        return self.manifold.connected

    @property
    def orientable(self) -> bool:
        return self.manifold.orientable

    def require_manifold(self) -> None:
        if not (self.manifold.is_manifold and self.manifold.boundary_is_closed_manifold):
            raise NotAManifold(
                f"not a homology manifold with closed boundary over GF({self.field}) "
                f"({len(self.manifold.witnesses)} witness(es))"
            )


def face_vector_set(complex_: SimplicialComplex, field: FieldSpec) -> FaceVectorSet:
    """All face-number vectors of Δ over the field.

    Interior vectors subtract the boundary when Δ is a homology manifold (otherwise
    they equal f and h). h″ is filled for connected orientable manifolds and ḡ when
    the boundary is nonempty.
    """
    ctx = CheckContext(complex_, field)
    d = ctx.d
    f_interior = list(ctx.f)
    h_dprime = None
    gbar_values = None
    if ctx.manifold.is_manifold and not ctx.closed:
        boundary_f = f_vector(ctx.boundary) + [0] * (d + 1)
        f_interior = [ctx.f[i] - boundary_f[i] for i in range(d + 1)]
        gbar_values = ctx.gbar
    if ctx.manifold.is_manifold and ctx.manifold.boundary_is_closed_manifold:
        if ctx.connected and ctx.orientable:
            if ctx.closed:
                h_dprime = h_dprime_closed(ctx.h_prime, ctx.betti, d)
            else:
                h_dprime, _ = h_dprime_boundary(ctx.h_prime, ctx.gbar, ctx.im_psi, ctx.betti, d)
    return FaceVectorSet(
        d=d,
        field=str(field),
        f=ctx.f,
        h=ctx.h,
        g=g_vector(ctx.h),
        f_interior=f_interior,
        h_interior=f_to_h(f_interior, d),
        betti=ctx.betti,
        h_prime=ctx.h_prime,
        h_dprime=h_dprime,
        gbar=gbar_values,
    )


# ---------------------------------------------------------------------------
# Check kinds
# ---------------------------------------------------------------------------


def _manifold_checks(ctx: CheckContext) -> list[CheckReport]:
    report = ctx.manifold
    checks = [
        CheckReport.from_residuals(
            "manifold",
            [],
            assertions={
                "is_manifold": report.is_manifold,
                "boundary_is_closed_manifold": report.boundary_is_closed_manifold,
            },
            context={
                "field": str(ctx.field),
                "closed": report.closed,
                "connected": report.connected,
                "orientable": report.orientable,
                "boundary_vertices": list(report.boundary.labels),
                "witnesses": [w.model_dump() for w in report.witnesses],
            },
        )
    ]
    if report.is_manifold and not report.closed:
        checks.append(les_identity_check(ctx.complex, ctx.field, ctx.boundary))
    return checks


def _ds_checks(ctx: CheckContext) -> list[CheckReport]:
    ctx.require_manifold()
    chi = reduced_euler(ctx.complex)
    if ctx.closed:
        checks = [ds_closed_residual(ctx.h, chi, ctx.d)]
        if ctx.orientable and ctx.connected:
            checks.append(hprime_ds_residual(ctx.h_prime, ctx.betti, ctx.d))
        return checks
    g_boundary = g_vector(ctx.boundary_h + [0])
    checks = [ds_boundary_residual(ctx.h, chi, g_boundary, ctx.d)]
    if ctx.orientable and ctx.connected:
        checks.append(boundary_duality_residual(ctx.h_prime, ctx.gbar, ctx.im_psi, ctx.betti, ctx.d))
        _, midpoint = h_dprime_boundary(ctx.h_prime, ctx.gbar, ctx.im_psi, ctx.betti, ctx.d)
        if midpoint is not None:
            checks.append(
                CheckReport.from_residuals("h_dprime_midpoint", [midpoint], indices=[ctx.d // 2])
            )
    return checks


def _schenzel_checks(ctx: CheckContext) -> list[CheckReport]:
    ctx.require_manifold()
    quotient = artinian_reduction(ctx.complex, ctx.generic_field, ctx.seed)
    residuals = [dim - expected for dim, expected in zip(quotient.dims, ctx.h_prime)]
    return [
        CheckReport.from_residuals(
            "schenzel",
            residuals,
            assertions={"lsop_certificate": quotient.lsop_certificate},
            context={
                "field": str(ctx.generic_field),
                "seed": ctx.seed,
                "attempts": quotient.attempts,
                "dims": quotient.dims,
                "h_prime": ctx.h_prime,
            },
        )
    ]


def _closed_orientable(ctx: CheckContext) -> bool:
    return ctx.closed and ctx.orientable and ctx.connected


def _bounds_checks(ctx: CheckContext, lefschetz_certified: bool = False) -> list[CheckReport]:
    ctx.require_manifold()
    d = ctx.d
    checks = [macaulay_bounds(ctx.h_prime, ctx.betti, d)]
    if not _closed_orientable(ctx):
        return checks
    h_dprime = h_dprime_closed(ctx.h_prime, ctx.betti, d)
    checks.append(kalai_monotonicity_check(h_dprime, ctx.betti, d))
    checks.append(hprime_surjectivity_check(ctx.h_prime, ctx.betti, d))
    checks.append(hprime_growth_check(ctx.h_prime, ctx.betti, d))
    neighborly = neighborliness(ctx.complex)
    for j in range(0, d // 2):
        report = kuhnel_general_check(ctx.complex.n, ctx.betti, d, j, neighborly)
        report.context["lefschetz_certified"] = lefschetz_certified
        checks.append(report)
    if d % 2 == 1 and d >= 3:
        k = (d - 1) // 2
        checks.append(kuhnel_middle_check(ctx.complex.n, ctx.betti, d))
        if all(ctx.betti[i] == 0 for i in range(k)) and ctx.betti[k] >= 1:
            checks.append(kalai_comparison(ctx.f, ctx.betti, k))
    return checks


def _rigidity_checks(ctx: CheckContext) -> list[CheckReport]:
    field = ctx.generic_field
    if len(connected_components(ctx.complex)) > 1:
        union = rigidity_union_dims(ctx.complex, field, ctx.seed)
        return [
            CheckReport.from_residuals(
                "union_rigidity",
                [union.dim2 - union.expected_dim2, union.omega_kernel - union.expected_omega_kernel],
                indices=[2, 1],
                context=union.model_dump(),
            )
        ]
    report = is_k_rigid(ctx.complex, field, ctx.seed)
    h = ctx.h
    assertions = {"rigid": report.rigid}
    if report.rigid:
        assertions["dim2_equals_h2"] = report.dim2_after_d == h[2]
        assertions["dim2_next_equals_g2"] = report.dim2_after_d_plus_1 == h[2] - h[1]
    return [
        CheckReport.from_residuals(
            "rigidity",
            report.step_kernels,
            indices=list(range(1, ctx.d + 2)),
            assertions=assertions,
            context=report.model_dump(),
        )
    ]


def _h2_checks(ctx: CheckContext) -> list[CheckReport]:
    ctx.require_manifold()
    if ctx.closed:
        raise EmptyBoundary("boundary h_2 bound needs a nonempty boundary")
    if not ctx.orientable:
        raise NotAManifold(f"boundary h_2 bound needs an orientable manifold over GF({ctx.field})")
    beta0 = len(connected_components(ctx.boundary)) - 1
    beta1 = ctx.boundary_betti[1] if len(ctx.boundary_betti) > 1 else 0
    interior = ctx.complex.n - ctx.boundary.n
    checks = [h2_boundary_check(ctx.h[2], interior, beta1, beta0, ctx.d, ctx.field.p)]
    checks.append(boundary_cone_ideal_dims(ctx.complex, ctx.generic_field, ctx.seed))
    return checks


def _lefschetz_checks(ctx: CheckContext) -> list[CheckReport]:
    ctx.require_manifold()
    if not ctx.closed:
        raise EmptyBoundary("vertex-link Lefschetz checks need a closed manifold")
    if ctx.d < 3:
        raise DimensionTooSmall("vertex links of a closed manifold need d >= 3 here")
    field = ctx.generic_field
    residuals: list[int | float] = []
    for vertex in range(1, ctx.complex.n + 1):
        report = lefschetz_check(link(ctx.complex, (vertex,)), field, ctx.seed)
        residuals.append(sum(abs(r) for r in report.residuals))
    links = CheckReport.from_residuals(
        "vertex_link_lefschetz",
        residuals,
        indices=list(ctx.complex.labels),
        context={"field": str(field), "seed": ctx.seed},
    )
    checks = [links]
    if _closed_orientable(ctx):
        neighborly = neighborliness(ctx.complex)
        for j in range(0, ctx.d // 2):
            report = kuhnel_general_check(ctx.complex.n, ctx.betti, ctx.d, j, neighborly)
            report.context["lefschetz_certified"] = links.passed
            checks.append(report)
    return checks


_RUNNERS = {
    "manifold": _manifold_checks,
    "ds": _ds_checks,
    "schenzel": _schenzel_checks,
    "bounds": _bounds_checks,
    "rigidity": _rigidity_checks,
    "h2": _h2_checks,
    "lefschetz": _lefschetz_checks,
}


def run_checks(
    kind: str, complex_: SimplicialComplex, field: FieldSpec, seed: int = 0
) -> list[CheckReport]:
    """Run every checker of one kind, or all applicable kinds for "all".

    A single kind raises when its preconditions fail. "all" skips kinds whose
    preconditions fail and logs the reason; any other error of a kind becomes a
    failing report named after the kind.

    Raises:
        BadParams: If kind is unknown
        FaceNumbersError: Errors of a single kind
    """
    ctx = CheckContext(complex_, field, seed)
    if kind in _RUNNERS:
        return _RUNNERS[kind](ctx)
    if kind != "all":
        raise BadParams(f"unknown check kind '{kind}' (expected one of {', '.join(CHECK_KINDS)}, all)")
    logger = get_logger()
    checks: list[CheckReport] = []
    for name in CHECK_KINDS:
        try:
            checks.extend(_RUNNERS[name](ctx))
        except PRECONDITION_ERRORS as e:
            logger.info(f"Skipping {name} checks: {e}")
        except FaceNumbersError as e:
            logger.error(f"{name} checks failed: {type(e).__name__}: {e}")
            checks.append(
                CheckReport(
                    name=name,
                    passed=False,
                    context={"error": str(e), "error_type": type(e).__name__},
                )
            )
    return checks
