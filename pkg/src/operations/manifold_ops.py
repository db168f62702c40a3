"""Homology-manifold recognition, boundary extraction and orientability.

This module handles:
- is_homology_manifold: link homology of every face, boundary classification
- boundary_complex: complex generated by boundary faces ({∅} when closed)
- is_orientable: top (relative) homology test for connected manifolds
- interior_vertex_count: f_0 - f_0(∂Δ)
"""

from functools import lru_cache

from src.exceptions import Disconnected, NotAManifold
from src.models.schemas import FieldSpec, ManifoldReport, SimplicialComplex, Witness
from src.operations.complex_ops import (
    all_faces,
    connected_components,
    empty_complex,
    from_label_facets,
    is_pure,
    link,
    to_labels,
)
from src.operations.homology_ops import at_degree, betti, betti_relative
from src.utils.config import settings
from src.utils.timing import timing


def _link_witnesses(
    complex_: SimplicialComplex, field: FieldSpec
) -> tuple[list[Witness], list[tuple[int, ...]]]:
    """Scan all face links; return violations and boundary faces (in labels)."""
    witnesses: list[Witness] = []
    boundary_faces = []
    d = complex_.d
    for face in all_faces(complex_):
        beta = betti(link(complex_, face), field)
        top = d - len(face) - 1
        labels = to_labels(complex_, face)
        for degree in range(-1, top):
            if at_degree(beta, degree) != 0:
                witnesses.append(Witness(face=labels, degree=degree, reason="homology below top"))
        top_value = at_degree(beta, top)
        if top_value > 1:
            witnesses.append(Witness(face=labels, degree=top, reason="top homology above 1"))
        elif top_value == 0:
            boundary_faces.append(labels)
    return witnesses, boundary_faces


@lru_cache(maxsize=512)
def is_homology_manifold(complex_: SimplicialComplex, field: FieldSpec) -> ManifoldReport:
    """Decide whether Δ is a homology manifold over the field.

    For every nonempty face F, β̃_i(lk F) must vanish for i < d-|F|-1 and the top
    group must have dimension 0 (boundary face) or 1 (interior face). The boundary
    must itself be a (d-2)-dimensional homology manifold without boundary.

    Returns:
        ManifoldReport; all findings are reported, nothing is raised
    """
    with timing(
        f"manifold scan ({complex_.n} vertices, {len(complex_.facets)} facets, GF({field}))",
        log_threshold_ms=settings.timing_log_threshold_ms,
    ):
        pure = is_pure(complex_)
        witnesses: list[Witness] = []
        if not pure:
            witnesses.append(Witness(face=(), degree=complex_.dim, reason="not pure"))
        link_witnesses, boundary_faces = _link_witnesses(complex_, field)
        witnesses.extend(link_witnesses)
        boundary = from_label_facets(boundary_faces) if boundary_faces else empty_complex()

        boundary_closed = True
        if boundary.n:
            if boundary.d != complex_.d - 1 or not is_pure(boundary):
                boundary_closed = False
            else:
                inner = is_homology_manifold(boundary, field)
                boundary_closed = inner.is_manifold and inner.closed
            if not boundary_closed:
                witnesses.append(
                    Witness(face=(), degree=boundary.dim, reason="boundary is not a closed manifold")
                )

        is_manifold = pure and not link_witnesses
        components = connected_components(complex_) if complex_.n else []
        connected = len(components) <= 1
        orientable = False
        if is_manifold and boundary_closed and complex_.n:
            orientable = _top_class_count(complex_, boundary, field) == len(components)

    witnesses.sort(key=lambda w: (len(w.face), w.face, w.degree, w.reason))
    return ManifoldReport(
        field=str(field),
        is_manifold=is_manifold,
        pure=pure,
        boundary=boundary,
        boundary_is_closed_manifold=boundary_closed,
        connected=connected,
        orientable=orientable,
        witnesses=witnesses,
    )


def _top_class_count(
    complex_: SimplicialComplex, boundary: SimplicialComplex, field: FieldSpec
) -> int:
    """Unreduced top homology of (Δ, ∂Δ): one class per orientable component."""
    if boundary.n == 0:
        beta = betti(complex_, field)
        top = beta[complex_.d]
        # a single vertex (d = 1) has β̃_0 = components - 1
        return top + 1 if complex_.d == 1 else top
    return betti_relative(complex_, boundary, field)[complex_.d]


def boundary_complex(complex_: SimplicialComplex, field: FieldSpec) -> SimplicialComplex:
    """Complex generated by the boundary faces of a homology manifold.

    Raises:
        NotAManifold: If Δ is not a homology manifold over the field
    """
    report = is_homology_manifold(complex_, field)
    if not report.is_manifold:
        raise NotAManifold(
            f"complex is not a homology manifold over GF({field}): "
            f"{len(report.witnesses)} witness(es)"
        )
    return report.boundary


def is_orientable(complex_: SimplicialComplex, field: FieldSpec) -> bool:
    """Orientability over the field for a connected homology manifold.

    Closed: β̃_{d-1} = β̃_0 + 1. With boundary: β_{d-1}(Δ, ∂Δ) = 1.

    Raises:
        NotAManifold: If Δ is not a homology manifold
        Disconnected: If Δ has more than one component
    """
    report = is_homology_manifold(complex_, field)
    if not report.is_manifold:
        raise NotAManifold(f"complex is not a homology manifold over GF({field})")
    if not report.connected:
        raise Disconnected("orientability is defined here for connected complexes")
    return report.orientable


def interior_vertex_count(complex_: SimplicialComplex, field: FieldSpec) -> int:
    """f_0(Δ) - f_0(∂Δ)."""
    return complex_.n - boundary_complex(complex_, field).n
