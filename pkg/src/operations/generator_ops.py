"""Complex families, constructions and the bundled fixture catalog.

This module handles:
- families: simplex, boundary_simplex, cross_polytope_boundary, octahedron, icosahedron,
  cyclic_polytope_boundary, stacked_sphere, kuhnel_lassman; GENERATOR_FAMILIES and generate()
- operations: cone, suspension, join, union, disjoint_union
- constructions: boundary_connected_sum, iterated_boundary_sum, stellar_subdivide_facet,
  make_interior_facet, remove_facet, carve_boundary_sphere, cone_off_boundary
- catalog: FIXTURE_CATALOG, catalog_entries, load_fixture, validate_fixture

Constructions work on original labels; new vertices take the next unused labels.
"""

import itertools
from collections.abc import Callable, Iterable, Mapping, Sequence
from pathlib import Path

from src.exceptions import (
    BadParams,
    EmptyBoundary,
    FaceNotFacet,
    IdentificationCreatesNonManifold,
    LabelCollision,
    NotBoundaryFace,
    UnknownFixture,
    ValidationFailure,
)
from src.models.schemas import CheckReport, FieldSpec, FixtureEntry, SimplicialComplex
from src.operations.complex_ops import (
    connected_components,
    f_vector,
    from_label_facets,
    label_facets,
    read_fct,
    shift_labels,
)
from src.operations.field_ops import parse_field_spec
from src.operations.homology_ops import betti
from src.operations.manifold_ops import boundary_complex, is_homology_manifold
from src.operations.vector_ops import binom, f_to_h
from src.utils.config import settings
from src.utils.log import get_logger

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"


def _max_label(complex_: SimplicialComplex) -> int:
    return complex_.labels[-1] if complex_.labels else 0


def _validation_field() -> FieldSpec:
    return parse_field_spec(settings.validation_field)


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------


def simplex(d: int) -> SimplicialComplex:
    """The full simplex on vertices 1..d (a (d-1)-ball)."""
    if d < 1:
        raise BadParams(f"simplex needs d >= 1 (got {d})")
    return from_label_facets([range(1, d + 1)])


def boundary_simplex(d: int) -> SimplicialComplex:
    """Boundary of the simplex on d+1 vertices: a (d-1)-sphere with facets of size d."""
    if d < 1:
        raise BadParams(f"boundary_simplex needs d >= 1 (got {d})")
    return from_label_facets(itertools.combinations(range(1, d + 2), d))


def cross_polytope_boundary(d: int) -> SimplicialComplex:
    """Boundary of the d-dimensional cross-polytope; antipodal pairs are (2i-1, 2i)."""
    if d < 1:
        raise BadParams(f"cross_polytope_boundary needs d >= 1 (got {d})")
    pairs = [(2 * i - 1, 2 * i) for i in range(1, d + 1)]
    return from_label_facets(itertools.product(*pairs))


def octahedron() -> SimplicialComplex:
    return cross_polytope_boundary(3)


def icosahedron() -> SimplicialComplex:
    """Boundary of the icosahedron: apex 1, upper ring 2..6, lower ring 7..11, apex 12."""
    upper = [2, 3, 4, 5, 6]
    lower = [7, 8, 9, 10, 11]
    facets = []
    for i in range(5):
        u, u_next = upper[i], upper[(i + 1) % 5]
        l, l_next = lower[i], lower[(i + 1) % 5]
        facets.extend([(1, u, u_next), (u, u_next, l), (l, l_next, u_next), (12, l, l_next)])
    return from_label_facets(facets)


def cyclic_polytope_boundary(n: int, d: int) -> SimplicialComplex:
    """Boundary of the cyclic d-polytope on n vertices via Gale's evenness condition.

    A d-subset S of 1..n is a facet iff every two vertices outside S are separated
    by an even number of vertices of S.

    Raises:
        BadParams: If d < 2 or n < d + 1
    """
    if d < 2 or n < d + 1:
        raise BadParams(f"cyclic polytope needs d >= 2 and n >= d + 1 (got n={n}, d={d})")
    facets = []
    for subset in itertools.combinations(range(1, n + 1), d):
        chosen = set(subset)
        outside = [v for v in range(1, n + 1) if v not in chosen]
        if all(
            sum(1 for v in subset if a < v < b) % 2 == 0 for a, b in zip(outside, outside[1:])
        ):
            facets.append(subset)
    return from_label_facets(facets)


def stacked_sphere(n: int, d: int) -> SimplicialComplex:
    """Stacked (d-1)-sphere on n vertices: ∂Δ followed by n-d-1 facet subdivisions.

    Each step subdivides the lexicographically last facet containing the newest vertex.

    Raises:
        BadParams: If n < d + 1
    """
    if d < 1 or n < d + 1:
        raise BadParams(f"stacked sphere needs n >= d + 1 (got n={n}, d={d})")
    result = boundary_simplex(d)
    while result.n < n:
        newest = _max_label(result)
        facet = max(f for f in label_facets(result) if newest in f)
        result = stellar_subdivide_facet(result, facet)
    return result


def kuhnel_lassman(d: int, n: int, field: FieldSpec | None = None) -> SimplicialComplex:
    """Cyclic (d-2)-ball bundle over the circle: facets {i, ..., i+d-1} mod n.

    The result is validated: homology manifold, every vertex on the boundary,
    h_2 = C(d,2), closed boundary with β̃_1 = 1 (d >= 5) or 2 (d = 4, characteristic 2).

    Raises:
        BadParams: If d < 4 or n < 2d - 1
        ValidationFailure: If the construction misses one of those properties
    """
    if d < 4 or n < 2 * d - 1:
        raise BadParams(f"Kühnel-Lassman complex needs d >= 4 and n >= 2d - 1 (got d={d}, n={n})")
    field = field or _validation_field()
    facets = [[(i + k) % n + 1 for k in range(d)] for i in range(n)]
    result = from_label_facets(facets)

    report = is_homology_manifold(result, field)
    problems = []
    if not report.is_manifold or not report.boundary_is_closed_manifold:
        problems.append("not a homology manifold with closed boundary")
    if report.boundary.n != result.n:
        problems.append("some vertex is interior")
    h = f_to_h(f_vector(result), d)
    if h[2] != binom(d, 2):
        problems.append(f"h_2 = {h[2]}, expected {binom(d, 2)}")
    if report.boundary.n:
        beta1 = betti(report.boundary, field)[2]
        if d >= 5 and beta1 != 1:
            problems.append(f"boundary β̃_1 = {beta1}, expected 1")
        if d == 4 and field.p == 2 and beta1 != 2:
            problems.append(f"boundary β̃_1 = {beta1}, expected 2 in characteristic 2")
    if problems:
        raise ValidationFailure(f"M^{d}({n}): " + "; ".join(problems))
    return result


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def cone(complex_: SimplicialComplex) -> SimplicialComplex:
    """Add a new apex (next unused label) to every facet."""
    apex = _max_label(complex_) + 1
    if not complex_.facets:
        return from_label_facets([[apex]])
    return from_label_facets([list(f) + [apex] for f in label_facets(complex_)])


def join(first: SimplicialComplex, second: SimplicialComplex) -> SimplicialComplex:
    """Facets F ∪ G for F in first and G in second.

    Raises:
        LabelCollision: If the vertex labels overlap
    """
    shared = set(first.labels) & set(second.labels)
    if shared:
        raise LabelCollision(f"join needs disjoint labels; shared: {sorted(shared)}")
    left = label_facets(first) or [()]
    right = label_facets(second) or [()]
    return from_label_facets([f + g for f in left for g in right])


def suspension(complex_: SimplicialComplex) -> SimplicialComplex:
    """Join with two new points."""
    top = _max_label(complex_)
    return join(complex_, from_label_facets([[top + 1], [top + 2]]))


def union(first: SimplicialComplex, second: SimplicialComplex) -> SimplicialComplex:
    """Merge facet lists; shared labels are the same vertex."""
    return from_label_facets(label_facets(first) + label_facets(second))


def disjoint_union(complexes: Iterable[SimplicialComplex]) -> SimplicialComplex:
    """Union after shifting each piece past the labels already used."""
    facets: list[tuple[int, ...]] = []
    offset = 0
    for piece in complexes:
        shifted = shift_labels(piece, offset)
        facets.extend(label_facets(shifted))
        offset = max(offset, _max_label(shifted))
    return from_label_facets(facets)


# ---------------------------------------------------------------------------
# Constructions on manifolds
# ---------------------------------------------------------------------------


def _require_facet(complex_: SimplicialComplex, facet: Sequence[int]) -> tuple[int, ...]:
    key = tuple(sorted(facet))
    if key not in set(label_facets(complex_)):
        raise FaceNotFacet(f"{key} is not a facet")
    return key


def stellar_subdivide_facet(complex_: SimplicialComplex, facet: Sequence[int]) -> SimplicialComplex:
    """Replace a facet F by the cone over ∂F with a new vertex.

    Raises:
        FaceNotFacet: If facet is not a facet (labels)
    """
    key = _require_facet(complex_, facet)
    apex = _max_label(complex_) + 1
    kept = [f for f in label_facets(complex_) if f != key]
    added = [tuple(v for v in key if v != drop) + (apex,) for drop in key]
    return from_label_facets(kept + added)


def make_interior_facet(
    complex_: SimplicialComplex, facet: Sequence[int], field: FieldSpec | None = None
) -> SimplicialComplex:
    """d successive stellar subdivisions ending in a facet of d new interior vertices.

    Each step subdivides the current facet and continues with the new facet that
    drops the smallest remaining original vertex. The final facet has labels
    max+1..max+d and is checked to avoid the boundary.

    Raises:
        FaceNotFacet: If facet is not a facet
        ValidationFailure: If a vertex of the final facet lies on the boundary
    """
    current = _require_facet(complex_, facet)
    original_top = _max_label(complex_)
    result = complex_
    for _ in range(len(current)):
        result = stellar_subdivide_facet(result, current)
        apex = _max_label(result)
        drop = min(v for v in current if v <= original_top)
        current = tuple(sorted([v for v in current if v != drop] + [apex]))
    boundary = boundary_complex(result, field or _validation_field())
    if set(current) & set(boundary.labels):
        raise ValidationFailure(f"facet {current} still touches the boundary")
    return result


def remove_facet(complex_: SimplicialComplex, facet: Sequence[int]) -> SimplicialComplex:
    """Delete the open facet, keeping every proper face.

    Raises:
        FaceNotFacet: If facet is not a facet
    """
    key = _require_facet(complex_, facet)
    kept = [f for f in label_facets(complex_) if f != key]
    return from_label_facets(kept + list(itertools.combinations(key, len(key) - 1)))


def carve_boundary_sphere(
    complex_: SimplicialComplex, facet: Sequence[int], field: FieldSpec | None = None
) -> SimplicialComplex:
    """make_interior_facet followed by remove_facet on the new interior facet."""
    top = _max_label(complex_)
    subdivided = make_interior_facet(complex_, facet, field)
    return remove_facet(subdivided, range(top + 1, top + len(facet) + 1))


def boundary_connected_sum(
    first: SimplicialComplex,
    second: SimplicialComplex,
    face_first: Sequence[int],
    face_second: Sequence[int],
    bijection: Mapping[int, int] | None = None,
    field: FieldSpec | None = None,
) -> SimplicialComplex:
    """Glue two manifolds with boundary along boundary facets.

    The second complex is shifted past the labels of the first; then the vertices of
    face_second are identified with those of face_first (in sorted order unless a
    bijection second-label -> first-label is given). The result is validated.

    Raises:
        NotBoundaryFace: If a face is not a facet of the respective boundary
        IdentificationCreatesNonManifold: If the glued complex fails the manifold check
    """
    field = field or _validation_field()
    for complex_, face in ((first, face_first), (second, face_second)):
        boundary = boundary_complex(complex_, field)
        if tuple(sorted(face)) not in set(label_facets(boundary)):
            raise NotBoundaryFace(f"{tuple(sorted(face))} is not a boundary facet")
    a, b = sorted(face_first), sorted(face_second)
    mapping = dict(bijection) if bijection is not None else dict(zip(b, a))
    if sorted(mapping) != b or sorted(mapping.values()) != a:
        raise BadParams("bijection must map the second face onto the first")
    offset = _max_label(first)

    def relabel(v: int) -> int:
        return mapping[v] if v in mapping else v + offset

    glued = from_label_facets(
        label_facets(first) + [[relabel(v) for v in f] for f in label_facets(second)]
    )
    report = is_homology_manifold(glued, field)
    if not report.is_manifold or not report.boundary_is_closed_manifold:
        raise IdentificationCreatesNonManifold(
            f"gluing along {tuple(a)} gives a non-manifold ({len(report.witnesses)} witness(es))"
        )
    return glued


def iterated_boundary_sum(
    complex_: SimplicialComplex, copies: int, field: FieldSpec | None = None
) -> SimplicialComplex:
    """Boundary connected sum of `copies` copies of a manifold with boundary.

    Each step glues the last boundary facet of the running sum to the first
    boundary facet of a fresh copy.
    """
    if copies < 1:
        raise BadParams(f"need at least one copy (got {copies})")
    field = field or _validation_field()
    first_face = label_facets(boundary_complex(complex_, field))[0]
    result = complex_
    for _ in range(copies - 1):
        last_face = label_facets(boundary_complex(result, field))[-1]
        result = boundary_connected_sum(result, complex_, last_face, first_face, field=field)
    return result


def cone_off_boundary(
    complex_: SimplicialComplex, field: FieldSpec | None = None
) -> tuple[SimplicialComplex, SimplicialComplex]:
    """(Γ, Σ): Σ cones each boundary component with its own new vertex, Γ = Δ ∪ Σ.

    Raises:
        EmptyBoundary: If Δ has no boundary
    """
    boundary = boundary_complex(complex_, field or _validation_field())
    if boundary.n == 0:
        raise EmptyBoundary("complex has no boundary to cone off")
    apex = _max_label(complex_)
    cones: list[tuple[int, ...]] = []
    for component in connected_components(boundary):
        apex += 1
        cones.extend(f + (apex,) for f in label_facets(component))
    sigma = from_label_facets(cones)
    gamma = from_label_facets(label_facets(complex_) + cones)
    return gamma, sigma


# ---------------------------------------------------------------------------
# Family table
# ---------------------------------------------------------------------------


GENERATOR_FAMILIES: dict[str, tuple[Callable[..., SimplicialComplex], tuple[str, ...]]] = {
    "simplex": (simplex, ("d",)),
    "boundary-simplex": (boundary_simplex, ("d",)),
    "cross-polytope": (cross_polytope_boundary, ("d",)),
    "octahedron": (octahedron, ()),
    "icosahedron": (icosahedron, ()),
    "cyclic": (cyclic_polytope_boundary, ("n", "d")),
    "stacked": (stacked_sphere, ("n", "d")),
    "kuhnel-lassman": (kuhnel_lassman, ("d", "n")),
}


def generate(family: str, d: int | None = None, n: int | None = None) -> SimplicialComplex:
    """Build a named family member from its parameters.

    Raises:
        BadParams: If the family is unknown or a required parameter is missing
    """
    if family not in GENERATOR_FAMILIES:
        raise BadParams(f"unknown family '{family}' (known: {', '.join(GENERATOR_FAMILIES)})")
    builder, required = GENERATOR_FAMILIES[family]
    given = {"d": d, "n": n}
    missing = [name for name in required if given[name] is None]
    if missing:
        raise BadParams(f"family '{family}' needs --{' --'.join(missing)}")
    return builder(**{name: given[name] for name in required})


# ---------------------------------------------------------------------------
# Fixture catalog
# ---------------------------------------------------------------------------


FIXTURE_CATALOG: dict[str, FixtureEntry] = {
    entry.name: entry
    for entry in (
        FixtureEntry(
            name="cp2_9",
            filename="cp2_9.fct",
            description="9-vertex complex projective plane",
            fields=["2", "3"],
            betti={"2": [0, 0, 0, 1, 0, 1], "3": [0, 0, 0, 1, 0, 1]},
        ),
        FixtureEntry(
            name="mobius_5",
            filename="mobius_5.fct",
            description="5-vertex Möbius band",
            fields=["2", "3"],
            betti={"2": [0, 0, 1, 0], "3": [0, 0, 1, 0]},
        ),
        FixtureEntry(
            name="rp2_6",
            filename="rp2_6.fct",
            description="6-vertex real projective plane",
            fields=["2", "3"],
            betti={"2": [0, 0, 1, 1], "3": [0, 0, 0, 0]},
        ),
        FixtureEntry(
            name="torus_7",
            filename="torus_7.fct",
            description="7-vertex torus",
            fields=["2", "3"],
            betti={"2": [0, 0, 2, 1], "3": [0, 0, 2, 1]},
        ),
    )
}


def catalog_entries() -> list[FixtureEntry]:
    return [FIXTURE_CATALOG[name] for name in sorted(FIXTURE_CATALOG)]


def _entry(name: str) -> FixtureEntry:
    key = name.lower().removesuffix(".fct")
    if key not in FIXTURE_CATALOG:
        raise UnknownFixture(f"unknown fixture '{name}' (known: {', '.join(sorted(FIXTURE_CATALOG))})")
    return FIXTURE_CATALOG[key]


def load_fixture(name: str) -> SimplicialComplex:
    """Read a bundled fixture by name (case-insensitive, optional .fct suffix).

    Raises:
        UnknownFixture: If the name is not in the catalog
    """
    entry = _entry(name)
    return read_fct(FIXTURE_DIR / entry.filename)


def validate_fixture(name: str) -> CheckReport:
    """Manifold check and Betti profile comparison over every documented field.

    Residuals are measured minus documented Betti numbers, field by field.
    """
    logger = get_logger()
    entry = _entry(name)
    complex_ = load_fixture(entry.name)
    residuals: list[int | float] = []
    assertions: dict[str, bool] = {}
    measured: dict[str, list[int]] = {}
    for field_text in entry.fields:
        field = parse_field_spec(field_text)
        beta = betti(complex_, field)
        measured[field_text] = beta
        residuals.extend(m - e for m, e in zip(beta, entry.betti[field_text]))
        residuals.extend([1] * abs(len(beta) - len(entry.betti[field_text])))
        assertions[f"manifold_gf{field_text}"] = is_homology_manifold(complex_, field).is_manifold
    report = CheckReport.from_residuals(
        "fixture_validation",
        residuals,
        assertions=assertions,
        context={"fixture": entry.name, "betti": measured},
    )
    logger.info(f"Fixture {entry.name}: {'valid' if report.passed else 'INVALID'}")
    return report
