"""Simplicial complex operations on canonical facet lists.

This module handles complex construction and face bookkeeping:
- build_from_facets / empty_complex: canonical construction with dense relabeling
- faces / f_vector / reduced_euler / is_pure / neighborliness: counts by subset enumeration
- link / closed_star / skeleton / induced_subcomplex / connected_components
- label translation helpers (to_labels, to_ids, label_facets, shift_labels)
- .fct reader and writer (parse_fct, format_fct, read_fct, write_fct)
"""

import itertools
import math
from collections.abc import Iterable, Sequence
from functools import lru_cache
from pathlib import Path

import networkx as nx

from src.exceptions import (
    BadSkeletonDim,
    DuplicateVertexInFacet,
    EmptyInput,
    FaceNotInComplex,
    FacetParseError,
    InvalidVertexLabel,
    VertexNotInComplex,
)
from src.models.schemas import Face, SimplicialComplex


def _canonical(label_facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Canonical complex from facets given in original labels (no validation)."""
    sets = {frozenset(f) for f in label_facets}
    sets.discard(frozenset())
    maximal = [s for s in sets if not any(s < other for other in sets)]
    labels = tuple(sorted(set().union(*maximal))) if maximal else ()
    ids = {label: i + 1 for i, label in enumerate(labels)}
    facets = sorted(tuple(sorted(ids[v] for v in s)) for s in maximal)
    return SimplicialComplex(
        facets=tuple(facets),
        n=len(labels),
        d=max((len(f) for f in facets), default=0),
        labels=labels,
    )


def build_from_facets(raw_facets: Iterable[Sequence[int]]) -> SimplicialComplex:
    """Build a canonical complex from raw facets.

    Non-maximal facets are dropped, labels are densified to 1..n in increasing
    order, and the original labels are kept on the complex.

    Args:
        raw_facets: Integer sequences, one per facet

    Returns:
        Canonical SimplicialComplex

    Raises:
        EmptyInput: If there are no facets or a facet is empty
        DuplicateVertexInFacet: If a facet repeats a vertex
        InvalidVertexLabel: If a label is not a positive integer
    """
    facets = [list(f) for f in raw_facets]
    if not facets:
        raise EmptyInput("facet list is empty")
    for facet in facets:
        if not facet:
            raise EmptyInput("facet list contains an empty facet")
        if any(not isinstance(v, int) or isinstance(v, bool) or v <= 0 for v in facet):
            raise InvalidVertexLabel(f"facet {facet} has a non-positive or non-integer label")
        if len(set(facet)) != len(facet):
            raise DuplicateVertexInFacet(f"facet {facet} repeats a vertex")
    return _canonical(facets)


def empty_complex() -> SimplicialComplex:
    """The complex {∅}: no vertices, only the empty face."""
    return SimplicialComplex(facets=(), n=0, d=0, labels=())


# ---------------------------------------------------------------------------
# Label translation
# ---------------------------------------------------------------------------


def to_labels(complex_: SimplicialComplex, face: Iterable[int]) -> Face:
    return tuple(sorted(complex_.labels[v - 1] for v in face))


def to_ids(complex_: SimplicialComplex, labels: Iterable[int]) -> Face:
    """Translate original labels to vertex ids.

    Raises:
        VertexNotInComplex: If a label is not a vertex
    """
    lookup = complex_.label_map
    try:
        return tuple(sorted(lookup[v] for v in labels))
    except KeyError as e:
        raise VertexNotInComplex(f"label {e.args[0]} is not a vertex") from e


def label_facets(complex_: SimplicialComplex) -> list[Face]:
    return [to_labels(complex_, f) for f in complex_.facets]


def from_label_facets(label_facets_: Iterable[Iterable[int]]) -> SimplicialComplex:
    """Canonical complex from label facets; an empty list gives {∅}."""
    return _canonical(label_facets_)


def shift_labels(complex_: SimplicialComplex, offset: int) -> SimplicialComplex:
    return _canonical([[v + offset for v in f] for f in label_facets(complex_)])


# ---------------------------------------------------------------------------
# Faces and counts
# ---------------------------------------------------------------------------


@lru_cache(maxsize=2048)
def _face_table(facets: tuple[Face, ...]) -> tuple[tuple[Face, ...], ...]:
    """Nonempty faces grouped by size (index k holds faces with k+1 vertices), lex sorted."""
    if not facets:
        return ()
    top = max(len(f) for f in facets)
    table: list[set[Face]] = [set() for _ in range(top)]
    for facet in facets:
        for size in range(1, len(facet) + 1):
            table[size - 1].update(itertools.combinations(facet, size))
    return tuple(tuple(sorted(level)) for level in table)


def faces(complex_: SimplicialComplex, k: int) -> tuple[Face, ...]:
    """All k-dimensional faces in lexicographic order (k = -1 gives the empty face)."""
    if k == -1:
        return ((),)
    table = _face_table(complex_.facets)
    return table[k] if 0 <= k < len(table) else ()


def all_faces(complex_: SimplicialComplex) -> list[Face]:
    """Every nonempty face, by increasing dimension then lexicographically."""
    return [face for level in _face_table(complex_.facets) for face in level]


@lru_cache(maxsize=2048)
def _face_sets(facets: tuple[Face, ...]) -> tuple[frozenset[Face], ...]:
    return tuple(frozenset(level) for level in _face_table(facets))


def contains_face(complex_: SimplicialComplex, face: Sequence[int]) -> bool:
    if not face:
        return True
    k = len(face) - 1
    sets = _face_sets(complex_.facets)
    return k < len(sets) and tuple(face) in sets[k]


def f_vector(complex_: SimplicialComplex) -> list[int]:
    """Face numbers f_{-1}, f_0, ..., f_{d-1}."""
    return [1] + [len(level) for level in _face_table(complex_.facets)]


def reduced_euler(complex_: SimplicialComplex) -> int:
    """Σ (-1)^i f_i over i = -1..d-1."""
    return sum((-1) ** (i + 1) * f for i, f in enumerate(f_vector(complex_)))


def is_pure(complex_: SimplicialComplex) -> bool:
    return all(len(f) == complex_.d for f in complex_.facets)


def neighborliness(complex_: SimplicialComplex) -> int:
    """Largest k such that every k-subset of the vertices is a face."""
    counts = f_vector(complex_)
    k = 0
    while k < complex_.d and counts[k + 1] == math.comb(complex_.n, k + 1):
        k += 1
    return k


# ---------------------------------------------------------------------------
# Subcomplexes
# ---------------------------------------------------------------------------


def link(complex_: SimplicialComplex, face: Sequence[int]) -> SimplicialComplex:
    """Link {G : G ∩ F = ∅, G ∪ F ∈ Δ}, keeping original labels.

    The link of a facet is {∅}; the link of the empty face is Δ itself.

    Raises:
        FaceNotInComplex: If face is not a face of the complex
    """
    face_set = set(face)
    if not face_set:
        return complex_
    containing = [f for f in complex_.facets if face_set <= set(f)]
    if not containing:
        raise FaceNotInComplex(f"face {tuple(face)} is not in the complex")
    return _canonical(
        [complex_.labels[v - 1] for v in f if v not in face_set] for f in containing
    )


def closed_star(complex_: SimplicialComplex, vertex: int) -> SimplicialComplex:
    """Facets containing the vertex, with all their subfaces.

    Raises:
        VertexNotInComplex: If vertex is not an id of the complex
    """
    if not 1 <= vertex <= complex_.n:
        raise VertexNotInComplex(f"vertex {vertex} is not in the complex")
    return _canonical(to_labels(complex_, f) for f in complex_.facets if vertex in f)


def skeleton(complex_: SimplicialComplex, k: int) -> SimplicialComplex:
    """Faces of dimension <= k.

    Raises:
        BadSkeletonDim: If k is outside [0, dim]
    """
    if not 0 <= k <= complex_.dim:
        raise BadSkeletonDim(f"skeleton dimension {k} outside [0, {complex_.dim}]")
    pieces = set()
    for facet in complex_.facets:
        size = min(len(facet), k + 1)
        pieces.update(itertools.combinations(facet, size))
    return _canonical(to_labels(complex_, f) for f in pieces)


def induced_subcomplex(complex_: SimplicialComplex, vertices: Iterable[int]) -> SimplicialComplex:
    """Faces whose vertices all lie in the given vertex ids."""
    keep = set(vertices)
    return _canonical(
        [complex_.labels[v - 1] for v in f if v in keep] for f in complex_.facets
    )


def connected_components(complex_: SimplicialComplex) -> list[SimplicialComplex]:
    """Components of the 1-skeleton graph, sorted by their smallest label."""
    graph = nx.Graph()
    graph.add_nodes_from(range(1, complex_.n + 1))
    for facet in complex_.facets:
        graph.add_edges_from(zip(facet, facet[1:]))
    components = [
        _canonical(to_labels(complex_, f) for f in complex_.facets if f[0] in vertices)
        for vertices in nx.connected_components(graph)
    ]
    return sorted(components, key=lambda c: c.labels[0])


def is_subcomplex(sub: SimplicialComplex, complex_: SimplicialComplex) -> bool:
    """True if every face of `sub` is a face of `complex_`, comparing original labels."""
    lookup = complex_.label_map
    for facet in label_facets(sub):
        if any(v not in lookup for v in facet):
            return False
        if not contains_face(complex_, tuple(sorted(lookup[v] for v in facet))):
            return False
    return True


# ---------------------------------------------------------------------------
# .fct format
# ---------------------------------------------------------------------------


def parse_fct(text: str) -> SimplicialComplex:
    """Parse facet-list text: one facet per line, '#' starts a comment line.

    Raises:
        FacetParseError: If a line holds something other than integers
    """
    raw: list[list[int]] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            raw.append([int(tok) for tok in stripped.split()])
        except ValueError as e:
            raise FacetParseError(f"line {lineno}: {e}") from e
    return build_from_facets(raw)


def format_fct(complex_: SimplicialComplex, header: str | None = None) -> str:
    """Canonical text: dense labels, lexicographic order."""
    lines = [f"# {line}" for line in header.splitlines()] if header else []
    lines.extend(" ".join(str(v) for v in facet) for facet in complex_.facets)
    return "\n".join(lines) + "\n"


def read_fct(path: str | Path) -> SimplicialComplex:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise FacetParseError(f"cannot read {path}: {e}") from e
    return parse_fct(text)


def write_fct(complex_: SimplicialComplex, path: str | Path, header: str | None = None) -> None:
    Path(path).write_text(format_fct(complex_, header), encoding="utf-8")
