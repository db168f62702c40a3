"""Tests for complex construction, face counts, subcomplexes and the .fct format."""

import pytest

from src.exceptions import (
    BadSkeletonDim,
    DuplicateVertexInFacet,
    EmptyInput,
    FaceNotInComplex,
    FacetParseError,
    InvalidVertexLabel,
    VertexNotInComplex,
)
from src.operations.complex_ops import (
    build_from_facets,
    closed_star,
    connected_components,
    contains_face,
    empty_complex,
    f_vector,
    faces,
    format_fct,
    induced_subcomplex,
    is_pure,
    is_subcomplex,
    link,
    neighborliness,
    parse_fct,
    read_fct,
    reduced_euler,
    shift_labels,
    skeleton,
    to_ids,
    to_labels,
    write_fct,
)
from src.operations.generator_ops import boundary_simplex, cyclic_polytope_boundary


class TestBuildFromFacets:
    """Test canonical construction."""

    def test_drops_non_maximal_facets(self):
        """Test that facets contained in other facets are removed."""
        complex_ = build_from_facets([[1, 2, 3], [2, 3], [3, 4]])
        assert complex_.facets == ((1, 2, 3), (3, 4))
        assert complex_.n == 4
        assert complex_.d == 3

    def test_relabels_densely_and_keeps_labels(self):
        """Test that labels become 1..n in increasing order."""
        complex_ = build_from_facets([[30, 10], [20, 10]])
        assert complex_.labels == (10, 20, 30)
        assert complex_.facets == ((1, 2), (1, 3))
        assert to_labels(complex_, (1, 3)) == (10, 30)
        assert to_ids(complex_, [30, 10]) == (1, 3)

    def test_facet_order_is_irrelevant(self):
        """Test that facet and vertex order do not change the result."""
        a = build_from_facets([[1, 2, 3], [2, 3, 4]])
        b = build_from_facets([[4, 3, 2], [3, 1, 2]])
        assert a == b

    def test_empty_input_rejected(self):
        with pytest.raises(EmptyInput):
            build_from_facets([])
        with pytest.raises(EmptyInput):
            build_from_facets([[1, 2], []])

    def test_duplicate_vertex_rejected(self):
        with pytest.raises(DuplicateVertexInFacet):
            build_from_facets([[1, 1, 2]])

    def test_non_positive_label_rejected(self):
        with pytest.raises(InvalidVertexLabel):
            build_from_facets([[0, 1]])

    def test_unknown_label_lookup(self):
        complex_ = build_from_facets([[1, 2]])
        with pytest.raises(VertexNotInComplex):
            to_ids(complex_, [7])

    def test_empty_complex(self):
        """Test that {∅} has no vertices and only the empty face."""
        void = empty_complex()
        assert void.n == 0
        assert void.d == 0
        assert f_vector(void) == [1]
        assert reduced_euler(void) == -1


class TestCounts:
    """Test f-vectors, Euler characteristic and purity."""

    def test_torus_f_vector(self, torus):
        assert f_vector(torus) == [1, 7, 21, 14]
        assert reduced_euler(torus) == -1

    def test_rp2_f_vector(self, rp2):
        assert f_vector(rp2) == [1, 6, 15, 10]
        assert reduced_euler(rp2) == 0

    def test_cp2_f_vector(self, cp2):
        assert f_vector(cp2) == [1, 9, 36, 84, 90, 36]

    def test_simplex_boundary_euler(self):
        """Test that the (d-1)-sphere ∂Δ^d has χ̃ = (-1)^{d-1}."""
        for d in range(1, 6):
            assert reduced_euler(boundary_simplex(d)) == (-1) ** (d - 1)

    def test_faces_are_lexicographic(self):
        complex_ = build_from_facets([[1, 2, 3], [1, 3, 4]])
        assert faces(complex_, 1) == ((1, 2), (1, 3), (1, 4), (2, 3), (3, 4))
        assert faces(complex_, -1) == ((),)
        assert faces(complex_, 5) == ()

    def test_is_pure(self):
        assert is_pure(build_from_facets([[1, 2, 3], [3, 4, 5]]))
        assert not is_pure(build_from_facets([[1, 2, 3], [3, 4]]))

    def test_contains_face(self, torus):
        assert contains_face(torus, ())
        assert contains_face(torus, torus.facets[0])
        assert not contains_face(torus, (1, 2, 3, 4))

    def test_neighborliness(self, torus, rp2, cp2):
        """Test that the vertex-minimal triangulations are highly neighborly."""
        assert neighborliness(torus) == 2
        assert neighborliness(rp2) == 2
        assert neighborliness(cp2) == 3
        assert neighborliness(cyclic_polytope_boundary(8, 4)) == 2


class TestSubcomplexes:
    """Test links, stars, skeleta and components."""

    def test_vertex_link_of_torus_is_hexagon(self, torus):
        """Test that every vertex link of the 7-vertex torus is a 6-cycle."""
        for v in range(1, 8):
            lk = link(torus, (v,))
            assert f_vector(lk) == [1, 6, 6]

    def test_link_of_facet_is_empty_complex(self, torus):
        assert link(torus, torus.facets[0]) == empty_complex()

    def test_link_of_empty_face_is_complex(self, torus):
        assert link(torus, ()) == torus

    def test_link_keeps_labels(self):
        complex_ = build_from_facets([[5, 7, 9], [7, 9, 11]])
        lk = link(complex_, to_ids(complex_, [7, 9]))
        assert lk.labels == (5, 11)

    def test_link_of_missing_face(self, torus):
        with pytest.raises(FaceNotInComplex):
            link(torus, (1, 2, 3, 4))

    def test_closed_star(self, torus):
        star = closed_star(torus, 1)
        assert f_vector(star)[0:2] == [1, 7]
        assert len(star.facets) == 6
        with pytest.raises(VertexNotInComplex):
            closed_star(torus, 8)

    def test_skeleton(self, torus):
        one = skeleton(torus, 1)
        assert f_vector(one) == [1, 7, 21]
        with pytest.raises(BadSkeletonDim):
            skeleton(torus, 3)

    def test_induced_subcomplex(self):
        complex_ = build_from_facets([[1, 2, 3], [3, 4]])
        sub = induced_subcomplex(complex_, [1, 2, 4])
        assert f_vector(sub) == [1, 3, 1]

    def test_connected_components(self):
        complex_ = build_from_facets([[1, 2], [2, 3], [4, 5, 6]])
        components = connected_components(complex_)
        assert [c.labels for c in components] == [(1, 2, 3), (4, 5, 6)]

    def test_components_meeting_in_a_vertex_and_isolated_points(self):
        complex_ = build_from_facets([[9, 10], [1, 2, 3], [7], [3, 4, 5]])
        components = connected_components(complex_)
        assert [c.labels for c in components] == [(1, 2, 3, 4, 5), (7,), (9, 10)]
        assert [c.d for c in components] == [3, 1, 2]
        assert connected_components(empty_complex()) == []

    def test_shift_labels_and_subcomplex(self):
        complex_ = build_from_facets([[1, 2, 3]])
        shifted = shift_labels(complex_, 10)
        assert shifted.labels == (11, 12, 13)
        edge = build_from_facets([[1, 3]])
        assert is_subcomplex(edge, complex_)
        assert not is_subcomplex(edge, shifted)


class TestFctFormat:
    """Test the facet-list text format."""

    def test_parse_skips_comments_and_blank_lines(self):
        text = "# a comment\n\n1 2 3\n  2 3 4  \n"
        complex_ = parse_fct(text)
        assert complex_.facets == ((1, 2, 3), (2, 3, 4))

    def test_parse_rejects_garbage(self):
        with pytest.raises(FacetParseError) as exc_info:
            parse_fct("1 2 3\n1 x 3\n")
        assert "line 2" in str(exc_info.value)

    def test_format_is_canonical(self):
        complex_ = build_from_facets([[10, 30], [20, 10]])
        assert format_fct(complex_, header="example") == "# example\n1 2\n1 3\n"

    def test_write_then_read(self, tmp_path, torus):
        path = tmp_path / "torus.fct"
        write_fct(torus, path)
        assert read_fct(path) == torus

    def test_read_missing_file(self, tmp_path):
        with pytest.raises(FacetParseError):
            read_fct(tmp_path / "missing.fct")
