"""Tests for homology-manifold recognition, boundaries and orientability."""

import pytest

from src.exceptions import Disconnected, NotAManifold
from src.operations.complex_ops import build_from_facets, f_vector
from src.operations.generator_ops import cone, disjoint_union, octahedron, simplex
from src.operations.manifold_ops import (
    boundary_complex,
    interior_vertex_count,
    is_homology_manifold,
    is_orientable,
)


class TestClosedManifolds:
    """Test fixtures without boundary."""

    def test_torus(self, torus, gf2, gf3):
        for field in (gf2, gf3):
            report = is_homology_manifold(torus, field)
            assert report.is_manifold
            assert report.closed
            assert report.connected
            assert report.orientable
            assert report.witnesses == []

    def test_rp2_orientability_depends_on_field(self, rp2, gf2, gf3):
        assert is_homology_manifold(rp2, gf3).is_manifold
        assert is_orientable(rp2, gf2)
        assert not is_orientable(rp2, gf3)

    def test_cp2(self, cp2, gf2):
        report = is_homology_manifold(cp2, gf2)
        assert report.is_manifold
        assert report.closed
        assert report.orientable

    def test_boundary_of_closed_manifold_is_empty(self, torus, gf2):
        assert boundary_complex(torus, gf2).n == 0
        assert interior_vertex_count(torus, gf2) == 7


class TestManifoldsWithBoundary:
    """Test balls and the Möbius band."""

    def test_mobius_band(self, mobius, gf2, gf3):
        report = is_homology_manifold(mobius, gf2)
        assert report.is_manifold
        assert report.boundary_is_closed_manifold
        assert not report.closed
        assert f_vector(report.boundary) == [1, 5, 5]
        assert report.orientable
        assert not is_orientable(mobius, gf3)

    def test_mobius_has_no_interior_vertex(self, mobius, gf2):
        assert interior_vertex_count(mobius, gf2) == 0

    def test_ball(self, gf2):
        triangle = simplex(3)
        report = is_homology_manifold(triangle, gf2)
        assert report.is_manifold
        assert f_vector(report.boundary) == [1, 3, 3]
        assert report.orientable

    def test_cone_over_octahedron(self, gf3):
        ball = cone(octahedron())
        report = is_homology_manifold(ball, gf3)
        assert report.is_manifold
        assert report.boundary.labels == tuple(range(1, 7))
        assert interior_vertex_count(ball, gf3) == 1


class TestNonManifolds:
    """Test the witnesses reported for non-manifolds."""

    def test_bowtie(self, gf2):
        """Test two triangles sharing only a vertex."""
        bowtie = build_from_facets([[1, 2, 3], [1, 4, 5]])
        report = is_homology_manifold(bowtie, gf2)
        assert not report.is_manifold
        assert any(w.face == (1,) and w.degree == 0 for w in report.witnesses)
        with pytest.raises(NotAManifold):
            boundary_complex(bowtie, gf2)

    def test_three_triangles_on_an_edge(self, gf2):
        book = build_from_facets([[1, 2, 3], [1, 2, 4], [1, 2, 5]])
        report = is_homology_manifold(book, gf2)
        assert not report.is_manifold
        assert any(
            w.face == (1, 2) and w.reason == "top homology above 1" for w in report.witnesses
        )

    def test_not_pure(self, gf2):
        report = is_homology_manifold(build_from_facets([[1, 2, 3], [3, 4]]), gf2)
        assert not report.pure
        assert not report.is_manifold
        assert any(w.reason == "not pure" for w in report.witnesses)

    def test_witnesses_use_original_labels(self, gf2):
        bowtie = build_from_facets([[10, 20, 30], [10, 40, 50]])
        report = is_homology_manifold(bowtie, gf2)
        assert any(w.face == (10,) for w in report.witnesses)

    def test_orientability_needs_manifold(self, gf2):
        with pytest.raises(NotAManifold):
            is_orientable(build_from_facets([[1, 2, 3], [1, 4, 5]]), gf2)


class TestDisconnected:
    """Test disjoint unions of spheres."""

    def test_two_spheres(self, tetrahedron_boundary, gf2):
        union = disjoint_union([tetrahedron_boundary, tetrahedron_boundary])
        report = is_homology_manifold(union, gf2)
        assert report.is_manifold
        assert not report.connected
        assert report.orientable
        with pytest.raises(Disconnected):
            is_orientable(union, gf2)
