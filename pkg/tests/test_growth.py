import pytest

from polygrow.core.geometry import contains, count_points, make_polygon, r_size, scaled_points
from polygrow.core.growth import (
    collinear_bound_ok,
    collinear_ok_through,
    grow_candidates,
    grow_keyed,
    grow_step,
    is_infinitely_growable,
)
from polygrow.core.minimal_polygons import strip_family
from polygrow.core.normal_form import canonical_form
from polygrow.utils.errors import ContractError


class TestCandidates:
    def test_bottom_facet_of_half_triangle(self, t21):
        below = sorted(v for v in grow_candidates(t21) if v[1] == -1)
        assert below == [(-1, -1), (0, -1), (1, -1), (2, -1), (3, -1)]

    def test_left_facet_is_mirror_image(self, t21):
        left = sorted(v for v in grow_candidates(t21) if v[0] == -1)
        assert left == [(-1, -1), (-1, 0), (-1, 1), (-1, 2), (-1, 3)]

    def test_unit_square_bottom_facet(self):
        square = make_polygon(1, [(0, 0), (1, 0), (1, 1), (0, 1)])
        below = sorted(v for v in grow_candidates(square, exclude_lattice=False) if v[1] == -1)
        assert below == [(-1, -1), (0, -1), (1, -1), (2, -1)]

    def test_lattice_points_excluded_by_default(self):
        square = make_polygon(1, [(0, 0), (1, 0), (1, 1), (0, 1)])
        assert grow_candidates(square) == []

    def test_candidates_lie_outside(self):
        polygon = make_polygon(3, [(0, 0), (4, 1), (2, 5), (-1, 3)])
        for v in grow_candidates(polygon):
            assert not contains(polygon.vertices, v)
            child = make_polygon(3, list(polygon.vertices) + [v])
            assert r_size(child) >= r_size(polygon) + 1


class TestGrowStep:
    def test_adding_one_half_point_keeps_size(self, t21):
        infinite, finite = grow_keyed(t21, 1)
        keys = [key for key, _ in infinite + finite]
        expected = canonical_form(make_polygon(2, [(0, 0), (3, -1), (0, 1)]))
        assert expected in keys
        assert len(keys) == len(set(keys))

    def test_children_have_one_more_point_and_same_size(self, t21):
        infinite, finite = grow_step(t21, 1)
        assert infinite or finite
        for child in infinite + finite:
            assert r_size(child) == r_size(t21) + 1
            assert child.size == 1

    def test_lattice_candidates_never_grow(self, unit_triangle):
        assert grow_step(unit_triangle, 3) == ([], [])

    def test_finite_parent_has_finite_children(self, t21):
        infinite, finite = grow_step(t21, 1, parent_infinite=False)
        assert infinite == []
        assert finite

    def test_zero_interior_filter(self):
        triangle = make_polygon(2, [(0, 0), (4, 0), (0, 4)])
        _, finite = grow_step(triangle, 6, zero_interior=True)
        assert all(count_points(child.vertices, 2)[1] == 0 for child in finite)


class TestInfiniteGrowability:
    def test_examples(self, t21, all_half_triangle):
        assert is_infinitely_growable(t21)
        assert is_infinitely_growable(all_half_triangle)
        assert not is_infinitely_growable(make_polygon(2, [(0, 0), (3, 0), (0, 3)]))

    def test_lattice_polygons_rejected(self, unit_triangle):
        with pytest.raises(ContractError):
            is_infinitely_growable(unit_triangle)

    @pytest.mark.parametrize("r", [2, 3, 5])
    @pytest.mark.parametrize("k", [1, 2, 4])
    def test_strip_family(self, r, k):
        for a in range(0 if k > 1 else 1, 6):
            polygon = strip_family(r, k, a)
            assert polygon.size == k
            assert is_infinitely_growable(polygon)


class TestCollinearBound:
    def test_long_half_row_is_pruned(self):
        polygon = make_polygon(2, [(0, 1), (7, 1), (0, 0)])
        assert not collinear_bound_ok(polygon, 0)

    def test_small_polygon_passes(self, t21):
        assert collinear_bound_ok(t21, 1)

    def test_integral_lines_are_ignored(self):
        row = make_polygon(2, [(0, 0), (14, 0), (0, 1)])
        assert collinear_bound_ok(row, 0)

    def test_cap(self):
        points = [(x, 1) for x in range(8)]
        assert collinear_ok_through(points, (0, 1), 2, 5, cap=8)
        points.append((8, 1))
        assert not collinear_ok_through(points, (0, 1), 2, 5, cap=8)

    def test_lattice_denominator_always_passes(self):
        square = make_polygon(1, [(0, 0), (9, 0), (9, 9), (0, 9)])
        assert collinear_ok_through(scaled_points(square), (0, 0), 1, 0)
