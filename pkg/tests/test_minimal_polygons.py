import pytest

from polygrow.core.bounds import scott_check
from polygrow.core.geometry import lattice_profile, make_polygon, r_size
from polygrow.core.minimal_polygons import (
    ZERO_INTERIOR_TERMINAL,
    is_minimal,
    lattice_polygons_of_size,
    minimal_polygons,
    minimal_size_zero,
    minimal_size_zero_direct,
    one_row_triangle,
    shrink_by_vertex,
    size_zero_triples,
    strip_family,
    zero_interior_seeds,
)
from polygrow.core.normal_form import canonical_form
from polygrow.utils.errors import ContractError, DomainError


class TestSizeZero:
    def test_denominator_two(self, all_half_triangle):
        seeds = minimal_size_zero(2)
        assert len(seeds) == 1
        assert canonical_form(seeds[0]) == canonical_form(all_half_triangle)

    def test_denominator_three_triples(self):
        assert size_zero_triples(3) == [(0, 1, 1), (1, 2, 2)]
        assert len(minimal_size_zero(3)) == 2

    def test_lattice_denominator_has_none(self):
        assert size_zero_triples(1) == []
        assert minimal_size_zero(1) == []

    @pytest.mark.parametrize("r", [2, 3, 4, 5, 6])
    def test_both_constructions_agree(self, r):
        by_triples = {canonical_form(polygon) for polygon in minimal_size_zero(r)}
        by_scan = {canonical_form(polygon) for polygon in minimal_size_zero_direct(r)}
        assert by_triples == by_scan
        assert len(by_triples) == len(size_zero_triples(r))

    def test_seeds_have_no_lattice_points(self):
        for polygon in minimal_size_zero(5):
            assert lattice_profile(polygon) == (0, 0)


class TestLatticePolygons:
    @pytest.mark.parametrize("k,expected", [(3, 1), (4, 3), (5, 6)])
    def test_counts(self, k, expected):
        polygons = lattice_polygons_of_size(k)
        assert len(polygons) == expected
        assert all(sum(lattice_profile(polygon)) == k for polygon in polygons)

    def test_below_three_is_empty(self):
        assert lattice_polygons_of_size(2) == []

    @pytest.mark.parametrize("k", [3, 4, 5, 6])
    def test_scott_holds(self, k):
        for polygon in lattice_polygons_of_size(k):
            b, i = lattice_profile(polygon)
            assert scott_check(b, i)


class TestMinimalPolygons:
    def test_size_one(self, t21):
        assert minimal_polygons(2, 1) == [t21]

    def test_size_two_has_only_the_row_triangle(self):
        assert minimal_polygons(2, 2) == [one_row_triangle(2, 2)]
        assert one_row_triangle(2, 2).vertices == ((0, 0), (2, 0), (0, 1))

    def test_size_three(self):
        seeds = minimal_polygons(2, 3)
        assert len(seeds) == 2
        assert seeds[-1] == one_row_triangle(2, 3)

    def test_size_zero_delegates(self):
        assert minimal_polygons(3, 0) == minimal_size_zero(3)

    def test_contract(self):
        with pytest.raises(ContractError):
            minimal_polygons(1, 3)
        with pytest.raises(ContractError):
            minimal_polygons(2, -1)
        with pytest.raises(DomainError):
            one_row_triangle(2, 0)

    @pytest.mark.parametrize("r", [2, 3])
    @pytest.mark.parametrize("k", [0, 1, 2, 3, 4])
    def test_seeds_are_minimal(self, r, k):
        for seed in minimal_polygons(r, k):
            assert is_minimal(seed)
            assert seed.size == k


class TestShrinking:
    def test_non_minimal_polygon_shrinks(self):
        grown = make_polygon(2, [(0, 0), (3, -1), (0, 1)])
        shrunk = shrink_by_vertex(grown)
        assert shrunk
        for smaller in shrunk:
            assert smaller.size == grown.size
            assert r_size(smaller) == r_size(grown) - 1
        assert not is_minimal(grown)

    def test_strip_family_validation(self):
        with pytest.raises(DomainError):
            strip_family(1, 2, 0)
        with pytest.raises(DomainError):
            strip_family(2, 1, 0)


class TestZeroInteriorSeeds:
    def test_ten_seeds_without_interior(self):
        seeds = zero_interior_seeds()
        assert len(seeds) == 10
        for seed in seeds:
            _, interior = lattice_profile(seed)
            assert interior == 0
        assert seeds[-1].vertices == ZERO_INTERIOR_TERMINAL

    def test_seeds_are_distinct(self):
        assert len({canonical_form(seed) for seed in zero_interior_seeds()}) == 10
