import itertools

import pytest

from conftest import random_polygon
from polygrow.core.bounds import (
    FAMILIES,
    FAMILY_BOUNDARIES,
    boundary_equation_holds,
    boundary_family_tuple,
    classify_tuple,
    hourglass_check,
    inf_growable_tuple_check,
    scott_check,
    trapezium_identity_check,
    zero_interior_family,
)
from polygrow.core.ehrhart import EhrhartTuple, ehrhart_tuple
from polygrow.core.geometry import lattice_profile, make_polygon, width
from polygrow.core.growth import is_infinitely_growable
from polygrow.utils.errors import ContractError, DegenerateError, DomainError


class TestClassifyTuple:
    def test_condition_a(self):
        assert classify_tuple(EhrhartTuple(1, 0, 3, 0)).condition == 'a'

    def test_condition_b(self):
        assert classify_tuple((0, 0, 4, 5)).condition == 'b'

    def test_condition_c(self):
        assert classify_tuple((2, 0, 6, 1)).condition == 'c'

    def test_condition_d(self):
        verdict = classify_tuple((0, 1, 3, 1))
        assert verdict.condition == 'd'
        assert verdict.violated_inequalities == []
        assert not verdict.is_exception

    def test_exception_lists_violations(self):
        verdict = classify_tuple((3, 0, 9, 1))
        assert verdict.is_exception
        assert 'c:b2<=2i2+6' in verdict.violated_inequalities
        assert 'c:b2<=2b1+4' not in verdict.violated_inequalities
        assert 'd:i1>0' in verdict.violated_inequalities


class TestScott:
    @pytest.mark.parametrize("b,i,expected", [(9, 1, True), (10, 1, False), (3, 0, True), (2, 0, False), (8, 1, True)])
    def test_examples(self, b, i, expected):
        assert scott_check(b, i) is expected


class TestInfiniteTuples:
    @pytest.mark.parametrize("b1,b2,i2,expected", [
        (0, 3, 0, True),
        (0, 4, 5, True),
        (1, 7, 9, False),
        (0, 5, 1, False),
        (2, 3, 0, False),
    ])
    def test_examples(self, b1, b2, i2, expected):
        assert inf_growable_tuple_check(b1, b2, i2) is expected


class TestZeroInteriorFamily:
    def test_examples(self):
        assert zero_interior_family(0, 3, 0) == make_polygon(2, [(0, 1), (1, 0), (1, 1)])
        assert zero_interior_family(1, 3, 2) == make_polygon(2, [(0, 0), (2, 1), (1, 3)])
        assert zero_interior_family(2, 8, 1) == make_polygon(2, [(0, -1), (0, 1), (2, 1), (2, -1)])
        assert zero_interior_family(2, 5, 1) == make_polygon(2, [(0, -1), (1, -1), (2, 0), (1, 1), (0, 0)])

    def test_realizes_every_admissible_tuple(self):
        checked = 0
        for b1 in range(5):
            for b2 in range(13):
                for i2 in range(7):
                    if not inf_growable_tuple_check(b1, b2, i2):
                        continue
                    polygon = zero_interior_family(b1, b2, i2)
                    assert ehrhart_tuple(polygon) == (b1, 0, b2, i2)
                    assert is_infinitely_growable(polygon)
                    checked += 1
        assert checked > 50

    @pytest.mark.parametrize("b1,b2,i2", [(2, 5, 1), (2, 6, 2), (3, 10, 2), (4, 12, 3), (4, 9, 6)])
    def test_rows_above_twice_the_boundary(self, b1, b2, i2):
        assert ehrhart_tuple(zero_interior_family(b1, b2, i2)) == (b1, 0, b2, i2)

    def test_rejects_inadmissible(self):
        with pytest.raises(DomainError):
            zero_interior_family(1, 7, 9)


class TestFamilies:
    @pytest.mark.parametrize("family,i,expected", [
        ('F1', 1, (0, 1, 3, 1)),
        ('F6', 2, (2, 2, 10, 13)),
        ('F7', 1, (4, 1, 12, 9)),
    ])
    def test_examples(self, family, i, expected):
        assert boundary_family_tuple(family, i) == expected

    def test_every_family_sits_on_its_boundaries(self):
        for family in FAMILIES:
            for i in range(1, 51):
                t = boundary_family_tuple(family, i)
                assert classify_tuple(t).condition == 'd'
                assert all(boundary_equation_holds(eq, t) for eq in FAMILY_BOUNDARIES[family])

    def test_errors(self):
        with pytest.raises(DomainError):
            boundary_family_tuple('F8', 1)
        with pytest.raises(DomainError):
            boundary_family_tuple('F1', 0)


class TestLatticeIdentities:
    @pytest.mark.parametrize("ys", [(0, 1, 0, 1), (0, 2, 0, 0), (0, 3, 1, 2), (-2, 5, 1, 1), (0, 0, -3, 4)])
    def test_trapezium(self, ys):
        assert trapezium_identity_check(*ys)

    def test_trapezium_small_grid(self):
        for y1, y2, y3, y4 in itertools.product(range(6), repeat=4):
            if y1 > y2 or y3 > y4 or (y1 == y2 and y3 == y4):
                continue
            assert trapezium_identity_check(y1, y2, y3, y4)

    def test_trapezium_degenerate(self):
        with pytest.raises(DegenerateError):
            trapezium_identity_check(0, 0, 0, 0)
        with pytest.raises(ContractError):
            trapezium_identity_check(2, 1, 0, 0)

    def test_hourglass_examples(self):
        assert hourglass_check(make_polygon(1, [(0, 0), (4, 0), (4, 4), (0, 4)]), 2)
        assert hourglass_check(make_polygon(1, [(0, 0), (5, 0), (5, 5), (0, 5)]), 2)

    def test_hourglass_range(self):
        with pytest.raises(DomainError):
            hourglass_check(make_polygon(1, [(0, 0), (4, 0), (4, 4), (0, 4)]), 1)

    def test_hourglass_random(self, rng):
        checked = 0
        while checked < 100:
            polygon = random_polygon(rng, 1, 9, points=6)
            w1 = int(width(polygon)[0])
            if lattice_profile(polygon)[1] == 0 or w1 < 4:
                continue
            for h in range(2, w1 - 1):
                assert hourglass_check(polygon, h)
            checked += 1
