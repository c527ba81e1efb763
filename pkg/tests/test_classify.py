import itertools

import numpy as np
import pytest

from mpweyl.classify import (
    IdealCoordinates,
    QuiverAlgebra,
    classification_payload,
    detect_breaks,
    enumerate_simples,
    equivalence_check,
    has_break,
    orbit_class,
    partition_check,
    planted_breaks_check,
    quiver_simples,
    shift_between,
    skeleton,
)
from mpweyl.errors import IndexOutOfRange, NotSameOrbit, ParameterCountError, ZeroCoordinate
from mpweyl.modules import BrokenWeightModule, WeightModule
from mpweyl.scalars import r, s


def planted(n, J):
    nu = [(r(n, i) / s(n, i)) ** i if i in J else r(n, i) + s(n, i) for i in range(1, n + 1)]
    return IdealCoordinates(n=n, mu=[1] * n, nu=nu)


class TestBreaks:
    def test_equal_coordinates_break_below_zero(self):
        report = detect_breaks(IdealCoordinates(n=1, mu=[1], nu=[1]))
        assert report.J == [1]
        assert report.shift(1) == -1
        assert len(enumerate_simples(report)) == 2

    def test_designated_ideal_has_the_break(self):
        report = detect_breaks(planted(2, [2]))
        assert report.J == [2]
        assert has_break(report.designated, 2)
        assert not has_break(planted(2, [2]), 2)

    def test_generic_orbit_has_one_simple(self):
        n = 3
        c = IdealCoordinates(n=n, mu=[1] * n, nu=[r(n, i) + s(n, i) for i in range(1, n + 1)])
        report = detect_breaks(c)
        assert report.J == []
        simples = enumerate_simples(report)
        assert len(simples) == 1
        assert isinstance(simples[0].module, WeightModule)

    @pytest.mark.parametrize(
        "J", [list(J) for size in range(4) for J in itertools.combinations((1, 2, 3), size)]
    )
    def test_planted_counts(self, J):
        report = detect_breaks(planted(3, J))
        assert report.J == J
        simples = enumerate_simples(report)
        assert len(simples) == (2 ** len(J) if J else 1)
        assert all(isinstance(d.module, BrokenWeightModule) for d in simples if J)

    def test_negative_sign_is_a_break(self):
        report = detect_breaks(IdealCoordinates(n=1, mu=[1], nu=[-r(1, 1) / s(1, 1)]))
        assert report.breaks[0].sign == -1
        assert report.shift(1) == 0

    def test_zero_coordinate(self):
        with pytest.raises(ZeroCoordinate):
            IdealCoordinates(n=1, mu=[0], nu=[1])

    def test_coordinate_count(self):
        with pytest.raises(ParameterCountError) as info:
            IdealCoordinates(n=2, mu=[1], nu=[1, 1])
        assert info.value.usage


class TestOrbits:
    def test_partition(self):
        report = partition_check(detect_breaks(planted(2, [1, 2])), 3)
        assert report.ok, report.residuals
        assert report.checked == 49

    def test_orbit_class(self):
        report = detect_breaks(IdealCoordinates(n=1, mu=[1], nu=[1]))
        assert orbit_class(report, [-1]) == [0]
        assert orbit_class(report, [0]) == [1]

    def test_shift_between(self):
        c = planted(2, [1])
        assert shift_between(c, c.shifted([2, -1])) == [2, -1]
        assert c.shifted([2, -1]).shifted([-2, 1]) == c

    def test_not_same_orbit(self):
        c = planted(2, [1])
        other = IdealCoordinates(n=2, mu=[2, 1], nu=c.nu)
        with pytest.raises(NotSameOrbit):
            shift_between(c, other)

    def test_equivalence(self):
        c = IdealCoordinates(n=1, mu=[1], nu=[1])
        assert equivalence_check(c, c.shifted([3]))
        assert not equivalence_check(c, c.shifted([-1]))

    def test_shift_outside_breaks_keeps_break_data(self):
        n = 2
        c = IdealCoordinates(n=n, mu=[1, 1], nu=[r(n, 1) / s(n, 1), r(n, 2) + s(n, 2)])
        br = detect_breaks(c)
        moved = detect_breaks(c.shifted([0, 1]))
        assert moved.J == br.J == [1]
        assert moved.designated != br.designated
        assert moved.break_coordinates() == br.break_coordinates()
        moved = detect_breaks(c.shifted([3, -2]))
        assert moved.break_coordinates() == br.break_coordinates()

    def test_generic_orbit_is_invariant(self):
        report = planted_breaks_check(1, 1)
        assert report.ok, report.residuals

    @pytest.mark.parametrize("n", [1, 2])
    def test_planted_breaks_check(self, n):
        report = planted_breaks_check(n, 2)
        assert report.ok, report.residuals

    def test_payload(self):
        payload = classification_payload(detect_breaks(IdealCoordinates(n=1, mu=[1], nu=[1])))
        assert payload["J"] == [1]
        assert payload["simple_count"] == 2
        assert [d["support"] for d in payload["simples"]] == [["k1 <= -1"], ["k1 >= 0"]]


class TestSkeleton:
    def test_two_breaks(self):
        presentation = skeleton([3, 1])
        assert presentation.J == [1, 3]
        assert presentation.objects == ["00", "01", "10", "11"]
        assert len(presentation.arrows) == 8
        assert presentation.dimension == 16

    def test_no_breaks(self):
        presentation = skeleton([])
        assert presentation.dimension == 1
        assert presentation.arrows == []

    @pytest.mark.parametrize("q", [1, 2, 3])
    def test_quiver_algebra(self, q):
        algebra = QuiverAlgebra(q)
        assert algebra.dimension() == 4**q
        report = algebra.verify()
        assert report.ok, report.residuals

    def test_ab_is_zero(self):
        algebra = QuiverAlgebra(1)
        a = algebra.left_matrix(((0,), (1,)))
        b = algebra.left_matrix(((1,), (0,)))
        assert not np.any(b @ a)
        assert not np.any(a @ b)
        assert np.any(a)

    @pytest.mark.parametrize("q", [0, 1, 2, 3])
    def test_simples(self, q):
        simples = quiver_simples(q)
        assert len(simples) == 2**q
        for simple in simples:
            assert sum(simple.dimension_vector.values()) == 1

    def test_negative_q(self):
        with pytest.raises(IndexOutOfRange):
            quiver_simples(-1)
