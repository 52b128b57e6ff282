from fractions import Fraction

import pytest

from polystab.core.errors import DomainError
from polystab.spectrum import cumulative_multiplicity, eigenvalue, multiplicity, spectrum_iter, spectrum_levels


def test_circle_of_radius_half():
    levels = spectrum_levels(1, Fraction(1, 4), 4)
    assert [lv.lam for lv in levels] == [0, 4, 16, 36]
    assert [lv.mult for lv in levels] == [1, 2, 2, 2]


def test_two_sphere_multiplicities():
    assert [multiplicity(2, j) for j in range(5)] == [1, 3, 5, 7, 9]


def test_first_level_multiplicity_is_p_plus_one():
    for p in range(1, 8):
        assert multiplicity(p, 1) == p + 1


def test_cumulative():
    assert cumulative_multiplicity(2, 2) == 9


def test_eigenvalue_first_level_is_4m_at_half_radius():
    for m in range(1, 6):
        assert eigenvalue(m, Fraction(1, 4), 1) == 4 * m


def test_iter_stops_below_cap():
    levels = spectrum_iter(2, Fraction(1, 4), 24)
    assert [lv.j for lv in levels] == [0, 1]
    assert spectrum_iter(2, 1, 0) == []


def test_to_dict():
    assert spectrum_levels(1, Fraction(1, 4), 2)[1].to_dict() == {"j": 1, "lambda": "4", "multiplicity": 2}


@pytest.mark.parametrize("args", [(0, 1, 1), (1, 0, 1), (1, -1, 1)])
def test_domain(args):
    p, r2, j = args
    with pytest.raises(DomainError):
        eigenvalue(p, r2, j)


def test_negative_cap():
    with pytest.raises(DomainError):
        spectrum_iter(1, 1, -1)
