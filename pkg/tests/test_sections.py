from fractions import Fraction

import pytest

from polystab.core.enums import Source
from polystab.exact import LambdaPoly
from polystab.forms import (
    SymbolicNormalSection,
    apply_bar_laplacian,
    bundle_norm_polys,
    gradient_norm,
    pairing,
    printed_bundle_norms,
)
from polystab.geometry import Hypersphere

LAM = LambdaPoly.lam()


def test_laplace_norm_closed_form():
    h = Hypersphere(3, Fraction(5, 2))
    n1 = bundle_norm_polys(h).laplace
    assert n1 == (LAM + h.norm_a2) ** 2 + LAM * (4 * h.t)


def test_laplace_norm_circle_first_level():
    h = Hypersphere(1, 3)
    assert bundle_norm_polys(h).laplace(4) == 97


@pytest.mark.parametrize("t", [Fraction(2), Fraction(3), Fraction(7, 3)])
def test_bar_laplacian_self_adjoint(t):
    h = Hypersphere(3, t)
    s = SymbolicNormalSection.of(LAM + 1, 2, h.t)
    u = SymbolicNormalSection.of(3, LAM, h.t)
    assert pairing(apply_bar_laplacian(s, h), u) == pairing(s, apply_bar_laplacian(u, h))


@pytest.mark.parametrize("m", [1, 2, 4])
def test_integration_by_parts(m):
    h = Hypersphere(m, 3)
    s = apply_bar_laplacian(SymbolicNormalSection.normal(h), h)
    assert pairing(s, apply_bar_laplacian(s, h)) == gradient_norm(s, h)


def test_norms_are_rational_only():
    h = Hypersphere(4, 2)
    for poly in bundle_norm_polys(h).as_tuple():
        assert poly.is_rational_only()


def test_totally_geodesic_norms():
    h = Hypersphere(2, 0)
    n = bundle_norm_polys(h)
    assert n.laplace == LAM**2
    assert n.bilaplace == LAM**4


@pytest.mark.parametrize("m", range(1, 6))
def test_printed_norms_agree_except_bilaplace(m):
    ours = bundle_norm_polys(Hypersphere(m, 3))
    theirs = printed_bundle_norms(m)
    assert theirs.source == Source.PRINTED
    assert ours.laplace == theirs.laplace
    assert ours.gradient_laplace == theirs.gradient_laplace
    assert ours.bilaplace != theirs.bilaplace
    # only the λ² and λ¹ rows are off
    diff = theirs.bilaplace - ours.bilaplace
    assert diff.coefficient(0) == 0 and diff.coefficient(3) == 0 and diff.coefficient(4) == 0
    assert diff.coefficient(2) == 286 * m


def test_orientation_does_not_change_norms():
    h = Hypersphere(3, 3)
    assert bundle_norm_polys(h).as_tuple() == bundle_norm_polys(h.flipped()).as_tuple()
