from fractions import Fraction

import pytest

from polystab.core.enums import Energy, Source
from polystab.core.errors import IrrationalFormError, OffSmallSphereError, ValidationError
from polystab.exact import LambdaPoly, MCoeffPoly, QuadExtScalar, interpolate_m
from polystab.forms import (
    FormRegistry,
    QHAT_TERMS,
    QuadraticFormPoly,
    printed_fixture,
    printed_table,
    q4_form,
    q4_from_general_form,
    q4_from_small_sphere_form,
    q4es_form,
    qhat_closed_form,
    qhat_form,
    term_values,
)
from polystab.geometry import Hypersphere

LAM = LambdaPoly.lam()

# general-form Q4 at a = 1/2, rows ascending in m
DERIVED_Q4 = MCoeffPoly.from_rows(
    [
        [0, 0, 0, 0, -216],
        [588, -420, 39, -36],
        [480, 0, 25],
        [72, 10],
        [1],
    ]
)


class TestGeneralForm:
    def test_symbolic_m_rows(self):
        samples = [(m, q4_from_general_form(Hypersphere(m, 3)).poly) for m in range(1, 9)]
        assert interpolate_m(samples) == DERIVED_Q4

    def test_circle_first_level(self):
        qf = q4_from_general_form(Hypersphere(1, 3))
        assert qf.evaluate(4) == 14052
        assert qf.evaluate(0) == -216

    @pytest.mark.parametrize("m", [1, 2, 3, 6])
    def test_harmonic_limit(self, m):
        qf = q4_from_general_form(Hypersphere(m, 0))
        assert qf.poly == LAM**2 * (LAM - m) ** 2

    def test_orientation_invariant(self):
        h = Hypersphere(3, Fraction(5, 4))
        assert q4_from_general_form(h).poly == q4_from_general_form(h.flipped()).poly

    def test_off_small_sphere_is_allowed(self):
        qf = q4_from_general_form(Hypersphere(2, 8), K=2)
        assert qf.K == 2
        assert qf.poly.is_rational_only()
        assert qf.coefficient(4) == 1


class TestSmallSphereForm:
    @pytest.mark.parametrize("m", range(1, 8))
    def test_composition_matches_general(self, m):
        h = Hypersphere(m, 3)
        assert q4_from_small_sphere_form(h, Source.COMPOSITION).poly == q4_from_general_form(h).poly

    @pytest.mark.parametrize("m", range(1, 8))
    def test_printed_norms_reproduce_printed_table(self, m):
        h = Hypersphere(m, 3)
        assert q4_from_small_sphere_form(h, Source.PRINTED).poly == printed_fixture(Energy.E4, m).poly

    def test_route_label(self):
        qf = q4_from_small_sphere_form(Hypersphere(2, 3), Source.PRINTED)
        assert qf.route == "small-sphere/printed"
        assert qf.to_dict()["norms"] == "printed"

    def test_refuses_other_radius(self):
        with pytest.raises(OffSmallSphereError):
            q4_from_small_sphere_form(Hypersphere(2, 1))
        with pytest.raises(OffSmallSphereError):
            q4_form(Hypersphere(2, 3), Source.PRINTED, K=2)

    def test_unknown_norms(self):
        with pytest.raises(ValidationError):
            q4_from_small_sphere_form(Hypersphere(2, 3), Source.GENERAL)


class TestPrinted:
    def test_printed_circle_first_level(self):
        assert printed_fixture(Energy.E4, 1).evaluate(4) == 17764

    def test_printed_es_at_m2(self):
        assert printed_fixture(Energy.ES4, 2).evaluate(8) == 119552

    @pytest.mark.parametrize("m", range(1, 6))
    def test_es_table_is_q4_plus_hat(self, m):
        es = q4es_form(Hypersphere(m, 3), route=Source.PRINTED)
        assert es.poly == printed_fixture(Energy.ES4, m).poly

    def test_table_rows(self):
        assert printed_table(Energy.HAT).m_polynomial(1) == (-12, 24, -15, 3)


class TestQHat:
    @pytest.mark.parametrize("m", range(1, 8))
    @pytest.mark.parametrize("t", [Fraction(3), Fraction(1), Fraction(9, 4)])
    def test_closed_form(self, m, t):
        h = Hypersphere(m, t)
        assert qhat_form(h).poly == qhat_closed_form(h)

    def test_curvature_squared(self):
        h = Hypersphere(4, 3)
        assert qhat_form(h, K=3).poly == qhat_form(h).poly * 9

    def test_printed_hat_matches_closed_form(self):
        for m in range(1, 8):
            assert printed_fixture(Energy.HAT, m).poly == qhat_closed_form(Hypersphere(m, 3))

    def test_sphere_two_terms(self):
        values = term_values(QHAT_TERMS, Hypersphere(2, 3))
        at_first_level = [v(8) for v in values.values()]
        assert at_first_level == [192, -96, 192, -384, 192, -96]
        assert sum(at_first_level) == 0

    def test_low_dimensions_vanish(self):
        assert qhat_form(Hypersphere(1, 3)).poly.is_zero()
        assert qhat_form(Hypersphere(2, 3)).poly.is_zero()


class TestQuadraticFormPoly:
    def test_refuses_sqrt_part(self):
        with pytest.raises(IrrationalFormError):
            QuadraticFormPoly(Energy.E4, Source.GENERAL, 1, Fraction(3), Fraction(1), LambdaPoly([QuadExtScalar(0, 1, 3)]))

    def test_to_dict(self):
        qf = q4_from_general_form(Hypersphere(1, 3))
        data = qf.to_dict()
        assert data["coeffs"] == ["-216", "171", "505", "82", "1"]
        assert "norms" not in data


class TestRegistry:
    def test_defaults_registered(self):
        qf = FormRegistry.create(Energy.ES4, Source.GENERAL, Hypersphere(3, 3))
        assert qf.energy == Energy.ES4
        assert (Energy.HAT, Source.GENERAL) in FormRegistry.registered()

    def test_strings_accepted(self):
        qf = FormRegistry.create("e4", "small-sphere", Hypersphere(2, 3), norms="printed")
        assert qf.route == "small-sphere/printed"

    def test_unknown_pair(self):
        with pytest.raises(ValidationError):
            FormRegistry.create(Energy.HAT, Source.SMALL_SPHERE, Hypersphere(2, 3))
        with pytest.raises(ValidationError):
            FormRegistry.create("e5", Source.GENERAL, Hypersphere(2, 3))

    def test_printed_hat_guarded(self):
        with pytest.raises(OffSmallSphereError):
            FormRegistry.create(Energy.HAT, Source.PRINTED, Hypersphere(3, 1))
