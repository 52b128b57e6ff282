from fractions import Fraction

import pytest

from polystab.core.errors import (
    DomainError,
    InconsistentSamplesError,
    RadicandMismatchError,
    RootBoundError,
    ValidationError,
    ZeroDivisorError,
)
from polystab.exact import (
    LambdaPoly,
    MCoeffPoly,
    QuadExtScalar,
    cauchy_root_bound,
    format_m_poly,
    interpolate_m,
    lagrange_coefficients,
    parse_rational,
    quadext_arith,
    to_rational,
)


class TestRational:
    def test_parse(self):
        assert parse_rational("3/12") == Fraction(1, 4)
        assert parse_rational(" -7 ") == Fraction(-7)

    @pytest.mark.parametrize("text", ["0.5", "1e3", "", "abc", "1/0"])
    def test_parse_refuses(self, text):
        with pytest.raises(ValidationError):
            parse_rational(text)

    def test_floats_and_bools_refused(self):
        with pytest.raises(ValidationError):
            to_rational(0.5)
        with pytest.raises(ValidationError):
            to_rational(True)


class TestQuadExtScalar:
    def test_sqrt_squares_to_radicand(self):
        s = QuadExtScalar.sqrt(3)
        assert s * s == 3
        assert (s * s).is_rational()

    def test_division_by_conjugate(self):
        x = QuadExtScalar(1, 1, 2)
        inv = 1 / x
        assert inv == QuadExtScalar(-1, 1, 2)
        assert x * inv == 1

    def test_field_ops(self):
        a = QuadExtScalar(Fraction(1, 2), 3, 5)
        b = QuadExtScalar(-2, Fraction(1, 3), 5)
        assert quadext_arith(quadext_arith(a, b, "add"), b, "sub") == a
        assert quadext_arith(quadext_arith(a, b, "mul"), b, "div") == a
        with pytest.raises(ValidationError):
            quadext_arith(a, b, "pow")  # type: ignore[arg-type]

    def test_zero_division(self):
        with pytest.raises(ZeroDivisorError):
            QuadExtScalar(1, 1, 3) / QuadExtScalar(0, 0, 3)

    def test_square_radicand_collapses_by_value(self):
        # sqrt(4) is 2, so 2 - sqrt(4) is zero even though the parts are kept
        x = QuadExtScalar(2, -1, 4)
        assert x.is_zero()
        assert x.rational_value() == 0
        assert QuadExtScalar(1, 1, 4) == 3

    def test_radicand_mismatch(self):
        with pytest.raises(RadicandMismatchError):
            QuadExtScalar(0, 1, 2) + QuadExtScalar(0, 1, 3)

    def test_negative_radicand(self):
        with pytest.raises(DomainError):
            QuadExtScalar(1, 1, -1)

    def test_sign_and_order(self):
        # 2 - sqrt(3) > 0, 1 - sqrt(3) < 0
        assert QuadExtScalar(2, -1, 3).sign() == 1
        assert QuadExtScalar(1, -1, 3).sign() == -1
        assert QuadExtScalar(1, -1, 3) < 0
        assert QuadExtScalar(0, 1, 3) > 1

    def test_irrational_value_raises(self):
        with pytest.raises(ValidationError):
            QuadExtScalar(0, 1, 3).rational_value()

    def test_str(self):
        assert str(QuadExtScalar(1, -2, 3)) == "1-2√3"
        assert str(QuadExtScalar(0, 1, 3)) == "√3"

    def test_dict_keeps_value(self):
        x = QuadExtScalar(Fraction(-3, 7), 5, 11)
        assert QuadExtScalar.from_dict(x.to_dict()) == x


class TestLambdaPoly:
    def test_trailing_zeros_trimmed(self):
        p = LambdaPoly([1, 2, 0, 0])
        assert p.degree == 1
        assert LambdaPoly.zero().degree == -1

    def test_arithmetic(self):
        lam = LambdaPoly.lam()
        p = (lam - 1) * (lam + 1)
        assert p == LambdaPoly([-1, 0, 1])
        assert p(3) == 8
        assert (lam**2 - p) == 1

    def test_rational_operand_is_retagged(self):
        s = LambdaPoly([QuadExtScalar(0, 1, 3)])
        p = s + LambdaPoly([1, 1])
        assert p.t == 3
        assert not p.is_rational_only()
        assert (s * s).is_rational_only()

    def test_irrational_mismatch(self):
        with pytest.raises(RadicandMismatchError):
            LambdaPoly([QuadExtScalar(0, 1, 2)]) + LambdaPoly([QuadExtScalar(0, 1, 3)])

    def test_rational_coeffs_refuses_sqrt(self):
        with pytest.raises(ValidationError):
            LambdaPoly([QuadExtScalar(0, 1, 3)]).rational_coeffs()

    def test_str(self):
        assert str(LambdaPoly([-216, 0, 1])) == "λ^2 - 216"


class TestInterpolation:
    def test_lagrange(self):
        # 2m^2 - 3m + 1
        pts = [(m, 2 * m * m - 3 * m + 1) for m in (1, 2, 3)]
        assert lagrange_coefficients(pts) == (1, -3, 2)

    def test_duplicate_nodes(self):
        with pytest.raises(InconsistentSamplesError):
            lagrange_coefficients([(1, 1), (1, 2)])

    def test_interpolate_m_recovers_rows(self):
        target = MCoeffPoly.from_rows([[0, 0, 0, 0, -216], [588, -420, 39, -36], [480, 0, 25], [72, 10], [1]])
        samples = [(m, target.evaluate(m)) for m in range(1, 8)]
        assert interpolate_m(samples) == target

    def test_interpolate_m_holdout_detects_wrong_degree(self):
        samples = [(m, LambdaPoly([m**5])) for m in range(1, 8)]
        with pytest.raises(InconsistentSamplesError):
            interpolate_m(samples, max_degree=4)

    def test_format(self):
        assert format_m_poly((Fraction(588), Fraction(-420), Fraction(39), Fraction(-36))) == "-36m^3+39m^2-420m+588"
        assert format_m_poly(()) == "0"


class TestCauchyBound:
    def test_bound_exceeds_roots(self):
        p = LambdaPoly([-216, 0, 1])
        bound = cauchy_root_bound(p)
        assert bound == 217
        assert p(bound) > 0

    def test_irrational_coefficient_bounded_above(self):
        p = LambdaPoly([QuadExtScalar(0, -10, 3), 1])
        bound = cauchy_root_bound(p)
        assert bound > 1 + 10 * Fraction(1732, 1000)
        assert p(bound) > 0

    def test_requires_positive_lead(self):
        with pytest.raises(RootBoundError):
            cauchy_root_bound(LambdaPoly([1, -1]))
        with pytest.raises(RootBoundError):
            cauchy_root_bound(LambdaPoly.zero())
