from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from heiscurve.quadfield import (
    NotASquare,
    QuadNum,
    UnsupportedFactorization,
    find_field_roots,
    poly_deflate,
    poly_eval,
    rational_sqrt,
    zeta3,
)

rationals = st.fractions(
    max_denominator=12,
    min_value=Fraction(-20),
    max_value=Fraction(20),
)
field_elems = st.builds(lambda p, q: QuadNum(p, q, -3), rationals, rationals)


def quad(p, q=0, d=-3):
    return QuadNum(Fraction(p), Fraction(q), d)


class TestConstruction:
    def test_rejects_positive_d(self):
        with pytest.raises(ValueError):
            QuadNum(Fraction(1), Fraction(0), 5)

    def test_rejects_non_squarefree_d(self):
        with pytest.raises(ValueError):
            QuadNum(Fraction(1), Fraction(0), -12)

    def test_rejects_mixed_fields(self):
        with pytest.raises(ValueError):
            quad(1, d=-3) + quad(1, d=-1)

    def test_integer_coercion(self):
        assert quad(2) + 3 == quad(5)
        assert 3 * quad(2) == quad(6)
        assert 1 - quad(2) == quad(-1)


class TestFieldAxioms:
    @given(field_elems, field_elems, field_elems)
    def test_ring_laws(self, a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a

    @given(field_elems)
    def test_inverse(self, a):
        if a.is_zero():
            with pytest.raises(ZeroDivisionError):
                a.inverse()
        else:
            assert a * a.inverse() == quad(1)

    @given(field_elems)
    def test_norm_is_multiplicative_with_conjugate(self, a):
        assert a * a.conjugate() == QuadNum(a.norm(), Fraction(0), a.d)
        assert a.norm() >= 0  # imaginary field

    @given(field_elems, st.integers(-6, 6))
    def test_integer_powers(self, a, k):
        if a.is_zero() and k < 0:
            return
        expected = quad(1)
        base = a if k >= 0 else a.inverse()
        for _ in range(abs(k)):
            expected = expected * base
        assert a**k == expected


class TestZeta3:
    def test_cube_is_one(self):
        z = zeta3()
        assert z**3 == quad(1)
        assert z != quad(1)

    def test_minimal_polynomial(self):
        z = zeta3()
        assert z * z + z + 1 == quad(0)

    def test_requires_d_minus_3(self):
        with pytest.raises(ValueError):
            zeta3(-1)


class TestSqrt:
    def test_root_of_d(self):
        assert quad(-3).sqrt() == quad(0, 1)

    def test_negative_rational_multiple(self):
        assert quad(-432).sqrt() == quad(0, 12)

    def test_mixed_root(self):
        # sqrt of the cube root of unity is the sixth root (1 + sqrt(-3))/2
        assert zeta3().sqrt() == QuadNum(Fraction(1, 2), Fraction(1, 2), -3)

    def test_sign_convention(self):
        assert quad(4).sqrt() == quad(2)
        # (-(1 + sqrt -3))^2 = -2 + 2 sqrt -3; the root with positive
        # rational part is returned
        assert quad(-2, 2).sqrt() == quad(1, 1)
        assert quad(-3).sqrt() == quad(0, 1)

    def test_not_a_square(self):
        with pytest.raises(NotASquare):
            quad(2).sqrt()
        with pytest.raises(NotASquare):
            quad(0, 1).sqrt()  # sqrt(sqrt(-3)) needs a degree-4 extension

    @given(field_elems)
    def test_square_then_sqrt_roundtrip(self, a):
        r = (a * a).sqrt()
        assert r == a or r == -a

    def test_rational_sqrt(self):
        assert rational_sqrt(Fraction(9, 4)) == Fraction(3, 2)
        assert rational_sqrt(Fraction(2)) is None
        assert rational_sqrt(Fraction(-1)) is None


class TestSerialization:
    @given(field_elems)
    def test_json_roundtrip(self, a):
        assert QuadNum.from_json_dict(a.to_json_dict()) == a

    def test_str_forms(self):
        assert str(quad(3)) == "3"
        assert str(quad(0, 1)) == "√-3"
        assert str(quad(2, -5)) == "2 - 5√-3"


class TestRootFinding:
    def test_division_polynomial_of_the_fermat_cubic(self):
        # 3x^4 - 5184x = 3x(x^3 - 1728)
        coeffs = [quad(0), quad(-5184), quad(0), quad(0), quad(3)]
        roots, outside = find_field_roots(coeffs)
        z = zeta3()
        assert outside == 0
        assert set(roots) == {quad(0), quad(12), 12 * z, 12 * z * z}

    def test_rational_cubic_without_rational_roots(self):
        # x^3 - 2 stays irreducible over the field
        roots, outside = find_field_roots([quad(-2), quad(0), quad(0), quad(1)])
        assert roots == []
        assert outside == 3

    def test_biquadratic_split(self):
        # (x^2 + 3)(x^2 - 2): one factor splits in the field, one does not
        coeffs = [quad(-6), quad(0), quad(1), quad(0), quad(1)]
        roots, outside = find_field_roots(coeffs)
        assert set(roots) == {quad(0, 1), quad(0, -1)}
        assert outside == 2

    def test_resolvent_split_with_odd_term(self):
        # (x^2 + x + 1)(x^2 + 2x + 4) = x^4 + 3x^3 + 7x^2 + 6x + 4,
        # no rational roots, all four roots in Q(sqrt -3)
        coeffs = [quad(4), quad(6), quad(7), quad(3), quad(1)]
        roots, outside = find_field_roots(coeffs)
        z = zeta3()
        assert outside == 0
        assert set(roots) == {z, z * z, 2 * z, 2 * z * z}

    def test_linear_and_quadratic(self):
        roots, outside = find_field_roots([quad(-6), quad(2)])
        assert roots == [quad(3)] and outside == 0
        roots, outside = find_field_roots([quad(3), quad(0), quad(1)])
        assert set(roots) == {quad(0, 1), quad(0, -1)} and outside == 0

    def test_irrational_coefficient_linear_root(self):
        # (x - sqrt(-3)) * (x - 1) has a mixed coefficient list
        s = quad(0, 1)
        coeffs = [s, -1 - s, quad(1)]
        roots, outside = find_field_roots(coeffs)
        assert set(roots) == {s, quad(1)}

    def test_unsupported_quartic(self):
        # x^4 + x + 1 is irreducible with non-real resolvent structure
        coeffs = [quad(1), quad(1), quad(0), quad(0), quad(1)]
        with pytest.raises(UnsupportedFactorization):
            find_field_roots(coeffs)

    def test_degree_bound(self):
        with pytest.raises(UnsupportedFactorization):
            find_field_roots([quad(1)] * 6)

    def test_deflate_checks_root(self):
        with pytest.raises(ValueError):
            poly_deflate([quad(1), quad(1)], quad(5))

    @given(field_elems, field_elems)
    def test_eval_after_deflate(self, r1, r2):
        # (x - r1)(x - r2) expanded, deflated by r1, evaluates to x - r2
        coeffs = [r1 * r2, -(r1 + r2), quad(1)]
        reduced = poly_deflate(coeffs, r1)
        assert poly_eval(reduced, r2) == quad(0)
