#!/usr/bin/env python3
from fractions import Fraction

import pytest
import sympy

from qmatroid.polynomials import BiPoly, UniPoly


class TestUniPoly:

    def test_trailing_zeros_are_trimmed(self):
        assert UniPoly((1, 2, 0, 0)).coeffs == (1, 2)
        assert UniPoly((0, 0)).is_zero()
        assert UniPoly().degree == float('-inf')
        assert UniPoly((3, 0, 1)).degree == 2

    def test_str(self):
        assert str(UniPoly((3, -4, 1))) == 'x^2 - 4x + 3'
        assert str(UniPoly((0, 2, -3, 1))) == 'x^3 - 3x^2 + 2x'
        assert str(UniPoly((-1, 1))) == 'x - 1'
        assert str(UniPoly((0, -1))) == '-x'
        assert str(UniPoly()) == '0'

    def test_evaluation_is_exact(self):
        p = UniPoly((3, -4, 1))
        assert p(5) == 8
        assert p(Fraction(1, 2)) == Fraction(5, 4)

    def test_arithmetic(self):
        p, q = UniPoly((-1, 1)), UniPoly((1, 1))
        assert p * q == UniPoly((-1, 0, 1))
        assert p + q == UniPoly((0, 2))
        assert p - p == UniPoly()
        assert p * 3 == UniPoly((-3, 3))
        assert -p == UniPoly((1, -1))

    def test_interpolate(self):
        # x(x - 1)(x - 2) through four points
        points = [(x, x * (x - 1) * (x - 2)) for x in range(4)]
        assert UniPoly.interpolate(points) == UniPoly((0, 2, -3, 1))
        assert UniPoly.interpolate([]) == UniPoly()

    def test_sympy_round_trip(self):
        x = sympy.Symbol('x')
        p = UniPoly.from_expr((x - 1) * (x - 3))
        assert p == UniPoly((3, -4, 1))
        assert sympy.expand(p.as_expr() - (x - 1) * (x - 3)) == 0


class TestBiPoly:

    def test_terms_are_merged_and_zeros_dropped(self):
        p = BiPoly((((1, 0), 2), ((1, 0), -2), ((0, 1), 3)))
        assert p.as_dict() == {(0, 1): 3}
        assert p.coefficient(0, 1) == 3
        assert p.coefficient(5, 5) == 0
        assert BiPoly().is_zero()

    def test_evaluation_with_negative_exponents(self):
        p = BiPoly.from_dict({(1, -1): 1, (0, 0): 2})
        assert p(3, 2) == Fraction(3, 2) + 2

    def test_arithmetic(self):
        u = BiPoly.from_dict({(1, 0): 1})
        v = BiPoly.from_dict({(0, 1): 1})
        assert (u + v) * (u - v) == BiPoly.from_dict({(2, 0): 1, (0, 2): -1})
        assert (u + v) * 2 == BiPoly.from_dict({(1, 0): 2, (0, 1): 2})
        assert (u * v * 3).swap() == u * v * 3
        assert (u * v * v).swap() == u * u * v

    def test_shift(self):
        # u^2 + v at (u + 1, v - 1) is u^2 + 2u + v
        p = BiPoly.from_dict({(2, 0): 1, (0, 1): 1})
        assert p.shift(1, -1) == BiPoly.from_dict({(2, 0): 1, (1, 0): 2, (0, 1): 1})

    def test_shift_rejects_negative_exponents(self):
        with pytest.raises(ValueError):
            BiPoly.from_dict({(0, -1): 1}).shift(1, 1)

    def test_specialize(self):
        p = BiPoly.from_dict({(2, 0): 1, (1, 1): 3, (0, 2): 2})
        assert p.specialize(v=1) == UniPoly((2, 3, 1))
        assert p.specialize(u=2) == UniPoly((4, 6, 2))
        assert p.specialize(u=1, v=1) == 6
        with pytest.raises(ValueError):
            p.specialize()
        with pytest.raises(ValueError):
            p.specialize(v=Fraction(1, 2))

    def test_render(self):
        p = BiPoly.from_dict({(2, 0): 1, (1, 0): 2, (0, 2): 1, (0, 1): 2})
        assert p.render(('x', 'y')) == 'x^2 + y^2 + 2*x + 2*y'
        assert BiPoly.from_dict({(0, 0): -3, (1, 1): 1}).render() == 'u*v - 3'
        assert BiPoly().render() == '0'
