#!/usr/bin/env python3
import pytest

from qmatroid.demo import run_demo
from qmatroid.errors import ParseError


class TestDemo:

    def test_u24_at_five(self):
        lines = run_demo('u24', 5)
        assert 'chi_U24(x) = x^2 - 4x + 3' in lines
        assert 'degenerate weight vectors (r* = 0): 4' in lines
        assert 'g(5,2) = 1/5' in lines
        assert '(q−1)(q−4) = 4; g(5,2)·Σ η = 4' in lines
        assert 'alpha-sum = 8; (q−1)(q−3) = 8' in lines
        assert lines[-1] == '[pass]holds at q = 5[/pass]'

    def test_u24_spot_checks(self):
        lines = run_demo('u24', 3)
        assert '  alpha = (1, 1, 1, 1): s = 0, det L = 0' in lines
        assert lines[-1] == '[pass]holds at q = 3[/pass]'

    def test_u24_at_nine_depends_on_the_sign_convention(self):
        assert run_demo('u24', 9)[-1] == '[fail]does not hold at q = 9[/fail]'
        lines = run_demo('u24', 9, convention='cardinality')
        assert '(q−1)(q−4) = 40; g(9,2)·Σ η = 40' in lines
        assert lines[-1] == '[pass]holds at q = 9[/pass]'

    def test_c4(self):
        lines = run_demo('c4', 3)
        assert '  |H| = 1: 4 subgraphs, 4 loop-free quotients, contribution -48' in lines
        assert '  |H| = 3: 4 subgraphs, 0 loop-free quotients, contribution 0' in lines
        assert 'sum = 162; (q−1)q⁴ = 162; q^|V| F_C4(q) = 162' in lines
        assert lines[-1] == '[pass]holds[/pass]'

    def test_unknown_demo(self):
        with pytest.raises(ParseError):
            run_demo('k5', 3)
