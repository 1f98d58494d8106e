#!/usr/bin/env python3
import pytest

from qmatroid.catalog import GRAPHS, catalog_entries
from qmatroid.errors import EnumerationBudgetExceeded, RankAxiomViolation, UnknownLabel, ZeroArgument
from qmatroid.finite_field import prime_field
from qmatroid.graph_fa import cycle_matroid
from qmatroid.kontsevich import u24_matrix
from qmatroid.linalg_fq import FqMatrix
from qmatroid.matroid_core import (
    RankOracleMatroid,
    RepMatroid,
    bases,
    char_poly,
    dual,
    minor,
    rank_of,
    rank_poly_diagonal_check,
    same_rank_function,
    subsets,
    tutte_poly,
    whitney_rank_poly,
)
from qmatroid.polynomials import BiPoly, UniPoly

GF5 = prime_field(5)


def _u24():
    return RepMatroid(u24_matrix(GF5), name='U24')


class TestRankOracleMatroid:

    def test_uniform_rank(self):
        m = RankOracleMatroid.uniform(2, 4)
        assert m.ground == (1, 2, 3, 4)
        assert m.name == 'U24'
        assert rank_of(m, {1}) == 1
        assert rank_of(m, {1, 2, 3}) == 2
        assert m.full_rank == 2

    def test_uniform_bounds(self):
        with pytest.raises(ValueError):
            RankOracleMatroid.uniform(3, 2)

    def test_validation_accepts_uniform_matroids(self):
        RankOracleMatroid.uniform(3, 5, validate=True)

    def test_validation_rejects_rank_jumps(self):
        with pytest.raises(RankAxiomViolation) as excinfo:
            RankOracleMatroid((1, 2), lambda subset: 2 * len(subset), name='bad', validate=True)
        assert 'changes the rank by 2' in str(excinfo.value)

    def test_validation_rejects_nonzero_empty_rank(self):
        with pytest.raises(RankAxiomViolation):
            RankOracleMatroid((1,), lambda subset: 1, name='bad', validate=True)

    def test_unknown_label(self):
        with pytest.raises(UnknownLabel):
            RankOracleMatroid.uniform(2, 4).rank_of({9})

    def test_loops_and_coloops(self):
        m = RankOracleMatroid((1, 2), lambda subset: len(subset - {1}))
        assert m.is_loop(1)
        assert m.is_coloop(2)
        assert not m.is_coloop(1)

    def test_minors(self):
        m = RankOracleMatroid.uniform(2, 4)
        contracted = minor(m, 'contract', {1})
        assert contracted.ground == (2, 3, 4)
        assert same_rank_function(contracted, RankOracleMatroid.uniform(1, 3, labels=(2, 3, 4)))
        deleted = minor(m, 'delete', {1})
        assert same_rank_function(deleted, RankOracleMatroid.uniform(2, 3, labels=(2, 3, 4)))
        with pytest.raises(ValueError):
            minor(m, 'merge', {1})

    def test_dual_of_uniform(self):
        m = dual(RankOracleMatroid.uniform(1, 3))
        assert m.rank_of(()) == 0
        assert same_rank_function(m, RankOracleMatroid.uniform(2, 3))

    def test_relabel(self):
        m = RankOracleMatroid.uniform(1, 2).relabel({1: 'a'})
        assert m.ground == ('a', 2)
        assert m.rank_of({'a', 2}) == 1


class TestRepMatroid:

    def test_dependent_rows_are_dropped(self):
        matrix = FqMatrix.from_values(GF5, [[1, 0, 1], [2, 0, 2], [0, 1, 1]])
        m = RepMatroid(matrix)
        assert m.full_rank == 2
        assert m.rows == (0, 2)
        assert m.ground == (1, 2, 3)

    def test_u24_matches_the_uniform_oracle(self):
        assert same_rank_function(_u24(), RankOracleMatroid.uniform(2, 4))

    def test_bases_with_determinants(self):
        found = dict(bases(_u24()))
        assert len(found) == 6
        assert found[(1, 2)] == GF5.one
        assert found[(3, 4)] == GF5.element(-2)

    def test_rank_zero_bases(self):
        loops = RepMatroid(FqMatrix.from_values(GF5, [[0, 0]]))
        assert loops.full_rank == 0
        assert loops.bases() == [((), GF5.one)]

    def test_contract_matches_oracle(self):
        m = _u24()
        for subset in ({3}, {1, 4}, {2, 3, 4}):
            assert same_rank_function(m.contract(subset), m.as_oracle().contract(subset))

    def test_contract_loop_deletes_it(self):
        m = RepMatroid(FqMatrix.from_values(GF5, [[1, 0, 1]]))
        contracted = m.contract({2})
        assert contracted.ground == (1, 3)
        assert contracted.full_rank == 1

    def test_dual_matches_oracle_dual(self):
        m = _u24()
        assert same_rank_function(m.dual(), m.as_oracle().dual())
        graph_like = RepMatroid(FqMatrix.from_values(GF5, [[1, 0, 1, 0], [0, 1, 1, 0]]))
        assert same_rank_function(graph_like.dual(), graph_like.as_oracle().dual())

    def test_dual_of_loop_is_coloop(self):
        loop = RepMatroid(FqMatrix.from_values(GF5, [[0]]))
        coloop = loop.dual()
        assert coloop.full_rank == 1
        assert coloop.is_coloop(1)

    def test_restrict_keeps_labels(self):
        m = _u24().restrict({2, 4})
        assert m.ground == (2, 4)
        assert m.full_rank == 2


class TestDuality:

    @pytest.mark.parametrize('name', ['U24', 'K4', 'THETA'])
    def test_dual_of_restriction_is_contraction_of_dual(self, name):
        m = _u24() if name == 'U24' else cycle_matroid(GRAPHS[name], GF5)
        oracle = m.as_oracle()
        for subset in subsets(m.ground):
            rest = set(m.ground) - subset
            assert same_rank_function(oracle.restrict(subset).dual(), oracle.dual().contract(rest))
            if 0 < len(subset) < len(m.ground):
                assert same_rank_function(m.restrict(subset).dual(), m.dual().contract(rest))

    @pytest.mark.parametrize('subject', catalog_entries(), ids=lambda subject: subject.name)
    def test_rank_axioms_on_the_catalog(self, subject):
        subject.matroid(validate=True)
        if subject.represent is not None:
            subject.matroid(prime_field(7)).as_oracle().validate()


class TestInvariants:

    def test_char_poly_of_u24(self):
        assert str(char_poly(_u24())) == 'x^2 - 4x + 3'
        assert char_poly(RankOracleMatroid.uniform(2, 4))(5) == 8

    def test_char_poly_vanishes_with_a_loop(self):
        loop = RankOracleMatroid((1,), lambda subset: 0)
        assert char_poly(loop).is_zero()
        coloop = RankOracleMatroid((1,), lambda subset: len(subset))
        assert char_poly(coloop) == UniPoly((-1, 1))

    def test_whitney_rank_poly_of_u24(self):
        expected = BiPoly.from_dict({(2, 0): 1, (1, 0): 4, (0, 0): 6, (0, 1): 4, (0, 2): 1})
        assert whitney_rank_poly(_u24()) == expected

    def test_tutte_poly_of_u24(self):
        t = tutte_poly(RankOracleMatroid.uniform(2, 4))
        assert t.render(('x', 'y')) == 'x^2 + y^2 + 2*x + 2*y'
        assert t(1, 1) == 6

    def test_tutte_duality(self):
        m = RankOracleMatroid.uniform(2, 5)
        assert tutte_poly(m.dual()) == tutte_poly(m).swap()
        assert tutte_poly(m.dual()) == tutte_poly(RankOracleMatroid.uniform(3, 5))

    def test_rank_poly_diagonal(self):
        assert rank_poly_diagonal_check(_u24(), 2)
        assert rank_poly_diagonal_check(RankOracleMatroid.uniform(1, 3), -3)
        with pytest.raises(ZeroArgument):
            rank_poly_diagonal_check(_u24(), 0)

    def test_subsets_respects_budget(self):
        assert len(list(subsets((1, 2, 3)))) == 8
        with pytest.raises(EnumerationBudgetExceeded):
            subsets(tuple(range(20)), budget=1000)
