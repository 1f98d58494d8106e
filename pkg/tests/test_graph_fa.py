#!/usr/bin/env python3
from fractions import Fraction

import pytest

from qmatroid.catalog import GRAPHS
from qmatroid.errors import InvalidQ, LoopOrIsthmus, UnknownLabel, ZeroPropagatorConstant
from qmatroid.finite_field import prime_field
from qmatroid.graph_fa import (
    Multigraph,
    bad_coloring_poly,
    bad_flow_poly,
    chromatic_poly,
    chromatic_poly_from_matroid,
    count_nowhere_zero_flows,
    count_proper_colorings,
    cycle_matroid,
    deletion_contraction_check,
    deletion_contraction_sides,
    dichromatic_poly,
    fa_closed_form_check,
    fa_closed_form_sides,
    fa_rescaling_check,
    flow_contraction_polys,
    flow_poly,
    fourier_duality_check,
    graph_identity_checks,
    graph_rank,
    incidence_matrix,
    vacuum_fa_coordinate,
    vacuum_fa_momentum,
)
from qmatroid.linalg_fq import FqMatrix
from qmatroid.matroid_core import char_poly, same_rank_function
from qmatroid.polynomials import BiPoly, UniPoly

GF5 = prime_field(5)
K2, K3, K4, C4 = GRAPHS['K2'], GRAPHS['K3'], GRAPHS['K4'], GRAPHS['C4']

PROPAGATORS = [(1, -1), (2, 3), (Fraction(1, 2), Fraction(-3, 4))]


class TestMultigraph:

    def test_rejects_unknown_vertices(self):
        with pytest.raises(ValueError):
            Multigraph.build([1, 2], [(1, 1, 3)])

    def test_rejects_duplicate_edges(self):
        with pytest.raises(ValueError):
            Multigraph.build([1, 2], [(1, 1, 2), (1, 2, 1)])

    def test_components(self):
        g = Multigraph.build([1, 2, 3, 4], [(1, 1, 2), (2, 3, 3)])
        assert g.component_count == 3
        assert g.components[0] == frozenset({1, 2})

    def test_contraction(self):
        contracted = K3.contract_edge(1)
        assert contracted.vertices == (1, 3)
        assert len(contracted.edges) == 2
        assert not contracted.has_loops()
        assert K3.contract_edges([1, 2]).has_loops()

    def test_isthmus(self):
        assert K2.is_isthmus(1)
        assert not K3.is_isthmus(1)
        assert GRAPHS['K3+BRIDGE'].is_isthmus(4)
        with pytest.raises(UnknownLabel):
            K3.edge(9)

    def test_graph_rank(self):
        assert graph_rank(K4, []) == 0
        assert graph_rank(K4, K4.edge_ids) == 3
        assert graph_rank(GRAPHS['K3+LOOP'], [4]) == 0


class TestCycleMatroid:

    def test_incidence_matrix(self):
        assert incidence_matrix(K2, GF5) == FqMatrix.from_values(GF5, [[-1], [1]], row_labels=(1, 2), col_labels=(1,))
        loop_column = incidence_matrix(GRAPHS['K3+LOOP'], GF5).column(3)
        assert all(value.is_zero() for value in loop_column)

    def test_cycle_matroid_matches_graph_rank(self):
        for name in ('K4', 'THETA', 'K3+LOOP'):
            g = GRAPHS[name]
            m = cycle_matroid(g, GF5)
            assert m.full_rank == len(g.vertices) - g.component_count
            assert same_rank_function(m, m.as_oracle())

    def test_chromatic_polynomial(self):
        assert str(chromatic_poly(K3)) == 'x^3 - 3x^2 + 2x'
        assert chromatic_poly_from_matroid(K3) == chromatic_poly(K3)
        assert chromatic_poly_from_matroid(K4) == chromatic_poly(K4)
        assert count_proper_colorings(K4, 4) == 24

    def test_graph_with_loop_has_no_colorings(self):
        assert chromatic_poly(GRAPHS['K3+LOOP']).is_zero()

    def test_flow_polynomial(self):
        assert str(flow_poly(C4)) == 'x - 1'
        assert flow_poly(K4) == UniPoly((-6, 11, -6, 1))
        assert count_nowhere_zero_flows(C4, 3) == 2
        assert count_nowhere_zero_flows(K4, 3) == 0
        assert flow_poly(K3) == char_poly(cycle_matroid(K3, GF5).dual())


class TestAmplitudes:

    def test_standard_propagator_counts_colorings_and_flows(self):
        assert vacuum_fa_coordinate(K3, 3, 1, -1) == 6
        assert vacuum_fa_momentum(K3, 3, 1, -1) == 2
        assert vacuum_fa_momentum(K4, 4, 1, -1) == 6

    def test_single_edge(self):
        a, b = Fraction(2), Fraction(3)
        assert vacuum_fa_coordinate(K2, 5, a, b) == 25 * a + 5 * b
        assert vacuum_fa_momentum(K2, 5, a, b) == a + b

    def test_reduced_coordinate_amplitude(self):
        assert vacuum_fa_coordinate(K3, 3, 1, -1, reduced=True) == 2
        g = Multigraph.build([1, 2, 3], [(1, 1, 2)])
        assert vacuum_fa_coordinate(g, 4, 2, 3, reduced=True) * 4**2 == vacuum_fa_coordinate(g, 4, 2, 3)

    def test_q_must_be_at_least_two(self):
        with pytest.raises(InvalidQ):
            vacuum_fa_coordinate(K3, 1, 1, -1)
        with pytest.raises(InvalidQ):
            vacuum_fa_momentum(K3, 0, 1, -1)

    @pytest.mark.parametrize('a, b', PROPAGATORS)
    @pytest.mark.parametrize('name', ['K3', 'C4', 'THETA', 'K3+LOOP'])
    def test_fourier_duality(self, name, a, b):
        assert fourier_duality_check(GRAPHS[name], 3, a, b)

    def test_orientation_does_not_matter(self):
        flipped = K3.reversed_edge(2)
        assert vacuum_fa_momentum(flipped, 4, 2, 3) == vacuum_fa_momentum(K3, 4, 2, 3)


class TestDeletionContraction:

    @pytest.mark.parametrize('space', ['coordinate', 'momentum'])
    @pytest.mark.parametrize('a, b', PROPAGATORS)
    def test_on_every_edge_of_theta(self, space, a, b):
        theta = GRAPHS['THETA']
        for edge_id in theta.edge_ids:
            assert deletion_contraction_check(theta, edge_id, 3, a, b, space)

    def test_sides_for_the_triangle(self):
        # coordinate K3 with a = 1, b = -1 at q = 3: 6 = 12 - 6
        assert deletion_contraction_sides(K3, 1, 3, 1, -1) == (6, 6)

    def test_loops_and_isthmuses_are_rejected(self):
        with pytest.raises(LoopOrIsthmus):
            deletion_contraction_check(K2, 1, 3, 1, -1)
        with pytest.raises(LoopOrIsthmus):
            deletion_contraction_check(GRAPHS['K3+LOOP'], 4, 3, 1, -1)

    def test_unknown_space(self):
        with pytest.raises(ValueError):
            deletion_contraction_check(K3, 1, 3, 1, -1, space='position')


class TestClosedForms:

    def test_dichromatic_polynomial_of_an_edge(self):
        assert dichromatic_poly(K2) == BiPoly.from_dict({(2, 0): 1, (1, 0): 1})

    @pytest.mark.parametrize('space', ['coordinate', 'momentum'])
    @pytest.mark.parametrize('name', ['K3', 'C4', 'THETA', 'K3+BRIDGE'])
    def test_closed_forms(self, name, space):
        assert fa_closed_form_check(GRAPHS[name], 3, 2, 3, space)
        assert fa_closed_form_check(GRAPHS[name], 4, Fraction(1, 2), -1, space)

    def test_closed_form_sides_for_an_edge(self):
        assert fa_closed_form_sides(K2, 5, 2, 3) == (65, 65)
        assert fa_closed_form_sides(K2, 5, 2, 3, 'momentum') == (5, 5)

    def test_closed_forms_need_nonzero_constants(self):
        with pytest.raises(ZeroPropagatorConstant):
            fa_closed_form_check(K3, 3, 0, 1)
        with pytest.raises(ZeroPropagatorConstant):
            fa_closed_form_check(K3, 3, 1, 0)

    def test_bad_polynomials_at_zero(self):
        assert bad_coloring_poly(K3)(4, 0) == chromatic_poly(K3)(4)
        assert bad_flow_poly(K3)(4, 0) == flow_poly(K3)(4)
        assert bad_flow_poly(K4)(5, 0) == 24

    @pytest.mark.parametrize('a, b', PROPAGATORS)
    def test_rescaling(self, a, b):
        assert fa_rescaling_check(C4, 3, a, b)
        assert fa_rescaling_check(GRAPHS['THETA'], 3, a, b)

    def test_rescaling_needs_nonzero_a(self):
        with pytest.raises(ZeroPropagatorConstant):
            fa_rescaling_check(K3, 3, 0, 1)


class TestGraphIdentities:

    def test_flow_contraction_expansion_of_c4(self):
        lhs, rhs = flow_contraction_polys(C4)
        assert lhs == rhs
        assert lhs(3) == 162

    @pytest.mark.parametrize('name', ['K2', 'K3', 'C4', 'K3+LOOP', 'K3+BRIDGE'])
    def test_all_graph_identities_pass(self, name):
        reports = graph_identity_checks(GRAPHS[name], 3)
        assert [r.identity for r in reports] == ['graph-zeta-restriction', 'graph-zeta-dual', 'graph-contraction-sum']
        assert all(r.passed for r in reports)

    def test_zeta_poles(self):
        with pytest.raises(InvalidQ):
            graph_identity_checks(K3, 1)
