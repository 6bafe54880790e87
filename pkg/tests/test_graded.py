"""
"""

from __future__ import absolute_import, division, print_function

import pytest
from hypothesis import given, settings, strategies as st

from fricke import util, graded
from fricke.charpoly import CharPolynomial, var, PRIMED, make_mono
from fricke.freegroup import parse_word
from fricke.graded import (basis_T, basis_S, relations_deg2, horowitz, jet3,
                           jet_of_word, Jet, Reducer, get_reducer,
                           independence_check, verify_relations,
                           degree2_monomials)
from fricke.reduce import trace_reduce_primed


def tp(idx, n):
    return var(idx, n, PRIMED)



@pytest.mark.parametrize('n, size', [(2, 3), (3, 7), (4, 14), (5, 25),
                                     (6, 41), (7, 63)])
def test_basis_T_size(n, size):
    assert len(basis_T(n)) == size


@pytest.mark.parametrize('n, size', [(2, 6), (3, 27), (4, 91)])
def test_basis_S_size(n, size):
    assert len(basis_S(n)) == size


def test_basis_order_and_labels():
    T = basis_T(3)
    assert T.labels == ['t_1', 't_2', 't_3', 't_12', 't_13', 't_23', 't_123']
    S = basis_S(3)
    assert S[0] == ((1,), (1,))
    assert S.labels[-3:] == ['t_12.t_123', 't_13.t_123', 't_23.t_123']
    assert graded.parse_mono_label('t_12.t_123') == ((1, 2), (1, 2, 3))
    with pytest.raises(ValueError):
        basis_S(1)


def test_relations_small_ranks():
    assert len(relations_deg2(2)) == 0
    rels = relations_deg2(3)
    assert rels.tags() == [graded.DETERMINANT]
    (p,) = rels.polynomials()
    assert p.to_unprimed() == horowitz(3)


@pytest.mark.parametrize('n', [2, 3, 4, 5, 6])
def test_relations_have_no_linear_part(n):
    for tag, label, p in relations_deg2(n):
        assert p.constant_term() == 0, label
        assert p.graded_part(1).is_zero(), label


@pytest.mark.parametrize('n, rank', [(2, 0), (3, 1), (4, 14)])
def test_independence(n, rank):
    out = independence_check(n)
    assert out['rank'] == rank
    assert out['expected'] == rank
    assert out['basis_S'] == len(basis_S(n))


def test_independence_range():
    with pytest.raises(ValueError):
        independence_check(7)


def test_every_monomial_reduces():
    for n in (4, 5):
        reducer = get_reducer(n)
        assert reducer.missing == []
        assert reducer.excess == []
        for m in degree2_monomials(n):
            quad = reducer.rewrite(CharPolynomial(n, {m: 1}, PRIMED))
            assert all(k in reducer.S for k in quad)


def test_shuffled_relations_give_same_jets():
    base = get_reducer(4)
    shuffled = Reducer(4, shuffle_seed=5)
    assert shuffled.pivots == base.pivots
    p = tp((1, 4), 4) * tp((1, 2, 3), 4) + tp((2, 3), 4) ** 2
    assert jet3(p, shuffled) == jet3(p, base)


def test_jet3_linear_and_errors():
    assert jet3(tp((1,), 3)) == Jet(3, {((1,),): 1})
    with pytest.raises(util.NotInJError):
        jet3(tp((1,), 3) + 1)
    with pytest.raises(util.CoordsError):
        jet3(var((1,), 3))


def test_horowitz_vanishes_in_jets():
    h = horowitz(3).to_primed()
    assert h.constant_term() == 0
    assert jet3(h).is_zero()


def test_pair_triple_rewrite():
    n = 4
    quad = jet3(tp((1, 4), n) * tp((1, 2, 3), n)).quadratic
    s2 = set(make_mono(m) for m in graded._s2(n))
    assert dict((m, c) for m, c in quad.items() if m in s2) == {
        ((1, 2), (1, 3, 4)): -1, ((1, 3), (1, 2, 4)): 1}


@settings(deadline=None, max_examples=20)
@given(st.lists(st.integers(-3, 3), min_size=14, max_size=14),
       st.lists(st.integers(-3, 3), min_size=14, max_size=14))
def test_jet3_of_product(a, b):
    n = 4
    T = basis_T(n)
    f = CharPolynomial(n, dict(zip(T.elements, a)), PRIMED)
    g = CharPolynomial(n, dict(zip(T.elements, b)), PRIMED)
    jet = jet3(f * g + f)
    assert jet.linear == jet3(f).linear
    assert jet.quadratic == get_reducer(n).rewrite(f * g)


def test_jet_of_word():
    w = parse_word('x1 x2', 3)
    assert jet_of_word(w) == Jet(3, {((1, 2),): 1})
    w = parse_word('x2 x1^-1', 3)
    assert jet_of_word(w) == jet3(trace_reduce_primed(w))
    assert Jet.from_json(jet_of_word(w).to_json(), 3) == jet_of_word(w)


def test_jet_json_schema():
    jet = Jet(3, {((1,),): 1}, {((1,), (2,)): -2})
    assert jet.to_json() == {'linear': {'t_1': '1'},
                             'quadratic': {'t_1.t_2': '-2'}}


def test_verify_relations():
    report = verify_relations(4, trials=4, seed=1)
    assert report.passed
    assert report.checks[0]['name'] == 'relation-low-degree'
