"""
"""

from __future__ import absolute_import, division, print_function
import json
from fractions import Fraction

import pytest
import numpy as np
from hypothesis import given, settings, strategies as st

from fricke import util, numcheck
from fricke.freegroup import Word, parse_word, identity
from fricke.graded import horowitz, relations_deg2
from fricke.numcheck import (Mat2, Representation, rho_family, eval_word,
                             char_values, random_representation, Report,
                             identity_check)
from fricke.reduce import trace_reduce


fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


def rep(seed, n=3):
    return random_representation(np.random.default_rng(seed), n)



def test_mat2():
    m = Mat2(2, 3, 1, 2)
    assert m * m.inverse() == Mat2.identity()
    assert (m ** 3).det() == 1
    assert m ** -2 == (m * m).inverse()
    assert m.trace() == 4
    with pytest.raises(util.RepresentationError):
        Mat2(1, 1, 1, 1)


def test_representation_checks_determinant():
    with pytest.raises(util.RepresentationError):
        Representation([Mat2(2, 0, 0, 1, check=False)])


def test_eval_word():
    r = rep(1)
    assert eval_word(r, identity(3)) == Mat2.identity()
    assert eval_word(r, parse_word('x1 x1^-1', 3)) == Mat2.identity()
    with pytest.raises(util.RankError):
        eval_word(r, parse_word('x1', 2))


@settings(max_examples=30)
@given(st.lists(st.integers(-3, 3).filter(bool), max_size=6),
       st.lists(st.integers(-3, 3).filter(bool), max_size=6))
def test_trace_cyclic(u, v):
    r = rep(2)
    u, v = Word.from_letters(u, 3), Word.from_letters(v, 3)
    assert eval_word(r, u * v).trace() == eval_word(r, v * u).trace()


@given(fractions, fractions)
def test_rho2_entries(k, s):
    r = rho_family('2', 3, {'k': k, 's': s, 'l': 0, 't': 0, 'm': 0, 'u': 0},
                   (2, 1, 3))
    m = r.images[1]
    assert m.tolist() == [[1 - k * s, k * k * s], [-s, 1 + k * s]]
    assert m.det() == 1


@given(fractions, fractions, fractions, fractions)
def test_rho2_pair_trace(k, s, l, t):
    r = rho_family('2', 3, {'k': k, 's': s, 'l': l, 't': t, 'm': 0, 'u': 0},
                   (1, 2, 3))
    tr = eval_word(r, parse_word('x1 x2', 3)).trace()
    assert tr - 2 == -(k - l) ** 2 * s * t


@given(fractions.filter(lambda s: s != 1))
def test_rho1_single_trace(s):
    r = rho_family('1', 3, {'s': s, 'l': 1, 't': 1, 'm': 1, 'u': 1},
                   (3, 1, 2))
    assert eval_word(r, parse_word('x3', 3)).trace() - 2 == s ** 2 / (1 - s)


def test_rho_family_errors():
    with pytest.raises(util.RepresentationError):
        rho_family('12', 3, {}, ())
    with pytest.raises(util.RepresentationError):
        rho_family('10', 3, {'s': 1}, (1, 1))
    with pytest.raises(util.RepresentationError):
        rho_family('7', 3, {'s': 1, 'v': 2}, (1, 2))
    with pytest.raises(util.RepresentationError):
        rho_family('8', 3, {}, (1,))


def test_unplaced_generators_are_identity():
    r = rho_family('8', 3, {'s': Fraction(1, 2)}, (2,))
    assert r.images[0] == Mat2.identity()
    assert r.images[2] == Mat2.identity()


def test_char_values():
    r = rep(5)
    values = char_values(r)
    w = parse_word('x1 x2 x3', 3)
    assert values[(1, 2, 3)] == eval_word(r, w).trace()
    primed = char_values(r, primed=True)
    assert primed[(2,)] == values[(2,)] - 2


def test_identity_check_on_relations():
    report = identity_check(horowitz(3), trials=20, seed=3)
    assert report.passed
    for _, label, p in list(relations_deg2(4))[:10]:
        assert identity_check(p, trials=10, seed=3, name=label).passed


def test_identity_check_witness():
    bad = trace_reduce(parse_word('x1 x2', 3)) - 2
    report = identity_check(bad, trials=5, seed=0)
    assert not report.passed
    witness = report.failures[0]
    assert witness['check'] == 'identity'
    assert 'representation' in witness


def test_report():
    report = Report()
    report.record('a', 3, [])
    report.record('b', 2, [{'trial': 1}])
    assert not report.passed
    assert report.failures == [{'trial': 1, 'check': 'b'}]
    assert json.loads(numcheck.dumps(report))['passed'] is False
    assert 'FAIL' in str(report)


@pytest.mark.parametrize('n', [2, 3, 4])
def test_oracle_check(n):
    report = numcheck.oracle_check(trials=1000, seed=9, n=n, threads=4)
    assert report.passed, report.failures[:3]
    assert report.checks[0]['trials'] == 1000


def test_oracle_check_threads_are_deterministic():
    one = numcheck.oracle_check(trials=10, seed=2, n=3, threads=1)
    many = numcheck.oracle_check(trials=10, seed=2, n=3, threads=4)
    assert numcheck.dumps(one) == numcheck.dumps(many)


def test_identity_suite():
    report = numcheck.identity_suite(seed=1, trials=8)
    assert report.passed, report.failures
    names = [c['name'] for c in report.checks]
    for name in ('product-inverse', 'four-letter-regrouped',
                 'weight-2-congruence', 'power-trace', 'closed-forms',
                 'rho11-table'):
        assert name in names


def test_identity_suite_full_scale():
    report = numcheck.identity_suite(seed=2, trials=100, threads=4)
    assert report.passed, report.failures[:3]
    for c in report.checks:
        if c['name'] not in ('power-trace', 'closed-forms', 'rho11-table'):
            assert c['trials'] == 100, c['name']


def test_shrink_words():
    words = [parse_word('x1 x2 x3^-1 x2^2', 3), parse_word('x3 x1', 3)]
    out = numcheck.shrink_words(
        lambda ws: 2 in [abs(l) for l in ws[0].letters()], words)
    assert [abs(l) for l in out[0].letters()] == [2]
    assert out[1] == identity(3)


def test_shrunk_witness_is_minimal():
    r = Representation([Mat2(2, 1, 1, 1), Mat2(1, 1, 0, 1), Mat2(1, 0, 1, 1)])

    def fails(ws):
        return eval_word(r, ws[0]).trace() != eval_word(r, ws[1]).trace()

    words = [parse_word('x1 x2 x3 x1^-1', 3), parse_word('x3 x2 x1 x3', 3)]
    assert fails(words)
    out = numcheck.shrink_words(fails, words)
    assert fails(out)
    assert sum(len(w) for w in out) < sum(len(w) for w in words)
    for k, w in enumerate(out):
        letters = w.letters()
        for p in range(len(letters)):
            smaller = list(out)
            smaller[k] = Word.from_letters(letters[:p] + letters[p + 1:], 3)
            assert not fails(smaller)


def test_rho11_table_entries():
    labels = [label for label, _, _ in numcheck._rho11_table()]
    assert len(labels) == 11
    for label in ('[xi,xa,xb]', '[xi,xa,xi]', '[xi,xb,xb]', '[xi,xb,xi]'):
        assert label in labels
    assert numcheck.rho11_check(seed=6, trials=3).passed


def test_power_trace():
    assert numcheck.power_trace_check(trials=6).passed


def test_closed_forms():
    assert numcheck.closed_form_suite(seed=4, trials=5).passed


def test_seed_from_environment(monkeypatch):
    monkeypatch.setenv(util.SEED_ENV, '17')
    assert util.get_seed() == 17
    assert util.get_seed(3) == 3
    monkeypatch.setenv(util.SEED_ENV, 'abc')
    with pytest.raises(util.FrickeError):
        util.get_seed()
