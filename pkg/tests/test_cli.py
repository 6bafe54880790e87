"""
"""

from __future__ import absolute_import, division, print_function
import json

import pytest

from fricke import cli, util, graded
from fricke.autaction import transvection
from fricke.freegroup import generator, left_normed


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture()
def a2_map():
    x = [generator(i, 3) for i in (1, 2, 3)]
    a = transvection(1, left_normed([x[1], x[2], x[1]]))
    return str(a), str(a.inverse())



def test_reduce(capsys):
    code, out, _ = run(capsys, 'reduce', 'x1 x2^-1', '--n', '2')
    assert code == 0
    assert out == 't1*t2 - t12\n'


def test_reduce_json(capsys):
    code, out, _ = run(capsys, 'reduce', 'x1', '--n', '2', '--primed', '--json')
    assert code == 0
    assert json.loads(out) == {'n': 2, 'coords': "t'", 'terms': [
        {'coeff': '1', 'mono': {'t_1': 1}}]}


def test_basis(capsys):
    code, out, _ = run(capsys, 'basis', '--n', '3', '--grade', '2')
    assert code == 0
    assert len(out.split()) == 27


def test_relations(capsys):
    code, out, _ = run(capsys, 'relations', '--n', '3', '--json')
    assert code == 0
    data = json.loads(out)
    assert len(data['relations']) == 1
    assert data['independence']['rank'] == 1


def test_jet(capsys):
    code, out, _ = run(capsys, 'jet', 'x1 x2', '--n', '3', '--json')
    assert code == 0
    assert json.loads(out) == {'linear': {'t_12': '1'}, 'quadratic': {}}


def test_act_check_e(capsys, a2_map):
    fwd, inv = a2_map
    code, out, _ = run(capsys, 'act', '--map', fwd, '--inv', inv, '--n', '3',
                       '--check-e', '1', '--json')
    assert code == 0
    assert json.loads(out) == {'k': 1, 'in_E': True}

    code, out, _ = run(capsys, 'act', '--map', 'nielsen:P12', '--n', '3',
                       '--check-e', '1', '--json')
    assert json.loads(out)['in_E'] is False


def test_act_decompose(capsys):
    code, out, _ = run(capsys, 'act', '--map', 'inner:x2', '--n', '3',
                       '--decompose', '--json')
    assert code == 0
    assert json.loads(out)['inner'] == 'x2'


def test_act_jet(capsys):
    code, out, _ = run(capsys, 'act', '--map', 'nielsen:I1', '--n', '3',
                       '--jet', '--json')
    assert code == 0
    data = json.loads(out)
    assert len(data['rows']) == 7 + 27


def test_depth(capsys):
    code, out, _ = run(capsys, 'depth', '--map', 'inner:x1', '--n', '3',
                       '--max-k', '3', '--json')
    assert code == 0
    assert json.loads(out) == {'aut_depth': 1, 'e_depth': 2}


@pytest.mark.parametrize('argv', [
    [],
    ['reduce', 'x9', '--n', '3'],
    ['reduce', 'x1', '--n', '1'],
    ['act', '--map', 'x1 -> x1 x2', '--n', '3'],
    ['act', '--map', 'x1 -> x1 x2', '--inv', 'x1 -> x1', '--n', '3'],
    ['act', '--map', 'inner:x1', '--n', '3', '--jet', '--eta1'],
    ['act', '--map', 'nielsen:P12', '--n', '3', '--eta1'],
    ['act', '--map', 'nielsen:Q12', '--n', '3'],
    ['verify', '--suite', 'nothing'],
    ])
def test_usage_errors(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 1
    assert out == ''
    assert 'fricke: error' in err


def test_verify_is_reproducible(capsys):
    argv = ['verify', '--suite', 'identities', '--n', '3', '--trials', '3',
            '--seed', '5', '--json', '--threads', '2']
    code, first, _ = run(capsys, *argv)
    assert code == 0
    code, second, _ = run(capsys, *argv)
    assert first == second
    assert json.loads(first)['passed'] is True


def test_verify_seed_from_environment(capsys, monkeypatch):
    argv = ['verify', '--suite', 'relations', '--n', '3', '--trials', '2',
            '--json']
    monkeypatch.setenv(util.SEED_ENV, '8')
    code, env_out, _ = run(capsys, *argv)
    assert code == 0
    monkeypatch.delenv(util.SEED_ENV)
    code, explicit, _ = run(capsys, *(argv + ['--seed', '8']))
    assert env_out == explicit


def test_bad_seed_environment(capsys, monkeypatch):
    monkeypatch.setenv(util.SEED_ENV, 'abc')
    code, out, err = run(capsys, 'verify', '--suite', 'relations', '--n', '3',
                         '--trials', '1')
    assert code == cli.EXIT_USAGE
    assert util.SEED_ENV in err


def test_internal_failure_is_not_a_usage_error(capsys, monkeypatch):
    def broken(n):
        raise util.IncompleteRelationsError("no pivot for t_1.t_2")
    monkeypatch.setattr(graded, 'independence_check', broken)
    code, out, err = run(capsys, 'relations', '--n', '3')
    assert code == cli.EXIT_INTERNAL
    assert out == ''
    assert 'fricke: internal error' in err


def test_unexpected_exceptions_propagate(monkeypatch):
    def broken(n):
        raise KeyError('t_9')
    monkeypatch.setattr(graded, 'basis_T', broken)
    with pytest.raises(KeyError):
        cli.main(['basis', '--n', '3'])
