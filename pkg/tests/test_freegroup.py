"""
"""

from __future__ import absolute_import, division, print_function

import pytest
from hypothesis import given, settings, strategies as st

from fricke import util
from fricke.freegroup import (Word, identity, generator, parse_word,
                              commutator, left_normed, cyclic_reduce, magnus,
                              lcs_weight, Endomorphism, Automorphism, inner,
                              nielsen, parse_map, from_shorthand,
                              aut_commutator, aut_depth, conjugate, multiply)


N = 3


def words(n=N, max_len=8):
    letters = st.integers(1, n).flatmap(
        lambda g: st.sampled_from([g, -g]))
    return st.lists(letters, max_size=max_len).map(
        lambda ls: Word.from_letters(ls, n))


def x(i, n=N):
    return generator(i, n)


@st.composite
def filtered_automorphisms(draw):
    """(a, k) with a in A(k): inner by a short word (k = 1) or
    x_i -> x_i c with c a commutator of weight k + 1 in the other generators.
    """
    if draw(st.booleans()):
        return inner(draw(words(max_len=3))), 1
    i = draw(st.integers(1, N))
    others = [g for g in range(1, N + 1) if g != i]
    k = draw(st.integers(1, 2))
    signs = st.sampled_from([1, -1])
    entries = [x(draw(st.sampled_from(others))) ** draw(signs)
               for _ in range(k + 1)]
    c = left_normed(entries)
    fwd = [x(g) * c if g == i else x(g) for g in range(1, N + 1)]
    inv = [x(g) * ~c if g == i else x(g) for g in range(1, N + 1)]
    return Automorphism(Endomorphism(fwd), Endomorphism(inv)), k



def test_free_reduction():
    w = parse_word('x1 x2 x2^-1 x1^-1', N)
    assert w.is_identity()
    assert w == identity(N)
    assert parse_word('x1 x1^2', N).runs == ((1, 3),)
    assert len(parse_word('x1^-2 x3', N)) == 3


def test_parse_and_print():
    w = parse_word('x1 x2^-1 x1^2', N)
    assert str(w) == 'x1 x2^-1 x1^2'
    assert parse_word(str(w), N) == w
    assert parse_word('', N).is_identity()


@pytest.mark.parametrize('text', ['y1', 'x1^', 'x1^0', 'x4'])
def test_parse_errors(text):
    with pytest.raises(util.WordError):
        parse_word(text, N)


def test_rank_mismatch():
    with pytest.raises(util.RankError):
        x(1, 2) * x(1, 3)


@given(words(), words(), words())
def test_multiply_is_associative(u, v, w):
    assert multiply(multiply(u, v), w) == multiply(u, multiply(v, w))
    assert multiply(u, identity(N)) == u


@settings(deadline=None, max_examples=50)
@given(words(), words(), st.integers(1, 4))
def test_magnus_is_multiplicative(u, v, d):
    assert magnus(u * v, d) == magnus(u, d) * magnus(v, d)


@given(words(), words())
def test_group_laws(u, v):
    assert (u * v).inverse() == v.inverse() * u.inverse()
    assert (u * ~u).is_identity()
    assert u ** 2 == u * u
    assert u ** -1 == ~u


def test_commutator_convention():
    assert str(commutator(x(1), x(2))) == 'x1 x2 x1^-1 x2^-1'
    c = left_normed([x(1), x(2), x(3)])
    assert c == commutator(commutator(x(1), x(2)), x(3))
    with pytest.raises(util.WordError):
        left_normed([x(1)])


def test_cyclic_reduce():
    w = parse_word('x2 x1 x3 x2^-1', N)
    core, conj = cyclic_reduce(w)
    assert core == parse_word('x1 x3', N)
    assert conj * core * ~conj == w
    c = commutator(x(1), x(2))
    assert cyclic_reduce(c) == (c, identity(N))


def test_magnus_commutator():
    m = magnus(commutator(x(1), x(2)), 2)
    assert m.homogeneous(1) == {}
    assert m.homogeneous(2) == {(1, 2): 1, (2, 1): -1}
    assert magnus(identity(N), 3).is_one()


def test_magnus_inverse_letter():
    m = magnus(x(1) ** -1, 3)
    assert m.coefficient((1,)) == -1
    assert m.coefficient((1, 1)) == 1
    assert m.coefficient((1, 1, 1)) == -1


def test_magnus_cutoff_clipped():
    m = magnus(x(1), util.MAGNUS_CUTOFF + 3)
    assert m.cutoff == util.MAGNUS_CUTOFF


def test_lcs_weight():
    assert lcs_weight(x(1), 4) == 1
    assert lcs_weight(commutator(x(1), x(2)), 4) == 2
    assert lcs_weight(left_normed([x(1), x(2), x(1)]), 5) == 3
    with pytest.raises(util.WordError):
        lcs_weight(identity(N), 3)


@settings(deadline=None, max_examples=30)
@given(st.lists(st.integers(1, N), min_size=2, max_size=5))
def test_left_normed_weight(gens):
    c = left_normed([x(g) for g in gens])
    if not c.is_identity():
        assert lcs_weight(c, len(gens)) >= len(gens)


def test_endomorphism_composition():
    e = parse_map('x1 -> x1 x2', N)
    f = parse_map('x2 -> x3', N)
    assert e.then(f).apply(x(1)) == x(1) * x(3)
    assert e.apply(x(3)) == x(3)
    with pytest.raises(util.WordError):
        parse_map('x1 x2 -> x1', N)


def test_automorphism_check():
    fwd = parse_map('x1 -> x1 x2', N)
    with pytest.raises(util.AutomorphismError):
        Automorphism(fwd, Endomorphism.identity(N))
    a = Automorphism(fwd, parse_map('x1 -> x1 x2^-1', N))
    assert (a * a.inverse()) == Automorphism.identity(N)


def test_right_action():
    a, b = nielsen('M12', N), nielsen('P23', N)
    w = parse_word('x1 x3^-1', N)
    assert (a * b).apply(w) == b.apply(a.apply(w))
    assert (a ** 2).apply(x(1)) == x(1) * x(2) * x(2)
    assert conjugate(a, b) == b.inverse() * a * b


def test_nielsen_generators():
    assert nielsen('P12', N).apply(x(1)) == x(2)
    assert nielsen('I1', N).apply(x(1)) == ~x(1)
    assert nielsen('M12', N).apply(x(1)) == x(1) * x(2)
    for name in ('P12', 'I1', 'M13'):
        a = nielsen(name, N)
        assert (a * a.inverse()) == Automorphism.identity(N)
    with pytest.raises(util.WordError):
        nielsen('P11', N)


def test_shorthand():
    assert from_shorthand('nielsen:I2', N) == nielsen('I2', N)
    assert from_shorthand('inner:x1', N) == inner(x(1))
    assert from_shorthand('x1 -> x2', N) is None


@given(words(max_len=4).filter(lambda w: not w.is_identity()))
def test_inner_is_ia(y):
    a = inner(y)
    assert a.apply(x(2)) == ~y * x(2) * y
    assert aut_depth(a, 3) >= 1


def test_aut_depth():
    assert aut_depth(nielsen('M12', N), 2) == 0
    assert aut_depth(Automorphism.identity(N), 4) == 4
    c = commutator(x(2), x(3))
    fwd = Endomorphism([x(1) * c, x(2), x(3)])
    inv = Endomorphism([x(1) * ~c, x(2), x(3)])
    a = Automorphism(fwd, inv)
    assert aut_depth(a, 3) == 1
    assert aut_depth(aut_commutator(a, inner(x(1))), 3) >= 2


@settings(deadline=None, max_examples=40)
@given(filtered_automorphisms(), filtered_automorphisms())
def test_commutators_raise_depth(ak, bl):
    (a, k), (b, l) = ak, bl
    assert aut_depth(a, k) == k
    assert aut_depth(b, l) == l
    assert aut_depth(aut_commutator(a, b), k + l) == k + l
