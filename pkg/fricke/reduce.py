"""
Trace reduction: the normal form of tr w as a polynomial in the basic
characters t_i, t_ij, t_ijk, and a truncated expansion for long words.

Words are handled as tuples of signed letters (+g for x_g, -g for x_g^-1).
"""

from __future__ import absolute_import, division, print_function
import logging
from fractions import Fraction

from functools import lru_cache

from fricke.charpoly import CharPolynomial, PRIMED
from fricke.util import WordError


HALF = Fraction(1, 2)



def free_reduce(letters):
    stack = []
    for l in letters:
        if stack and stack[-1] == -l:
            stack.pop()
        else:
            stack.append(l)
    return tuple(stack)


def cyclic_core(letters):
    letters = free_reduce(letters)
    while len(letters) >= 2 and letters[0] == -letters[-1]:
        letters = letters[1:-1]
    return letters


def invert_letters(letters):
    return tuple(-l for l in reversed(letters))


def _letter_key(letters):
    return tuple((abs(l), l < 0) for l in letters)


def canonical(letters):
    """Least rotation of the cyclic core of w or of w^-1.

    tr is invariant under both, so this is the memo key of the reducer.
    """
    core = cyclic_core(letters)
    if not core:
        return ()
    cands = []
    for word in (core, invert_letters(core)):
        cands.extend(word[r:] + word[:r] for r in range(len(word)))
    return min(cands, key=_letter_key)


def _measure(key):
    negs = sum(1 for l in key if l < 0)
    inversions = sum(1 for p in range(len(key)) for q in range(p + 1, len(key))
                     if abs(key[p]) > abs(key[q]))
    return (len(key), min(negs, len(key) - negs), inversions)


def _t(indices, n):
    return CharPolynomial.var(tuple(sorted(indices)), n)


def _trace(letters, n, parent=None):
    key = canonical(letters)
    if parent is not None:
        assert _measure(key) < _measure(parent), \
            "rewrite did not decrease %r -> %r" % (parent, key)
    return _reduce(key, n)


@lru_cache(maxsize=None)
def _reduce(key, n):
    L = len(key)
    if L == 0:
        return CharPolynomial.const(2, n)
    if L == 1:
        return _t((abs(key[0]),), n)

    negs = sum(1 for l in key if l < 0)
    if negs:
        # tr(u x^-1) = tr u tr x - tr(u x), on whichever of w, w^-1 has
        # fewer inverse letters
        word = key if 2 * negs <= L else invert_letters(key)
        p = next(i for i, l in enumerate(word) if l < 0)
        rot = word[p + 1:] + word[:p + 1]
        u, g = rot[:-1], -rot[-1]
        logging.debug("inverse letter rule on %r", key)
        return (_trace(u, n, key) * _t((g,), n) -
                _trace(u + (g,), n, key))

    seen = {}
    best = None
    for q, l in enumerate(key):
        if l in seen:
            p = seen[l]
            if best is None or (q - p, p) < (best[1] - best[0], best[0]):
                best = (p, q)
        seen[l] = q
    if best is not None:
        # tr(x u x v) = tr(x u) tr(x v) - tr(u v^-1)
        p, q = best
        rot = key[p:] + key[:p]
        gap = q - p
        x, u, v = rot[:1], rot[1:gap], rot[gap + 1:]
        logging.debug("repeated letter rule on %r", key)
        return (_trace(x + u, n, key) * _trace(x + v, n, key) -
                _trace(u + invert_letters(v), n, key))

    if L >= 4:
        return four_block(key[:1], key[1:2], key[2:3], key[3:], n, key)

    if L == 3:
        a, b, c = key
        if b < c:
            return _t((a, b, c), n)
        # Vogt: tr(x_a x_b x_c) + tr(x_a x_c x_b) is a polynomial in shorter
        # characters
        return (_t((a,), n) * _t((b, c), n) + _t((b,), n) * _t((a, c), n) +
                _t((c,), n) * _t((a, b), n) -
                _t((a,), n) * _t((b,), n) * _t((c,), n) - _t((a, b, c), n))

    return _t(key, n)


def four_block(x, y, z, w, n, parent=None):
    """tr(xyzw) for blocks x, y, z, w via the four-letter identity.
    """
    def tr(*blocks):
        return _trace(sum(blocks, ()), n, parent)

    tx, ty, tz, tw = tr(x), tr(y), tr(z), tr(w)
    total = (tx * tr(y, z, w) + ty * tr(z, w, x) + tz * tr(w, x, y) +
             tw * tr(x, y, z) +
             tr(x, y) * tr(z, w) - tr(x, z) * tr(y, w) + tr(x, w) * tr(y, z) -
             tx * ty * tr(z, w) - ty * tz * tr(x, w) - tx * tw * tr(y, z) -
             tz * tw * tr(x, y) + tx * ty * tz * tw)
    return total.scale(HALF)


def trace_reduce(w):
    """Normal form of tr w in the unprimed basic characters.
    """
    return _reduce(canonical(w.letters()), w.rank)


def trace_reduce_primed(w):
    """tr' w = tr w - 2 in primed coordinates; the constant term is 0.
    """
    return trace_reduce(w).to_primed() - 2


def trace_split(w, rotation):
    """tr w by one four-letter split of the cyclic core rotated by
    `rotation`, with the pieces reduced normally.
    """
    core = cyclic_core(w.letters())
    if len(core) < 4:
        raise WordError("a split needs a cyclic core of length >= 4")
    r = rotation % len(core)
    rot = core[r:] + core[:r]
    return four_block(rot[:1], rot[1:2], rot[2:3], rot[3:], w.rank)


def trace_reduce_letters(letters, n):
    return _reduce(canonical(tuple(letters)), n)



def _primed_var(indices, n):
    return CharPolynomial.var(tuple(sorted(indices)), n, PRIMED)


@lru_cache(maxsize=None)
def _structure(n):
    """Half traces, pairings B(Y_i, Y_j) = tr(Y_i Y_j) and triple products
    tr([Y_i, Y_j] Y_k) in primed coordinates, for X_i = (t_i/2) I + Y_i.
    """
    half = {}
    pair = {}
    triple = {}
    for i in range(1, n + 1):
        ti = _primed_var((i,), n)
        half[i] = ti.scale(HALF) + 1
        pair[(i, i)] = (ti * ti).scale(HALF) + ti.scale(2)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            t = [CharPolynomial.var(v, n) for v in [(i,), (j,), (i, j)]]
            pair[(i, j)] = pair[(j, i)] = \
                (t[2] - (t[0] * t[1]).scale(HALF)).to_primed()
            for k in range(j + 1, n + 1):
                u = dict((v, CharPolynomial.var(v, n)) for v in
                         [(i,), (j,), (k,), (i, j), (i, k), (j, k), (i, j, k)])
                omega = (u[(i, j, k)].scale(2) - u[(i,)] * u[(j, k)] -
                         u[(j,)] * u[(i, k)] - u[(k,)] * u[(i, j)] +
                         u[(i,)] * u[(j,)] * u[(k,)]).to_primed()
                triple[(i, j, k)] = omega
    return half, pair, triple


def _triple(triple, i, j, k):
    if len(set((i, j, k))) < 3:
        return None
    idx = [i, j, k]
    sign = 1
    for p in range(3):
        for q in range(2 - p):
            if idx[q] > idx[q + 1]:
                idx[q], idx[q + 1] = idx[q + 1], idx[q]
                sign = -sign
    om = triple[tuple(idx)]
    return om if sign > 0 else -om


def trace_expand(w, degree=None):
    """tr' w computed letter by letter in the span of I, Y_i, [Y_i, Y_j].

    Runs in time polynomial in len(w). With `degree` given, every
    coefficient is kept modulo terms of primed degree > degree, which is
    enough for jets. The result agrees with trace_reduce_primed modulo the
    relations among the basic characters.
    """
    n = w.rank
    half, pair, triple = _structure(n)

    def mul(p, q):
        return p.mul(q, max_degree=degree)

    def tr_(p):
        return p if degree is None else p.truncate(degree)

    zero = CharPolynomial(n, coords=PRIMED)
    s = CharPolynomial.const(1, n, PRIMED)
    alpha = {}
    beta = {}
    for l in w.letters():
        g, eps = abs(l), (1 if l > 0 else -1)
        h = tr_(half[g])
        new_s = mul(h, s)
        new_alpha = dict((i, mul(h, a)) for i, a in alpha.items())
        new_beta = dict((ij, mul(h, b)) for ij, b in beta.items())

        def bump(store, key, value):
            store[key] = store.get(key, zero) + value

        bump(new_alpha, g, s.scale(eps))
        for i, a in alpha.items():
            new_s = new_s + mul(a, tr_(pair[(i, g)])).scale(eps * HALF)
            if i < g:
                bump(new_beta, (i, g), a.scale(eps * HALF))
            elif i > g:
                bump(new_beta, (g, i), a.scale(-eps * HALF))
        for (i, j), b in beta.items():
            om = _triple(triple, i, j, g)
            if om is not None:
                new_s = new_s + mul(b, tr_(om)).scale(eps * HALF)
            bump(new_alpha, i, mul(b, tr_(pair[(j, g)])).scale(eps))
            bump(new_alpha, j, mul(b, tr_(pair[(i, g)])).scale(-eps))
        s = new_s
        alpha = dict((k, v) for k, v in new_alpha.items() if not v.is_zero())
        beta = dict((k, v) for k, v in new_beta.items() if not v.is_zero())
    return tr_(s.scale(2) - 2)
