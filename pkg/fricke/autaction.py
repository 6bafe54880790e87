"""
The action of Aut F_n on J/J^3: the operators s_sigma, the filtration
E(1) > E(2), the homomorphism eta_1 and the splitting of E(1) into inner
automorphisms times A(2).

Automorphisms act on the right; a * b is a first, then b, and the matrix
of a * b on J/J^3 is action_jet3(b) * action_jet3(a).
"""

from __future__ import absolute_import, division, print_function
import logging

import numpy as np
import matplotlib.pyplot as plt

from fricke import util, graded
from fricke.charpoly import CharPolynomial, PRIMED
from fricke.freegroup import (Word, Automorphism, Endomorphism, generator,
                              inner, magnus, aut_depth, aut_commutator,
                              left_normed, nielsen, conjugate)
from fricke.graded import Jet, basis_T, basis_S, jet_of_word, get_reducer
from fricke.numcheck import Report, random_word
from fricke.reduce import trace_reduce_primed, trace_expand
from fricke.util import Matrix, NotInE1Error, RankError



class GradedMatrix(Matrix):
    """Exact matrix with rows and columns labelled by basis monomials.
    """
    @property
    def _constructor(self):
        return GradedMatrix


    def to_json(self):
        return {'rows': self.rowvarids, 'columns': self.colvarids,
                'entries': [[util.fraction_str(x) for x in row]
                            for row in self.values]}


    def to_text(self):
        return util.DF([[util.fraction_str(x) for x in row] for row in self.values],
                       self.index, self.columns).to_string()


    def plot(self, filepath='', title=None, figsize=None):
        """Nonzero pattern, colored by sign and log-magnitude.

        :param filepath: if given, the figure is saved there instead of shown
        """
        vals = np.array([[float(x) for x in row] for row in self.values])
        mag = np.where(vals != 0, np.sign(vals) * np.log1p(np.abs(vals)),
                       np.nan)
        if figsize is None:
            figsize = (max(4, self.ncol * 0.2), max(4, self.nrow * 0.2))
        fig = plt.figure(figsize=figsize)
        ax = fig.add_subplot(111)
        ax.imshow(mag, cmap='coolwarm', interpolation='nearest')
        ax.set_xticks(range(self.ncol))
        ax.set_yticks(range(self.nrow))
        ax.set_xticklabels(self.colvarids, rotation=90, fontsize=5)
        ax.set_yticklabels(self.rowvarids, fontsize=5)
        if title:
            ax.set_title(title)
        plt.tight_layout()
        if filepath:
            plt.savefig(filepath)
        else:
            plt.show()
        plt.close()



def _as_graded(mat):
    return GradedMatrix(mat.values, mat.index, mat.columns)


def t_word(mono, n):
    """x_i x_j x_k for the basis element t'_ijk.
    """
    (v,) = mono
    return Word.from_letters(v, n)


def s_sigma(a, w, degree=None):
    """tr'(w^a) - tr'(w); with `degree`, modulo primed degree > degree.
    """
    if a.rank != w.rank:
        raise RankError("word of rank %d, automorphism of rank %d"
                        % (w.rank, a.rank))
    if degree is None:
        return trace_reduce_primed(a.apply(w)) - trace_reduce_primed(w)
    return trace_expand(a.apply(w), degree) - trace_expand(w, degree)


def jet_of_s(a, w):
    return jet_of_word(a.apply(w)) - jet_of_word(w)


def _labels(n):
    T, S = basis_T(n), basis_S(n)
    return T, S, T.labels + S.labels


def jet_vector(jet):
    return jet.linear_vector() + jet.quadratic_vector()


def vector_jet(vec, n):
    T, S = basis_T(n), basis_S(n)
    vec = list(vec)
    return Jet(n, dict(zip(T.elements, vec[:len(T)])),
               dict(zip(S.elements, vec[len(T):])))


def action_jet3(a):
    """Matrix of f -> f^a on J/J^3, columns the images of T and then S.
    """
    n = a.rank
    T, S, labels = _labels(n)
    reducer = get_reducer(n)
    mat = Matrix.zeros(labels, labels)
    images = {}
    for k, mono in enumerate(T):
        jet = jet_of_word(a.apply(t_word(mono, n)), reducer)
        images[mono] = jet
        for r, x in enumerate(jet_vector(jet)):
            mat.iat[r, k] = x
    for k, (u, v) in enumerate(S, len(T)):
        prod = _linear_poly(images[(u,)], n).mul(
            _linear_poly(images[(v,)], n))
        quad = reducer.rewrite(prod)
        for m, c in quad.items():
            mat.iat[len(T) + S.index[m], k] = c
    return _as_graded(mat)


def _linear_poly(jet, n):
    return CharPolynomial(n, jet.linear, PRIMED)


def apply_action(mat, jet):
    """Image of a jet under an action matrix.
    """
    vec = np.array(jet_vector(jet), dtype=object)
    return vector_jet(np.dot(mat.values, vec), jet.n)


def gr1_block(mat):
    n = len([c for c in mat.colvarids if '.' not in c])
    return _as_graded(mat.iloc[:n, :n])


def gr2_block(mat):
    n = len([c for c in mat.colvarids if '.' not in c])
    return _as_graded(mat.iloc[n:, n:])


def in_E(a, k):
    """Does a act trivially on J/J^(k+1), k in {1, 2}?
    """
    assert k in (1, 2), "only E(1) and E(2) are decided"
    n = a.rank
    for mono in basis_T(n):
        d = jet_of_s(a, t_word(mono, n))
        if d.linear or (k == 2 and d.quadratic):
            return False
    return True


def e_depth(a):
    if in_E(a, 2):
        return 2
    if in_E(a, 1):
        return 1
    return 0


def eta1(a):
    """eta_1(a): gr^1(J) -> gr^2(J), f -> s_a(f), rows S, columns T.
    """
    n = a.rank
    T, S = basis_T(n), basis_S(n)
    mat = Matrix.zeros(S.labels, T.labels)
    for k, mono in enumerate(T):
        d = jet_of_s(a, t_word(mono, n))
        if d.linear:
            raise NotInE1Error("automorphism moves %s in gr^1"
                               % graded.mono_label(mono))
        for m, c in d.quadratic.items():
            mat.iat[S.index[m], k] = c
    return _as_graded(mat)


def decompose_inn_a2(a):
    """Write a = residual * inner(y) with residual in A(2).

    Returns (y, residual), or None if the degree-2 Magnus terms of
    x_i^a x_i^-1 are not those of a single inner automorphism.
    """
    n = a.rank
    if aut_depth(a, 1) < 1:
        return None
    quad = []
    for i in range(1, n + 1):
        x = generator(i, n)
        quad.append(magnus(a.apply(x) * x.inverse(), 2).homogeneous(2))

    # x_i^(inner(y)) x_i^-1 = [y^-1, x_i] has degree-2 part
    # sum_j f_j (X_i X_j - X_j X_i) for y = prod x_j^f_j
    f = []
    for j in range(1, n + 1):
        i = 1 if j != 1 else 2
        f.append(quad[i - 1].get((i, j), 0))
    for i in range(1, n + 1):
        want = {}
        for j in range(1, n + 1):
            if j != i and f[j - 1]:
                want[(i, j)] = f[j - 1]
                want[(j, i)] = -f[j - 1]
        if quad[i - 1] != want:
            return None

    y = Word([(j, fj) for j, fj in enumerate(f, 1)], n)
    residual = a * inner(y).inverse()
    if aut_depth(residual, 2) < 2:
        logging.warning("inner part found but residual is not in A(2)")
        return None
    return y, residual



def _others(i, n):
    return [j for j in range(1, n + 1) if j != i]


def random_commutator(rng, gens, weight, n):
    """A nontrivial left-normed commutator of the given weight in the
    generators `gens`.
    """
    assert len(gens) >= 2, "need two generators"
    while True:
        entries = []
        for _ in range(weight):
            g = gens[int(rng.integers(len(gens)))]
            e = 1 if rng.random() < 0.5 else -1
            entries.append(Word([(g, e)], n))
        c = left_normed(entries)
        if not c.is_identity():
            return c
        logging.debug("rejected trivial commutator of weight %d", weight)


def transvection(i, c):
    """x_i -> x_i c, with c free of x_i.
    """
    n = c.rank
    assert all(g != i for g, _ in c.runs), "c must not involve x_i"
    fwd = [generator(k, n) for k in range(1, n + 1)]
    inv = list(fwd)
    fwd[i - 1] = generator(i, n) * c
    inv[i - 1] = generator(i, n) * c.inverse()
    return Automorphism(Endomorphism(fwd), Endomorphism(inv), check=False)


def sample_nielsen(rng, n, kinds='PIM'):
    kind = kinds[int(rng.integers(len(kinds)))]
    i, j = [int(x) + 1 for x in rng.permutation(n)[:2]]
    if kind == 'I':
        return nielsen('I%d' % i, n)
    return nielsen('%s%d%d' % (kind, i, j), n)


def sample_inner(rng, n):
    return inner(random_word(rng, n, 3, min_len=1))


def _conjugate(rng, a, n, kinds='PIM'):
    return conjugate(a, sample_nielsen(rng, n, kinds))


def sample_a2(rng, n, twist=True):
    """x_i -> x_i c, c of weight 3, possibly conjugated by a Nielsen move.
    """
    i = int(rng.integers(1, n + 1))
    a = transvection(i, random_commutator(rng, _others(i, n), 3, n))
    if twist and rng.random() < 0.5:
        a = _conjugate(rng, a, n)
    return a


def sample_a4(rng, n):
    """x_i -> x_i c with c of weight 5, possibly conjugated by a signed
    permutation of the generators.

    Images stay short: one has at most 47 letters, the others one.
    """
    i = int(rng.integers(1, n + 1))
    a = transvection(i, random_commutator(rng, _others(i, n), 5, n))
    if rng.random() < 0.5:
        a = _conjugate(rng, a, n, kinds='PI')
    return a


def sample_e1(rng, n):
    """A product of an inner automorphism and an A(2) sample.
    """
    a, b = sample_inner(rng, n), sample_a2(rng, n, twist=False)
    return a * b if rng.random() < 0.5 else b * a


def sample_ia_not_e1(rng, n):
    """x_i -> x_i [x_j, x_k]^(+-1) for distinct i, j, k.
    """
    assert n >= 3, "needs three generators"
    i, j, k = [int(x) + 1 for x in rng.permutation(n)[:3]]
    e = 1 if rng.random() < 0.5 else -1
    c = Word([(j, 1), (k, 1), (j, -1), (k, -1)], n) ** e
    return transvection(i, c)



def _check(report, name, trials, fn):
    failures = []
    for t in range(trials):
        witness = fn(t)
        if witness:
            failures.append(dict(witness, trial=t))
    report.record(name, trials, failures)


def filtration_suite(seed=None, trials=10, n=3):
    """Sample-level checks of the filtration E(k) against A(k) and Inn.
    """
    assert n >= 3, "the samplers need three generators"
    seed = util.get_seed(seed)
    report = Report()
    labels = _labels(n)[2]
    identity = Matrix.eye(labels)

    def rng_for(t, salt):
        return util.get_rng(seed, t * 16 + salt)

    def inner_trivial(t):
        a = sample_inner(rng_for(t, 0), n)
        if not action_jet3(a).equals_exactly(identity):
            return {'automorphism': str(a)}

    def a2_in_e1(t):
        a = sample_a2(rng_for(t, 1), n)
        if not in_E(a, 1):
            return {'automorphism': str(a)}

    def a4_in_e2(t):
        a = sample_a4(rng_for(t, 2), n)
        if not in_E(a, 2):
            return {'automorphism': str(a)}

    def commutator_in_e2(t):
        rng = rng_for(t, 3)
        a, b = sample_e1(rng, n), sample_e1(rng, n)
        if not in_E(aut_commutator(a, b), 2):
            return {'pair': [str(a), str(b)]}

    def nielsen_not_e1(t):
        a = sample_nielsen(rng_for(t, 4), n)
        if in_E(a, 1):
            return {'automorphism': str(a)}

    def decomposition(t):
        rng = rng_for(t, 5)
        a = sample_e1(rng, n) if t % 2 else sample_ia_not_e1(rng, n)
        member = in_E(a, 1)
        split = decompose_inn_a2(a)
        if member != (split is not None):
            return {'automorphism': str(a), 'in_E1': member}
        if split is not None and aut_depth(split[1], 2) < 2:
            return {'automorphism': str(a), 'residual': str(split[1])}

    def eta1_additive(t):
        rng = rng_for(t, 6)
        a, b = sample_e1(rng, n), sample_e1(rng, n)
        if not eta1(a * b).equals_exactly(eta1(a) + eta1(b)):
            return {'pair': [str(a), str(b)]}

    def eta1_inner(t):
        a = sample_inner(rng_for(t, 7), n)
        if not eta1(a).is_zero():
            return {'automorphism': str(a)}

    def eta1_equivariant(t):
        rng = rng_for(t, 8)
        tau, sigma = sample_e1(rng, n), sample_nielsen(rng, n)
        lhs = eta1(conjugate(tau, sigma))
        rhs = (gr2_block(action_jet3(sigma)) * eta1(tau) *
               gr1_block(action_jet3(sigma.inverse())))
        if not lhs.equals_exactly(rhs):
            return {'tau': str(tau), 'sigma': str(sigma)}

    def eta1_zero_in_e2(t):
        a = sample_a4(rng_for(t, 9), n)
        if eta1(a).is_zero() and not in_E(a, 2):
            return {'automorphism': str(a)}

    def cocycle(t):
        rng = rng_for(t, 10)
        a, b = sample_nielsen(rng, n), sample_e1(rng, n)
        w = random_word(rng, n, 4, min_len=1)
        lhs = jet_of_s(a * b, w)
        rhs = apply_action(action_jet3(b), jet_of_s(a, w)) + jet_of_s(b, w)
        if lhs != rhs:
            return {'pair': [str(a), str(b)], 'word': str(w)}

    # counts per check: trials, trials // 2 or trials + trials // 2
    half = max(1, trials // 2)
    for name, count, fn in [('inner-trivial', trials, inner_trivial),
                            ('cocycle', trials, cocycle),
                            ('A2-in-E1', trials, a2_in_e1),
                            ('A4-in-E2', half, a4_in_e2),
                            ('E1-commutator-in-E2', half, commutator_in_e2),
                            ('nielsen-not-E1', half, nielsen_not_e1),
                            ('inner-A2-decomposition', trials + half,
                             decomposition),
                            ('eta1-additive', trials, eta1_additive),
                            ('eta1-inner', trials, eta1_inner),
                            ('eta1-equivariant', half, eta1_equivariant),
                            ('eta1-kernel', half, eta1_zero_in_e2)]:
        _check(report, name, count, fn)

    report.merge(commutator_jet_suite(seed, trials, n))
    return report


def commutator_jet_suite(seed=None, trials=10, n=3, max_weight=5):
    """Jets of tr' a_k and tr'(b a_k^(+-1)) - tr' b for left-normed a_k.
    """
    seed = util.get_seed(seed)
    report = Report()
    gens = list(range(1, n + 1))

    def weight_check(t):
        rng = util.get_rng(seed, 1000 + t)
        for k in range(2, max_weight + 1):
            a = random_commutator(rng, gens, k, n)
            jet = jet_of_word(a)
            if (k >= 3 and jet.linear) or (k >= 4 and jet.quadratic):
                return {'weight': k, 'commutator': str(a)}

    def product_check(t):
        rng = util.get_rng(seed, 2000 + t)
        b = random_word(rng, n, 3, min_len=1)
        for k in range(3, max_weight + 1):
            a = random_commutator(rng, gens, k, n)
            for e in (1, -1):
                d = jet_of_word(b * a ** e) - jet_of_word(b)
                if d.linear or (k >= 5 and d.quadratic):
                    return {'weight': k, 'exponent': e, 'b': str(b),
                            'commutator': str(a)}

    _check(report, 'commutator-jets', trials, weight_check)
    _check(report, 'translated-commutator-jets', trials, product_check)
    return report
