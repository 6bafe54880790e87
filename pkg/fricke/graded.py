"""
The bases T of gr^1(J) and S of gr^2(J), the degree-2 relations among the
basic characters, and normal forms in J/J^3.
"""

from __future__ import absolute_import, division, print_function
import logging
from collections import defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations

from scipy.special import comb

from fricke import util, charpoly
from fricke.charpoly import CharPolynomial, PRIMED, make_mono, mono_key
from fricke.freegroup import Word
from fricke.numcheck import Report, identity_check
from fricke.reduce import trace_reduce, trace_split, trace_expand
from fricke.util import (CoordsError, NotInJError, IncompleteRelationsError,
                         IndependenceError)


DETERMINANT = 'determinant'
WHITTEMORE = 'whittemore'
ROTATION = 'rotation-defect'

MAX_CHECKED_RANK = 6
QUARTER = Fraction(1, 4)



class Basis(object):
    """Ordered list of primed monomials with labels.
    """

    def __init__(self, n, elements, grade):
        self.n = n
        self.grade = grade
        self.elements = list(elements)
        self.index = dict((m, k) for k, m in enumerate(self.elements))
        assert len(self.index) == len(self.elements), "duplicate elements"


    def __len__(self):
        return len(self.elements)


    def __iter__(self):
        return iter(self.elements)


    def __getitem__(self, k):
        return self.elements[k]


    def __contains__(self, mono):
        return mono in self.index


    @property
    def labels(self):
        return [mono_label(m) for m in self.elements]



def mono_label(mono):
    return '.'.join(charpoly.json_name(v) for v in mono)


def parse_mono_label(label):
    return make_mono([charpoly.parse_json_name(s) for s in label.split('.')])


def basis_T(n):
    if n < 2:
        raise ValueError("rank must be at least 2")
    return Basis(n, [(v,) for v in charpoly.all_vars(n)], 1)


def _s1(n):
    idx = range(1, n + 1)
    singles = [(i,) for i in idx]
    pairs = list(combinations(idx, 2))
    triples = list(combinations(idx, 3))
    out = [(u, v) for u, v in combinations_with_replacement(singles, 2)]
    out += [(u, p) for u in singles for p in pairs]
    out += [(u, t) for u in singles for t in triples]
    out += [(p, q) for p, q in combinations_with_replacement(pairs, 2)]
    return out


def _s2(n):
    idx = range(1, n + 1)
    out = []
    for a, b, c in combinations(idx, 3):
        out += [((a, b), (a, b, c)), ((a, c), (a, b, c)), ((b, c), (a, b, c))]
    for i, a, b, c in combinations(idx, 4):
        out += [((i, a), (a, b, c)), ((i, b), (a, b, c)), ((i, c), (a, b, c)),
                ((i, a), (i, b, c)), ((a, b), (i, a, c)), ((a, b), (i, b, c)),
                ((a, c), (i, b, c)), ((i, b), (i, a, c))]
    for i, j, a, b, c in combinations(idx, 5):
        out += [((j, a), (i, b, c)), ((j, b), (i, a, c)), ((j, c), (i, a, b)),
                ((a, b), (i, j, c)), ((a, c), (i, j, b)), ((b, c), (i, j, a))]
    return out


def basis_S(n):
    """S_1 then S_2, each sorted lexicographically on concatenated indices.
    """
    if n < 2:
        raise ValueError("rank must be at least 2")

    def order(monos):
        monos = [make_mono(m) for m in monos]
        return sorted(monos, key=lambda m: (sum(m, ()), mono_key(m)))

    return Basis(n, order(_s1(n)) + order(_s2(n)), 2)


def degree2_monomials(n):
    m = len(basis_T(n))
    out = [make_mono((u[0], v[0])) for u, v in
           combinations_with_replacement(basis_T(n).elements, 2)]
    assert len(out) == comb(m + 1, 2, exact=True)
    return out



class RelationSet(object):
    """Primed polynomials in the ideal of relations, each with a provenance
    tag and a label.
    """

    def __init__(self, n):
        self.n = n
        self.relations = []
        self._seen = set()


    def add(self, tag, label, poly):
        if poly.is_zero() or poly in self._seen:
            return
        self._seen.add(poly)
        self.relations.append((tag, label, poly))


    def __len__(self):
        return len(self.relations)


    def __iter__(self):
        return iter(self.relations)


    def polynomials(self):
        return [p for _, _, p in self.relations]


    def tags(self):
        return [t for t, _, _ in self.relations]



def _t(v, n):
    return CharPolynomial.var(tuple(sorted(v)), n)


def _t2(u, v, n):
    """t_uv with t_uu = t_u^2 - 2.
    """
    if u == v:
        return _t((u,), n) ** 2 - 2
    return _t((u, v), n)


def omega(triple, n):
    """2 t_ijk - P_ijk with P_ijk = t_i t_jk + t_j t_ik + t_k t_ij - t_i t_j t_k.
    """
    i, j, k = triple
    return (_t((i, j, k), n).scale(2) - _t((i,), n) * _t((j, k), n) -
            _t((j,), n) * _t((i, k), n) - _t((k,), n) * _t((i, j), n) +
            _t((i,), n) * _t((j,), n) * _t((k,), n))


def _det(rows, n):
    total = CharPolynomial(n)
    size = len(rows)
    for perm in permutations(range(size)):
        sign = 1
        for p in range(size):
            for q in range(p + 1, size):
                if perm[p] > perm[q]:
                    sign = -sign
        term = CharPolynomial.const(sign, n)
        for r, c in enumerate(perm):
            term = term * rows[r][c]
        total = total + term
    return total


def determinant_relation(t1, t2, n):
    """(omega(ijk) omega(abc) - det(M)) / 4, where the rows of M are
    [t_r, t_ra, t_rb, t_rc] for r in ijk and then [2, t_a, t_b, t_c].

    For ijk = abc this is the Horowitz relation of the triple.
    """
    rows = [[_t((r,), n)] + [_t2(r, c, n) for c in t2] for r in t1]
    rows.append([CharPolynomial.const(2, n)] + [_t((c,), n) for c in t2])
    return (omega(t1, n) * omega(t2, n) - _det(rows, n)).scale(QUARTER)


# coefficient and the role words of each factor, roles i, a, b, c
P2 = [(1, ['i', 'iabc']), (1, ['acb']), (-1, ['abc']), (-1, ['ia', 'ibc']),
      (1, ['ib', 'iac']), (-1, ['ic', 'iab']), (-1, ['i', 'b', 'iac']),
      (1, ['b', 'ia', 'ic'])]

P3 = [(1, ['ib', 'iabc']), (-1, ['iab', 'ibc']), (-1, ['i', 'iac']),
      (1, ['ia', 'ic']), (-1, ['a', 'c']), (2, ['ac']), (-1, ['b', 'abc']),
      (1, ['ab', 'bc'])]


def word_polynomial(terms, roles, n):
    """Sum of coeff * prod tr(word) for a role assignment {'i': 1, ...}.
    """
    total = CharPolynomial(n)
    for coeff, words in terms:
        term = CharPolynomial.const(coeff, n)
        for word in words:
            term = term * trace_reduce(Word.from_letters(
                [roles[ch] for ch in word], n))
        total = total + term
    return total


def horowitz(n=3, triple=(1, 2, 3)):
    """t_abc^2 - P_abc t_abc + Q_abc.
    """
    a, b, c = triple
    ta, tb, tc = _t((a,), n), _t((b,), n), _t((c,), n)
    tab, tac, tbc = _t((a, b), n), _t((a, c), n), _t((b, c), n)
    p = tab * tc + tac * tb + tbc * ta - ta * tb * tc
    q = (ta ** 2 + tb ** 2 + tc ** 2 + tab ** 2 + tac ** 2 + tbc ** 2 +
         tab * tac * tbc - ta * tb * tab - ta * tc * tac - tb * tc * tbc - 4)
    tabc = _t((a, b, c), n)
    return tabc ** 2 - p * tabc + q


@lru_cache(maxsize=None)
def relations_deg2(n):
    """Relations in primed coordinates, enough to rewrite every degree-2
    monomial outside S into span(S) modulo J^3.
    """
    if n < 2:
        raise ValueError("rank must be at least 2")
    rels = RelationSet(n)
    triples = list(combinations(range(1, n + 1), 3))
    for k, t1 in enumerate(triples):
        for t2 in triples[k:]:
            rels.add(DETERMINANT, 'det%s%s' % (t1, t2),
                     determinant_relation(t1, t2, n).to_primed())

    for quad in combinations(range(1, n + 1), 4):
        for perm in permutations(quad):
            roles = dict(zip('iabc', perm))
            for name, terms in (('p2', P2), ('p3', P3)):
                rels.add(WHITTEMORE, '%s%s' % (name, perm),
                         word_polynomial(terms, roles, n).to_primed())

    for quint in combinations(range(1, n + 1), 5):
        first, rest = quint[0], quint[1:]
        for order in permutations(rest):
            w = Word.from_letters((first,) + order, n)
            base = trace_split(w, 0)
            for r in range(1, 5):
                rels.add(ROTATION, 'split%s@%d' % ((first,) + order, r),
                         (trace_split(w, r) - base).to_primed())

    logging.info("rank %d: %d relations", n, len(rels))
    return rels



class Jet(object):
    """Element of J/J^3: linear coordinates on T, quadratic on S.
    """

    def __init__(self, n, linear=None, quadratic=None):
        self.n = n
        self.linear = dict((m, Fraction(c)) for m, c in (linear or {}).items()
                           if c != 0)
        self.quadratic = dict((m, Fraction(c)) for m, c in
                              (quadratic or {}).items() if c != 0)


    def __add__(self, other):
        assert self.n == other.n, "rank mismatch"
        lin = defaultdict(Fraction, self.linear)
        quad = defaultdict(Fraction, self.quadratic)
        for m, c in other.linear.items():
            lin[m] += c
        for m, c in other.quadratic.items():
            quad[m] += c
        return Jet(self.n, lin, quad)


    def scale(self, c):
        return Jet(self.n, dict((m, c * v) for m, v in self.linear.items()),
                   dict((m, c * v) for m, v in self.quadratic.items()))


    def __neg__(self):
        return self.scale(-1)


    def __sub__(self, other):
        return self + (-other)


    def __eq__(self, other):
        return (isinstance(other, Jet) and self.n == other.n and
                self.linear == other.linear and
                self.quadratic == other.quadratic)


    def __ne__(self, other):
        return not self == other


    def is_zero(self):
        return not self.linear and not self.quadratic


    def linear_vector(self):
        return [self.linear.get(m, Fraction(0)) for m in basis_T(self.n)]


    def quadratic_vector(self):
        return [self.quadratic.get(m, Fraction(0)) for m in basis_S(self.n)]


    def to_json(self):
        return {'linear': dict((mono_label(m), util.fraction_str(c))
                               for m, c in self.linear.items()),
                'quadratic': dict((mono_label(m), util.fraction_str(c))
                                  for m, c in self.quadratic.items())}


    @classmethod
    def from_json(cls, data, n):
        return cls(n, dict((parse_mono_label(k), Fraction(v))
                           for k, v in data['linear'].items()),
                   dict((parse_mono_label(k), Fraction(v))
                        for k, v in data['quadratic'].items()))


    def __repr__(self):
        return 'Jet(%r)' % self.to_json()



class Reducer(object):
    """Reduced row echelon form of the degree-2 parts of the relations.

    Columns are ordered monomials outside S first, then S, so each pivot
    row expresses a monomial outside S through later columns. The reduced
    form does not depend on the order rows are inserted in.
    """

    def __init__(self, n, shuffle_seed=None):
        self.n = n
        self.S = basis_S(n)
        outside = sorted((m for m in degree2_monomials(n) if m not in self.S),
                         key=mono_key)
        self.columns = outside + self.S.elements
        self.col = dict((m, k) for k, m in enumerate(self.columns))
        self.n_outside = len(outside)
        self.pivots = {}

        rows = [rel.graded_part(2) for rel in relations_deg2(n).polynomials()]
        if shuffle_seed is not None:
            rng = util.get_rng(shuffle_seed)
            rows = [rows[k] for k in rng.permutation(len(rows))]
        for poly in rows:
            if poly.is_zero():
                logging.warning("relation vanishes modulo J^3")
                continue
            self._insert(dict((self.col[m], c) for m, c in poly.terms.items()))
        logging.info("rank %d: elimination rank %d", n, self.rank)


    def _insert(self, row):
        for c in [c for c in row if c in self.pivots]:
            f = row.get(c)
            if not f:
                continue
            for c2, v in self.pivots[c].items():
                row[c2] = row.get(c2, 0) - f * v
        row = dict((c, v) for c, v in row.items() if v != 0)
        if not row:
            return
        p = min(row)
        lead = row[p]
        row = dict((c, v / lead) for c, v in row.items())
        for q, prow in self.pivots.items():
            f = prow.get(p)
            if f:
                for c2, v in row.items():
                    prow[c2] = prow.get(c2, 0) - f * v
                for c2 in [c2 for c2, v in prow.items() if v == 0]:
                    del prow[c2]
        self.pivots[p] = row


    @property
    def rank(self):
        return len(self.pivots)


    @property
    def excess(self):
        """Pivots on S columns."""
        return sorted(self.columns[p] for p in self.pivots
                      if p >= self.n_outside)


    @property
    def missing(self):
        """Monomials outside S without a pivot."""
        return [self.columns[c] for c in range(self.n_outside)
                if c not in self.pivots]


    def rewrite(self, quadratic):
        """Coordinates on S of a degree-2 primed polynomial modulo the
        relations.
        """
        out = defaultdict(Fraction)
        for m, c in quadratic.terms.items():
            k = self.col[m]
            if k >= self.n_outside:
                out[m] += c
                continue
            if k not in self.pivots:
                raise IncompleteRelationsError(
                    "no relation rewrites %s" % mono_label(m))
            for c2, v in self.pivots[k].items():
                if c2 == k:
                    continue
                if c2 < self.n_outside:
                    raise IncompleteRelationsError(
                        "%s reduces to %s outside S"
                        % (mono_label(m), mono_label(self.columns[c2])))
                out[self.columns[c2]] -= c * v
        return dict((m, c) for m, c in out.items() if c != 0)



@lru_cache(maxsize=None)
def get_reducer(n):
    return Reducer(n)


def jet3(p, reducer=None):
    """Coordinates of p in J/J^3.
    """
    if not p.primed:
        raise CoordsError("jet3 takes primed coordinates")
    if p.constant_term() != 0:
        raise NotInJError("constant term %s is not zero" % p.constant_term())
    if reducer is None:
        reducer = get_reducer(p.n)
    linear = dict(p.graded_part(1).terms)
    quadratic = reducer.rewrite(p.graded_part(2))
    return Jet(p.n, linear, quadratic)


def jet_of_word(w, reducer=None):
    """jet3 of tr' w.
    """
    return jet3(trace_expand(w, degree=2), reducer)


def independence_check(n):
    """Rank of the degree-2 relation matrix against C(m+1, 2) - |S|.
    """
    if not 2 <= n <= MAX_CHECKED_RANK:
        raise ValueError("independence is checked for 2 <= n <= %d"
                         % MAX_CHECKED_RANK)
    reducer = get_reducer(n)
    m = len(basis_T(n))
    expected = comb(m + 1, 2, exact=True) - len(basis_S(n))
    if reducer.excess or reducer.rank != expected:
        raise IndependenceError(reducer.rank, expected)
    return {'n': n, 'rank': reducer.rank, 'expected': expected,
            'basis_S': len(reducer.S), 'monomials': len(reducer.columns)}


def verify_relations(n, trials=util.DEFAULT_TRIALS, seed=None, threads=None):
    """Each relation vanishes at random representations and has no constant
    or linear part.
    """
    report = Report()
    low = []
    for tag, label, poly in relations_deg2(n):
        if poly.constant_term() != 0 or not poly.graded_part(1).is_zero():
            low.append({'relation': label, 'tag': tag})
    report.record('relation-low-degree', len(relations_deg2(n)), low)
    for tag, label, poly in relations_deg2(n):
        sub = identity_check(poly, trials, seed, threads,
                             name='%s:%s' % (tag, label))
        report.merge(sub)
    return report
