"""
Exact-rational polynomials in the basic characters t_i, t_ij, t_ijk.

A variable is a strictly increasing tuple of 1-3 generator indices. A
monomial is the tuple of its variables with repetition, sorted by
(length, indices). Coefficients are Fractions, so powers of 1/2 coming from
the four-letter trace identity stay exact.
"""

from __future__ import absolute_import, division, print_function
import numbers
from collections import defaultdict
from fractions import Fraction
from itertools import combinations

import sympy

from fricke import util
from fricke.util import CoordsError, RankError, MissingVariableError


UNPRIMED = 't'
PRIMED = "t'"
COORDS = (UNPRIMED, PRIMED)



def var_key(v):
    return (len(v), v)


def mono_key(mono):
    return tuple(var_key(v) for v in mono)


def make_mono(variables):
    return tuple(sorted(variables, key=var_key))


def check_var(v, n):
    v = tuple(int(i) for i in v)
    if not 1 <= len(v) <= 3:
        raise ValueError("a character variable has 1-3 indices: %r" % (v,))
    if any(a >= b for a, b in zip(v, v[1:])):
        raise ValueError("indices must be strictly increasing: %r" % (v,))
    if v[0] < 1 or v[-1] > n:
        raise RankError("variable %r out of range for rank %d" % (v, n))
    return v


def all_vars(n):
    """Every variable of rank n, in (length, lexicographic) order.
    """
    out = []
    for l in (1, 2, 3):
        out.extend(combinations(range(1, n + 1), l))
    return out


def var_name(v, primed=False, sep=''):
    """'t12' (or "t12'"); indices joined by '_' once any has two digits.
    """
    if any(i >= 10 for i in v):
        sep = '_'
    return 't' + sep + sep.join(str(i) for i in v) + ("'" if primed else '')


def json_name(v):
    if any(i >= 10 for i in v):
        return 't_' + '_'.join(str(i) for i in v)
    return 't_' + ''.join(str(i) for i in v)


def parse_json_name(name):
    if not name.startswith('t_'):
        raise ValueError("bad variable name %r" % name)
    body = name[2:]
    if '_' in body:
        return tuple(int(s) for s in body.split('_'))
    return tuple(int(c) for c in body)


def _expand_shift(mono, shift):
    """Expand prod(v + shift) over the variables of mono.
    """
    out = defaultdict(Fraction)
    d = len(mono)
    for k in range(d + 1):
        for keep in combinations(range(d), k):
            out[tuple(mono[i] for i in keep)] += Fraction(shift) ** (d - k)
    return out



class CharPolynomial(object):
    """
    :param n: rank of the free group
    :param terms: dict monomial -> coefficient
    :param coords: 't' (unprimed) or "t'" (primed, t' = t - 2)
    """

    def __init__(self, n, terms=None, coords=UNPRIMED):
        if coords not in COORDS:
            raise CoordsError("unknown coordinates %r" % coords)
        self.n = n
        self.coords = coords
        self.terms = {}
        for mono, c in (terms or {}).items():
            c = Fraction(c)
            if c != 0:
                self.terms[tuple(mono)] = c


    @classmethod
    def const(cls, c, n, coords=UNPRIMED):
        return cls(n, {(): c}, coords)


    @classmethod
    def var(cls, indices, n, coords=UNPRIMED):
        v = check_var(indices, n)
        return cls(n, {(v,): 1}, coords)


    @property
    def primed(self):
        return self.coords == PRIMED


    def _coerce(self, other):
        if isinstance(other, numbers.Rational):
            return CharPolynomial.const(other, self.n, self.coords)
        if self.n != other.n:
            raise RankError("rank mismatch: %d vs %d" % (self.n, other.n))
        if self.coords != other.coords:
            raise CoordsError("coordinate mismatch: %s vs %s"
                              % (self.coords, other.coords))
        return other


    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return CharPolynomial(self.n, terms, self.coords)

    __radd__ = __add__


    def __neg__(self):
        return self.scale(-1)


    def __sub__(self, other):
        return self + (-self._coerce(other))


    def __rsub__(self, other):
        return self._coerce(other) - self


    def scale(self, c):
        c = Fraction(c)
        return CharPolynomial(self.n, dict((m, c * v)
                                           for m, v in self.terms.items()),
                              self.coords)


    def mul(self, other, max_degree=None):
        """Product; terms of degree above max_degree are never formed.
        """
        other = self._coerce(other)
        out = defaultdict(Fraction)
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                if max_degree is not None and len(m1) + len(m2) > max_degree:
                    continue
                out[make_mono(m1 + m2)] += c1 * c2
        return CharPolynomial(self.n, out, self.coords)


    def __mul__(self, other):
        if isinstance(other, numbers.Rational):
            return self.scale(other)
        return self.mul(other)

    __rmul__ = __mul__


    def __pow__(self, k):
        assert k >= 0, "negative power"
        out = CharPolynomial.const(1, self.n, self.coords)
        for _ in range(k):
            out = out * self
        return out


    def __eq__(self, other):
        if isinstance(other, numbers.Rational):
            other = CharPolynomial.const(other, self.n, self.coords)
        return (isinstance(other, CharPolynomial) and self.n == other.n and
                self.coords == other.coords and self.terms == other.terms)


    def __ne__(self, other):
        return not self == other


    def __hash__(self):
        return hash((self.n, self.coords, frozenset(self.terms.items())))


    def is_zero(self):
        return not self.terms


    def degree(self):
        """Total degree; -1 for the zero polynomial.
        """
        return max([len(m) for m in self.terms] or [-1])


    def coefficient(self, mono):
        return self.terms.get(make_mono(mono), Fraction(0))


    def constant_term(self):
        return self.terms.get((), Fraction(0))


    def variables(self):
        return sorted(set(v for m in self.terms for v in m), key=var_key)


    def truncate(self, max_degree):
        return CharPolynomial(self.n, dict((m, c) for m, c in self.terms.items()
                                           if len(m) <= max_degree),
                              self.coords)


    def graded_part(self, k):
        """Homogeneous degree-k slice, in primed coordinates only.
        """
        if not self.primed:
            raise CoordsError("graded parts are taken in primed coordinates")
        return CharPolynomial(self.n, dict((m, c) for m, c in self.terms.items()
                                           if len(m) == k), self.coords)


    def to_primed(self):
        """Substitute t = t' + 2.
        """
        if self.primed:
            raise CoordsError("already primed")
        return self._shift(2, PRIMED)


    def to_unprimed(self):
        """Substitute t' = t - 2.
        """
        if not self.primed:
            raise CoordsError("already unprimed")
        return self._shift(-2, UNPRIMED)


    def _shift(self, shift, coords):
        out = defaultdict(Fraction)
        for m, c in self.terms.items():
            for m2, c2 in _expand_shift(m, shift).items():
                out[m2] += c * c2
        return CharPolynomial(self.n, out, coords)


    def evaluate(self, assignment):
        """
        :param assignment: dict variable tuple -> rational value, in the
            polynomial's own coordinates
        """
        total = Fraction(0)
        for m, c in self.terms.items():
            term = c
            for v in m:
                try:
                    term *= Fraction(assignment[v])
                except KeyError:
                    raise MissingVariableError("no value for %s" % var_name(v))
            total += term
        return total


    def sorted_terms(self):
        """Terms by descending degree, then monomial order.
        """
        return sorted(self.terms.items(),
                      key=lambda mc: (-len(mc[0]), mono_key(mc[0])))


    def __str__(self):
        if not self.terms:
            return '0'
        parts = []
        for m, c in self.sorted_terms():
            mono = '*'.join(var_name(v, self.primed) for v in m)
            mag = abs(c)
            if not mono:
                body = util.fraction_str(mag)
            elif mag == 1:
                body = mono
            else:
                body = '%s*%s' % (util.fraction_str(mag), mono)
            sign = '-' if c < 0 else '+'
            if not parts:
                parts.append(body if sign == '+' else '-' + body)
            else:
                parts.append('%s %s' % (sign, body))
        return ' '.join(parts)


    def __repr__(self):
        return 'CharPolynomial(%s, n=%d, coords=%s)' % (self, self.n,
                                                        self.coords)


    def to_json(self):
        terms = []
        for m, c in self.sorted_terms():
            mono = defaultdict(int)
            for v in m:
                mono[json_name(v)] += 1
            terms.append({'coeff': util.fraction_str(c), 'mono': dict(mono)})
        return {'n': self.n, 'coords': self.coords, 'terms': terms}


    @classmethod
    def from_json(cls, data):
        n = int(data['n'])
        terms = defaultdict(Fraction)
        for t in data['terms']:
            variables = []
            for name, e in t['mono'].items():
                variables.extend([check_var(parse_json_name(name), n)] * int(e))
            terms[make_mono(variables)] += Fraction(t['coeff'])
        return cls(n, terms, data['coords'])


    def to_sympy(self):
        expr = sympy.Integer(0)
        for m, c in self.terms.items():
            term = sympy.Rational(c.numerator, c.denominator)
            for v in m:
                term *= sympy.Symbol(json_name(v) + ('p' if self.primed else ''))
            expr += term
        return expr



def const(c, n, coords=UNPRIMED):
    return CharPolynomial.const(c, n, coords)


def var(indices, n, coords=UNPRIMED):
    return CharPolynomial.var(indices, n, coords)


def add(p, q):
    return p + q


def mul(p, q):
    return p * q


def scale(p, c):
    return p.scale(c)


def to_primed(p):
    return p.to_primed()


def to_unprimed(p):
    return p.to_unprimed()


def graded_part(p, k):
    return p.graded_part(k)


def evaluate(p, assignment):
    return p.evaluate(assignment)
