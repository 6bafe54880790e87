"""
Words in the free group F_n, endomorphisms and automorphisms acting on the
right, the Magnus expansion and the lower central series tests built on it.
"""

from __future__ import absolute_import, division, print_function
import logging
import re
from collections import defaultdict

from scipy.special import comb

from fricke import util
from fricke.util import WordError, RankError, AutomorphismError


_TERM = re.compile(r'^x(\d+)(?:\^([+-]?\d+))?$')



class Word(object):
    """A freely reduced word, stored run-length as ((g, e), ...).

    Immutable; the empty tuple is the identity.
    """

    def __init__(self, runs=(), rank=2):
        assert rank >= 1, "rank must be positive"
        stack = []
        for g, e in runs:
            g, e = int(g), int(e)
            if not 1 <= g <= rank:
                raise WordError("generator index %d out of range for rank %d"
                                % (g, rank))
            if e == 0:
                continue
            if stack and stack[-1][0] == g:
                e += stack.pop()[1]
                if e == 0:
                    continue
            stack.append((g, e))
        self._runs = tuple(stack)
        self._rank = rank


    @classmethod
    def from_letters(cls, letters, rank):
        """From signed letters: +g is x_g, -g is x_g^-1.
        """
        return cls([(abs(l), 1 if l > 0 else -1) for l in letters], rank)


    @property
    def runs(self):
        return self._runs


    @property
    def rank(self):
        return self._rank


    def letters(self):
        out = []
        for g, e in self._runs:
            out.extend([g if e > 0 else -g] * abs(e))
        return tuple(out)


    def is_identity(self):
        return not self._runs


    def inverse(self):
        return Word([(g, -e) for g, e in reversed(self._runs)], self._rank)


    def __invert__(self):
        return self.inverse()


    def __mul__(self, other):
        return multiply(self, other)


    def __pow__(self, k):
        k = int(k)
        base = self if k >= 0 else self.inverse()
        out = identity(self._rank)
        for _ in range(abs(k)):
            out = out * base
        return out


    def __len__(self):
        return sum(abs(e) for _, e in self._runs)


    def __eq__(self, other):
        return (isinstance(other, Word) and self._rank == other._rank and
                self._runs == other._runs)


    def __ne__(self, other):
        return not self == other


    def __hash__(self):
        return hash((self._rank, self._runs))


    def __str__(self):
        return ' '.join('x%d' % g if e == 1 else 'x%d^%d' % (g, e)
                        for g, e in self._runs)


    def __repr__(self):
        return "Word(%r, rank=%d)" % (str(self), self._rank)



def identity(n):
    return Word((), n)


def generator(i, n):
    return Word([(i, 1)], n)


def parse_word(text, n):
    """Parse 'x1 x2^-1 x1^2'; the empty string is the identity.
    """
    runs = []
    for tok in text.split():
        m = _TERM.match(tok)
        if m is None:
            raise WordError("cannot parse term %r" % tok)
        g = int(m.group(1))
        e = int(m.group(2)) if m.group(2) is not None else 1
        if e == 0:
            raise WordError("zero exponent in %r" % tok)
        runs.append((g, e))
    return Word(runs, n)


def _check_rank(*words):
    ranks = set(w.rank for w in words)
    if len(ranks) > 1:
        raise RankError("rank mismatch: %s" % sorted(ranks))


def multiply(u, v):
    _check_rank(u, v)
    return Word(u.runs + v.runs, u.rank)


def invert(u):
    return u.inverse()


def commutator(u, v):
    """[u, v] = u v u^-1 v^-1.
    """
    _check_rank(u, v)
    return Word(u.runs + v.runs + u.inverse().runs + v.inverse().runs, u.rank)


def left_normed(ws):
    """[[...[[w1, w2], w3]...], wk].
    """
    ws = list(ws)
    if len(ws) < 2:
        raise WordError("a left-normed commutator needs at least two entries")
    out = ws[0]
    for w in ws[1:]:
        out = commutator(out, w)
    return out


def cyclic_reduce(w):
    """Return (core, conjugator) with w = conjugator core conjugator^-1.
    """
    letters = list(w.letters())
    prefix = []
    while len(letters) >= 2 and letters[0] == -letters[-1]:
        prefix.append(letters[0])
        letters = letters[1:-1]
    return (Word.from_letters(letters, w.rank),
            Word.from_letters(prefix, w.rank))



class TruncatedSeries(object):
    """Element of Z<<X_1..X_n>> modulo monomials of degree > cutoff.

    Monomials are tuples of generator indices; () is the constant.
    """

    def __init__(self, rank, cutoff, coeffs=None):
        self.rank = rank
        self.cutoff = cutoff
        self.coeffs = {}
        for mono, c in (coeffs or {}).items():
            mono = tuple(mono)
            if c != 0 and len(mono) <= cutoff:
                self.coeffs[mono] = self.coeffs.get(mono, 0) + c
        self.coeffs = dict((m, c) for m, c in self.coeffs.items() if c != 0)


    @classmethod
    def one(cls, rank, cutoff):
        return cls(rank, cutoff, {(): 1})


    @classmethod
    def of_letter(cls, g, e, rank, cutoff):
        """Series of x_g^e: sum C(e,k) X^k, or for e < 0 the expansion of
        (1 + X)^e, sum (-1)^k C(|e|+k-1, k) X^k.
        """
        coeffs = {}
        for k in range(cutoff + 1):
            if e > 0:
                c = comb(e, k, exact=True)
            else:
                c = (-1) ** k * comb(-e + k - 1, k, exact=True)
            if c:
                coeffs[(g,) * k] = c
        return cls(rank, cutoff, coeffs)


    def __mul__(self, other):
        assert self.rank == other.rank and self.cutoff == other.cutoff
        out = defaultdict(int)
        for m1, c1 in self.coeffs.items():
            room = self.cutoff - len(m1)
            for m2, c2 in other.coeffs.items():
                if len(m2) <= room:
                    out[m1 + m2] += c1 * c2
        return TruncatedSeries(self.rank, self.cutoff, out)


    def coefficient(self, mono):
        return self.coeffs.get(tuple(mono), 0)


    def homogeneous(self, k):
        return dict((m, c) for m, c in self.coeffs.items() if len(m) == k)


    def lowest_degree(self):
        """Lowest degree of a nonzero term of (series - 1); None if the
        series is 1.
        """
        degs = [len(m) for m, c in self.coeffs.items()
                if m != () or c != 1]
        if not degs:
            return None
        return min(degs)


    def is_one(self):
        return self.coeffs == {(): 1}


    def __eq__(self, other):
        return (isinstance(other, TruncatedSeries) and
                self.rank == other.rank and self.cutoff == other.cutoff and
                self.coeffs == other.coeffs)


    def __ne__(self, other):
        return not self == other


    def __repr__(self):
        terms = []
        for m in sorted(self.coeffs, key=lambda m: (len(m), m)):
            mono = ''.join('X%d' % g for g in m) or '1'
            terms.append('%d*%s' % (self.coeffs[m], mono))
        return 'TruncatedSeries(%s)' % ' + '.join(terms)



def magnus(w, d):
    """Image of w under x_i -> 1 + X_i, truncated above degree d.
    """
    assert d >= 1, "cutoff must be at least 1"
    if d > util.MAGNUS_CUTOFF:
        logging.warning("Magnus cutoff %d clipped to %d.", d,
                        util.MAGNUS_CUTOFF)
        d = util.MAGNUS_CUTOFF
    out = TruncatedSeries.one(w.rank, d)
    for g, e in w.runs:
        out = out * TruncatedSeries.of_letter(g, e, w.rank, d)
    return out


def lcs_weight(w, max_k):
    """Largest k <= max_k with w in the k-th lower central series term.
    """
    if w.is_identity():
        raise WordError("the identity lies in every lower central series term")
    max_k = min(max_k, util.MAGNUS_CUTOFF + 1)
    if max_k <= 1:
        return 1
    low = magnus(w, max_k - 1).lowest_degree()
    if low is None:
        return max_k
    return low



class Endomorphism(object):
    """
    :param images: list of n Words, the images of x_1..x_n
    """

    def __init__(self, images):
        images = list(images)
        assert images, "need at least one image"
        _check_rank(*images)
        if len(images) != images[0].rank:
            raise RankError("%d images given for rank %d"
                            % (len(images), images[0].rank))
        self.images = tuple(images)
        self.rank = len(images)


    @classmethod
    def identity(cls, n):
        return cls([generator(i, n) for i in range(1, n + 1)])


    def apply(self, w):
        if w.rank != self.rank:
            raise RankError("word of rank %d, map of rank %d"
                            % (w.rank, self.rank))
        runs = []
        for g, e in w.runs:
            runs.extend((self.images[g - 1] ** e).runs)
        return Word(runs, self.rank)


    def then(self, other):
        """self first, then other: x -> (x^self)^other.
        """
        return Endomorphism([other.apply(img) for img in self.images])


    def is_identity(self):
        return all(img == generator(i, self.rank)
                   for i, img in enumerate(self.images, 1))


    def __eq__(self, other):
        return isinstance(other, Endomorphism) and self.images == other.images


    def __ne__(self, other):
        return not self == other


    def __str__(self):
        return '; '.join('x%d -> %s' % (i, img)
                         for i, img in enumerate(self.images, 1))



def apply(e, w):
    return e.apply(w)


def parse_map(text, n):
    """Parse 'x1 -> <word>; x2 -> <word>'; unlisted generators are fixed.
    """
    images = [generator(i, n) for i in range(1, n + 1)]
    for part in text.split(';'):
        part = part.strip()
        if not part:
            continue
        if '->' not in part:
            raise WordError("expected 'x<i> -> <word>', got %r" % part)
        lhs, rhs = part.split('->', 1)
        src = parse_word(lhs, n)
        if len(src.runs) != 1 or src.runs[0][1] != 1:
            raise WordError("left side must be a generator: %r" % lhs.strip())
        images[src.runs[0][0] - 1] = parse_word(rhs, n)
    return Endomorphism(images)



class Automorphism(object):
    """A pair of mutually inverse endomorphisms acting on the right.

    a * b means a first, then b, so x^(ab) = (x^a)^b.
    """

    def __init__(self, forward, inverse, check=True):
        if forward.rank != inverse.rank:
            raise RankError("forward and inverse ranks differ")
        if check and not (forward.then(inverse).is_identity() and
                          inverse.then(forward).is_identity()):
            raise AutomorphismError("maps are not mutually inverse")
        self.forward = forward
        self._inverse = inverse
        self.rank = forward.rank


    @classmethod
    def identity(cls, n):
        return cls(Endomorphism.identity(n), Endomorphism.identity(n),
                   check=False)


    def apply(self, w):
        return self.forward.apply(w)


    def inverse(self):
        return Automorphism(self._inverse, self.forward, check=False)


    def __mul__(self, other):
        if self.rank != other.rank:
            raise RankError("rank mismatch")
        return Automorphism(self.forward.then(other.forward),
                            other._inverse.then(self._inverse), check=False)


    def __pow__(self, k):
        base = self if k >= 0 else self.inverse()
        out = Automorphism.identity(self.rank)
        for _ in range(abs(int(k))):
            out = out * base
        return out


    def image(self, i):
        return self.forward.images[i - 1]


    def __eq__(self, other):
        return isinstance(other, Automorphism) and self.forward == other.forward


    def __ne__(self, other):
        return not self == other


    def __hash__(self):
        return hash(self.forward.images)


    def __str__(self):
        return str(self.forward)



def aut_commutator(a, b):
    return a * b * a.inverse() * b.inverse()


def conjugate(a, g):
    """g^-1 a g: g undone, then a, then g.
    """
    return g.inverse() * a * g


def inner(y):
    """x -> y^-1 x y.
    """
    n = y.rank
    yinv = y.inverse()
    fwd = [yinv * generator(i, n) * y for i in range(1, n + 1)]
    inv = [y * generator(i, n) * yinv for i in range(1, n + 1)]
    return Automorphism(Endomorphism(fwd), Endomorphism(inv), check=False)


def aut_depth(a, max_k):
    """Largest k <= max_k with a acting trivially modulo the (k+1)-st lower
    central series term; 0 if a is not IA.
    """
    depth = max_k
    for i in range(1, a.rank + 1):
        x = generator(i, a.rank)
        c = a.apply(x) * x.inverse()
        if c.is_identity():
            continue
        depth = min(depth, lcs_weight(c, max_k + 1) - 1)
        if depth == 0:
            break
    return depth


def nielsen(name, n):
    """'P12' swaps x1, x2; 'I1' inverts x1; 'M12' sends x1 -> x1 x2.
    """
    m = re.match(r'^([PIM])(\d)(\d)?$', name)
    if m is None:
        raise WordError("unknown Nielsen generator %r" % name)
    kind, i = m.group(1), int(m.group(2))
    j = int(m.group(3)) if m.group(3) else None
    if (kind == 'I') != (j is None) or (j is not None and i == j):
        raise WordError("malformed Nielsen generator %r" % name)
    fwd = [generator(k, n) for k in range(1, n + 1)]
    inv = list(fwd)
    xi = generator(i, n)
    if kind == 'I':
        fwd[i - 1] = inv[i - 1] = xi.inverse()
    elif kind == 'P':
        xj = generator(j, n)
        fwd[i - 1], fwd[j - 1] = xj, xi
        inv[i - 1], inv[j - 1] = xj, xi
    else:
        xj = generator(j, n)
        fwd[i - 1] = xi * xj
        inv[i - 1] = xi * xj.inverse()
    return Automorphism(Endomorphism(fwd), Endomorphism(inv), check=False)


def from_shorthand(text, n):
    """'nielsen:P12' or 'inner:<word>'; None if text is not a shorthand.
    """
    text = text.strip()
    if text.startswith('nielsen:'):
        return nielsen(text[len('nielsen:'):].strip(), n)
    if text.startswith('inner:'):
        return inner(parse_word(text[len('inner:'):], n))
    return None
