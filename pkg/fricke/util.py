"""
Shared constants, exceptions, labelled matrices and random helpers.
"""

from __future__ import absolute_import, division, print_function
import os
from fractions import Fraction

import numpy as np
import pandas as pd


MAGNUS_CUTOFF = 6
RATIONAL_BOUND = 7
SEED_ENV = 'FRICKE_SEED'
DEFAULT_TRIALS = 100



class FrickeError(Exception):
    """Base class of all errors raised by fricke.
    """


class ConfigError(FrickeError, ValueError):
    pass


class WordError(FrickeError, ValueError):
    pass


class RankError(FrickeError, ValueError):
    pass


class CoordsError(FrickeError, ValueError):
    pass


class MissingVariableError(FrickeError, KeyError):
    pass


class AutomorphismError(FrickeError, ValueError):
    pass


class RepresentationError(FrickeError, ValueError):
    pass


class NotInJError(FrickeError, ValueError):
    pass


class NotInE1Error(FrickeError, ValueError):
    pass


class IncompleteRelationsError(FrickeError):
    pass


class IndependenceError(FrickeError):

    def __init__(self, rank, expected):
        self.rank = rank
        self.expected = expected
        kind = 'deficit' if rank < expected else 'excess'
        super(IndependenceError, self).__init__(
            "rank %s: got %d, expected %d" % (kind, rank, expected))



class DF(pd.DataFrame):
    """
    """
    @property
    def _constructor(self):
        return DF


    @property
    def rowvarids(self):
        return self.index.tolist()


    @property
    def colvarids(self):
        return self.columns.tolist()


    @property
    def nrow(self):
        return self.shape[0]


    @property
    def ncol(self):
        return self.shape[1]



class Matrix(DF):
    """Labelled matrix with exact entries (dtype object holding Fractions).
    """
    @property
    def _constructor(self):
        return Matrix


    def __mul__(self, other):
        assert self.colvarids == other.rowvarids, "labels do not match"
        return Matrix(np.dot(self.values, other.values), self.index,
                      other.columns)


    def __add__(self, other):
        return Matrix(self.values + other.values, self.index, self.columns)


    def __sub__(self, other):
        return Matrix(self.values - other.values, self.index, self.columns)


    @property
    def rank(self):
        return np.linalg.matrix_rank(self.values.astype(float))


    def is_zero(self):
        return all(x == 0 for x in self.values.flat)


    def equals_exactly(self, other):
        return (self.rowvarids == other.rowvarids and
                self.colvarids == other.colvarids and
                all(x == y for x, y in zip(self.values.flat,
                                           other.values.flat)))


    @staticmethod
    def zeros(rowvarids, colvarids):
        vals = np.empty((len(rowvarids), len(colvarids)), dtype=object)
        vals.fill(Fraction(0))
        return Matrix(vals, rowvarids, colvarids)


    @staticmethod
    def eye(rowvarids, colvarids=None):
        if colvarids is None:
            colvarids = rowvarids
        mat = Matrix.zeros(rowvarids, colvarids)
        for i in range(min(len(rowvarids), len(colvarids))):
            mat.iat[i, i] = Fraction(1)
        return mat



def get_seed(seed=None):
    """Return the explicit seed, else the FRICKE_SEED environment variable,
    else 0.
    """
    if seed is not None:
        return int(seed)
    env = os.environ.get(SEED_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise ConfigError("%s is not an integer: %r" % (SEED_ENV, env))
    return 0


def get_rng(seed=None, trial=None):
    """A numpy generator; per-trial generators are independent of the order
    trials are run in.
    """
    seed = get_seed(seed)
    if trial is None:
        return np.random.default_rng(seed)
    return np.random.default_rng([seed, trial])


def random_fraction(rng, bound=RATIONAL_BOUND, nonzero=False):
    """
    :param bound: numerator and denominator bounded by this in absolute value
    """
    while True:
        num = int(rng.integers(-bound, bound + 1))
        den = int(rng.integers(1, bound + 1))
        if num != 0 or not nonzero:
            return Fraction(num, den)


def fraction_str(x):
    """'p/q' or 'p'.
    """
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return '%d/%d' % (x.numerator, x.denominator)
