"""
Fricke characters of free groups: trace reduction, the graded pieces of the
character ring near the trivial representation and the action of
automorphisms on them.
"""

from fricke import util, freegroup, charpoly, reduce, graded, numcheck, autaction
from fricke.freegroup import Word, Automorphism, parse_word, parse_map
from fricke.charpoly import CharPolynomial
from fricke.reduce import trace_reduce, trace_reduce_primed
from fricke.graded import jet3, jet_of_word, basis_T, basis_S
