"""Exact verification of the 39 maximal rational plane sextics.

An irreducible plane sextic with only A_n singularities has total Milnor
number at most 19.  This package carries a corpus of explicit rational
parametrizations realizing every one of the 39 equisingularity classes that
attain the bound, and the exact-arithmetic machinery needed to certify each
claimed property: singularity types and locations, implicit degree,
birationality, dual-curve degrees, symmetries, and the field-of-definition
obstructions for the four classes that need a quadratic extension to be
parametrized.
"""

__version__ = "0.1.0"
