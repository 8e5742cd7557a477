"""Irreducible components of {(A, B) : AB = BA = A^a = B^b = 0}.

The variety of pairs of commuting nilpotent matrices annihilating each
other is module-theoretic in disguise: its points are the modules over
K[x,y]/(xy, x^a, y^b) of a fixed dimension, and its irreducible
components are controlled by string and band combinatorics over that
algebra.  This package computes those components exactly — over the
rationals, with no floating point anywhere — and verifies the dimension
formulas against brute-force linear algebra.

Layout:
    partitions  partition combinatorics (duals, dominance, enumeration)
    words       strings and bands in the letters x, y
    exactla     exact rational matrices, rank, and linear solving
    modmatrix   matrix-pair modules: string/band constructions, stats
    homalg      Hom/End/Ext dimensions, graph maps, orbit dimensions
    richmond    biserial index modules and stratum dimensions
    classify    the component classification itself
    verify      randomized/batch verification suites
    cli         command-line interface
"""

__version__ = "0.1.0"
