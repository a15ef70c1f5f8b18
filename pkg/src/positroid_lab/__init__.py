"""Exact-arithmetic combinatorics of the positive Grassmannian.

Subpackages cover exact rational linear algebra, decorated permutations,
plabic graphs, positroid polytopes and hypersimplex tilings, positive
tropical subdivisions, amplituhedron membership tests, and cluster seeds
built from bicolored triangulations.  Every verdict is computed over
arbitrary-precision rationals; floating point never enters a decision.
"""

__version__ = "0.1.0"
