"""Exact operator calculus for Macdonald and Jack symmetric polynomials.

The package builds q-difference raising and lowering operators, runs the
integral-form recursion they induce, extracts (q,t)-Kostka matrices, takes
Jack limits, and machine-checks the identities underlying all of it at
small sizes.  All arithmetic is exact; nothing here is numerical.
"""

__version__ = "0.1.0"
