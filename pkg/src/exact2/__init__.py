"""Kernel-quotient systems on finite categories.

Three two-dimensional kernel-quotient systems in Cat (bijective-on-objects /
surjective-on-objects / bijective-on-objects-and-full), their kernels,
quotients, factorisations, congruence tests and effectivity checks, plus
one-object Ab-enriched counterexample arithmetic and internal categories in
finite-limit bases.
"""

__version__ = "0.1.0"
