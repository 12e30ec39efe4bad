"""Exact Schubert calculus for isotropic Grassmannians.

Subpackages cover partition combinatorics, raising-operator expansions,
the theta-polynomial ring, Schubert-basis products for both orthogonal
and symplectic families, signed permutations with their tableau model,
and the substitution forest that certifies the Pieri coefficients.
"""

__version__ = "0.1.0"
